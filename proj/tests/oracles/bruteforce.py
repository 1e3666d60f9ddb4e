#!/usr/bin/env python3
"""Independent brute-force oracle used to freeze expected values in the C++ tests.

Shares no code with the library: instances are rebuilt from their definitions,
costs are summed clause by clause over every assignment. Run it and compare
with the constants in tests/*_test.cpp and tests/acceptance.cpp.

    python3 tests/oracles/bruteforce.py [--cir tests/data]
"""

import argparse
import itertools
import math
import os
from fractions import Fraction

INF = math.inf


def norm_clause(lits):
    s = frozenset(lits)
    if any(-l in s for l in s):
        return None
    return s


def normalize(entries):
    out = {}
    for lits, w in entries:
        c = norm_clause(lits)
        if c is None:
            continue
        out[c] = out.get(c, 0) + w
    return {c: w for c, w in out.items() if w != 0}


def universe(*formulas):
    n = 0
    for f in formulas:
        for c in f:
            for l in c:
                n = max(n, abs(l))
    return n


def falsified(clause, x):
    # x[v] is True/False for v >= 1
    return all((x[abs(l)] if l < 0 else not x[abs(l)]) for l in clause)


def cost(f, x):
    total = 0
    for c, w in f.items():
        if falsified(c, x):
            total += w
    return total


def assignments(n):
    for bits in itertools.product([False, True], repeat=n):
        yield (None,) + bits


def maxsat(f, n=None):
    n = universe(f) if n is None else n
    return min(cost(f, x) for x in assignments(n))


def gamma(f):
    n = universe(f)
    finite = [cost(f, x) for x in assignments(n)]
    finite = [c for c in finite if c != INF]
    return max(finite) + 1 if finite else 1


def negate(clause, w):
    lits = sorted(clause, key=lambda l: (abs(l), l < 0))
    out = []
    for i, l in enumerate(lits):
        out.append((frozenset(lits[:i]) | {-l}, w))
    return out


def entails_direct(f, g):
    n = universe(f, g)
    return all(cost(f, x) >= cost(g, x) for x in assignments(n))


def entails_reduced(f, g):
    gm = gamma(f)
    capped = {c: (gm if w == INF else w) for c, w in g.items()}
    neg = []
    for c, w in capped.items():
        if c:
            neg += negate(c, w)
    combined = normalize(list(f.items()) + neg)
    n = universe(f, g)
    return maxsat(combined, n), sum(capped.values()), gm


def pigeon(variant, m):
    var = lambda i, j: (i - 1) * m + j
    cls = []
    for i in range(1, m + 2):
        cls.append([var(i, j) for j in range(1, m + 1)])
    for j in range(1, m + 1):
        for i in range(1, m + 2):
            for k in range(i + 1, m + 2):
                cls.append([-var(i, j), -var(k, j)])
    w = INF if variant == "php" else 1
    entries = [(c, w) for c in cls]
    if variant == "sphp0":
        entries.append(([], m * m + m))
    if variant == "sphp1":
        for i in range(1, m + 2):
            for j in range(1, m + 1):
                entries += [([var(i, j)], 1), ([-var(i, j)], 1)]
    return normalize(entries)


def maxsat_resolution(a, wa, b, wb, pivot):
    """Textbook rule on (pivot v A, wa) and (-pivot v B, wb)."""
    A = [l for l in a if l != pivot]
    B = [l for l in b if l != -pivot]
    m = min(wa, wb)
    out = [(A + B, m), (a, wa - m), (b, wb - m)]
    for i in range(len(B)):
        out.append(([pivot] + A + B[:i] + [-B[i]], m))
    for i in range(len(A)):
        out.append(([-pivot] + B + A[:i] + [-A[i]], m))
    return normalize(out)


def dual_rail(f, s):
    out = []
    for c in f:
        out.append(([-(l) if l > 0 else -(s - l) for l in c], INF))
    for i in range(1, s + 1):
        out += [([i], 1), ([s + i], 1), ([-i, -(s + i)], INF)]
    return normalize(out)


def canonical_expansion(f):
    n = universe(f)
    out = {}
    for x in assignments(n):
        w = cost(f, x)
        if w > 0:
            # the full clause falsified exactly by x
            out[frozenset(v if not x[v] else -v for v in range(1, n + 1))] = w
    return out


def read_cir(path):
    nodes, infs, flow, concl = {}, [], {}, None
    with open(path) as fh:
        for raw in fh:
            t = raw.split()
            if not t or t[0] == "c":
                continue
            if t[0] == "node":
                bar = t.index("|")
                nodes[t[1]] = (t[2] if bar == 3 else "derived", frozenset(int(v) for v in t[bar + 1:-1]))
            elif t[0] == "inf":
                arrow = t.index("->")
                infs.append((t[1], t[3:arrow], t[arrow + 1:]))
            elif t[0] == "flow":
                flow[t[1]] = Fraction(t[2])
            elif t[0] == "conclude":
                concl = t[1]
    return nodes, infs, flow, concl


def balances(nodes, infs, flow):
    bal = {k: Fraction(0) for k in nodes}
    for name, ins, outs in infs:
        for o in outs:
            bal[o] += flow[name]
        for i in ins:
            bal[i] -= flow[name]
    return bal


def circular_ok(nodes, infs, flow, concl):
    bal = balances(nodes, infs, flow)
    if any(q <= 0 for q in flow.values()):
        return False
    for k, (tag, _) in nodes.items():
        if tag != "orig" and k != concl and bal[k] < 0:
            return False
    return bal[concl] > 0


def show(f):
    def key(item):
        c = sorted(item[0], key=lambda l: (abs(l), l < 0))
        return (len(c), [(abs(l), l < 0) for l in c])
    return "{" + ", ".join("(%s,%s)" % (" ".join(map(str, sorted(c, key=lambda l: (abs(l), l < 0)))) or "[]", w)
                           for c, w in sorted(f.items(), key=key)) + "}"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--cir", default=os.path.join(os.path.dirname(__file__), "..", "data"))
    args = ap.parse_args()

    print("== pigeonhole optima")
    for v in ("php", "sphp", "sphp0", "sphp1"):
        for m in (1, 2, 3):
            f = pigeon(v, m)
            print(v, m, "clauses", len(f), "optimum", maxsat(f, m * (m + 1)))

    print("== SPHP(2) cost of x11 x22 x31, rest false")
    x = [None] + [False] * 6
    for vv in (1, 4, 5):
        x[vv] = True
    print(cost(pigeon("sphp", 2), x))

    print("== entailment example (x=1 y=2 z=3)")
    F = normalize([([3], 2), ([1], 5), ([2], INF)])
    print("gamma", gamma(F))
    for u in (5, 8):
        G = normalize([([1, 3], u), ([2, 3], INF)])
        opt, rf, gm = entails_reduced(F, G)
        print("u", u, "optimum", opt, "roof", rf, "entailed", opt >= rf, "direct", entails_direct(F, G))
    a = normalize([([1], 1), ([2], 1)])
    b = normalize([([1, 2], 1)])
    print("equivalent {(x,1),(y,1)} {(x v y,1)}:", entails_direct(a, b) and entails_direct(b, a))

    print("== resolution example (x=1 y=2 z=3 p=4)")
    print(show(maxsat_resolution([1, 2, 3], 2, [-1, 2, 4], 1, 1)))

    print("== canonical expansion of {(x,1),(y,1)}")
    print(show(canonical_expansion(normalize([([1], 1), ([2], 1)]))))

    print("== dual rail optima")
    print("{x1 v -x2}", maxsat(dual_rail(normalize([([1, -2], INF)]), 2), 4))
    print("{x1, -x1}", maxsat(dual_rail(normalize([([1], INF), ([-1], INF)]), 1), 2))
    print("PHP(2)", maxsat(dual_rail(pigeon("php", 2), 6), 12))

    print("== unit chain {(x,1),(-x v y,1),(-y,1)}")
    print(maxsat(normalize([([1], 1), ([-1, 2], 1), ([-2], 1)])))

    print("== translated Fig. 6 instance {(x v y,inf),(-x,inf),(-y,1)}")
    print(maxsat(normalize([([1, 2], INF), ([-1], INF), ([-2], 1)])))

    for name in ("fig6.cir", "php2.cir"):
        path = os.path.join(args.cir, name)
        if not os.path.exists(path):
            continue
        nodes, infs, flow, concl = read_cir(path)
        bal = balances(nodes, infs, flow)
        print("==", name, "valid", circular_ok(nodes, infs, flow, concl), "conclusion balance", bal[concl])
        print("   balances", " ".join("%s=%s" % (k, bal[k]) for k in nodes))
        bad = 0
        for inf_name, _, _ in infs:
            for mode in ("half", "minus"):
                g = dict(flow)
                g[inf_name] = g[inf_name] / 2 if mode == "half" else g[inf_name] - Fraction(1, 2)
                if g[inf_name] > 0 and circular_ok(nodes, infs, g, concl):
                    bad += 1
        print("   single-flow perturbations that stay valid:", bad)


if __name__ == "__main__":
    main()
