#pragma once

#include <iosfwd>
#include <string>

#include "maxres/formula.hpp"

namespace maxres {

struct WcnfOptions {
  bool allow_negative = false;  // accept "-<int>" weights (proof intermediates)
};

// Reads MaxSAT-Evaluation style WCNF: "c" comments, "h l1 .. lk 0" hard
// lines and "<w> l1 .. lk 0" soft lines. A legacy "p wcnf n m top" header is
// accepted; weights >= top then count as hard. The comment "c vars N"
// declares a universe larger than the variables mentioned.
Formula parse_wcnf(std::istream& in, const WcnfOptions& opts = {});
Formula parse_wcnf_string(const std::string& text, const WcnfOptions& opts = {});
Formula read_wcnf_file(const std::string& path, const WcnfOptions& opts = {});

void write_wcnf(std::ostream& out, const Formula& f);
std::string wcnf_string(const Formula& f);
void write_wcnf_file(const std::string& path, const Formula& f);

}  // namespace maxres
