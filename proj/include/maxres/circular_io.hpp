#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "maxres/circular.hpp"

namespace maxres {

// Text format, one declaration per line ("c ..." lines are comments):
//   node c1 orig | 1 2 0        tag is orig, budget or derived (default)
//   inf i1 split c1 -> c2 c3
//   inf i2 symres c2 c4 -> c5
//   flow i1 1/2                 positive rational or integer
//   conclude c5
struct CircularFile {
  CircularProof proof;
  std::vector<std::string> node_ids;       // as written in the file
  std::vector<std::string> inference_ids;
};

CircularFile parse_circular(std::istream& in);
CircularFile parse_circular_string(const std::string& text);
CircularFile read_circular_file(const std::string& path);

void write_circular(std::ostream& out, const CircularProof& p);
std::string circular_string(const CircularProof& p);
void write_circular_file(const std::string& path, const CircularProof& p);

Rational parse_rational(const std::string& text);
std::string rational_string(const Rational& q);

}  // namespace maxres
