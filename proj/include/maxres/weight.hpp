#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace maxres {

using BigInt = boost::multiprecision::cpp_int;

// Exact clause weight: an arbitrary-precision integer or infinity (hard).
//
// Arithmetic follows the MaxSAT convention: inf + w = inf and inf - w = inf
// for every w, including w = inf. Finite values may be negative; only the
// virtual rule is expected to produce them.
class Weight {
 public:
  Weight() = default;
  Weight(std::int64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Weight(BigInt v) : value_(std::move(v)) {}

  static Weight infinity() {
    Weight w;
    w.infinite_ = true;
    return w;
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  bool is_zero() const { return !infinite_ && value_.is_zero(); }
  bool is_positive() const { return infinite_ || value_.sign() > 0; }
  bool is_negative() const { return !infinite_ && value_.sign() < 0; }

  // Throws Error when infinite.
  const BigInt& value() const;

  Weight operator-() const;
  Weight& operator+=(const Weight& rhs);
  Weight& operator-=(const Weight& rhs);
  friend Weight operator+(Weight lhs, const Weight& rhs) { return lhs += rhs; }
  friend Weight operator-(Weight lhs, const Weight& rhs) { return lhs -= rhs; }

  friend bool operator==(const Weight& a, const Weight& b);
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b);

  // "inf" or a decimal integer.
  std::string to_string() const;
  static Weight parse(std::string_view text);

 private:
  BigInt value_;
  bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

}  // namespace maxres
