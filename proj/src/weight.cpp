#include "maxres/weight.hpp"

#include <ostream>

#include "maxres/error.hpp"

namespace maxres {

const BigInt& Weight::value() const {
  if (infinite_) throw Error("finite value requested from infinite weight");
  return value_;
}

Weight Weight::operator-() const {
  if (infinite_) throw Error("cannot negate an infinite weight");
  return Weight(BigInt(-value_));
}

Weight& Weight::operator+=(const Weight& rhs) {
  if (infinite_) return *this;
  if (rhs.infinite_) {
    infinite_ = true;
    value_ = 0;
    return *this;
  }
  value_ += rhs.value_;
  return *this;
}

Weight& Weight::operator-=(const Weight& rhs) {
  if (infinite_) return *this;
  if (rhs.infinite_) throw Error("cannot subtract an infinite weight from a finite one");
  value_ -= rhs.value_;
  return *this;
}

bool operator==(const Weight& a, const Weight& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (b.value_ < a.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Weight::to_string() const { return infinite_ ? "inf" : value_.str(); }

Weight Weight::parse(std::string_view text) {
  if (text == "inf" || text == "h") return infinity();
  if (text.empty()) throw Error("empty weight");
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) throw Error("malformed weight '" + std::string(text) + "'");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (text[k] < '0' || text[k] > '9') throw Error("malformed weight '" + std::string(text) + "'");
  }
  return Weight(BigInt(std::string(text[0] == '+' ? text.substr(1) : text)));
}

std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.to_string(); }

}  // namespace maxres
