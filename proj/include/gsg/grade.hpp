#pragma once

#include <boost/rational.hpp>

#include <charconv>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "gsg/error.hpp"

namespace gsg {

/// Exact membership grade in [0,1], kept in lowest terms.
class Grade {
 public:
  using value_type = boost::rational<std::int64_t>;

  constexpr Grade() = default;
  Grade(std::int64_t num, std::int64_t den) : value_(checked(value_type(num, den))) {}

  static Grade zero() { return Grade(); }
  static Grade one() { return Grade(1, 1); }

  /// Accepts `p/q` or a bare integer `p`.
  static Grade parse(std::string_view text) {
    auto slash = text.find('/');
    std::int64_t num = parse_int(text.substr(0, slash), text);
    std::int64_t den = 1;
    if (slash != std::string_view::npos) den = parse_int(text.substr(slash + 1), text);
    if (den == 0) throw input_error("zero denominator in grade '" + std::string(text) + "'");
    value_type v(num, den);
    if (v < value_type(0) || v > value_type(1))
      throw input_error("grade '" + std::string(text) + "' outside [0,1]");
    return Grade(v);
  }

  std::int64_t numerator() const { return value_.numerator(); }
  std::int64_t denominator() const { return value_.denominator(); }
  const value_type& value() const { return value_; }

  /// Canonical text: `p` when the denominator is 1, `p/q` otherwise.
  std::string str() const {
    if (value_.denominator() == 1) return std::to_string(value_.numerator());
    return std::to_string(value_.numerator()) + "/" + std::to_string(value_.denominator());
  }

  /// Exact test of a + b <= 1.
  friend bool sum_at_most_one(const Grade& a, const Grade& b) {
    return a.value_ + b.value_ <= value_type(1);
  }
  friend bool sum_is_one(const Grade& a, const Grade& b) {
    return a.value_ + b.value_ == value_type(1);
  }

  friend bool operator==(const Grade& a, const Grade& b) { return a.value_ == b.value_; }
  friend bool operator<(const Grade& a, const Grade& b) { return a.value_ < b.value_; }
  friend bool operator!=(const Grade& a, const Grade& b) { return !(a == b); }
  friend bool operator>(const Grade& a, const Grade& b) { return b < a; }
  friend bool operator<=(const Grade& a, const Grade& b) { return !(b < a); }
  friend bool operator>=(const Grade& a, const Grade& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Grade& g) { return os << g.str(); }

 private:
  explicit Grade(value_type v) : value_(v) {}

  static value_type checked(value_type v) {
    if (v < value_type(0) || v > value_type(1)) throw input_error("grade outside [0,1]");
    return v;
  }

  static std::int64_t parse_int(std::string_view part, std::string_view whole) {
    std::int64_t out = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), out);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size())
      throw input_error("malformed grade '" + std::string(whole) + "'");
    return out;
  }

  value_type value_{0};
};

inline Grade min(const Grade& a, const Grade& b) { return b < a ? b : a; }
inline Grade max(const Grade& a, const Grade& b) { return a < b ? b : a; }

}  // namespace gsg
