#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <string>
#include <string_view>

namespace ptree {

// Exact arbitrary-precision rational. Always kept in lowest terms with a
// positive denominator; every probability in the engine is one of these.
// Doubles appear only in display formatting, never in computation.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long long value) : value_(value) {}  // NOLINT: implicit by design
  Rational(long long numerator, long long denominator);

  // Accepts "3/4", "7", "-2/5" and exact decimals like "0.25" (-> 1/4).
  static Rational from_string(std::string_view text);

  Rational operator+(const Rational& o) const { return Rational(value_ + o.value_); }
  Rational operator-(const Rational& o) const { return Rational(value_ - o.value_); }
  Rational operator*(const Rational& o) const { return Rational(value_ * o.value_); }
  Rational operator/(const Rational& o) const;
  Rational operator-() const { return Rational(-value_); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  bool operator==(const Rational& o) const { return value_ == o.value_; }
  std::strong_ordering operator<=>(const Rational& o) const {
    if (value_ < o.value_) return std::strong_ordering::less;
    if (value_ > o.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  bool is_zero() const { return value_.is_zero(); }
  bool is_one() const { return value_ == 1; }
  bool in_unit_interval() const { return value_ >= 0 && value_ <= 1; }

  // Lowest terms; omits the denominator when it is 1 ("1/2", "0", "3").
  std::string to_string() const;
  // Display-only decimal rendering, e.g. "0.375"; integral values keep one
  // decimal place ("1.0").
  std::string to_decimal_string() const;
  double to_double() const { return value_.convert_to<double>(); }

  std::string numerator_string() const { return numerator(value_).str(); }
  std::string denominator_string() const { return denominator(value_).str(); }

 private:
  using Backend = boost::multiprecision::cpp_rational;
  explicit Rational(Backend v) : value_(std::move(v)) {}
  Backend value_;
};

}  // namespace ptree
