#include "ptree/rational.hpp"

#include <cctype>
#include <sstream>

#include "ptree/errors.hpp"

namespace ptree {

namespace mp = boost::multiprecision;

Rational::Rational(long long numerator, long long denominator) {
  if (denominator == 0) throw Error("rational with zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  value_ = Backend(numerator, denominator);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw Error("division by zero");
  return Rational(Backend(value_ / o.value_));
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::from_string(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto bad = [&] { return Error("not a rational literal: '" + std::string(text) + "'"); };

  Rational result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw bad();
    mp::cpp_int d{std::string(den)};
    if (d.is_zero()) throw Error("rational with zero denominator: '" + std::string(text) + "'");
    result.value_ = Backend(mp::cpp_int{std::string(num)}, d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) throw bad();
    mp::cpp_int scale = mp::pow(mp::cpp_int(10), static_cast<unsigned>(frac.size()));
    mp::cpp_int numerator = mp::cpp_int{std::string(whole)} * scale + mp::cpp_int{std::string(frac)};
    result.value_ = Backend(numerator, scale);
  } else {
    if (!all_digits(body)) throw bad();
    result.value_ = Backend(mp::cpp_int{std::string(body)});
  }
  if (negative) result.value_ = -result.value_;
  return result;
}

std::string Rational::to_string() const {
  if (denominator(value_) == 1) return numerator(value_).str();
  return numerator(value_).str() + "/" + denominator(value_).str();
}

std::string Rational::to_decimal_string() const {
  std::ostringstream out;
  out.precision(12);
  out << to_double();
  std::string s = out.str();
  if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
      s.find("inf") == std::string::npos && s.find("nan") == std::string::npos) {
    s += ".0";
  }
  return s;
}

}  // namespace ptree
