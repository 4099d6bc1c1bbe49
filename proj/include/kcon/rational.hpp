#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace kcon {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational, always reduced with positive denominator.
class Rational {
public:
  Rational() = default;
  Rational(long long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den) : boost::multiprecision::cpp_rational(num, den);
  }

  // Accepts "p", "-p", "p/q".
  static Rational parse(std::string_view text) {
    auto slash = text.find('/');
    auto parse_int = [](std::string_view s) {
      if (s.empty()) throw std::invalid_argument("malformed rational");
      std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
      if (i == s.size()) throw std::invalid_argument("malformed rational");
      for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed rational '" + std::string(s) + "'");
      return BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
    };
    if (slash == std::string_view::npos) return Rational(parse_int(text), 1);
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }

  BigInt num() const { return boost::multiprecision::numerator(value_); }
  BigInt den() const { return boost::multiprecision::denominator(value_); }

  bool is_integer() const { return den() == 1; }
  int sign() const { return value_.sign(); }

  // Largest integer <= value.
  BigInt floor() const {
    BigInt q = num() / den();
    if (num() < 0 && q * den() != num()) q -= 1;
    return q;
  }

  Rational abs() const { return value_.sign() < 0 ? -*this : *this; }

  Rational pow(unsigned e) const {
    Rational out = 1;
    for (unsigned i = 0; i < e; ++i) out *= *this;
    return out;
  }

  // "p" for integers, "p/q" otherwise.
  std::string to_string() const {
    return is_integer() ? num().str() : num().str() + "/" + den().str();
  }

  // Rounded decimal rendering for display only.
  std::string to_decimal(unsigned places = 6) const {
    BigInt scale = 1;
    for (unsigned i = 0; i < places; ++i) scale *= 10;
    Rational scaled = abs() * Rational(scale, 1) + Rational(1, 2);
    std::string digits = scaled.floor().str();
    if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
    std::string out = (sign() < 0 && digits.find_first_not_of('0') != std::string::npos) ? "-" : "";
    out += digits.substr(0, digits.size() - places);
    if (places > 0) out += "." + digits.substr(digits.size() - places);
    return out;
  }

  Rational operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
  }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.sign() == 0) throw std::domain_error("division by zero rational");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
  boost::multiprecision::cpp_rational value_;
};

inline Rational binomial(long long n, long long r) {
  if (r < 0 || n < 0 || r > n) return 0;
  BigInt out = 1;
  for (long long i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return Rational(out, 1);
}

}  // namespace kcon
