#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kcon/rational.hpp"

namespace kcon {

enum class Var : std::uint8_t { alpha, beta, gamma, sigma, mu, k, n };

inline constexpr std::size_t kVarCount = 7;

inline std::string_view var_name(Var v) {
  static constexpr std::array<std::string_view, kVarCount> names = {"alpha", "beta", "gamma", "sigma",
                                                                    "mu",    "k",    "n"};
  return names[static_cast<std::size_t>(v)];
}

// Partial assignment of variables to exact values.
class Point {
public:
  Point() = default;
  Point(std::initializer_list<std::pair<Var, Rational>> values) {
    for (const auto& [v, x] : values) set(v, x);
  }
  void set(Var v, Rational x) { values_[static_cast<std::size_t>(v)] = std::move(x); }
  const std::optional<Rational>& get(Var v) const { return values_[static_cast<std::size_t>(v)]; }

  std::string to_string() const {
    std::string s = "(";
    bool first = true;
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (!values_[i]) continue;
      if (!first) s += ", ";
      s += std::string(var_name(static_cast<Var>(i))) + "=" + values_[i]->to_string();
      first = false;
    }
    return s + ")";
  }

private:
  std::array<std::optional<Rational>, kVarCount> values_;
};

// Multivariate polynomial with exact rational coefficients in canonical expanded form.
class Polynomial {
public:
  using Exponents = std::array<std::uint8_t, kVarCount>;

  Polynomial() = default;
  Polynomial(const Rational& c) { add_term({}, c); }  // NOLINT(google-explicit-constructor)
  Polynomial(long long c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static Polynomial variable(Var v) {
    Exponents e{};
    e[static_cast<std::size_t>(v)] = 1;
    Polynomial p;
    p.add_term(e, 1);
    return p;
  }

  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  unsigned degree(Var v) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max<unsigned>(d, e[static_cast<std::size_t>(v)]);
    return d;
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
      unsigned s = 0;
      for (auto x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }

  std::vector<Var> variables() const {
    std::vector<Var> out;
    for (std::size_t i = 0; i < kVarCount; ++i)
      if (degree(static_cast<Var>(i)) > 0) out.push_back(static_cast<Var>(i));
    return out;
  }

  // Coefficient of v^power, as a polynomial in the remaining variables.
  Polynomial coefficient(Var v, unsigned power) const {
    Polynomial out;
    const auto idx = static_cast<std::size_t>(v);
    for (const auto& [e, c] : terms_) {
      if (e[idx] != power) continue;
      auto rest = e;
      rest[idx] = 0;
      out.add_term(rest, c);
    }
    return out;
  }

  std::optional<Rational> constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_.begin()->first == Exponents{}) return terms_.begin()->second;
    return std::nullopt;
  }

  Polynomial derivative(Var v) const {
    Polynomial out;
    const auto idx = static_cast<std::size_t>(v);
    for (const auto& [e, c] : terms_) {
      if (e[idx] == 0) continue;
      auto d = e;
      d[idx] -= 1;
      out.add_term(d, c * Rational(e[idx]));
    }
    return out;
  }

  // Replace every bound variable of `point` by its value.
  Polynomial partial_eval(const Point& point) const {
    Polynomial out;
    for (const auto& [e, c] : terms_) {
      auto rest = e;
      Rational coef = c;
      for (std::size_t i = 0; i < kVarCount; ++i) {
        const auto& x = point.get(static_cast<Var>(i));
        if (x && e[i] > 0) {
          coef *= x->pow(e[i]);
          rest[i] = 0;
        }
      }
      out.add_term(rest, coef);
    }
    return out;
  }

  Rational eval(const Point& point) const {
    auto reduced = partial_eval(point);
    auto value = reduced.constant_value();
    if (!value) throw std::invalid_argument("polynomial evaluation point leaves variables unassigned");
    return *value;
  }

  Polynomial substitute(Var v, const Polynomial& replacement) const {
    Polynomial out;
    const auto idx = static_cast<std::size_t>(v);
    std::vector<Polynomial> powers{Polynomial(1)};
    for (const auto& [e, c] : terms_) {
      while (powers.size() <= e[idx]) powers.push_back(powers.back() * replacement);
      auto rest = e;
      rest[idx] = 0;
      Polynomial mono;
      mono.add_term(rest, c);
      out += mono * powers[e[idx]];
    }
    return out;
  }

  Polynomial pow(unsigned e) const {
    Polynomial out(1);
    for (unsigned i = 0; i < e; ++i) out *= *this;
    return out;
  }

  Polynomial operator-() const {
    Polynomial out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e{};
        for (std::size_t i = 0; i < kVarCount; ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
        out.add_term(e, ca * cb);
      }
    return out;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    // Highest total degree first.
    std::vector<std::pair<Exponents, Rational>> ordered(terms_.rbegin(), terms_.rend());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
      unsigned da = 0, db = 0;
      for (auto x : a.first) da += x;
      for (auto x : b.first) db += x;
      return da > db;
    });
    for (const auto& [e, c] : ordered) {
      Rational mag = c.abs();
      s += s.empty() ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
      std::string mono;
      for (std::size_t i = 0; i < kVarCount; ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += var_name(static_cast<Var>(i));
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty()) s += mag.to_string();
      else if (mag == Rational(1)) s += mono;
      else s += mag.to_string() + "*" + mono;
    }
    return s;
  }

private:
  void add_term(const Exponents& e, const Rational& c) {
    if (c.sign() == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.sign() == 0) terms_.erase(it);
    }
  }

  std::map<Exponents, Rational> terms_;
};

namespace vars {
inline const Polynomial alpha = Polynomial::variable(Var::alpha);
inline const Polynomial beta = Polynomial::variable(Var::beta);
inline const Polynomial gamma = Polynomial::variable(Var::gamma);
inline const Polynomial sigma = Polynomial::variable(Var::sigma);
inline const Polynomial mu = Polynomial::variable(Var::mu);
inline const Polynomial k = Polynomial::variable(Var::k);
inline const Polynomial n = Polynomial::variable(Var::n);
}  // namespace vars

inline bool poly_equal(const Polynomial& p, const Polynomial& q) { return (p - q).is_zero(); }

inline Rational poly_eval(const Polynomial& p, const Point& point) { return p.eval(point); }

// Closed interval of exact values for one variable.
struct Interval {
  Var var;
  Rational lo;
  Rational hi;
};

// A polynomial of degree <= 2 is convex along v iff its v^2 coefficient is a nonnegative constant.
inline bool separately_convex(const Polynomial& p, std::initializer_list<Var> vs) {
  if (p.total_degree() > 2) throw std::invalid_argument("separate convexity needs total degree <= 2");
  for (auto v : vs) {
    auto lead = p.coefficient(v, 2).constant_value();
    if (!lead || lead->sign() < 0) return false;
  }
  return true;
}

struct BoxMax {
  Rational value;
  Point vertex;
};

// Maximum over the vertices of the box, which is the box maximum when p is separately convex.
// Ties resolve to the lexicographically first vertex (lo before hi, box order).
inline BoxMax box_vertex_max(const Polynomial& p, const std::vector<Interval>& box) {
  if (box.size() >= 31) throw std::invalid_argument("box has too many dimensions");
  std::optional<BoxMax> best;
  const std::size_t corners = std::size_t{1} << box.size();
  for (std::size_t mask = 0; mask < corners; ++mask) {
    Point pt;
    for (std::size_t i = 0; i < box.size(); ++i) {
      const bool hi = (mask >> (box.size() - 1 - i)) & 1;
      pt.set(box[i].var, hi ? box[i].hi : box[i].lo);
    }
    auto value = p.eval(pt);
    if (!best || value > best->value) best = BoxMax{value, pt};
  }
  return *best;
}

inline std::vector<std::pair<Point, Rational>> box_vertex_values(const Polynomial& p, const std::vector<Interval>& box) {
  std::vector<std::pair<Point, Rational>> out;
  const std::size_t corners = std::size_t{1} << box.size();
  for (std::size_t mask = 0; mask < corners; ++mask) {
    Point pt;
    for (std::size_t i = 0; i < box.size(); ++i) {
      const bool hi = (mask >> (box.size() - 1 - i)) & 1;
      pt.set(box[i].var, hi ? box[i].hi : box[i].lo);
    }
    out.emplace_back(pt, p.eval(pt));
  }
  return out;
}

// For p quadratic in v, dp/dv is linear in v, so checking both endpoints suffices. The derivative
// must not depend on other variables.
inline bool monotone_decreasing_on(const Polynomial& p, Var v, const Rational& lo, const Rational& hi) {
  if (p.degree(v) > 2) throw std::invalid_argument("monotonicity check needs p quadratic in the variable");
  const auto d = p.derivative(v);
  for (auto w : d.variables())
    if (w != v) throw std::invalid_argument("derivative depends on other variables");
  return d.eval(Point{{v, lo}}).sign() <= 0 && d.eval(Point{{v, hi}}).sign() <= 0;
}

// b^2 - 4ac for a univariate quadratic a v^2 + b v + c.
inline Rational discriminant(const Polynomial& p) {
  auto vs = p.variables();
  if (vs.size() != 1 || p.degree(vs[0]) != 2) throw std::invalid_argument("discriminant needs a univariate quadratic");
  const auto v = vs[0];
  const auto a = *p.coefficient(v, 2).constant_value();
  const auto b = *p.coefficient(v, 1).constant_value();
  const auto c = *p.coefficient(v, 0).constant_value();
  return b * b - 4 * a * c;
}

inline int discriminant_sign(const Polynomial& p) { return discriminant(p).sign(); }

}  // namespace kcon
