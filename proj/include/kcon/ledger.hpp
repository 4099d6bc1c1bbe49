#pragma once

#include <algorithm>
#include <exception>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "kcon/bounds.hpp"
#include "kcon/constructions.hpp"
#include "kcon/polynomial.hpp"

namespace kcon::ledger {

enum class CheckKind {
  Identity,
  Evaluation,
  Sign,
  SeparateConvexity,
  BoxVertexMax,
  Monotonicity,
  Discriminant,
  Implication,
};

inline std::string_view to_string(CheckKind kind) {
  switch (kind) {
    case CheckKind::Identity: return "identity";
    case CheckKind::Evaluation: return "evaluation";
    case CheckKind::Sign: return "sign";
    case CheckKind::SeparateConvexity: return "separate-convexity";
    case CheckKind::BoxVertexMax: return "box-vertex-max";
    case CheckKind::Monotonicity: return "monotonicity";
    case CheckKind::Discriminant: return "discriminant";
    case CheckKind::Implication: return "implication";
  }
  return "?";
}

// One exact assertion inside a check.
struct Fact {
  std::string what;
  bool passed = false;
  std::string actual;
  std::string expected;
  std::vector<Polynomial> sides;  // both sides of an identity, for independent re-evaluation
};

class Facts {
public:
  void identity(std::string what, const Polynomial& lhs, const Polynomial& rhs) {
    facts_.push_back({std::move(what), poly_equal(lhs, rhs), lhs.to_string(), rhs.to_string(), {lhs, rhs}});
  }

  void value(std::string what, const Polynomial& p, const Point& at, const Rational& expected) {
    auto actual = p.eval(at);
    facts_.push_back({std::move(what) + " at " + at.to_string(), actual == expected, actual.to_string(),
                      expected.to_string(), {}});
  }

  // rule is one of "<0", "<=0", ">0", ">=0", "=0".
  void sign(std::string what, const Rational& value, std::string_view rule) {
    const int s = value.sign();
    bool ok = rule == "<0" ? s < 0 : rule == "<=0" ? s <= 0 : rule == ">0" ? s > 0 : rule == ">=0" ? s >= 0 : s == 0;
    facts_.push_back({std::move(what), ok, value.to_string(), std::string(rule), {}});
  }

  void holds(std::string what, bool ok) {
    facts_.push_back({std::move(what), ok, ok ? "true" : "false", "true", {}});
  }

  std::vector<Fact> take() { return std::move(facts_); }

private:
  std::vector<Fact> facts_;
};

struct LedgerCheck {
  std::string id;
  CheckKind kind;
  std::string claim;
  std::function<void(Facts&)> body;
};

struct CheckResult {
  std::string id;
  CheckKind kind;
  std::string claim;
  bool passed = false;
  std::vector<Fact> facts;
  std::string error;  // set when the body threw
};

struct LedgerReport {
  std::vector<CheckResult> results;  // sorted by id

  std::size_t total() const { return results.size(); }
  std::size_t passed() const {
    return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [](const auto& r) { return r.passed; }));
  }
  std::size_t failed() const { return total() - passed(); }
  bool all_passed() const { return failed() == 0; }

  const CheckResult* find(std::string_view id) const {
    for (const auto& r : results)
      if (r.id == id) return &r;
    return nullptr;
  }
};

// The named polynomials of the argument. Tests may perturb these to inject faults.
struct ProofPolynomials {
  Polynomial g;        // 2 gamma^2 - 11 gamma + 15
  Polynomial g1;       // 6 alpha^2 - 7 alpha + 1
  Polynomial aissmall; // 6 alpha^2 + 2 beta^2 - 7 alpha - 7 beta + 6
  Polynomial case21;   // (1/36)(18 a^2 + 54 a s - 63 a + 6 b^2 - 21 b + 72 s^2 - 108 s + 67)
  Polynomial phi1;
  Polynomial phi2;
  Polynomial smaller;  // (1/6)(a^2 + a s + 6 a + s^2 - 3 s + 3)
  Polynomial smaller_case1;
  Polynomial phi3;
  Polynomial phi4;
  Polynomial greater;  // (1/6)(-3 a^2 + 17 a - 5)
  Polynomial greater_case1;
  Polynomial a131;     // 6 a^2 - 15 a + 10

  static ProofPolynomials standard() {
    using namespace vars;
    using R = Rational;
    ProofPolynomials p;
    p.g = 2 * gamma * gamma - 11 * gamma + 15;
    p.g1 = 6 * alpha * alpha - 7 * alpha + 1;
    p.aissmall = 6 * alpha * alpha + 2 * beta * beta - 7 * alpha - 7 * beta + 6;
    p.case21 = R(1, 36) * (18 * alpha * alpha + 54 * alpha * sigma - 63 * alpha + 6 * beta * beta - 21 * beta +
                           72 * sigma * sigma - 108 * sigma + 67);
    p.phi1 = R(1, 36) * (24 * alpha * alpha + 54 * alpha * sigma - 84 * alpha + 72 * sigma * sigma - 108 * sigma + 67);
    p.phi2 = R(1, 2) * (alpha + 1) * sigma + alpha * (1 - sigma) + R(1, 2) * alpha * alpha -
             (R(7, 6) - 2 * sigma) * (alpha + sigma - R(7, 6)) - R(19, 12) * alpha;
    p.smaller = R(1, 6) * (alpha * alpha + alpha * sigma + 6 * alpha + sigma * sigma - 3 * sigma + 3);
    p.smaller_case1 = R(1, 12) * (2 * alpha * alpha + 2 * alpha * sigma - 7 * alpha + 2 * beta * beta - 7 * beta +
                                  2 * sigma * sigma - 6 * sigma + 12);
    p.phi3 = R(1, 6) * (2 * alpha * alpha + alpha * sigma - 7 * alpha + sigma * sigma - 3 * sigma + 6);
    p.phi4 = R(1, 12) * (2 * alpha * alpha + 2 * alpha * sigma - 7 * alpha + 2 * sigma * sigma - 6 * sigma + 6);
    p.greater = R(1, 6) * (-3 * alpha * alpha + 17 * alpha - 5);
    p.greater_case1 = R(1, 12) * (-6 * alpha * alpha + 15 * alpha + 2 * beta * beta - 7 * beta - 4);
    p.a131 = 6 * alpha * alpha - 15 * alpha + 10;
    return p;
  }
};

// Normalized Matula threshold (x^2 + 4x - 2)/6.
inline Polynomial matula(const Polynomial& x) { return Rational(1, 6) * (x * x + 4 * x - 2); }

inline Polynomial choose2(const Polynomial& x) { return Rational(1, 2) * x * (x - 1); }

struct CornerExpectation {
  Rational alpha;
  Rational sigma;
  Rational value;
};

// Exact corner values, separate convexity in (alpha, sigma), and a negative box maximum.
inline void corner_facts(Facts& f, std::string_view name, const Polynomial& p, const Interval& a, const Interval& s,
                         const std::vector<CornerExpectation>& corners) {
  const std::string n(name);
  f.holds(n + " separately convex in alpha and sigma", separately_convex(p, {Var::alpha, Var::sigma}));
  for (const auto& c : corners) f.value(n, p, Point{{Var::alpha, c.alpha}, {Var::sigma, c.sigma}}, c.value);
  auto best = box_vertex_max(p, {a, s});
  f.sign(n + " box maximum at " + best.vertex.to_string(), best.value, "<0");
}

inline std::vector<LedgerCheck> standard_checks(const ProofPolynomials& P = ProofPolynomials::standard()) {
  using namespace vars;
  using R = Rational;
  static constexpr auto A = Var::alpha;
  static constexpr auto B = Var::beta;
  static constexpr auto G = Var::gamma;
  static constexpr auto S = Var::sigma;

  // Edges at A, S side plus Matula on S u B, minus the target. Used by both sigma <= 1/3 cases.
  const Polynomial a_side = R(1, 2) * (alpha + 1) * sigma + alpha * (1 - sigma) + R(1, 2) * alpha * alpha -
                            (R(7, 6) - 2 * sigma) * (alpha + sigma - R(7, 6));

  std::vector<LedgerCheck> checks;

  checks.push_back({"L-GAMMA3", CheckKind::BoxVertexMax,
                    "Matula slack against 19/12(gamma-1) is g/12 with g(5/2)=g(3)=0, g convex, g<=0 on [5/2,3]",
                    [P](Facts& f) {
                      f.identity("M(gamma) - 19/12(gamma-1) = g/12", matula(gamma) - R(19, 12) * (gamma - 1),
                                 R(1, 12) * P.g);
                      f.value("g", P.g, {{G, R(5, 2)}}, 0);
                      f.value("g", P.g, {{G, 3}}, 0);
                      f.holds("g convex in gamma", separately_convex(P.g, {G}));
                      f.sign("max of g over [5/2,3]", box_vertex_max(P.g, {{G, R(5, 2), 3}}).value, "<=0");
                    }});

  checks.push_back({"L-MATULA-IDENT", CheckKind::Identity,
                    "k^2/6 (gamma^2+4gamma-2) = C(gamma k,2) - ((gamma k - k)^2 - 1)/3 + gamma k/2 - 1/3, slack > 0",
                    [](Facts& f) {
                      const auto nk = gamma * k;
                      f.identity("normalized vs raw Matula", k * k * matula(gamma),
                                 choose2(nk) - R(1, 3) * ((nk - k).pow(2) - 1) + R(1, 2) * nk - R(1, 3));
                      const Polynomial slack = R(1, 2) * n - R(1, 3);
                      f.value("slack n/2 - 1/3", slack, {{Var::n, 1}}, R(1, 6));
                      f.sign("d(slack)/dn", *slack.derivative(Var::n).constant_value(), ">0");
                    }});

  checks.push_back({"L-ALPHA-SPLIT", CheckKind::Identity, "19/12 alpha + 19/12 beta = 19/12(alpha+beta) = 19/12(gamma-1)",
                    [](Facts& f) {
                      f.identity("split", R(19, 12) * alpha + R(19, 12) * beta, R(19, 12) * (alpha + beta));
                      f.identity("gamma = alpha + beta + 1",
                                 (R(19, 12) * (gamma - 1)).substitute(G, alpha + beta + 1), R(19, 12) * (alpha + beta));
                    }});

  checks.push_back({"L-A1-SMALLCASE", CheckKind::Sign,
                    "alpha^2/2 + alpha <= 3alpha/2 on [0,1]; 3/2 alpha + 19/12 beta < 19/12(alpha+beta) for alpha>0",
                    [](Facts& f) {
                      const Polynomial d = R(1, 2) * alpha * alpha + alpha - R(3, 2) * alpha;
                      f.holds("difference convex in alpha", separately_convex(d, {A}));
                      f.sign("max of difference over [0,1]", box_vertex_max(d, {{A, 0, 1}}).value, "<=0");
                      const Polynomial strict = R(3, 2) * alpha + R(19, 12) * beta - R(19, 12) * (alpha + beta);
                      f.identity("strict gap is linear in alpha", strict, R(-1, 12) * alpha);
                      f.sign("gap coefficient of alpha (alpha > 0)", *strict.coefficient(A, 1).constant_value(), "<0");
                    }});

  checks.push_back({"L-A1-EQUIV", CheckKind::Identity,
                    "12(alpha^2/2 + alpha + M(beta+1) - 19/12(alpha+beta)) = 6a^2 + 2b^2 - 7a - 7b + 6", [P](Facts& f) {
                      f.identity("reduction",
                                 12 * (R(1, 2) * alpha * alpha + alpha + matula(beta + 1) - R(19, 12) * (alpha + beta)),
                                 P.aissmall);
                    }});

  checks.push_back({"L-A1-MONO", CheckKind::Monotonicity,
                    "6a^2 + 2b^2 - 7a - 7b + 6 decreasing in beta on [1,7/4]; at beta=1 it is g1", [P](Facts& f) {
                      f.holds("decreasing in beta on [1,7/4]", monotone_decreasing_on(P.aissmall, B, 1, R(7, 4)));
                      f.identity("value at beta=1", P.aissmall.substitute(B, 1), P.g1);
                    }});

  checks.push_back({"L-G1", CheckKind::Evaluation, "g1(1/2) = -1, g1(1) = 0, g1 convex so g1 <= 0 on [1/2,1]",
                    [P](Facts& f) {
                      f.value("g1", P.g1, {{A, R(1, 2)}}, -1);
                      f.value("g1", P.g1, {{A, 1}}, 0);
                      f.holds("g1 convex in alpha", separately_convex(P.g1, {A}));
                      f.sign("max of g1 over [1/2,1]", box_vertex_max(P.g1, {{A, R(1, 2), 1}}).value, "<=0");
                    }});

  checks.push_back({"L-MU-LB", CheckKind::Implication,
                    "mu^2/2 + mu(1+sigma) - 19/12 mu = (mu/2)(mu - (7/6 - 2sigma)), so mu > 0 gives mu > 7/6 - 2sigma",
                    [](Facts& f) {
                      const Polynomial lhs = R(1, 2) * mu * mu + mu * (1 + sigma) - R(19, 12) * mu;
                      const Polynomial factor = R(1, 2) * mu;
                      f.identity("factorization", lhs, factor * (mu - (R(7, 6) - 2 * sigma)));
                      f.sign("coefficient of the factor mu/2 (mu > 0)", *factor.coefficient(Var::mu, 1).constant_value(),
                             ">0");
                    }});

  checks.push_back({"L-CASE1", CheckKind::Implication,
                    "(alpha-1)/2 > 7/6 - 2sigma iff alpha > 10/3 - 4sigma, and 10/3 - 4sigma >= 2 for sigma <= 1/3",
                    [](Facts& f) {
                      const Polynomial bound = R(10, 3) - 4 * sigma;
                      f.identity("rescaled by 2", 2 * (R(1, 2) * (alpha - 1) - (R(7, 6) - 2 * sigma)), alpha - bound);
                      f.value("10/3 - 4sigma", bound, {{S, R(1, 3)}}, 2);
                      f.holds("10/3 - 4sigma decreasing on [0,1/3]", monotone_decreasing_on(bound, S, 0, R(1, 3)));
                      f.sign("2 - 3/2 (contradicts alpha < 3/2)", R(2) - R(3, 2), ">0");
                    }});

  checks.push_back({"L-SIGMA-LB", CheckKind::Implication,
                    "7/6 - 2sigma < (alpha - sigma)/2 iff sigma > 7/9 - alpha/3, and 7/9 - (1/3)(3/2) = 5/18",
                    [](Facts& f) {
                      const Polynomial bound = R(7, 9) - R(1, 3) * alpha;
                      f.identity("rescaled by -2/3", R(-2, 3) * ((R(7, 6) - 2 * sigma) - R(1, 2) * (alpha - sigma)),
                                 sigma - bound);
                      f.value("7/9 - alpha/3", bound, {{A, R(3, 2)}}, R(5, 18));
                      f.holds("7/9 - alpha/3 decreasing on [1,3/2]", monotone_decreasing_on(bound, A, 1, R(3, 2)));
                    }});

  checks.push_back({"L-CASE21-IDENT", CheckKind::Identity,
                    "Case beta <= 3/2 of the S1 bound expands to (1/36)(18a^2 + 54as - 63a + 6b^2 - 21b + 72s^2 - 108s + 67)",
                    [P, a_side](Facts& f) {
                      f.identity("expansion", a_side + matula(beta + 1) - R(19, 12) * (alpha + beta), P.case21);
                    }});

  checks.push_back({"L-CASE21-MONO", CheckKind::Monotonicity,
                    "the beta <= 3/2 expression decreases in beta on [1,3/2], stationary at beta = 7/4", [P](Facts& f) {
                      f.holds("decreasing in beta on [1,3/2]", monotone_decreasing_on(P.case21, B, 1, R(3, 2)));
                      f.value("d/dbeta", P.case21.derivative(B), {{B, R(7, 4)}}, 0);
                    }});

  checks.push_back({"L-PHI1", CheckKind::BoxVertexMax,
                    "phi1 = expression at beta=alpha; convex; corners on [1,3/2]x[5/18,1/3] are all negative",
                    [P](Facts& f) {
                      f.identity("beta = alpha", P.case21.substitute(B, alpha), P.phi1);
                      corner_facts(f, "phi1", P.phi1, {A, 1, R(3, 2)}, {S, R(5, 18), R(1, 3)},
                                   {{1, R(5, 18), R(-11, 162)},
                                    {1, R(1, 3), R(-1, 12)},
                                    {R(3, 2), R(5, 18), R(-125, 648)},
                                    {R(3, 2), R(1, 3), R(-1, 6)}});
                      f.value("phi1 box maximum", P.phi1,
                              box_vertex_max(P.phi1, {{A, 1, R(3, 2)}, {S, R(5, 18), R(1, 3)}}).vertex, R(-11, 162));
                    }});

  checks.push_back({"L-PHI2", CheckKind::BoxVertexMax,
                    "phi2 (beta > 3/2 case) corners on [1,3/2]x[5/18,1/3] are all negative", [P, a_side](Facts& f) {
                      f.identity("definition", a_side - R(19, 12) * alpha, P.phi2);
                      corner_facts(f, "phi2", P.phi2, {A, 1, R(3, 2)}, {S, R(5, 18), R(1, 3)},
                                   {{1, R(5, 18), R(-49, 324)},
                                    {1, R(1, 3), R(-1, 6)},
                                    {R(3, 2), R(5, 18), R(-125, 648)},
                                    {R(3, 2), R(1, 3), R(-1, 6)}});
                    }});

  checks.push_back({"L-SMALLER-IDENT", CheckKind::Identity,
                    "M(alpha+1-sigma) + (alpha+1)sigma/2 = (1/6)(a^2 + as + 6a + s^2 - 3s + 3)", [P](Facts& f) {
                      f.identity("expansion", matula(alpha + 1 - sigma) + R(1, 2) * (alpha + 1) * sigma, P.smaller);
                    }});

  checks.push_back({"L-SMALLER-C1", CheckKind::Identity,
                    "beta <= 3/2 case expands to (1/12)(2a^2 + 2as - 7a + 2b^2 - 7b + 2s^2 - 6s + 12), phi3 at beta=alpha",
                    [P](Facts& f) {
                      f.identity("expansion", P.smaller + matula(beta + 1) - R(19, 12) * (alpha + beta), P.smaller_case1);
                      f.holds("decreasing in beta on [1,3/2]", monotone_decreasing_on(P.smaller_case1, B, 1, R(3, 2)));
                      f.identity("beta = alpha", P.smaller_case1.substitute(B, alpha), P.phi3);
                    }});

  checks.push_back({"L-PHI3", CheckKind::BoxVertexMax, "phi3 corners on [4/3,3/2]x[1/3,1] are all negative",
                    [P](Facts& f) {
                      corner_facts(f, "phi3", P.phi3, {A, R(4, 3), R(3, 2)}, {S, R(1, 3), 1},
                                   {{R(4, 3), R(1, 3), R(-1, 27)},
                                    {R(4, 3), 1, R(-2, 27)},
                                    {R(3, 2), R(1, 3), R(-7, 108)},
                                    {R(3, 2), 1, R(-1, 12)}});
                    }});

  checks.push_back({"L-PHI4", CheckKind::BoxVertexMax,
                    "phi4 = (1/6)(...) - 19/12 alpha = (1/12)(2a^2 + 2as - 7a + 2s^2 - 6s + 6), corners negative",
                    [P](Facts& f) {
                      f.identity("expansion", P.smaller - R(19, 12) * alpha, P.phi4);
                      corner_facts(f, "phi4", P.phi4, {A, R(4, 3), R(3, 2)}, {S, R(1, 3), 1},
                                   {{R(4, 3), R(1, 3), R(-1, 18)},
                                    {R(4, 3), 1, R(-5, 54)},
                                    {R(3, 2), R(1, 3), R(-7, 108)},
                                    {R(3, 2), 1, R(-1, 12)}});
                    }});

  checks.push_back({"L-GREATER-SETUP", CheckKind::Monotonicity,
                    "1 - 2(alpha-1) >= 1/3 for alpha <= 4/3; the reduced side has weight 3alpha - 2", [](Facts& f) {
                      const Polynomial s_prime = 1 - 2 * (alpha - 1);
                      f.value("1 - 2(alpha-1)", s_prime, {{A, R(4, 3)}}, R(1, 3));
                      f.holds("1 - 2(alpha-1) decreasing on [1,4/3]", monotone_decreasing_on(s_prime, A, 1, R(4, 3)));
                      f.identity("alpha + 1 - |S'|/k", alpha + 1 - s_prime, 3 * alpha - 2);
                    }});

  checks.push_back({"L-GREATER-IDENT", CheckKind::Identity,
                    "M(3alpha-2) + alpha(3-2alpha) - (alpha-1)/6 = (1/6)(-3a^2 + 17a - 5)", [P](Facts& f) {
                      const Polynomial s_prime = 1 - 2 * (alpha - 1);
                      f.identity("A to S' edge bound", alpha * s_prime - R(1, 2) * (alpha - 1) * R(1, 3),
                                 alpha * (3 - 2 * alpha) - R(1, 6) * (alpha - 1));
                      f.identity("expansion", matula(3 * alpha - 2) + alpha * (3 - 2 * alpha) - R(1, 6) * (alpha - 1),
                                 P.greater);
                    }});

  checks.push_back({"L-GREATER-C1", CheckKind::Identity,
                    "beta <= 3/2 case is (1/12)(-6a^2 + 15a + 2b^2 - 7b - 4), equal to -(alpha-1)^2/3 at beta=alpha",
                    [P](Facts& f) {
                      f.identity("expansion", P.greater + matula(beta + 1) - R(19, 12) * (alpha + beta), P.greater_case1);
                      f.holds("decreasing in beta on [1,3/2]", monotone_decreasing_on(P.greater_case1, B, 1, R(3, 2)));
                      f.identity("beta = alpha", P.greater_case1.substitute(B, alpha), R(-1, 3) * (alpha - 1).pow(2));
                    }});

  checks.push_back({"L-GREATER-DISC", CheckKind::Discriminant,
                    "(1/6)(-3a^2 + 17a - 5) - 19/12 a = -(6a^2 - 15a + 10)/12 <= 0 since the discriminant is negative",
                    [P](Facts& f) {
                      f.identity("expansion", P.greater - R(19, 12) * alpha, R(-1, 12) * P.a131);
                      const auto disc = discriminant(P.a131);
                      f.sign("discriminant of 6a^2 - 15a + 10", disc, "<0");
                      f.holds("discriminant equals -15", disc == Rational(-15));
                      f.sign("leading coefficient", *P.a131.coefficient(A, 2).constant_value(), ">0");
                    }});

  checks.push_back({"L-CONSTR-BOUND", CheckKind::Evaluation,
                    "construction edge count <= 3/2(k-1/3)(n-k), equality iff k | n, for 2<=k<=6, k+1<=n<=40",
                    [](Facts& f) {
                      std::size_t mismatched = 0, over = 0, equality_wrong = 0, cases = 0;
                      for (std::size_t kk = 2; kk <= 6; ++kk)
                        for (std::size_t nn = kk + 1; nn <= 40; ++nn) {
                          ++cases;
                          const auto closed = mader_edge_count(nn, kk);
                          if (mader_graph(nn, kk).graph.m() != closed) ++mismatched;
                          const auto bound = threshold(BoundKind::MaderConjecture, static_cast<long long>(nn),
                                                       static_cast<long long>(kk)).value;
                          const Rational count(static_cast<long long>(closed));
                          if (count > bound) ++over;
                          if ((count == bound) != (nn % kk == 0)) ++equality_wrong;
                        }
                      f.holds("grid covers " + std::to_string(cases) + " (n,k) pairs", cases == 180);
                      f.sign("closed form vs generated graph mismatches", Rational(static_cast<long long>(mismatched)), "=0");
                      f.sign("cases above the bound", Rational(static_cast<long long>(over)), "=0");
                      f.sign("cases where equality disagrees with k | n", Rational(static_cast<long long>(equality_wrong)), "=0");
                    }});

  return checks;
}

// Runs the given checks (optionally only the listed ids) and returns results sorted by id.
inline LedgerReport run_checks(const std::vector<LedgerCheck>& checks, const std::vector<std::string>& only = {}) {
  std::set<std::string> wanted(only.begin(), only.end());
  for (const auto& id : wanted)
    if (std::none_of(checks.begin(), checks.end(), [&](const auto& c) { return c.id == id; }))
      throw std::invalid_argument("unknown ledger check '" + id + "'");
  LedgerReport report;
  for (const auto& check : checks) {
    if (!wanted.empty() && !wanted.count(check.id)) continue;
    CheckResult r{check.id, check.kind, check.claim, false, {}, {}};
    Facts facts;
    try {
      check.body(facts);
      r.facts = facts.take();
      r.passed = !r.facts.empty() && std::all_of(r.facts.begin(), r.facts.end(), [](const auto& x) { return x.passed; });
    } catch (const std::exception& e) {
      r.facts = facts.take();
      r.error = e.what();
    }
    report.results.push_back(std::move(r));
  }
  std::sort(report.results.begin(), report.results.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return report;
}

inline LedgerReport run_all_checks() { return run_checks(standard_checks()); }

inline std::string to_text(const LedgerReport& report) {
  std::string out;
  for (const auto& r : report.results) {
    out += (r.passed ? "PASS " : "FAIL ") + r.id + "  [" + std::string(to_string(r.kind)) + "] " + r.claim + "\n";
    if (!r.passed) {
      for (const auto& fact : r.facts)
        if (!fact.passed) out += "    " + fact.what + ": actual " + fact.actual + ", expected " + fact.expected + "\n";
      if (!r.error.empty()) out += "    error: " + r.error + "\n";
    }
  }
  out += "checks: " + std::to_string(report.passed()) + "/" + std::to_string(report.total()) + " passed\n";
  out += report.all_passed() ? "checks: all passed\n" : "checks: " + std::to_string(report.failed()) + " failed\n";
  return out;
}

inline nlohmann::ordered_json to_json(const LedgerReport& report) {
  nlohmann::ordered_json j;
  j["total"] = report.total();
  j["passed"] = report.passed();
  j["failed"] = report.failed();
  j["all_passed"] = report.all_passed();
  auto& arr = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& r : report.results) {
    nlohmann::ordered_json c;
    c["id"] = r.id;
    c["kind"] = to_string(r.kind);
    c["claim"] = r.claim;
    c["status"] = r.passed ? "pass" : "fail";
    auto& facts = c["facts"] = nlohmann::ordered_json::array();
    for (const auto& fact : r.facts)
      facts.push_back({{"what", fact.what}, {"passed", fact.passed}, {"actual", fact.actual}, {"expected", fact.expected}});
    if (!r.error.empty()) c["error"] = r.error;
    arr.push_back(std::move(c));
  }
  return j;
}

}  // namespace kcon::ledger
