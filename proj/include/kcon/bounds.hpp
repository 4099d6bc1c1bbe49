#pragma once

#include <array>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "kcon/rational.hpp"

namespace kcon {

enum class BoundKind {
  MaderConjecture,       // 3/2 (k - 1/3)(n - k), the construction's edge count when k | n
  YusterThm,             // 193/120 k (n - k), n >= 9k/4
  NewThm,                // 19/12 k (n - k), n >= 5k/2
  MatulaLemma,           // C(n,2) - ((n-k)^2 - 1)/3, n >= k+1
  MatulaNormalized,      // (gamma^2 + 4 gamma - 2)/6 per k^2
  ConjectureNormalized,  // 3/2 (gamma - 1) per k^2
  NewNormalized,         // 19/12 (gamma - 1) per k^2
};

inline constexpr std::array<BoundKind, 7> kAllBoundKinds = {
    BoundKind::MaderConjecture,  BoundKind::YusterThm,           BoundKind::NewThm,       BoundKind::MatulaLemma,
    BoundKind::MatulaNormalized, BoundKind::ConjectureNormalized, BoundKind::NewNormalized,
};

inline std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::MaderConjecture: return "mader-conjecture";
    case BoundKind::YusterThm: return "yuster";
    case BoundKind::NewThm: return "new";
    case BoundKind::MatulaLemma: return "matula";
    case BoundKind::MatulaNormalized: return "matula-normalized";
    case BoundKind::ConjectureNormalized: return "conjecture-normalized";
    case BoundKind::NewNormalized: return "new-normalized";
  }
  return "?";
}

// Accepts the kebab-case names above or the enumerator names, case-insensitively.
inline std::optional<BoundKind> parse_bound_kind(std::string_view text) {
  auto fold = [](std::string_view s) {
    std::string out;
    for (char c : s)
      if (c != '-' && c != '_') out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    return out;
  };
  const auto key = fold(text);
  static constexpr std::array<std::pair<std::string_view, BoundKind>, 4> aliases = {{
      {"matulalemma", BoundKind::MatulaLemma},
      {"maderconjecture", BoundKind::MaderConjecture},
      {"yusterthm", BoundKind::YusterThm},
      {"newthm", BoundKind::NewThm},
  }};
  for (auto kind : kAllBoundKinds)
    if (fold(to_string(kind)) == key) return kind;
  for (const auto& [name, kind] : aliases)
    if (name == key) return kind;
  return std::nullopt;
}

// How "|E| vs threshold" is to be read.
enum class Reading {
  Forcing,             // |E| > B forces a (k+1)-connected subgraph (proved)
  ConjecturedForcing,  // same statement, conjectured for large n only
  AttainableMaximum,   // B is the extremal construction's edge count
};

inline std::string_view to_string(Reading r) {
  switch (r) {
    case Reading::Forcing: return "forcing";
    case Reading::ConjecturedForcing: return "conjectured-forcing";
    case Reading::AttainableMaximum: return "attainable-maximum";
  }
  return "?";
}

enum class DomainStatus { Inside, Outside, Unspecified };

inline std::string_view to_string(DomainStatus d) {
  switch (d) {
    case DomainStatus::Inside: return "inside";
    case DomainStatus::Outside: return "outside";
    case DomainStatus::Unspecified: return "unspecified";
  }
  return "?";
}

struct Threshold {
  BoundKind kind;
  Rational value;
  Reading reading;
  DomainStatus domain;
  std::string domain_text;
};

inline Reading reading_of(BoundKind kind) {
  switch (kind) {
    case BoundKind::MaderConjecture: return Reading::AttainableMaximum;
    case BoundKind::ConjectureNormalized: return Reading::ConjecturedForcing;
    default: return Reading::Forcing;
  }
}

inline bool is_forcing(BoundKind kind) { return reading_of(kind) != Reading::AttainableMaximum; }

// Normalized threshold on |E|/k^2 as a function of gamma = n/k.
inline Rational normalized(const Rational& gamma, BoundKind kind) {
  if (gamma <= Rational(1)) throw std::domain_error("normalized thresholds need gamma > 1");
  switch (kind) {
    case BoundKind::NewThm:
    case BoundKind::NewNormalized: return Rational(19, 12) * (gamma - 1);
    case BoundKind::YusterThm: return Rational(193, 120) * (gamma - 1);
    case BoundKind::ConjectureNormalized: return Rational(3, 2) * (gamma - 1);
    case BoundKind::MatulaNormalized: return Rational(1, 6) * (gamma * gamma + 4 * gamma - 2);
    case BoundKind::MatulaLemma:
    case BoundKind::MaderConjecture: break;
  }
  throw std::invalid_argument("bound kind '" + std::string(to_string(kind)) + "' has no k-free normalized form");
}

inline Threshold threshold(BoundKind kind, long long n, long long k) {
  if (k < 2) throw std::invalid_argument("thresholds need k >= 2");
  if (n < k + 1) throw std::invalid_argument("thresholds need n >= k+1");
  const Rational rn = n;
  const Rational rk = k;
  const Rational gamma = Rational(n, 1) / rk;
  Threshold t{kind, 0, reading_of(kind), DomainStatus::Inside, "n >= k+1"};
  switch (kind) {
    case BoundKind::MaderConjecture:
      t.value = Rational(3, 2) * (rk - Rational(1, 3)) * (rn - rk);
      t.domain = DomainStatus::Unspecified;
      t.domain_text = "n sufficiently large (no explicit threshold)";
      break;
    case BoundKind::ConjectureNormalized:
      t.value = rk * rk * normalized(gamma, kind);
      t.domain = DomainStatus::Unspecified;
      t.domain_text = "gamma sufficiently large (no explicit threshold)";
      break;
    case BoundKind::YusterThm:
      t.value = Rational(193, 120) * rk * (rn - rk);
      t.domain = 4 * n >= 9 * k ? DomainStatus::Inside : DomainStatus::Outside;
      t.domain_text = "n >= 9k/4";
      break;
    case BoundKind::NewThm:
    case BoundKind::NewNormalized:
      t.value = rk * rk * normalized(gamma, kind);
      t.domain = 2 * n >= 5 * k ? DomainStatus::Inside : DomainStatus::Outside;
      t.domain_text = "n >= 5k/2";
      break;
    case BoundKind::MatulaLemma:
      t.value = binomial(n, 2) - Rational(1, 3) * ((rn - rk) * (rn - rk) - 1);
      break;
    case BoundKind::MatulaNormalized:
      t.value = rk * rk * normalized(gamma, kind);
      break;
  }
  return t;
}

// Smallest integer strictly above the forcing threshold.
inline long long min_forcing_edge_count(BoundKind kind, long long n, long long k) {
  if (!is_forcing(kind))
    throw std::invalid_argument("bound kind '" + std::string(to_string(kind)) + "' is not a forcing bound");
  const auto t = threshold(kind, n, k);
  return static_cast<long long>(t.value.floor()) + 1;
}

}  // namespace kcon
