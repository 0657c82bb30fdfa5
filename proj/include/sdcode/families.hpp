#pragma once

// Identification of the weight-enumerator families of extremal singly even
// self-dual codes of lengths 60 and 58, and the shadow balance identity
// B_{d-1} = A_d for codes whose shadow has minimum weight 1.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>

#include "sdcode/weights.hpp"

namespace sdcode {

enum class Family { W60_1, W60_2, W58_1, W58_2, unknown };

inline std::string to_string(Family f) {
  switch (f) {
    case Family::W60_1: return "W60_1";
    case Family::W60_2: return "W60_2";
    case Family::W58_1: return "W58_1";
    case Family::W58_2: return "W58_2";
    case Family::unknown: return "unknown";
  }
  return "unknown";
}

struct FamilyParams {
  Family family = Family::unknown;
  std::optional<std::int64_t> beta;
  std::optional<std::int64_t> gamma;
  std::string diagnostic;

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

// Largest minimum weight of a singly even self-dual code, for the lengths
// where it is hardcoded. Other lengths need an explicit threshold.
inline std::optional<std::size_t> extremal_weight(std::size_t n) {
  if (n == 58) return 10;
  if (n == 60) return 12;
  return std::nullopt;
}

namespace detail {

inline std::optional<std::int64_t> exact_div(std::int64_t num, std::int64_t den) {
  if (den == 0 || num % den != 0) return std::nullopt;
  return num / den;
}

inline std::int64_t coeff(const Distribution& d, std::size_t w) { return static_cast<std::int64_t>(d[w]); }

inline FamilyParams unknown(std::string why) { return {Family::unknown, std::nullopt, std::nullopt, std::move(why)}; }

}  // namespace detail

// Resolves the family from the two lowest nontrivial coefficients and the
// shadow, solving β and γ exactly and cross-checking every further
// coefficient the family formulas fix.
inline FamilyParams classify_enumerator(const WeightDistribution& w, const ShadowDistribution& s) {
  using detail::coeff;
  using detail::exact_div;
  const auto d = w.min_weight();
  if (!d) return detail::unknown("distribution has no nonzero weight");
  const std::string nd = "(n,d)=(" + std::to_string(w.n) + "," + std::to_string(*d) + ")";

  if (w.n == 60 && *d == 12) {
    const std::int64_t a12 = coeff(w, 12), a14 = coeff(w, 14);
    if (a12 == 3451 && a14 == 24128) return {Family::W60_2, std::nullopt, std::nullopt, ""};
    const auto beta = exact_div(a12 - 2555, 64);
    if (!beta) return detail::unknown("A_12=" + std::to_string(a12) + " is not 2555+64β");
    if (a14 != 33600 - 384 * *beta) {
      return detail::unknown("A_14=" + std::to_string(a14) + " contradicts β=" + std::to_string(*beta));
    }
    return {Family::W60_1, beta, std::nullopt, ""};
  }

  if (w.n == 58 && *d == 10) {
    const std::int64_t a10 = coeff(w, 10), a12 = coeff(w, 12);
    if (s.n == w.n && s[1] >= 1) {
      const auto gamma = exact_div(165 - a10, 2);
      if (!gamma) return detail::unknown("A_10=" + std::to_string(a10) + " is not 165-2γ");
      if (a12 != 5078 + 2 * *gamma) {
        return detail::unknown("A_12=" + std::to_string(a12) + " contradicts γ=" + std::to_string(*gamma));
      }
      if (s[1] != 1 || coeff(s, 9) != *gamma || coeff(s, 13) != 23918 - 10 * *gamma) {
        return detail::unknown("shadow coefficients B_1, B_9, B_13 contradict γ=" + std::to_string(*gamma));
      }
      return {Family::W58_1, std::nullopt, gamma, ""};
    }
    // A_10 + A_12 = 3451 + 128β
    const auto beta = exact_div(a10 + a12 - 3451, 128);
    if (!beta) return detail::unknown("A_10+A_12=" + std::to_string(a10 + a12) + " is not 3451+128β");
    if (*beta < 0 || *beta > 2) return detail::unknown("β=" + std::to_string(*beta) + " outside {0,1,2}");
    const auto gamma = exact_div(319 - 24 * *beta - a10, 2);
    if (!gamma) return detail::unknown("A_10=" + std::to_string(a10) + " is not 319-24β-2γ");
    return {Family::W58_2, beta, gamma, ""};
  }

  return detail::unknown("no enumerator family is defined for " + nd);
}

// A_0..A_top and, for singly even self-dual codes, B_0..B_top; higher
// coefficients are left at zero. Enough for classify_enumerator once top
// reaches d+2 (and 13 for length 58).
struct EnumeratorProfile {
  WeightDistribution weights;
  ShadowDistribution shadow;
  std::size_t top = 0;
};

inline EnumeratorProfile low_weight_profile(const LinearCode& c, std::size_t top) {
  const std::size_t n = c.length();
  EnumeratorProfile p;
  p.top = std::min(top, n);
  p.weights = WeightDistribution(n, low_weight_counts(c.rows(), BitVector(n), n, p.top).counts);
  p.shadow = ShadowDistribution(n);
  if (is_self_dual(c) && parity_class(c) == ParityClass::singly_even) {
    const auto parts = shadow_parts(c);
    for (const auto& rep : parts.coset_reps) {
      const auto part = low_weight_counts(parts.c0.rows(), rep, n, p.top);
      for (std::size_t w = 0; w <= n; ++w) p.shadow.counts[w] += part[w];
    }
  }
  return p;
}

enum class Balance { holds, violated, not_applicable };

inline std::string to_string(Balance b) {
  switch (b) {
    case Balance::holds: return "holds";
    case Balance::violated: return "violated";
    case Balance::not_applicable: return "not-applicable";
  }
  return "?";
}

struct BalanceVerdict {
  Balance verdict = Balance::not_applicable;
  // Set when the shadow holds more than one weight-1 vector; the identity
  // is only argued for a single such vector.
  bool multiple_weight_one = false;
  std::string reason;
};

// Tests B_{d-1} = A_d for n ≡ 2 (mod 8), d ≡ 2 (mod 4) and B_1 ≥ 1. Any
// unmet hypothesis gives not_applicable, never a pass.
inline BalanceVerdict check_shadow_balance(const WeightDistribution& w, const ShadowDistribution& s, std::size_t d) {
  BalanceVerdict out;
  if (w.n != s.n) {
    out.reason = "code and shadow lengths differ";
    return out;
  }
  if (w.n % 8 != 2) {
    out.reason = "n=" + std::to_string(w.n) + " is not 2 mod 8";
    return out;
  }
  if (d % 4 != 2) {
    out.reason = "d=" + std::to_string(d) + " is not 2 mod 4";
    return out;
  }
  if (s[1] == 0) {
    out.reason = "shadow has no vector of weight 1";
    return out;
  }
  out.multiple_weight_one = s[1] > 1;
  out.verdict = s[d - 1] == w[d] ? Balance::holds : Balance::violated;
  out.reason = "B_" + std::to_string(d - 1) + "=" + std::to_string(s[d - 1]) + ", A_" + std::to_string(d) + "=" +
               std::to_string(w[d]);
  return out;
}

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  friend bool operator==(const Rational&, const Rational&) = default;
};

enum class LineSolution { unique, none, all };

struct BalanceSolution {
  LineSolution kind = LineSolution::none;
  Rational value;  // meaningful for kind == unique
};

// Solves a0 + a1·t = b0 + b1·t exactly over the rationals.
inline BalanceSolution solve_shadow_balance(std::int64_t a_intercept, std::int64_t a_slope, std::int64_t b_intercept,
                                            std::int64_t b_slope) {
  const std::int64_t slope = a_slope - b_slope;
  const std::int64_t rhs = b_intercept - a_intercept;
  if (slope == 0) return {rhs == 0 ? LineSolution::all : LineSolution::none, {}};
  std::int64_t num = rhs, den = slope;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  return {LineSolution::unique, {num / g, den / g}};
}

}  // namespace sdcode
