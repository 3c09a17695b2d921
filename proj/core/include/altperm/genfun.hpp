#pragma once

#include <string_view>

#include "altperm/covering.hpp"
#include "altperm/qpolynomial.hpp"

namespace altperm {

enum class Statistic { Length, Finv, Rtlmin, Fibral };

Statistic statistic_from_name(std::string_view name);
std::string_view statistic_name(Statistic stat);

/// Closed form for the length distribution over A_{r,n}:
///   (1/2) [n]!_q prod_{j=1}^{n} (1 + q^{j-1}(1 + 2q + ... + 2q^{r/2-1})).
/// The pre-halving polynomial always has even coefficients;
/// NonIntegralHalving would signal a formula violation.
QPolynomial genfun_length_formula(GroupParams params);

/// Closed form for finv_A: 2^{n-1} prod_{i=1}^{n} [(r/2) i]_q.
QPolynomial genfun_finv_formula(GroupParams params);

/// Closed form for RtlMin_A: 2^{n-1} prod_{i=1}^{n} ((r/2)(q+i-1) + 1 - q).
QPolynomial genfun_rtlmin_formula(GroupParams params);

/// Fibral-length distribution assembled from the per-coset product formula
/// F summed over all of G_{r/2,n} (one coset per base point).
QPolynomial genfun_fibral_formula(GroupParams params, std::uint64_t cap);

/// Oracle side of each identity: sum_{pi in A_{r,n}} q^{stat(pi)} by full
/// enumeration. Throws CapExceeded when r^n n! exceeds the cap.
QPolynomial genfun_bruteforce(GroupParams params, Statistic stat,
                              std::uint64_t cap);

}  // namespace altperm
