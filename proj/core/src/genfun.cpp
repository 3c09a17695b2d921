#include "altperm/genfun.hpp"

#include <string>

#include "altperm/errors.hpp"

namespace altperm {

namespace {

void check_cap(GroupParams params, std::uint64_t cap) {
  const std::uint64_t order = group_order(params);
  if (order > cap) {
    throw CapExceeded("group order " + std::to_string(order) +
                      " exceeds the cap " + std::to_string(cap));
  }
}

}  // namespace

Statistic statistic_from_name(std::string_view name) {
  if (name == "length") return Statistic::Length;
  if (name == "finv") return Statistic::Finv;
  if (name == "rtlmin") return Statistic::Rtlmin;
  if (name == "fibral") return Statistic::Fibral;
  throw InvalidParams("unknown statistic '" + std::string(name) + "'");
}

std::string_view statistic_name(Statistic stat) {
  switch (stat) {
    case Statistic::Length: return "length";
    case Statistic::Finv: return "finv";
    case Statistic::Rtlmin: return "rtlmin";
    case Statistic::Fibral: return "fibral";
  }
  return "?";
}

QPolynomial genfun_length_formula(GroupParams params) {
  validate_params(params.r, params.n, true);
  const int half = params.r / 2;
  // 1 + 2q + ... + 2q^{r/2-1}
  std::vector<Int128> inner_coeffs(static_cast<std::size_t>(half), 2);
  inner_coeffs[0] = 1;
  const QPolynomial inner{std::move(inner_coeffs)};

  QPolynomial product = QPolynomial::q_factorial(params.n);
  for (int j = 1; j <= params.n; ++j) {
    product = product * (QPolynomial::constant(1) +
                         QPolynomial::monomial(j - 1) * inner);
  }
  return product.halved();
}

QPolynomial genfun_finv_formula(GroupParams params) {
  validate_params(params.r, params.n, true);
  QPolynomial product = QPolynomial::constant(1);
  for (int i = 1; i <= params.n; ++i) {
    product = product * QPolynomial::q_int((params.r / 2) * i);
  }
  return product.scaled(Int128{1} << (params.n - 1));
}

QPolynomial genfun_rtlmin_formula(GroupParams params) {
  validate_params(params.r, params.n, true);
  const int half = params.r / 2;
  QPolynomial product = QPolynomial::constant(1);
  for (int i = 1; i <= params.n; ++i) {
    // (r/2)(q + i - 1) + 1 - q = (r/2 - 1) q + (r/2)(i-1) + 1
    const QPolynomial factor(
        std::vector<Int128>{half * (i - 1) + 1, half - 1});
    product = product * factor;
  }
  return product.scaled(Int128{1} << (params.n - 1));
}

QPolynomial genfun_fibral_formula(GroupParams params, std::uint64_t cap) {
  validate_params(params.r, params.n, true);
  check_cap(params, cap);
  const GroupParams base{params.r / 2, params.n};
  QPolynomial total;
  for_each_element(base, [&total](const ColoredPermutation& sigma) {
    total = total + fiber_genfun(section(sigma));
  });
  return total;
}

QPolynomial genfun_bruteforce(GroupParams params, Statistic stat,
                              std::uint64_t cap) {
  validate_params(params.r, params.n, true);
  check_cap(params, cap);
  std::vector<Int128> histogram;
  const auto record = [&histogram](long long value) {
    if (static_cast<long long>(histogram.size()) <= value) {
      histogram.resize(static_cast<std::size_t>(value) + 1, 0);
    }
    histogram[static_cast<std::size_t>(value)] += 1;
  };
  for_each_alternating(params, [&](const ColoredPermutation& pi) {
    switch (stat) {
      case Statistic::Length: record(length_LA(pi)); break;
      case Statistic::Finv: record(finv_a(pi)); break;
      case Statistic::Rtlmin: record(rtlmin_a(pi)); break;
      case Statistic::Fibral: record(fibral_length(pi)); break;
    }
  });
  return QPolynomial(std::move(histogram));
}

}  // namespace altperm
