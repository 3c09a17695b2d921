#include "altperm/covering.hpp"

#include <algorithm>

#include "altperm/errors.hpp"

namespace altperm {

ColoredPermutation halve_colors(const ColoredPermutation& pi) {
  const GroupParams params = pi.params();
  validate_params(params.r, params.n, true);
  std::vector<ColoredValue> window = pi.window();
  for (ColoredValue& v : window) v.color = oslash(v.color, params.r);
  return ColoredPermutation::from_window(GroupParams{params.r / 2, params.n},
                                         std::move(window));
}

ColoredPermutation project(const ColoredPermutation& pi) {
  if (!is_alternating(pi)) {
    throw NotAlternating("the covering map is defined on A_{r,n} only"
                         " (element " + pi.str() + ")");
  }
  return halve_colors(pi);
}

ColoredPermutation section(const ColoredPermutation& sigma) {
  const GroupParams params = sigma.params();
  if (params.r % 2 != 1) {
    throw InvalidParams("section expects an element of G_{r/2,n} with odd"
                        " r/2 (got " + std::to_string(params.r) + " colors)");
  }
  const int r = 2 * params.r;
  std::vector<ColoredValue> window = sigma.window();
  for (ColoredValue& v : window) v.color = (2 * v.color) % r;
  if (inv_plain(sigma) % 2 == 1) {
    const int j = sigma.position_of(1);
    window[j - 1].color = (window[j - 1].color + params.r) % r;
  }
  return ColoredPermutation::from_window(GroupParams{r, params.n},
                                         std::move(window));
}

std::vector<ColoredPermutation> kernel_elements(GroupParams params) {
  validate_params(params.r, params.n, true);
  if (params.n >= 31) {
    throw CapExceeded("kernel enumeration needs 2^{n-1} elements");
  }
  const int n = params.n;
  const int half = params.r / 2;
  std::vector<ColoredPermutation> out;
  out.reserve(std::size_t{1} << (n - 1));
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    std::vector<ColoredValue> window(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      window[i] = ColoredValue{i + 1, (mask >> i) & 1u ? half : 0};
    }
    out.push_back(ColoredPermutation::from_window(params, std::move(window)));
  }
  std::sort(out.begin(), out.end(),
            [](const ColoredPermutation& a, const ColoredPermutation& b) {
              return a.rank() < b.rank();
            });
  return out;
}

std::vector<ColoredPermutation> fiber(const ColoredPermutation& pi) {
  if (!is_alternating(pi)) {
    throw NotAlternating("fibers are defined over A_{r,n} only (element " +
                         pi.str() + ")");
  }
  const GroupParams params = pi.params();
  validate_params(params.r, params.n, true);
  if (params.n >= 31) {
    throw CapExceeded("fiber enumeration needs 2^{n-1} elements");
  }
  const int n = params.n;
  const int half = params.r / 2;
  std::vector<ColoredPermutation> out;
  out.reserve(std::size_t{1} << (n - 1));
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    std::vector<ColoredValue> window = pi.window();
    for (int j = 0; j < n; ++j) {
      if ((mask >> j) & 1u) window[j].color = (window[j].color + half) % params.r;
    }
    out.push_back(ColoredPermutation::from_window(params, std::move(window)));
  }
  std::sort(out.begin(), out.end(),
            [](const ColoredPermutation& a, const ColoredPermutation& b) {
              return a.rank() < b.rank();
            });
  return out;
}

int length_g(const ColoredPermutation& sigma) {
  int total = inv_colored(sigma);
  const std::vector<int> z = sigma.z_vector();
  for (int i = 1; i <= sigma.n(); ++i) {
    if (z[i - 1] != 0) total += i - 1;
    total += z[i - 1];
  }
  return total;
}

LehmerCode lehmer_code(std::span<const int> window_digits) {
  const int n = static_cast<int>(window_digits.size());
  std::vector<int> position(static_cast<std::size_t>(n) + 1, 0);
  for (int j = 0; j < n; ++j) position[window_digits[j]] = j + 1;
  LehmerCode code;
  code.values.assign(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j < i; ++j) {
      if (position[j] > position[i]) ++code.values[i - 1];
    }
  }
  return code;
}

LehmerCode lehmer_code(const ColoredPermutation& pi) {
  const std::vector<int> digits = pi.digits();
  return lehmer_code(std::span<const int>(digits));
}

int tinv(const ColoredPermutation& pi) {
  const GroupParams params = pi.params();
  validate_params(params.r, params.n, true);
  const int half = params.r / 2;
  const std::vector<int> z = pi.z_vector();
  int count = 0;
  for (int i = 2; i <= params.n; ++i) {
    if (z[i - 1] != half) continue;
    const int pos_i = pi.position_of(i);
    for (int j = 1; j < i; ++j) {
      if (pos_i < pi.position_of(j)) ++count;
    }
  }
  return count;
}

int fibral_length(const ColoredPermutation& pi) {
  if (!is_alternating(pi)) {
    throw NotAlternating("the fibral length is defined on A_{r,n} only"
                         " (element " + pi.str() + ")");
  }
  const int half = pi.r() / 2;
  const std::vector<int> z = pi.z_vector();
  int colored_weight = 0;
  for (int i = 1; i <= pi.n(); ++i) {
    if (z[i - 1] == half) colored_weight += i - 1;
  }
  return 2 * colored_weight - 2 * tinv(pi);
}

QPolynomial fiber_genfun(const ColoredPermutation& pi) {
  if (!is_alternating(pi)) {
    throw NotAlternating("fiber distributions are defined over A_{r,n} only"
                         " (element " + pi.str() + ")");
  }
  const int half = pi.r() / 2;
  const std::vector<int> z = pi.z_vector();
  const LehmerCode code = lehmer_code(pi);
  QPolynomial product = QPolynomial::constant(1);
  for (int i = 2; i <= pi.n(); ++i) {
    const int delta = (z[i - 1] == 0 || z[i - 1] == half) ? 1 : 0;
    const int exponent = 2 * delta * (i - 1 - code.values[i - 1]);
    product = product * (QPolynomial::constant(1) +
                         QPolynomial::monomial(exponent));
  }
  return product;
}

long long finv_g(const ColoredPermutation& sigma) {
  return static_cast<long long>(sigma.r()) * inv_plain(sigma) + csum(sigma);
}

long long finv_a(const ColoredPermutation& pi) {
  if (!is_alternating(pi)) {
    throw NotAlternating("finv_A is defined on A_{r,n} only (element " +
                         pi.str() + ")");
  }
  const GroupParams params = pi.params();
  validate_params(params.r, params.n, true);
  long long total =
      static_cast<long long>(params.r / 2) * inv_plain(pi);
  for (int c : pi.c_vector()) total += oslash(c, params.r);
  return total;
}

namespace {

int rtlmin_count(const ColoredPermutation& pi, bool exclude_half) {
  const auto& w = pi.window();
  const int n = pi.n();
  const int half = pi.r() / 2;
  int count = 0;
  for (int i = 0; i < n; ++i) {
    if (w[i].color == 0) continue;
    if (exclude_half && w[i].color == half) continue;
    bool minimum = true;
    for (int j = i + 1; j < n; ++j) {
      if (w[j].digit < w[i].digit) {
        minimum = false;
        break;
      }
    }
    if (minimum) ++count;
  }
  return count;
}

}  // namespace

int rtlmin_g(const ColoredPermutation& sigma) {
  return rtlmin_count(sigma, false);
}

int rtlmin_a(const ColoredPermutation& pi) {
  if (!is_alternating(pi)) {
    throw NotAlternating("RtlMin_A is defined on A_{r,n} only (element " +
                         pi.str() + ")");
  }
  validate_params(pi.r(), pi.n(), true);
  return rtlmin_count(pi, true);
}

FiberReport fiber_report(const ColoredPermutation& pi) {
  FiberReport report{project(pi), {}, fiber_genfun(pi), QPolynomial(), false};
  std::vector<Int128> histogram;
  for (const ColoredPermutation& member : fiber(pi)) {
    const int lf = fibral_length(member);
    if (static_cast<int>(histogram.size()) <= lf) {
      histogram.resize(static_cast<std::size_t>(lf) + 1, 0);
    }
    histogram[static_cast<std::size_t>(lf)] += 1;
    report.members.push_back(FiberMember{member, lf});
  }
  report.bruteforce_poly = QPolynomial(std::move(histogram));
  report.formula_matches = report.formula_poly == report.bruteforce_poly;
  return report;
}

}  // namespace altperm
