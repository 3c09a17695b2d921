#pragma once

#include <span>
#include <vector>

#include "altperm/canonical.hpp"
#include "altperm/qpolynomial.hpp"

namespace altperm {

/// Window colors mapped through ⊘ into G_{r/2,n}, with no membership check.
/// The covering map proper is project(); this is its color arithmetic, which
/// is well defined on any element of G_{r,n} with r ≡ 2 (mod 4).
ColoredPermutation halve_colors(const ColoredPermutation& pi);

/// The covering epimorphism p: A_{r,n} -> G_{r/2,n}. Same underlying
/// permutation; every color c becomes c ⊘ 2. Throws NotAlternating outside
/// A_{r,n}.
ColoredPermutation project(const ColoredPermutation& pi);

/// The section s: G_{r/2,n} -> A_{r,n} (input r must be odd, the r/2 of the
/// covering). Colors are doubled mod 2r; when inv(|sigma|) is odd, the entry
/// holding digit 1 additionally gains r/2 colors. project(section(x)) = x.
ColoredPermutation section(const ColoredPermutation& sigma);

/// ker(p): the 2^{n-1} elements with identity underlying permutation, every
/// color in {0, r/2}, and an even number of colors equal to r/2. Ascending
/// rank order.
std::vector<ColoredPermutation> kernel_elements(GroupParams params);

/// The fiber p^{-1}(p(pi)): all modifications of pi adding r/2 to an even
/// number of its colors; 2^{n-1} members, ascending rank order.
std::vector<ColoredPermutation> fiber(const ColoredPermutation& pi);

/// Closed-form length of sigma in G_{r,n} over S:
///   sum_{z_i != 0}(i-1) + inv(sigma) + sum_i z_i,
/// with inv in the length order. Valid for any r.
int length_g(const ColoredPermutation& sigma);

/// Per-digit counts of smaller digits appearing further right:
/// l_i = |{j < i : pos(j) > pos(i)}|, so 0 <= l_i <= i-1 and
/// sum l_i = inv(tau).
struct LehmerCode {
  std::vector<int> values;  // l_1 .. l_n, indexed by digit
};

LehmerCode lehmer_code(std::span<const int> window_digits);
LehmerCode lehmer_code(const ColoredPermutation& pi);

/// Absolute transparent inversions: pairs (i, j) with z_i = r/2, i > j and
/// digit i left of digit j in the window. Equals sum_i l_i [z_i = r/2].
int tinv(const ColoredPermutation& pi);

/// The part of the length that varies over the fiber of pi:
///   l_F(pi) = 2 sum_{z_i = r/2}(i-1) - 2 tinv(pi)
///           = L_A(pi) - L_A(section(project(pi))).
/// Always even and nonnegative. Requires is_alternating(pi).
int fibral_length(const ColoredPermutation& pi);

/// The fibral-length distribution over the coset of pi:
///   F(pi) = prod_{i=2}^{n} (1 + q^{2 delta_i (i-1-l_i)}),
/// with delta_i = [z_i in {0, r/2}]. Evaluates to 2^{n-1} at q = 1.
QPolynomial fiber_genfun(const ColoredPermutation& pi);

/// Flag-inversion number on G_{r,n}: r inv(|sigma|) + csum(sigma).
long long finv_g(const ColoredPermutation& sigma);

/// Flag-inversion number on A_{r,n}: (r/2) inv(|pi|) + sum_i (c_i ⊘ 2).
/// Fiber-fixed: finv_a(pi) = finv_g(project(pi)).
long long finv_a(const ColoredPermutation& pi);

/// Colored right-to-left minima: window positions whose digit is below every
/// later digit and whose color is nonzero (G version) resp. outside
/// {0, r/2} (A version, which is fiber-fixed).
int rtlmin_g(const ColoredPermutation& sigma);
int rtlmin_a(const ColoredPermutation& pi);

struct FiberMember {
  ColoredPermutation element;
  int fibral_len;
};

/// The full per-coset record: base point in G_{r/2,n}, the 2^{n-1} members
/// with their fibral lengths, and the F(pi) product formula against the
/// brute-force distribution.
struct FiberReport {
  ColoredPermutation base;
  std::vector<FiberMember> members;
  QPolynomial formula_poly;
  QPolynomial bruteforce_poly;
  bool formula_matches;
};

FiberReport fiber_report(const ColoredPermutation& pi);

}  // namespace altperm
