#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "altperm/words.hpp"

namespace altperm {

/// Membership test for A_{r,n}: csum(pi) + inv(|pi|) must be even.
/// Requires even r.
bool is_alternating(const ColoredPermutation& pi);

/// The ordered permutation carrying the same multiset of colored values as
/// pi, arranged ascending in the length order (colored digits first in
/// descending digit order, then uncolored digits ascending).
ColoredPermutation ordered_target(const ColoredPermutation& pi);

/// The canonical reduced word for pi over S, built in two phases: the
/// coloring part s_{i-1}...s_1 s_0^{z_i} per colored digit i ascending, then
/// the ordering part obtained by simulating the sort from pi toward the
/// ordered target and reversing the recorded pushing letters. Works for any
/// element of G_{r,n}; letter count is sum_{z_i != 0}(i-1) + inv + csum.
SWord canonical_s_word(const ColoredPermutation& pi);

/// Pairwise translation of an even-length S-word into A-generators: within
/// each pair (x, y), x maps to its left image (s_i -> a_i for i >= 2,
/// s_1 -> a_1^{-1}, s_0 -> a_0^{(r+2)/4}) and y to its right image
/// (s_j -> a_j for j >= 1, s_0 -> a_0^{(r+2)/4}); adjacent a_0 runs then
/// merge with exponents reduced mod r/2 and empty runs dropped.
AWord translate_pairs(GroupParams params, const SWord& word);

/// Closed-form length of pi in the A-generators:
///   L_A(pi) = sum_{z_i != 0}(i-1) + inv(pi) + sum_i (z_i ⊘ 2),
/// with inv taken in the length order. Requires is_alternating(pi).
int length_LA(const ColoredPermutation& pi);

/// translate_pairs(canonical_s_word(pi)): the canonical reduced A-word.
/// Its letter count equals length_LA(pi). Requires is_alternating(pi).
AWord canonical_a_word(const ColoredPermutation& pi);

enum class GammaBranch {
  Trivial,         // digit uncolored; the factor is empty
  WithPrefix,      // carries the s_0 debt of the previous colored digit
  WithoutPrefix,   // colored, no incoming debt
};

/// One coloring factor gamma_i. The word lies in the family C_i; the
/// color_exponent is its trailing a_0-run exponent (in 0..r/2-1).
struct GammaFactor {
  AWord word;
  GammaBranch branch = GammaBranch::Trivial;
  int color_exponent = 0;
};

/// One ordering factor o_k: pushes the digit at window position from_pos to
/// position to_pos (= k); the word lies in the family O_k. Empty when the
/// digit is already in place.
struct OrderingFactor {
  AWord word;
  int from_pos = 0;
  int to_pos = 0;
};

/// The structured factorization pi = gamma_1 ... gamma_{n+1} o_{n-1}^{-1}
/// ... o_1^{-1}. The component words are stored in their C_i / O_k family
/// forms; adjacent a_0 runs of consecutive components may merge, so the
/// reduced concatenation (word()) is the canonical A-word with exactly
/// length_LA letters.
struct CanonicalDecomposition {
  GroupParams params;
  std::vector<GammaFactor> gammas;        // gamma_1 .. gamma_{n+1}
  std::vector<OrderingFactor> orderings;  // o_1 .. o_{n-1}

  /// gamma_1 * ... * gamma_{n+1} * o_{n-1}^{-1} * ... * o_1^{-1}.
  ColoredPermutation product() const;

  /// The concatenation gamma_1 ... gamma_{n+1} o_{n-1}^{-1} ... o_1^{-1} with
  /// a_0 runs merged mod r/2; equals canonical_a_word of the element.
  AWord word() const;

  /// Deterministic serialization (used as an injectivity key).
  std::string str() const;
};

/// Factors pi following the coloring/ordering analysis, carrying the s_0 debt
/// of odd coloring factors forward; gamma_{n+1} = a_0^{(r+2)/4} exactly when
/// the S-word's coloring part has odd length. Requires is_alternating(pi).
CanonicalDecomposition structured_decomposition(const ColoredPermutation& pi);

/// Checks that every component lies in its structural family (C_i branch and
/// exponent patterns, O_k shapes); returns a description of the first
/// violation, or nullopt if the decomposition is well formed.
std::optional<std::string> decomposition_structure_error(
    const CanonicalDecomposition& d);

/// All elements of A_{r,n} in ascending rank order; count = r^n n!/2.
/// Requires r ≡ 2 (mod 4).
std::vector<ColoredPermutation> enumerate_alternating(GroupParams params);

/// Rank-ascending sweeps. The callback receives each element by const
/// reference; storage is reused between calls.
void for_each_element(GroupParams params,
                      const std::function<void(const ColoredPermutation&)>& fn);
void for_each_alternating(
    GroupParams params,
    const std::function<void(const ColoredPermutation&)>& fn);

}  // namespace altperm
