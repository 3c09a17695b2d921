#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "altperm/element.hpp"

namespace altperm {

/// A word over the generators S = {s_0, ..., s_{n-1}} of G_{r,n}.
/// Letters are the generator indices.
struct SWord {
  std::vector<int> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  friend bool operator==(const SWord&, const SWord&) = default;

  /// "s1 s0^2 s2 ...": equal-letter runs of length >= 2 collapse to '^k'.
  std::string str() const;
  static SWord parse(std::string_view text);
};

/// A word over the generators A = {a_0, a_1, a_1^{-1}, a_2, ..., a_{n-1}} of
/// A_{r,n}. Letter encoding: 0 -> a_0, i -> a_i (i >= 1), -1 -> a_1^{-1}.
/// The letter count is the word length (a_0^m is stored as m letters).
struct AWord {
  std::vector<int> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  friend bool operator==(const AWord&, const AWord&) = default;

  /// Letterwise inverse word: reversed, with a_1 <-> a_1^{-1} (every other
  /// generator of A is an involution; a_0 never appears in ordering factors,
  /// where this is used).
  AWord inverse_word() const;

  /// "a1' a0^2 a3 ...": a_1^{-1} prints as a1'; runs collapse to '^k'.
  std::string str() const;
  static AWord parse(std::string_view text);
};

/// The generator a_0 = s_0^2 (letter 0), a_i = s_0^{r/2} s_i (letter i >= 1),
/// or a_1^{-1} (letter -1). Requires r ≡ 2 (mod 4).
ColoredPermutation generator_a(GroupParams params, int letter);

/// Left-to-right product of the generator values starting from the identity.
ColoredPermutation eval_s_word(GroupParams params, const SWord& word);
ColoredPermutation eval_a_word(GroupParams params, const AWord& word);

}  // namespace altperm
