#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "altperm/params.hpp"

namespace altperm {

/// A digit of 1..n carrying a color of 0..r-1; the value type of window entries.
struct ColoredValue {
  int digit = 1;
  int color = 0;

  friend bool operator==(const ColoredValue&, const ColoredValue&) = default;
};

/// The length order on colored values,
///   n^[r-1] < ... < n^[1] < ... < 1^[r-1] < ... < 1^[1] < 1 < 2 < ... < n:
/// every colored value precedes every uncolored one; two colored values
/// compare by descending digit, then descending color; two uncolored values
/// compare naturally.
bool length_order_less(const ColoredValue& a, const ColoredValue& b);

/// An element of G_{r,n} in window (one-line) notation. Immutable after
/// construction; every operation is a pure function, so values are safe to
/// share and move across threads freely.
class ColoredPermutation {
 public:
  /// The identity of G_{r,n}.
  explicit ColoredPermutation(GroupParams params);

  static ColoredPermutation identity(GroupParams params) {
    return ColoredPermutation(params);
  }

  /// Validates that the digits form a permutation of 1..n and the colors lie
  /// in 0..r-1; throws InvalidParams otherwise.
  static ColoredPermutation from_window(GroupParams params,
                                        std::vector<ColoredValue> window);

  const GroupParams& params() const { return params_; }
  int n() const { return params_.n; }
  int r() const { return params_.r; }

  const std::vector<ColoredValue>& window() const { return window_; }

  /// tau(pos) for a 1-based window position.
  int digit_at(int pos) const { return window_[pos - 1].digit; }

  /// c_pos: the color printed at window position pos (1-based).
  int color_at(int pos) const { return window_[pos - 1].color; }

  /// z_digit: the color carried by a digit (1-based).
  int z(int digit) const;

  /// |pi|^{-1}(digit): the 1-based window position holding a digit.
  int position_of(int digit) const;

  std::vector<int> z_vector() const;
  std::vector<int> c_vector() const;

  /// The underlying permutation |pi| as its window digit sequence.
  std::vector<int> digits() const;

  bool is_identity() const;

  ColoredPermutation inverse() const;

  /// Multiplication per the wreath-product rule: the underlying permutations
  /// compose and z_i(left*right) = z_i(left) + z_{tau_left^{-1}(i)}(right)
  /// mod r. With this convention, right multiplication by s_i (i >= 1) swaps
  /// window positions i, i+1 and right multiplication by s_0 adds one color
  /// to the window entry at position 1.
  friend ColoredPermutation operator*(const ColoredPermutation& left,
                                      const ColoredPermutation& right);

  friend bool operator==(const ColoredPermutation&,
                         const ColoredPermutation&) = default;

  /// Bijection with 0 .. r^n n! - 1: lexicographic rank of the underlying
  /// permutation, then the z-vector as a base-r number with z_1 most
  /// significant. The identity has rank 0.
  std::uint64_t rank() const;
  static ColoredPermutation unrank(GroupParams params, std::uint64_t rank);

  /// Canonical window text, e.g. "1 2^2 4 5^1 3^3": '^c' is printed exactly
  /// when c > 0, tokens are single-space separated.
  std::string str() const;

  /// Parses window text (grammar: token := DIGIT | DIGIT '^' COLOR). The
  /// token count must equal params.n. Throws ParseError.
  static ColoredPermutation parse(GroupParams params, std::string_view text);

 private:
  struct unchecked_t {};
  ColoredPermutation(GroupParams params, std::vector<ColoredValue> window,
                     unchecked_t)
      : params_(params), window_(std::move(window)) {}

  GroupParams params_;
  std::vector<ColoredValue> window_;
};

ColoredPermutation multiply(const ColoredPermutation& left,
                            const ColoredPermutation& right);

/// s_i for 0 <= i <= n-1: s_0 colors digit 1 once, s_i swaps digits i, i+1.
ColoredPermutation generator_s(GroupParams params, int i);

/// s_0^{r/2} * pi * s_0^{r/2} (requires even r). Realizes the automorphism
/// that fixes a_0 and a_i (i >= 2) and swaps a_1 with a_1^{-1}.
ColoredPermutation conjugate_by_half_twist(const ColoredPermutation& pi);

/// Inversions of the window under the length order.
int inv_colored(const ColoredPermutation& pi);

/// Ordinary inversion count of a permutation given as its window digits.
int inv_plain(std::span<const int> window_digits);
int inv_plain(const ColoredPermutation& pi);

/// Plain integer sum of the window colors (no reduction mod r).
int csum(const ColoredPermutation& pi);

/// Col(pi): the digits with nonzero color, ascending.
std::vector<int> col_set(const ColoredPermutation& pi);

namespace detail {

/// Right actions on raw windows, used by word evaluation and the BFS oracle.
/// apply_s: right-multiply by s_letter; apply_a: by a_letter, where the
/// letter encoding is 0 -> a_0, i -> a_i (i >= 1), -1 -> a_1^{-1}.
void apply_s_inplace(std::vector<ColoredValue>& window, int letter, int r);
void apply_a_inplace(std::vector<ColoredValue>& window, int letter, int r);

std::uint64_t rank_of_window(const GroupParams& params,
                             std::span<const ColoredValue> window);
void unrank_window(const GroupParams& params, std::uint64_t rank,
                   std::vector<ColoredValue>& out);

}  // namespace detail

}  // namespace altperm
