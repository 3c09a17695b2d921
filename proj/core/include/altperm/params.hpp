#pragma once

#include <cstdint>

namespace altperm {

/// Group parameters: n digits colored with r colors. Plain G_{r,n}
/// arithmetic accepts any r >= 1; the alternating machinery additionally
/// requires r ≡ 2 (mod 4).
struct GroupParams {
  int r = 1;
  int n = 1;

  friend bool operator==(const GroupParams&, const GroupParams&) = default;

  bool alternating_capable() const { return r % 4 == 2; }

  /// r = 2 is accepted (2 ≡ 2 mod 4) but degenerate: a_0 = s_0^2 = 1.
  bool degenerate() const { return r == 2; }
};

/// Checks r >= 1 and n >= 1, plus r ≡ 2 (mod 4) when require_alternating.
/// Throws InvalidParams naming the violated constraint.
GroupParams validate_params(int r, int n, bool require_alternating);

/// |G_{r,n}| = r^n n!. Throws CapExceeded when the order does not fit in 64 bits.
std::uint64_t group_order(const GroupParams& params);

/// |A_{r,n}| = r^n n! / 2.
std::uint64_t alternating_order(const GroupParams& params);

/// The parity-splitting halving map into Z_{r/2} (requires r ≡ 2 mod 4):
///   a even -> (a/2) mod r/2,   a odd -> ((a + r/2)/2) mod r/2.
/// Additive: (a+b)⊘2 ≡ a⊘2 + b⊘2 (mod r/2).
int oslash(long long a, int r);

}  // namespace altperm
