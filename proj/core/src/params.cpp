#include "altperm/params.hpp"

#include <string>

#include "altperm/errors.hpp"

namespace altperm {

GroupParams validate_params(int r, int n, bool require_alternating) {
  if (r < 1) {
    throw InvalidParams("r must be >= 1 (got r=" + std::to_string(r) + ")");
  }
  if (n < 1) {
    throw InvalidParams("n must be >= 1 (got n=" + std::to_string(n) + ")");
  }
  if (require_alternating && r % 4 != 2) {
    throw InvalidParams("r must be ≡ 2 mod 4 (got r=" + std::to_string(r) + ")");
  }
  return GroupParams{r, n};
}

std::uint64_t group_order(const GroupParams& params) {
  unsigned __int128 order = 1;
  for (int i = 0; i < params.n; ++i) {
    order *= static_cast<unsigned>(params.r);
    order *= static_cast<unsigned>(i + 1);
    if (order > static_cast<unsigned __int128>(UINT64_MAX)) {
      throw CapExceeded("group order r^n * n! exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(order);
}

std::uint64_t alternating_order(const GroupParams& params) {
  return group_order(params) / 2;
}

int oslash(long long a, int r) {
  if (r % 4 != 2) {
    throw InvalidParams("oslash requires r ≡ 2 mod 4 (got r=" + std::to_string(r) + ")");
  }
  if (a < 0) {
    throw InvalidParams("oslash requires a >= 0");
  }
  const long long half = r / 2;
  const long long value = (a % 2 == 0) ? a / 2 : (a + half) / 2;
  return static_cast<int>(value % half);
}

}  // namespace altperm
