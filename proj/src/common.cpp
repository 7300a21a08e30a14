#include "cbound/common.hpp"

#include <algorithm>

namespace cbound {

Int binomial(Int n, Int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int result = 1;
  for (Int i = 1; i <= k; ++i) {
    // result * (n - k + i) is divisible by i here.
    result = checked_mul(result, n - k + i) / i;
  }
  return result;
}

}  // namespace cbound
