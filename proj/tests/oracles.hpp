#pragma once

// Independent reference computations used only by the tests.

#include <gmpxx.h>

#include <functional>
#include <vector>

namespace oracle {

// Counts partitions of n into parts accepted by `allowed`, by number of parts,
// walking every partition explicitly (parts in nonincreasing order).
inline std::vector<mpz_class> enumerate_partitions(long n, const std::function<bool(long)>& allowed) {
  std::vector<mpz_class> count(n + 1, mpz_class(0));
  std::vector<long> stack;
  std::function<void(long, long)> walk = [&](long remaining, long largest) {
    if (remaining == 0) {
      count[stack.size()] += 1;
      return;
    }
    for (long m = std::min(remaining, largest); m >= 1; --m) {
      if (!allowed(m)) continue;
      stack.push_back(m);
      walk(remaining - m, m);
      stack.pop_back();
    }
  };
  walk(n, n);
  return count;
}

}  // namespace oracle
