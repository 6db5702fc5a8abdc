#pragma once

#include <stdexcept>

#include "partpeaks/integer.hpp"
#include "partpeaks/stirling.hpp"

namespace partpeaks {

namespace detail {
inline void require_class(int n, int k) {
    if (n < 1 || k < 1 || k > n)
        throw std::invalid_argument("closed form: need 1 <= k <= n");
}
}  // namespace detail

// Total number of symmetric peaks over all partitions of [n] with exactly k
// blocks:
//
//   (k-1)*S(n-1,k) + sum_{j=2..k} C(j,2) * sum_{i=3..n-k} j^{i-3} * S(n-i,k)
//
// Empty index ranges contribute nothing; the table must cover n-1.
inline Integer total_symmetric_peaks(const StirlingTable& table, int n, int k) {
    detail::require_class(n, k);
    Integer total = Integer(k - 1) * table(n - 1, k);
    for (int j = 2; j <= k; ++j) {
        const Integer weight = binomial(j, 2);
        Integer jpow = 1;  // j^{i-3}, starting at i = 3
        for (int i = 3; i <= n - k; ++i) {
            total += weight * jpow * table(n - i, k);
            jpow *= j;
        }
    }
    return total;
}

// Total number of non-symmetric peaks over the same class:
//
//   C(k-1,2)*S(n-1,k) + 2 * sum_{j=3..k} C(j,3) * sum_{i=3..n-k} j^{i-3} * S(n-i,k)
inline Integer total_non_symmetric_peaks(const StirlingTable& table, int n, int k) {
    detail::require_class(n, k);
    Integer total = binomial(k - 1, 2) * table(n - 1, k);
    for (int j = 3; j <= k; ++j) {
        const Integer weight = 2 * binomial(j, 3);
        Integer jpow = 1;
        for (int i = 3; i <= n - k; ++i) {
            total += weight * jpow * table(n - i, k);
            jpow *= j;
        }
    }
    return total;
}

// Peaks of either kind; realized as the sum of the two totals above.
inline Integer total_peaks(const StirlingTable& table, int n, int k) {
    return total_symmetric_peaks(table, n, k) + total_non_symmetric_peaks(table, n, k);
}

}  // namespace partpeaks
