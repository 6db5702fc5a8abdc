#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "partpeaks/integer.hpp"

namespace partpeaks {

// C(n, r); zero when r > n.
inline Integer binomial(unsigned long n, unsigned long r) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, r);
    return b;
}

// base^exp with 0^0 == 1 (empty-product convention).
inline Integer int_pow(unsigned long base, unsigned long exp) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), base, exp);
    return p;
}

// Eagerly built triangle of Stirling numbers of the second kind,
// S(n,k) = k*S(n-1,k) + S(n-1,k-1) with S(0,0) = 1.
//
// Lookups outside the triangle (k > n, or k == 0 with n >= 1) return zero;
// the boundary terms of the closed-form totals rely on that convention.
class StirlingTable {
public:
    explicit StirlingTable(std::size_t max_n) {
        rows_.resize(max_n + 1);
        rows_[0] = {Integer(1)};
        for (std::size_t n = 1; n <= max_n; ++n) {
            rows_[n].resize(n + 1);
            rows_[n][0] = 0;
            for (std::size_t k = 1; k < n; ++k)
                rows_[n][k] = rows_[n - 1][k] * static_cast<unsigned long>(k) + rows_[n - 1][k - 1];
            rows_[n][n] = 1;
        }
    }

    std::size_t max_n() const noexcept { return rows_.size() - 1; }

    // S(n, k); n must be within the table, any k is allowed.
    const Integer& operator()(std::size_t n, std::size_t k) const {
        if (n >= rows_.size())
            throw std::out_of_range("StirlingTable: n exceeds the table bound");
        if (k >= rows_[n].size()) return kZero;
        return rows_[n][k];
    }

private:
    static inline const Integer kZero{};
    std::vector<std::vector<Integer>> rows_;
};

}  // namespace partpeaks
