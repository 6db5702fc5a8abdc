#include <catch2/catch_amalgamated.hpp>

#include "partpeaks/aggregate.hpp"
#include "partpeaks/closed_form.hpp"
#include "partpeaks/series.hpp"
#include "partpeaks/stirling.hpp"

using namespace partpeaks;

// Golden values below were computed with the enumeration oracle before the
// formulas were wired up, then frozen.

TEST_CASE("symmetric totals, pinned") {
    const StirlingTable t(11);
    CHECK(total_symmetric_peaks(t, 3, 2) == 1);
    CHECK(total_symmetric_peaks(t, 4, 2) == 3);
    CHECK(total_symmetric_peaks(t, 4, 3) == 2);
    CHECK(total_symmetric_peaks(t, 5, 2) == 8);
    CHECK(total_symmetric_peaks(t, 5, 3) == 12);
    CHECK(total_symmetric_peaks(t, 6, 3) == 54);
    CHECK(total_symmetric_peaks(t, 8, 3) == 799);
}

TEST_CASE("non-symmetric totals, pinned") {
    const StirlingTable t(11);
    CHECK(total_non_symmetric_peaks(t, 4, 3) == 1);
    CHECK(total_non_symmetric_peaks(t, 5, 3) == 6);
    CHECK(total_non_symmetric_peaks(t, 5, 4) == 3);
    CHECK(total_non_symmetric_peaks(t, 6, 3) == 27);
    CHECK(total_non_symmetric_peaks(t, 6, 4) == 30);
    CHECK(total_non_symmetric_peaks(t, 8, 4) == 1188);
}

TEST_CASE("structural zeros") {
    const StirlingTable t(20);
    for (int n = 1; n <= 20; ++n) {
        CHECK(total_symmetric_peaks(t, n, 1) == 0);
        if (n >= 2) CHECK(total_non_symmetric_peaks(t, n, 2) == 0);
        CHECK(total_non_symmetric_peaks(t, n, 1) == 0);
        CHECK(total_symmetric_peaks(t, n, n) == 0);
        CHECK(total_non_symmetric_peaks(t, n, n) == 0);
    }
}

TEST_CASE("shortest nontrivial classes") {
    // at n = k+1 only the record insertion term survives
    const StirlingTable t(12);
    for (int k = 1; k <= 11; ++k) {
        CHECK(total_symmetric_peaks(t, k + 1, k) == k - 1);
        CHECK(total_non_symmetric_peaks(t, k + 1, k) == binomial(k - 1, 2));
    }
}

TEST_CASE("totals agree with the enumeration oracle up to n = 9") {
    const StirlingTable t(9);
    for (int n = 1; n <= 9; ++n)
        for (int k = 1; k <= n; ++k) {
            const auto agg = aggregate_class(PartitionClass(n, k));
            CHECK(total_symmetric_peaks(t, n, k) == agg.total_sym);
            CHECK(total_non_symmetric_peaks(t, n, k) == agg.total_nonsym);
            CHECK(total_peaks(t, n, k) == agg.total_peaks);
        }
}

TEST_CASE("starting the non-symmetric outer sum at j=2 changes nothing") {
    // C(2,3) = 0, so the two readings of the formula coincide
    const StirlingTable t(14);
    auto from_two = [&](int n, int k) {
        Integer total = binomial(k - 1, 2) * t(n - 1, k);
        for (int j = 2; j <= k; ++j) {
            Integer jpow = 1;
            for (int i = 3; i <= n - k; ++i) {
                total += 2 * binomial(j, 3) * jpow * t(n - i, k);
                jpow *= j;
            }
        }
        return total;
    };
    for (int n = 1; n <= 14; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(total_non_symmetric_peaks(t, n, k) == from_two(n, k));
}

TEST_CASE("larger pinned values cross-checked against the series route") {
    const StirlingTable t(19);
    CHECK(total_symmetric_peaks(t, 12, 5) == 1301860);
    CHECK(total_non_symmetric_peaks(t, 12, 5) == 1984950);

    const Integer big_sym = total_symmetric_peaks(t, 20, 8);
    CHECK(big_sym == Integer("17024058048270"));
    CHECK(big_sym == sym_peak_total_gf(8, 20)[20]);
    CHECK(total_non_symmetric_peaks(t, 20, 8) == nonsym_peak_total_gf(8, 20)[20]);
}

TEST_CASE("arguments outside 1 <= k <= n are rejected") {
    const StirlingTable t(6);
    CHECK_THROWS_AS(total_symmetric_peaks(t, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(total_symmetric_peaks(t, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(total_symmetric_peaks(t, 3, 4), std::invalid_argument);
    CHECK_THROWS_AS(total_non_symmetric_peaks(t, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(total_peaks(t, -1, -1), std::invalid_argument);
    // a table that cannot cover n-1 is a caller bug
    CHECK_THROWS_AS(total_symmetric_peaks(t, 8, 2), std::out_of_range);
}
