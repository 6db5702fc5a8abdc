#include <algorithm>
#include <random>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "partpeaks/word.hpp"

using namespace partpeaks;

namespace {

std::vector<int> random_word(std::mt19937& rng, int max_len, int k) {
    std::uniform_int_distribution<int> len_dist(0, max_len);
    std::uniform_int_distribution<int> letter_dist(1, k);
    std::vector<int> w(len_dist(rng));
    for (int& ell : w) ell = letter_dist(rng);
    return w;
}

}  // namespace

TEST_CASE("peak counters on the running example 1322141251") {
    const std::vector<int> w{1, 3, 2, 2, 1, 4, 1, 2, 5, 1};
    CHECK(count_peaks(w) == 3);
    CHECK(count_symmetric_peaks(w) == 1);      // 141
    CHECK(count_non_symmetric_peaks(w) == 2);  // 132 and 251
    CHECK_FALSE(is_rgs(w));                    // the 3 in slot 2 overshoots the prefix maximum
}

TEST_CASE("rises, descents and records on 1121324323") {
    const std::vector<int> w{1, 1, 2, 1, 3, 2, 4, 3, 2, 3};
    CHECK(count_rises_descents(w) == std::pair{4, 4});
    CHECK(count_records(w) == 4);
    CHECK(is_rgs(w));
}

TEST_CASE("restricted growth recognition") {
    CHECK(is_rgs(std::vector<int>{1, 1, 2}));
    CHECK(is_rgs(std::vector<int>{1, 2, 1}));
    CHECK(is_rgs(std::vector<int>{}));  // partition of the empty set
    CHECK(is_rgs(std::vector<int>{1}));
    CHECK_FALSE(is_rgs(std::vector<int>{2, 1}));
    CHECK_FALSE(is_rgs(std::vector<int>{1, 3}));
    CHECK_FALSE(is_rgs(std::vector<int>{1, 0}));
}

TEST_CASE("peak edge cases") {
    CHECK(count_peaks(std::vector<int>{}) == 0);
    CHECK(count_peaks(std::vector<int>{1, 2}) == 0);
    CHECK(count_peaks(std::vector<int>{1, 1, 1, 1}) == 0);
    CHECK(count_peaks(std::vector<int>{1, 2, 1, 3}) == 1);
    CHECK(count_symmetric_peaks(std::vector<int>{1, 2, 1, 2}) == 1);
    CHECK(count_symmetric_peaks(std::vector<int>{1, 2, 3, 4}) == 0);
    CHECK(count_non_symmetric_peaks(std::vector<int>{1, 2, 3, 1}) == 1);
}

TEST_CASE("rises and descents edge cases") {
    CHECK(count_rises_descents(std::vector<int>{}) == std::pair{0, 0});
    CHECK(count_rises_descents(std::vector<int>{1, 1, 2, 2}) == std::pair{1, 0});
    CHECK(count_records(std::vector<int>{1, 1, 1}) == 1);
    CHECK(count_records(std::vector<int>{}) == 0);
}

TEST_CASE("word_stats equals the individual counters") {
    SECTION("worked examples") {
        const std::vector<int> w{1, 2, 1, 3};
        const StatBundle s = word_stats(w);
        CHECK(s == StatBundle{1, 1, 0, 2, 1, 3});

        const StatBundle one = word_stats(std::vector<int>{1});
        CHECK(one == StatBundle{0, 0, 0, 0, 0, 1});
    }
    SECTION("random words") {
        std::mt19937 rng(20240817);
        for (int trial = 0; trial < 500; ++trial) {
            const auto w = random_word(rng, 12, 5);
            const StatBundle s = word_stats(w);
            CHECK(s.peaks == count_peaks(w));
            CHECK(s.symmetric_peaks == count_symmetric_peaks(w));
            CHECK(s.non_symmetric_peaks == count_non_symmetric_peaks(w));
            CHECK(std::pair{s.rises, s.descents} == count_rises_descents(w));
            CHECK(s.records == count_records(w));
        }
    }
}

TEST_CASE("statistic invariants over random words") {
    std::mt19937 rng(987654321);
    for (int trial = 0; trial < 1000; ++trial) {
        const int k = 1 + trial % 6;
        const auto w = random_word(rng, 14, k);

        const int p = count_peaks(w);
        CHECK(p == count_symmetric_peaks(w) + count_non_symmetric_peaks(w));

        auto r = w;
        std::reverse(r.begin(), r.end());
        CHECK(count_peaks(r) == p);
        CHECK(count_symmetric_peaks(r) == count_symmetric_peaks(w));
        CHECK(count_non_symmetric_peaks(r) == count_non_symmetric_peaks(w));

        const auto [rises, descents] = count_rises_descents(w);
        int plateaus = 0;
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] == w[i + 1]) ++plateaus;
        if (!w.empty()) CHECK(rises + descents + plateaus == static_cast<int>(w.size()) - 1);

        if (k == 2) CHECK(count_non_symmetric_peaks(w) == 0);
    }
}

TEST_CASE("Word validates its letters") {
    CHECK_NOTHROW(Word({1, 2, 1}, 2));
    CHECK_THROWS_AS(Word({1, 3}, 2), std::invalid_argument);
    CHECK_THROWS_AS(Word({0}, 2), std::invalid_argument);
    CHECK_THROWS_AS(Word({1}, -1), std::invalid_argument);
    CHECK(Word::from_letters({1, 2, 13, 4}).alphabet_bound() == 13);
    CHECK(Word::from_letters({}).alphabet_bound() == 0);
}

TEST_CASE("Rgs wrapper accepts only canonical forms") {
    CHECK(Rgs(Word::from_letters({1, 1, 2})).block_count() == 2);
    CHECK(Rgs(Word{}).block_count() == 0);
    CHECK_THROWS_AS(Rgs(Word::from_letters({2, 1})), std::invalid_argument);
    CHECK_THROWS_AS(Rgs(Word({1, 3}, 3)), std::invalid_argument);
}
