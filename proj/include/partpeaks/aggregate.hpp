#pragma once

#include <atomic>
#include <cstddef>
#include <span>
#include <thread>
#include <utility>
#include <vector>

#include "partpeaks/integer.hpp"
#include "partpeaks/qpoly.hpp"
#include "partpeaks/rgs_generator.hpp"
#include "partpeaks/word.hpp"

namespace partpeaks {

// Exact totals of the peak statistics over a whole partition class.
struct AggregateTotals {
    PartitionClass cls;
    Integer count;        // |P_{n,k}|, i.e. S(n,k)
    Integer total_peaks;
    Integer total_sym;
    Integer total_nonsym;
    QPoly qdist_sym;      // sum over the class of q^{#symmetric peaks}
    QPoly qdist_nonsym;
};

namespace detail {

struct StatAccumulator {
    Integer count = 0;
    Integer peaks = 0;
    Integer sym = 0;
    Integer nonsym = 0;
    std::vector<Integer> hist_sym;
    std::vector<Integer> hist_nonsym;

    void consume(std::span<const int> w) {
        const StatBundle s = word_stats(w);
        count += 1;
        peaks += s.peaks;
        sym += s.symmetric_peaks;
        nonsym += s.non_symmetric_peaks;
        bump(hist_sym, s.symmetric_peaks);
        bump(hist_nonsym, s.non_symmetric_peaks);
    }

    void merge(const StatAccumulator& o) {
        count += o.count;
        peaks += o.peaks;
        sym += o.sym;
        nonsym += o.nonsym;
        merge_hist(hist_sym, o.hist_sym);
        merge_hist(hist_nonsym, o.hist_nonsym);
    }

    static void bump(std::vector<Integer>& h, int idx) {
        if (idx >= static_cast<int>(h.size())) h.resize(idx + 1);
        h[idx] += 1;
    }

    static void merge_hist(std::vector<Integer>& h, const std::vector<Integer>& o) {
        if (o.size() > h.size()) h.resize(o.size());
        for (std::size_t i = 0; i < o.size(); ++i) h[i] += o[i];
    }
};

inline StatAccumulator accumulate_prefix(PartitionClass cls, std::span<const int> prefix) {
    StatAccumulator acc;
    for (RgsGenerator g(cls, prefix); !g.done(); g.advance()) acc.consume(g.current());
    return acc;
}

}  // namespace detail

// Folds word_stats over the whole class.  split_depth > 0 partitions the
// stream by fixed prefixes; the per-prefix sums are associative, so the
// result is identical for every depth and thread count.
inline AggregateTotals aggregate_class(PartitionClass cls, int split_depth = 0,
                                       unsigned threads = 1) {
    const auto prefixes = split_prefixes(cls, split_depth);
    std::vector<detail::StatAccumulator> parts(prefixes.size());

    if (threads > 1 && prefixes.size() > 1) {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next.fetch_add(1); i < prefixes.size(); i = next.fetch_add(1))
                parts[i] = detail::accumulate_prefix(cls, prefixes[i]);
        };
        std::vector<std::thread> pool;
        const unsigned width = std::min<std::size_t>(threads, prefixes.size());
        pool.reserve(width);
        for (unsigned t = 0; t < width; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    } else {
        for (std::size_t i = 0; i < prefixes.size(); ++i)
            parts[i] = detail::accumulate_prefix(cls, prefixes[i]);
    }

    detail::StatAccumulator total;
    for (const auto& p : parts) total.merge(p);

    return AggregateTotals{
        .cls = cls,
        .count = std::move(total.count),
        .total_peaks = std::move(total.peaks),
        .total_sym = std::move(total.sym),
        .total_nonsym = std::move(total.nonsym),
        .qdist_sym = QPoly(std::move(total.hist_sym)),
        .qdist_nonsym = QPoly(std::move(total.hist_nonsym)),
    };
}

}  // namespace partpeaks
