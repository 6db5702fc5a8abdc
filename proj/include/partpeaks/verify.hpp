#pragma once

#include <algorithm>
#include <chrono>
#include <string>
#include <vector>

#include "partpeaks/aggregate.hpp"
#include "partpeaks/closed_form.hpp"
#include "partpeaks/io.hpp"
#include "partpeaks/series.hpp"
#include "partpeaks/stirling.hpp"

namespace partpeaks {

struct Mismatch {
    int n = 0;
    int k = 0;
    std::string statistic;
    std::string method_a;
    std::string value_a;
    std::string method_b;
    std::string value_b;
};

struct VerifyReport {
    int n_max = 0;
    int distribution_n_max = 0;  // distributions compared for n up to this bound
    long classes_checked = 0;
    long comparisons = 0;
    std::vector<Mismatch> mismatches;
    std::chrono::duration<double> elapsed{};

    bool ok() const noexcept { return mismatches.empty(); }
};

// Sweeps every class 1 <= k <= n <= n_max and cross-checks the three routes:
// brute-force enumeration, closed forms, and generating-function coefficients.
// Totals are always compared; full q-distributions only for
// n <= distribution_n_max (they need the enumeration histograms anyway, so
// the extra cost is in the bivariate series, which is minor).
inline VerifyReport run_verification(int n_max, int distribution_n_max, int split_depth = 0,
                                     unsigned threads = 1) {
    const auto t0 = std::chrono::steady_clock::now();
    VerifyReport report;
    report.n_max = n_max;
    report.distribution_n_max = std::min(distribution_n_max, n_max);

    const StirlingTable table(static_cast<std::size_t>(std::max(n_max, 1)));

    const std::size_t order = static_cast<std::size_t>(n_max);
    std::vector<QSeries> sp, nsp;
    std::vector<ZSeries> dsym, dnonsym;
    sp.reserve(n_max + 1);
    for (int k = 0; k <= n_max; ++k) {
        sp.push_back(sym_peak_partition_gf(k, order));
        nsp.push_back(nonsym_peak_partition_gf(k, order));
        dsym.push_back(sym_peak_total_gf(k, order));
        dnonsym.push_back(nonsym_peak_total_gf(k, order));
    }

    auto check = [&](int n, int k, const char* stat, const char* method_a, std::string a,
                     const char* method_b, std::string b) {
        ++report.comparisons;
        if (a != b)
            report.mismatches.push_back(
                {n, k, stat, method_a, std::move(a), method_b, std::move(b)});
    };

    for (int n = 1; n <= n_max; ++n) {
        for (int k = 1; k <= n; ++k) {
            const auto agg = aggregate_class(PartitionClass(n, k), split_depth, threads);
            ++report.classes_checked;

            check(n, k, "count", "brute", agg.count.get_str(), "stirling",
                  table(n, k).get_str());

            const std::string brute_sym = agg.total_sym.get_str();
            const std::string brute_nonsym = agg.total_nonsym.get_str();
            check(n, k, "sym", "brute", brute_sym, "closed",
                  total_symmetric_peaks(table, n, k).get_str());
            check(n, k, "sym", "brute", brute_sym, "series", dsym[k][n].get_str());
            check(n, k, "nonsym", "brute", brute_nonsym, "closed",
                  total_non_symmetric_peaks(table, n, k).get_str());
            check(n, k, "nonsym", "brute", brute_nonsym, "series", dnonsym[k][n].get_str());
            check(n, k, "peaks", "brute", agg.total_peaks.get_str(), "closed",
                  total_peaks(table, n, k).get_str());

            if (n <= report.distribution_n_max) {
                check(n, k, "qdist_sym", "brute", qpoly_row(agg.qdist_sym), "series",
                      qpoly_row(sp[k][n]));
                check(n, k, "qdist_nonsym", "brute", qpoly_row(agg.qdist_nonsym), "series",
                      qpoly_row(nsp[k][n]));
            }
        }
    }

    report.elapsed = std::chrono::steady_clock::now() - t0;
    return report;
}

}  // namespace partpeaks
