// Command-line front end: enumeration, closed-form and generating-function
// routes for peak statistics over set partitions, plus a cross-validation
// sweep.  Results go to stdout, diagnostics to stderr.

#include <cstddef>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "partpeaks/partpeaks.hpp"

namespace {

using namespace partpeaks;
using nlohmann::json;

struct EnumerateOpts {
    int n = 0;
    int k = 0;
    bool stats = false;
    bool aggregate = false;
    int prefix_split = 0;
    unsigned threads = 1;
};

int run_enumerate(const EnumerateOpts& o) {
    const PartitionClass cls(o.n, o.k);
    if (o.aggregate) {
        const auto agg = aggregate_class(cls, o.prefix_split, o.threads);
        std::cout << aggregate_json(agg).dump() << '\n';
        return 0;
    }
    std::ostream& out = std::cout;
    for (const auto& prefix : split_prefixes(cls, o.prefix_split)) {
        for (RgsGenerator g(cls, prefix); !g.done(); g.advance()) {
            out << format_word(g.current(), cls.k);
            if (o.stats) {
                const StatBundle s = word_stats(g.current());
                out << '\t' << s.peaks << '\t' << s.symmetric_peaks << '\t'
                    << s.non_symmetric_peaks << '\t' << s.rises << '\t' << s.descents << '\t'
                    << s.records;
            }
            out << '\n';
        }
    }
    return 0;
}

struct TotalOpts {
    std::string stat;
    int n = 0;
    int k = 0;
    std::string method = "closed";
    int prefix_split = 0;
    unsigned threads = 1;
};

Integer closed_total(const std::string& stat, int n, int k) {
    const StirlingTable table(static_cast<std::size_t>(n > 0 ? n - 1 : 0));
    if (stat == "sym") return total_symmetric_peaks(table, n, k);
    if (stat == "nonsym") return total_non_symmetric_peaks(table, n, k);
    return total_peaks(table, n, k);
}

Integer series_total(const std::string& stat, int n, int k) {
    const auto order = static_cast<std::size_t>(n);
    if (stat == "sym") return sym_peak_total_gf(k, order)[n];
    if (stat == "nonsym") return nonsym_peak_total_gf(k, order)[n];
    return sym_peak_total_gf(k, order)[n] + nonsym_peak_total_gf(k, order)[n];
}

int run_total(const TotalOpts& o) {
    if (o.n < 1 || o.k < 1 || o.k > o.n)
        throw std::invalid_argument("total: need 1 <= k <= n");
    Integer value;
    if (o.method == "brute") {
        const auto agg = aggregate_class(PartitionClass(o.n, o.k), o.prefix_split, o.threads);
        value = o.stat == "sym" ? agg.total_sym
                                : (o.stat == "nonsym" ? agg.total_nonsym : agg.total_peaks);
    } else if (o.method == "series") {
        value = series_total(o.stat, o.n, o.k);
    } else {
        value = closed_total(o.stat, o.n, o.k);
    }
    std::cout << value.get_str() << '\n';
    return 0;
}

struct TableOpts {
    std::string stat;
    int nmax = 0;
    std::string format = "tsv";
};

int run_table(const TableOpts& o) {
    if (o.nmax < 1) throw std::invalid_argument("table: need --nmax >= 1");
    const StirlingTable table(static_cast<std::size_t>(o.nmax - 1 > 0 ? o.nmax - 1 : 0));
    auto cell = [&](int n, int k) {
        if (o.stat == "sym") return total_symmetric_peaks(table, n, k);
        if (o.stat == "nonsym") return total_non_symmetric_peaks(table, n, k);
        return total_peaks(table, n, k);
    };
    if (o.format == "json") {
        json rows = json::array();
        for (int n = 1; n <= o.nmax; ++n) {
            json row = json::array();
            for (int k = 1; k <= n; ++k) row.push_back(cell(n, k).get_str());
            rows.push_back(std::move(row));
        }
        std::cout << json{{"stat", o.stat}, {"nmax", o.nmax}, {"rows", rows}}.dump() << '\n';
    } else {
        for (int n = 1; n <= o.nmax; ++n) {
            for (int k = 1; k <= n; ++k) {
                if (k > 1) std::cout << '\t';
                std::cout << cell(n, k).get_str();
            }
            std::cout << '\n';
        }
    }
    return 0;
}

struct SeriesOpts {
    std::string gf;
    int k = 0;
    int order = -1;  // defaults to 2k + 10
    bool derivative = false;
    std::string format = "tsv";
};

int run_series(const SeriesOpts& o) {
    if (o.k < 0) throw std::invalid_argument("series: need --k >= 0");
    const std::size_t order =
        o.order >= 0 ? static_cast<std::size_t>(o.order) : static_cast<std::size_t>(2 * o.k + 10);
    if (order < static_cast<std::size_t>(o.k))
        throw std::invalid_argument("series: need --order >= k");
    const bool sym = o.gf == "sp";

    if (o.derivative) {
        const ZSeries s = sym ? sym_peak_total_gf(o.k, order) : nonsym_peak_total_gf(o.k, order);
        if (o.format == "json") {
            json values = json::array();
            for (std::size_t n = 0; n <= order; ++n) values.push_back(s[n].get_str());
            std::cout << json{{"gf", o.gf},
                              {"k", o.k},
                              {"order", order},
                              {"derivative", true},
                              {"values", values}}
                             .dump()
                      << '\n';
        } else {
            for (std::size_t n = 0; n <= order; ++n)
                std::cout << n << '\t' << s[n].get_str() << '\n';
        }
        return 0;
    }

    const QSeries s =
        sym ? sym_peak_partition_gf(o.k, order) : nonsym_peak_partition_gf(o.k, order);
    if (o.format == "json") {
        json coeffs = json::array();
        for (std::size_t n = 0; n <= order; ++n) coeffs.push_back(qpoly_strings(s[n]));
        std::cout << json{{"gf", o.gf},
                          {"k", o.k},
                          {"order", order},
                          {"derivative", false},
                          {"coefficients", coeffs}}
                         .dump()
                  << '\n';
    } else {
        for (std::size_t n = 0; n <= order; ++n)
            std::cout << n << '\t' << qpoly_row(s[n]) << '\n';
    }
    return 0;
}

int run_stirling(int nmax) {
    if (nmax < 0) throw std::invalid_argument("stirling: need --nmax >= 0");
    const StirlingTable table(static_cast<std::size_t>(nmax));
    for (int n = 0; n <= nmax; ++n) {
        for (int k = 0; k <= n; ++k) {
            if (k > 0) std::cout << '\t';
            std::cout << table(n, k).get_str();
        }
        std::cout << '\n';
    }
    return 0;
}

struct VerifyOpts {
    int nmax = 12;
    int dist_nmax = 10;
    bool totals_only = false;
    int prefix_split = 0;
    unsigned threads = 1;
};

int run_verify(const VerifyOpts& o) {
    if (o.nmax < 1) throw std::invalid_argument("verify: need --nmax >= 1");
    const int dist = o.totals_only ? 0 : o.dist_nmax;
    const VerifyReport report = run_verification(o.nmax, dist, o.prefix_split, o.threads);
    for (const auto& m : report.mismatches)
        std::cout << "MISMATCH n=" << m.n << " k=" << m.k << " stat=" << m.statistic << ' '
                  << m.method_a << '=' << m.value_a << ' ' << m.method_b << '=' << m.value_b
                  << '\n';
    std::cout << (report.ok() ? "verify: OK" : "verify: FAIL") << " nmax=" << report.n_max
              << " dist_nmax=" << report.distribution_n_max
              << " classes=" << report.classes_checked << " comparisons=" << report.comparisons
              << " mismatches=" << report.mismatches.size() << '\n';
    std::cerr << "elapsed: " << report.elapsed.count() << "s\n";
    return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);

    CLI::App app{"Exact counting of symmetric and non-symmetric peaks over set partitions"};
    app.require_subcommand(1);
    int rc = 0;

    EnumerateOpts enum_opts;
    auto* cmd_enum = app.add_subcommand(
        "enumerate", "List the restricted growth strings of P(n,k) in lexicographic order");
    cmd_enum->add_option("n", enum_opts.n, "Ground-set size")->required();
    cmd_enum->add_option("k", enum_opts.k, "Number of blocks")->required();
    cmd_enum->add_flag("--stats", enum_opts.stats,
                       "Append TSV columns: peaks sym nonsym rises descents records");
    cmd_enum->add_flag("--aggregate", enum_opts.aggregate,
                       "Emit one JSON record of class totals instead of the words");
    cmd_enum->add_option("--prefix-split", enum_opts.prefix_split,
                         "Split the stream at this prefix depth (output is unchanged)");
    cmd_enum->add_option("--threads", enum_opts.threads,
                         "Worker threads for --aggregate with --prefix-split");
    cmd_enum->callback([&] { rc = run_enumerate(enum_opts); });

    TotalOpts total_opts;
    auto* cmd_total =
        app.add_subcommand("total", "Total of one statistic over P(n,k) by a chosen route");
    cmd_total->add_option("--stat", total_opts.stat, "Statistic")
        ->required()
        ->check(CLI::IsMember({"sym", "nonsym", "peaks"}));
    cmd_total->add_option("--n", total_opts.n, "Ground-set size")->required();
    cmd_total->add_option("--k", total_opts.k, "Number of blocks")->required();
    cmd_total->add_option("--method", total_opts.method, "Computation route")
        ->check(CLI::IsMember({"closed", "brute", "series"}));
    cmd_total->add_option("--prefix-split", total_opts.prefix_split,
                          "Prefix depth for the brute route");
    cmd_total->add_option("--threads", total_opts.threads, "Worker threads for the brute route");
    cmd_total->callback([&] { rc = run_total(total_opts); });

    TableOpts table_opts;
    auto* cmd_table =
        app.add_subcommand("table", "Triangle of closed-form totals for 1 <= k <= n <= nmax");
    cmd_table->add_option("--stat", table_opts.stat, "Statistic")
        ->required()
        ->check(CLI::IsMember({"sym", "nonsym", "peaks"}));
    cmd_table->add_option("--nmax", table_opts.nmax, "Largest ground-set size")->required();
    cmd_table->add_option("--format", table_opts.format, "Output format")
        ->check(CLI::IsMember({"tsv", "json"}));
    cmd_table->callback([&] { rc = run_table(table_opts); });

    SeriesOpts series_opts;
    auto* cmd_series = app.add_subcommand(
        "series", "Truncated generating-function coefficients, one row per power of x");
    cmd_series->add_option("--gf", series_opts.gf, "Which generating function")
        ->required()
        ->check(CLI::IsMember({"sp", "nsp"}));
    cmd_series->add_option("--k", series_opts.k, "Number of blocks")->required();
    cmd_series->add_option("--order", series_opts.order, "Truncation order (default 2k+10)");
    cmd_series->add_flag("--derivative", series_opts.derivative,
                         "Emit the q-derivative at q=1 (totals) instead of q-polynomials");
    cmd_series->add_option("--format", series_opts.format, "Output format")
        ->check(CLI::IsMember({"tsv", "json"}));
    cmd_series->callback([&] { rc = run_series(series_opts); });

    int stirling_nmax = 0;
    auto* cmd_stirling =
        app.add_subcommand("stirling", "TSV triangle of Stirling numbers of the second kind");
    cmd_stirling->add_option("--nmax", stirling_nmax, "Largest row")->required();
    cmd_stirling->callback([&] { rc = run_stirling(stirling_nmax); });

    VerifyOpts verify_opts;
    auto* cmd_verify = app.add_subcommand(
        "verify", "Cross-check brute force, closed forms and series over a sweep");
    cmd_verify->add_option("--nmax", verify_opts.nmax, "Sweep bound (default 12)");
    cmd_verify->add_option("--dist-nmax", verify_opts.dist_nmax,
                           "Bound for full q-distribution comparison (default 10)");
    cmd_verify->add_flag("--totals-only", verify_opts.totals_only,
                         "Skip the q-distribution comparison");
    cmd_verify->add_option("--prefix-split", verify_opts.prefix_split,
                           "Prefix depth for the enumeration sweep");
    cmd_verify->add_option("--threads", verify_opts.threads, "Worker threads");
    cmd_verify->callback([&] { rc = run_verify(verify_opts); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return rc;
}
