#include "kinit/bench.hpp"

#include "kinit/error.hpp"

#include <json.hpp>

#include <sys/resource.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <thread>

namespace kinit {

std::string_view to_string(Criterion c) noexcept {
    switch (c) {
        case Criterion::initial_sse: return "initial_sse";
        case Criterion::final_sse: return "final_sse";
        case Criterion::iterations: return "iterations";
        case Criterion::cpu_ms: return "cpu_ms";
    }
    return "?";
}

std::string_view to_string(Statistic s) noexcept {
    switch (s) {
        case Statistic::min: return "min";
        case Statistic::mean: return "mean";
        case Statistic::stdev: return "stdev";
    }
    return "?";
}

double RunRecord::value(Criterion c) const noexcept {
    switch (c) {
        case Criterion::initial_sse: return initial_sse;
        case Criterion::final_sse: return final_sse;
        case Criterion::iterations: return iterations;
        case Criterion::cpu_ms: return static_cast<double>(cpu_ms);
    }
    return 0.0;
}

double CellStats::get(Statistic s) const noexcept {
    switch (s) {
        case Statistic::min: return min;
        case Statistic::mean: return mean;
        case Statistic::stdev: return stdev;
    }
    return 0.0;
}

namespace {

// CPU time (user + system) consumed by the calling thread, in microseconds.
std::int64_t thread_cpu_us() {
    rusage usage{};
    getrusage(RUSAGE_THREAD, &usage);
    auto us = [](const timeval& tv) {
        return static_cast<std::int64_t>(tv.tv_sec) * 1000000 + tv.tv_usec;
    };
    return us(usage.ru_utime) + us(usage.ru_stime);
}

struct Job {
    std::size_t dataset = 0;
    InitMethod method = InitMethod::F;
    std::uint64_t seed = 0;
};

RunRecord run_one(const BenchDataset& bd, const Job& job, const KMeansConfig& cfg,
                  const BenchOptions& opts) {
    RunRecord rec;
    rec.dataset_id = bd.id;
    rec.dataset = bd.name;
    rec.method = job.method;
    rec.seed = job.seed;
    const auto start = thread_cpu_us();
    try {
        SeededRng rng(job.seed, opts.engine);
        const auto centers = initialize(bd.data, job.method, bd.k, rng, opts.init);
        const auto result = run_kmeans(bd.data, centers, cfg);
        rec.initial_sse = result.initial_sse;
        rec.final_sse = result.final_sse;
        rec.iterations = result.iterations;
    } catch (const std::exception& e) {
        rec.failed = true;
        rec.error = e.what();
    }
    rec.cpu_ms = (thread_cpu_us() - start) / 1000;
    return rec;
}

}  // namespace

std::vector<RunRecord> run_benchmark(std::span<const BenchDataset> datasets,
                                     std::span<const InitMethod> methods, std::size_t runs_random,
                                     std::uint64_t base_seed, const KMeansConfig& cfg,
                                     const BenchOptions& opts) {
    if (runs_random < 1) throw DomainError("runs_random must be at least 1");
    std::vector<Job> jobs;
    for (std::size_t d = 0; d < datasets.size(); ++d) {
        for (auto m : methods) {
            const std::size_t runs = is_random(m) ? runs_random : 1;
            for (std::size_t r = 0; r < runs; ++r) jobs.push_back({d, m, base_seed + r});
        }
    }

    std::vector<RunRecord> records(jobs.size());
    unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(jobs.size(), 1)));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t j = next++; j < jobs.size(); j = next++)
            records[j] = run_one(datasets[jobs[j].dataset], jobs[j], cfg, opts);
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    return records;
}

std::optional<std::size_t> StatsTable::method_index(InitMethod m) const {
    auto it = std::find(methods.begin(), methods.end(), m);
    if (it == methods.end()) return std::nullopt;
    return static_cast<std::size_t>(it - methods.begin());
}

StatsTable compute_stats(std::span<const RunRecord> records, std::vector<DatasetKey> datasets,
                         std::vector<InitMethod> methods) {
    StatsTable table;
    table.datasets = std::move(datasets);
    table.methods = std::move(methods);
    table.cells.assign(table.datasets.size(),
                       std::vector<std::optional<MethodStats>>(table.methods.size()));

    // Welford accumulators per cell and criterion.
    struct Acc {
        std::size_t n = 0;
        double mean = 0.0, m2 = 0.0, min = std::numeric_limits<double>::infinity();
    };
    std::vector<std::vector<std::array<Acc, kCriteria>>> acc(
        table.datasets.size(), std::vector<std::array<Acc, kCriteria>>(table.methods.size()));
    std::vector<std::vector<std::size_t>> failures(table.datasets.size(),
                                                   std::vector<std::size_t>(table.methods.size(), 0));

    for (const auto& r : records) {
        auto d = std::find_if(table.datasets.begin(), table.datasets.end(),
                              [&](const DatasetKey& k) { return k.id == r.dataset_id && k.name == r.dataset; });
        auto m = table.method_index(r.method);
        if (d == table.datasets.end() || !m) continue;
        const auto di = static_cast<std::size_t>(d - table.datasets.begin());
        if (r.failed) {
            ++failures[di][*m];
            continue;
        }
        for (std::size_t c = 0; c < kCriteria; ++c) {
            auto& a = acc[di][*m][c];
            const double x = r.value(static_cast<Criterion>(c));
            ++a.n;
            const double delta = x - a.mean;
            a.mean += delta / static_cast<double>(a.n);
            a.m2 += delta * (x - a.mean);
            a.min = std::min(a.min, x);
        }
    }

    for (std::size_t d = 0; d < table.datasets.size(); ++d) {
        for (std::size_t m = 0; m < table.methods.size(); ++m) {
            const auto n = acc[d][m][0].n;
            if (n == 0) continue;
            MethodStats s;
            s.runs = n;
            s.failures = failures[d][m];
            for (std::size_t c = 0; c < kCriteria; ++c) {
                const auto& a = acc[d][m][c];
                // The running mean can drift by an ulp from identical inputs; pin it.
                s.criteria[c].min = a.min;
                s.criteria[c].mean = a.m2 == 0.0 ? a.min : std::max(a.mean, a.min);
                s.criteria[c].stdev = n > 1 ? std::sqrt(a.m2 / static_cast<double>(n - 1)) : 0.0;
            }
            table.cells[d][m] = s;
        }
    }
    return table;
}

namespace {

double ratio_to_best(double value, double best) {
    if (best > 0.0) return value / best;
    return value == best ? 1.0 : std::numeric_limits<double>::infinity();
}

}  // namespace

NormalizedTable normalize_criteria(const StatsTable& stats) {
    NormalizedTable out;
    out.datasets = stats.datasets;
    out.methods = stats.methods;
    out.ratio.resize(stats.datasets.size());
    for (std::size_t d = 0; d < stats.datasets.size(); ++d) {
        out.ratio[d].resize(stats.methods.size());
        for (std::size_t c = 0; c < kNormalizedCriteria; ++c) {
            const auto crit = static_cast<Criterion>(c);

            for (auto stat : {Statistic::min, Statistic::mean}) {
                double best = std::numeric_limits<double>::infinity();
                for (std::size_t m = 0; m < stats.methods.size(); ++m)
                    if (const auto& cell = stats.at(d, m)) best = std::min(best, (*cell)[crit].get(stat));
                for (std::size_t m = 0; m < stats.methods.size(); ++m)
                    if (const auto& cell = stats.at(d, m))
                        out.ratio[d][m][c][static_cast<std::size_t>(stat)] =
                            ratio_to_best((*cell)[crit].get(stat), best);
            }

            // Stdev: random methods only, relative to the smallest nonzero stdev.
            // A random method whose runs all agreed ties with the best.
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t m = 0; m < stats.methods.size(); ++m) {
                const auto& cell = stats.at(d, m);
                if (!cell || !is_random(stats.methods[m])) continue;
                const double s = (*cell)[crit].stdev;
                if (s > 0.0) best = std::min(best, s);
            }
            for (std::size_t m = 0; m < stats.methods.size(); ++m) {
                const auto& cell = stats.at(d, m);
                if (!cell || !is_random(stats.methods[m])) continue;
                const double s = (*cell)[crit].stdev;
                out.ratio[d][m][c][static_cast<std::size_t>(Statistic::stdev)] =
                    (s > 0.0 && std::isfinite(best)) ? s / best : 1.0;
            }
        }
    }
    return out;
}

double quantile(std::vector<double> values, double q) {
    if (values.empty()) throw DomainError("quantile of no values");
    if (q < 0.0 || q > 1.0) throw DomainError("quantile outside [0, 1]");
    const double pos = q * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const double frac = pos - static_cast<double>(lo);
    std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(lo), values.end());
    const double a = values[lo];
    if (frac == 0.0 || lo + 1 >= values.size()) return a;
    const double b = *std::min_element(values.begin() + static_cast<std::ptrdiff_t>(lo) + 1, values.end());
    return a + frac * (b - a);
}

namespace {

std::vector<double> normalized_column(const NormalizedTable& t, std::size_t m, std::size_t c,
                                      std::size_t s) {
    std::vector<double> values;
    for (std::size_t d = 0; d < t.datasets.size(); ++d)
        if (const auto& v = t.ratio[d][m][c][s]) values.push_back(*v);
    return values;
}

}  // namespace

SummaryTable summarize(const NormalizedTable& normalized) {
    SummaryTable out;
    out.methods = normalized.methods;
    out.value.resize(normalized.methods.size());
    for (std::size_t m = 0; m < normalized.methods.size(); ++m) {
        for (std::size_t s = 0; s < kStatistics; ++s) {
            for (std::size_t c = 0; c < kNormalizedCriteria; ++c) {
                auto values = normalized_column(normalized, m, c, s);
                if (values.empty()) continue;
                double v = 0.0;
                if (static_cast<Statistic>(s) == Statistic::stdev) {
                    v = quantile(std::move(values), 0.5);
                } else {
                    for (double x : values) v += x;
                    v /= static_cast<double>(values.size());
                }
                out.value[m][s][c] = v;
            }
        }
    }
    return out;
}

std::array<Tally, kCriteria> relative_compare(const StatsTable& stats, InitMethod a, InitMethod b,
                                              CompareMode mode) {
    const auto ia = stats.method_index(a);
    const auto ib = stats.method_index(b);
    if (!ia || !ib) throw DomainError("both methods must be present in the statistics table");
    std::array<Tally, kCriteria> out{};
    for (std::size_t d = 0; d < stats.datasets.size(); ++d) {
        const auto& ca = stats.at(d, *ia);
        const auto& cb = stats.at(d, *ib);
        if (!ca || !cb) continue;
        for (std::size_t c = 0; c < kCriteria; ++c) {
            double va = ca->criteria[c].mean;
            double vb = cb->criteria[c].mean;
            if (mode == CompareMode::rounded) {
                va = std::round(va);
                vb = std::round(vb);
            }
            if (va > vb)
                ++out[c].worse;
            else if (va < vb)
                ++out[c].better;
            else
                ++out[c].same;
        }
    }
    return out;
}

std::vector<BoxPlotRow> box_plot_rows(const NormalizedTable& normalized) {
    std::vector<BoxPlotRow> rows;
    for (std::size_t m = 0; m < normalized.methods.size(); ++m) {
        for (std::size_t c = 0; c < kNormalizedCriteria; ++c) {
            for (std::size_t s = 0; s < kStatistics; ++s) {
                auto values = normalized_column(normalized, m, c, s);
                if (values.empty()) continue;
                BoxPlotRow row;
                row.method = normalized.methods[m];
                row.criterion = static_cast<Criterion>(c);
                row.statistic = static_cast<Statistic>(s);
                row.count = values.size();
                row.min = *std::min_element(values.begin(), values.end());
                row.max = *std::max_element(values.begin(), values.end());
                row.q1 = quantile(values, 0.25);
                row.median = quantile(values, 0.5);
                row.q3 = quantile(values, 0.75);
                double sum = 0.0;
                for (double v : values) sum += v;
                row.mean = sum / static_cast<double>(values.size());
                rows.push_back(row);
            }
        }
    }
    return rows;
}

BenchReport build_report(std::vector<RunRecord> records, std::vector<DatasetKey> datasets,
                         std::vector<InitMethod> methods, CompareMode mode) {
    BenchReport report;
    report.stats = compute_stats(records, std::move(datasets), std::move(methods));
    report.records = std::move(records);
    report.normalized = normalize_criteria(report.stats);
    report.summary = summarize(report.normalized);
    report.boxplots = box_plot_rows(report.normalized);
    const std::pair<InitMethod, InitMethod> pairs[] = {{InitMethod::OV, InitMethod::V},
                                                       {InitMethod::OP, InitMethod::P}};
    for (auto [a, b] : pairs)
        if (!report.stats.datasets.empty() && report.stats.method_index(a) && report.stats.method_index(b))
            report.comparisons.push_back({a, b, relative_compare(report.stats, a, b, mode)});
    return report;
}

namespace {

std::string fmt(double v, int precision = 6) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, v);
    return buf;
}

std::ofstream open_out(const std::filesystem::path& p) {
    std::ofstream out(p);
    if (!out) throw IoError("cannot write " + p.string());
    return out;
}

}  // namespace

std::vector<std::filesystem::path> emit_report(const BenchReport& report,
                                               const std::filesystem::path& directory) {
    std::error_code ec;
    std::filesystem::create_directories(directory, ec);
    if (ec) throw IoError("cannot create " + directory.string() + ": " + ec.message());

    std::vector<std::filesystem::path> written;
    const auto& st = report.stats;

    {
        const auto path = directory / "runs.jsonl";
        auto out = open_out(path);
        for (const auto& r : report.records) {
            nlohmann::ordered_json j;
            j["dataset_id"] = r.dataset_id;
            j["dataset"] = r.dataset;
            j["method"] = std::string(to_string(r.method));
            j["seed"] = r.seed;
            j["initial_sse"] = r.initial_sse;
            j["final_sse"] = r.final_sse;
            j["iterations"] = r.iterations;
            j["cpu_ms"] = r.cpu_ms;
            if (r.failed) j["error"] = r.error;
            out << j.dump() << '\n';
        }
        written.push_back(path);
    }

    for (std::size_t c = 0; c < kCriteria; ++c) {
        const auto crit = static_cast<Criterion>(c);
        const auto path = directory / ("table_" + std::string(to_string(crit)) + ".tsv");
        auto out = open_out(path);
        out << "dataset_id\tdataset\tstatistic";
        for (auto m : st.methods) out << '\t' << to_string(m);
        out << '\n';
        const int precision = crit == Criterion::initial_sse || crit == Criterion::final_sse ? 4 : 2;
        for (std::size_t d = 0; d < st.datasets.size(); ++d) {
            for (std::size_t s = 0; s < kStatistics; ++s) {
                out << st.datasets[d].id << '\t' << st.datasets[d].name << '\t'
                    << to_string(static_cast<Statistic>(s));
                for (std::size_t m = 0; m < st.methods.size(); ++m) {
                    const auto& cell = st.at(d, m);
                    out << '\t' << (cell ? fmt((*cell)[crit].get(static_cast<Statistic>(s)), precision) : "NA");
                }
                out << '\n';
            }
        }
        written.push_back(path);
    }

    {
        const auto path = directory / "normalized.tsv";
        auto out = open_out(path);
        out << "dataset_id\tdataset\tcriterion\tstatistic";
        for (auto m : st.methods) out << '\t' << to_string(m);
        out << '\n';
        const auto& nt = report.normalized;
        for (std::size_t d = 0; d < nt.datasets.size(); ++d) {
            for (std::size_t c = 0; c < kNormalizedCriteria; ++c) {
                for (std::size_t s = 0; s < kStatistics; ++s) {
                    out << nt.datasets[d].id << '\t' << nt.datasets[d].name << '\t'
                        << to_string(static_cast<Criterion>(c)) << '\t'
                        << to_string(static_cast<Statistic>(s));
                    for (std::size_t m = 0; m < nt.methods.size(); ++m) {
                        const auto& v = nt.ratio[d][m][c][s];
                        out << '\t' << (v ? fmt(*v, 4) : "--");
                    }
                    out << '\n';
                }
            }
        }
        written.push_back(path);
    }

    {
        const auto path = directory / "summary.tsv";
        auto out = open_out(path);
        out << "statistic\tcriterion";
        for (auto m : report.summary.methods) out << '\t' << to_string(m);
        out << '\n';
        if (!st.datasets.empty()) {
            for (std::size_t s = 0; s < kStatistics; ++s) {
                for (std::size_t c = 0; c < kNormalizedCriteria; ++c) {
                    out << to_string(static_cast<Statistic>(s)) << '\t'
                        << to_string(static_cast<Criterion>(c));
                    for (std::size_t m = 0; m < report.summary.methods.size(); ++m) {
                        const auto& v = report.summary.value[m][s][c];
                        out << '\t' << (v ? fmt(*v, 3) : "--");
                    }
                    out << '\n';
                }
            }
        }
        written.push_back(path);
    }

    {
        const auto path = directory / "relative.tsv";
        auto out = open_out(path);
        out << "method\tbaseline\tcriterion\tworse\tsame\tbetter\n";
        for (const auto& cmp : report.comparisons) {
            for (std::size_t c = 0; c < kCriteria; ++c) {
                out << to_string(cmp.a) << '\t' << to_string(cmp.b) << '\t'
                    << to_string(static_cast<Criterion>(c)) << '\t' << cmp.tally[c].worse << '\t'
                    << cmp.tally[c].same << '\t' << cmp.tally[c].better << '\n';
            }
        }
        written.push_back(path);
    }

    {
        const auto path = directory / "boxplot.tsv";
        auto out = open_out(path);
        out << "method\tcriterion\tstatistic\tcount\tmin\tq1\tmedian\tq3\tmax\tmean\n";
        for (const auto& row : report.boxplots) {
            out << to_string(row.method) << '\t' << to_string(row.criterion) << '\t'
                << to_string(row.statistic) << '\t' << row.count << '\t' << fmt(row.min) << '\t'
                << fmt(row.q1) << '\t' << fmt(row.median) << '\t' << fmt(row.q3) << '\t'
                << fmt(row.max) << '\t' << fmt(row.mean) << '\n';
        }
        written.push_back(path);
    }
    return written;
}

}  // namespace kinit
