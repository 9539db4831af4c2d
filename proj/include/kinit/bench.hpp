#ifndef KINIT_BENCH_HPP
#define KINIT_BENCH_HPP

#include "kinit/dataset.hpp"
#include "kinit/init.hpp"
#include "kinit/lloyd.hpp"
#include "kinit/rng.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace kinit {

enum class Criterion { initial_sse, final_sse, iterations, cpu_ms };
inline constexpr std::size_t kCriteria = 4;
/// Criteria that are normalized and summarized; CPU time is reported raw only.
inline constexpr std::size_t kNormalizedCriteria = 3;
std::string_view to_string(Criterion c) noexcept;

enum class Statistic { min, mean, stdev };
inline constexpr std::size_t kStatistics = 3;
std::string_view to_string(Statistic s) noexcept;

/// A dataset prepared for benchmarking: normalized data plus its K.
struct BenchDataset {
    int id = 0;
    std::string name;
    Dataset data;
    std::size_t k = 0;
};

struct RunRecord {
    int dataset_id = 0;
    std::string dataset;
    InitMethod method = InitMethod::F;
    std::uint64_t seed = 0;
    double initial_sse = 0.0;
    double final_sse = 0.0;
    int iterations = 0;
    std::int64_t cpu_ms = 0;  // initialization + clustering, this thread's CPU time
    bool failed = false;
    std::string error;

    double value(Criterion c) const noexcept;
};

struct BenchOptions {
    InitOptions init;
    RngEngine engine = RngEngine::mt19937_64;
    unsigned threads = 1;  // 0 = hardware concurrency
};

/// Random methods run `runs_random` times with seeds base_seed + r; the
/// deterministic ones run once with seed base_seed. Records come back ordered
/// by (dataset, method, seed) whatever the thread count.
std::vector<RunRecord> run_benchmark(std::span<const BenchDataset> datasets,
                                     std::span<const InitMethod> methods, std::size_t runs_random,
                                     std::uint64_t base_seed, const KMeansConfig& cfg,
                                     const BenchOptions& opts = {});

struct CellStats {
    double min = 0.0;
    double mean = 0.0;
    double stdev = 0.0;  // sample (n-1) form; 0 for a single run

    double get(Statistic s) const noexcept;
};

struct MethodStats {
    std::size_t runs = 0;
    std::size_t failures = 0;
    std::array<CellStats, kCriteria> criteria{};

    const CellStats& operator[](Criterion c) const noexcept {
        return criteria[static_cast<std::size_t>(c)];
    }
};

struct DatasetKey {
    int id = 0;
    std::string name;
};

/// MethodStats by (dataset, method). A cell is empty when every run failed.
struct StatsTable {
    std::vector<DatasetKey> datasets;
    std::vector<InitMethod> methods;
    std::vector<std::vector<std::optional<MethodStats>>> cells;  // [dataset][method]

    const std::optional<MethodStats>& at(std::size_t d, std::size_t m) const { return cells[d][m]; }
    std::optional<std::size_t> method_index(InitMethod m) const;
};

StatsTable compute_stats(std::span<const RunRecord> records, std::vector<DatasetKey> datasets,
                         std::vector<InitMethod> methods);

/// Ratio of each method's min/mean/stdev to the best one on the same dataset.
/// Stdev ratios exist for random methods only.
struct NormalizedTable {
    std::vector<DatasetKey> datasets;
    std::vector<InitMethod> methods;
    // [dataset][method][criterion][statistic]
    std::vector<std::vector<std::array<std::array<std::optional<double>, kStatistics>,
                                       kNormalizedCriteria>>>
        ratio;

    const std::optional<double>& at(std::size_t d, std::size_t m, Criterion c, Statistic s) const {
        return ratio[d][m][static_cast<std::size_t>(c)][static_cast<std::size_t>(s)];
    }
};

NormalizedTable normalize_criteria(const StatsTable& stats);

/// Mean over datasets of the normalized min and mean; median of the normalized stdev.
struct SummaryTable {
    std::vector<InitMethod> methods;
    // [method][statistic][criterion]
    std::vector<std::array<std::array<std::optional<double>, kNormalizedCriteria>, kStatistics>> value;

    const std::optional<double>& at(std::size_t m, Statistic s, Criterion c) const {
        return value[m][static_cast<std::size_t>(s)][static_cast<std::size_t>(c)];
    }
};

SummaryTable summarize(const NormalizedTable& normalized);

enum class CompareMode { rounded, exact };

struct Tally {
    int worse = 0;
    int same = 0;
    int better = 0;

    friend bool operator==(const Tally&, const Tally&) = default;
};

/// Per criterion, the number of datasets where a's mean is worse than (greater),
/// the same as, or better than b's. Rounded mode compares integer-rounded means.
std::array<Tally, kCriteria> relative_compare(const StatsTable& stats, InitMethod a, InitMethod b,
                                              CompareMode mode = CompareMode::rounded);

struct BoxPlotRow {
    InitMethod method = InitMethod::F;
    Criterion criterion = Criterion::initial_sse;
    Statistic statistic = Statistic::min;
    std::size_t count = 0;
    double min = 0.0, q1 = 0.0, median = 0.0, q3 = 0.0, max = 0.0, mean = 0.0;
};

/// Linear-interpolation quantile (0 <= q <= 1) of unsorted values.
double quantile(std::vector<double> values, double q);

std::vector<BoxPlotRow> box_plot_rows(const NormalizedTable& normalized);

struct Comparison {
    InitMethod a;
    InitMethod b;
    std::array<Tally, kCriteria> tally;
};

struct BenchReport {
    std::vector<RunRecord> records;
    StatsTable stats;
    NormalizedTable normalized;
    SummaryTable summary;
    std::vector<Comparison> comparisons;
    std::vector<BoxPlotRow> boxplots;
};

/// Builds every table from run records. Comparisons cover OV vs V and OP vs P
/// when those methods are present.
BenchReport build_report(std::vector<RunRecord> records, std::vector<DatasetKey> datasets,
                         std::vector<InitMethod> methods, CompareMode mode = CompareMode::rounded);

/// Writes the report tables, run log and box-plot data into `directory`.
/// Returns the paths written.
std::vector<std::filesystem::path> emit_report(const BenchReport& report,
                                               const std::filesystem::path& directory);

}  // namespace kinit

#endif  // KINIT_BENCH_HPP
