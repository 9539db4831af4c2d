// kinit: command-line front end for the k-means initialization toolkit.
//
//   kinit cluster --dataset iris --method OP
//   kinit bench   --methods all --runs 100 --output report/
//   kinit inspect --dataset wine
//   kinit trace   --dataset ruspini --method V --k 4 --no-normalize

#include "kinit/bench.hpp"
#include "kinit/dataset.hpp"
#include "kinit/error.hpp"
#include "kinit/init.hpp"
#include "kinit/lloyd.hpp"

#include <CLI11.hpp>

#include <sys/resource.h>

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace kinit;

namespace {

#ifndef KINIT_DEFAULT_DATA_DIR
#define KINIT_DEFAULT_DATA_DIR "data"
#endif

struct CliConfig {
    std::vector<std::string> datasets;
    std::string manifest;
    std::string method = "OP";
    std::string methods = "all";
    std::optional<std::size_t> k;
    std::optional<std::size_t> class_column;
    std::string delimiter = "comma";
    bool header = false;
    std::size_t runs = 100;
    std::uint64_t seed = 1;
    std::size_t bins = 256;
    double epsilon = 1e-6;
    int max_iters = 100;
    bool no_normalize = false;
    std::string output;
    std::string compare = "rounded";
    std::string engine = "mt19937_64";
    unsigned threads = 0;
};

fs::path data_dir() {
    if (const char* env = std::getenv("KINIT_DATA_DIR"); env && *env) return env;
    return KINIT_DEFAULT_DATA_DIR;
}

fs::path manifest_path(const CliConfig& cfg) {
    return cfg.manifest.empty() ? data_dir() / "manifest.tsv" : fs::path(cfg.manifest);
}

std::vector<ManifestEntry> try_manifest(const CliConfig& cfg) {
    const auto path = manifest_path(cfg);
    if (!cfg.manifest.empty() || fs::exists(path)) return load_manifest(path);
    return {};
}

struct Loaded {
    int id = 0;
    std::string name;
    Dataset raw;
    Dataset data;  // normalized unless --no-normalize
};

char delimiter_char(const std::string& name) {
    if (name == "comma") return ',';
    if (name == "tab") return '\t';
    if (name == "semicolon") return ';';
    if (name == "whitespace" || name == "space") return ' ';
    throw DomainError("unknown delimiter '" + name + "'");
}

Loaded load(const std::string& source, const CliConfig& cfg, const std::vector<ManifestEntry>& manifest) {
    for (const auto& e : manifest) {
        if (e.name == source || std::to_string(e.id) == source) {
            auto schema = e.schema;
            if (cfg.class_column) schema.class_column = cfg.class_column;
            auto raw = load_file(e.path, schema);
            auto data = cfg.no_normalize ? raw : min_max_normalize(raw);
            return {e.id, e.name, std::move(raw), std::move(data)};
        }
    }
    if (!fs::exists(source)) throw IoError("no dataset named '" + source + "' in " +
                                         manifest_path(cfg).string() + " and no such file");
    DatasetSchema schema;
    schema.delimiter = delimiter_char(cfg.delimiter);
    schema.class_column = cfg.class_column;
    schema.has_header = cfg.header;
    auto raw = load_file(source, schema);
    auto data = cfg.no_normalize ? raw : min_max_normalize(raw);
    const auto name = fs::path(source).stem().string();
    return {0, name, std::move(raw), std::move(data)};
}

std::size_t choose_k(const Loaded& ds, const CliConfig& cfg) {
    if (cfg.k) return *cfg.k;
    if (!ds.raw.labels())
        throw MissingLabels();
    return class_count(ds.raw);
}

std::string axis_label(const Dataset& ds, const SplitRecord& s) {
    if (s.axis_rule == AxisRule::variance) {
        if (!ds.attribute_names().empty()) {
            std::string name = ds.attribute_names()[s.axis];
            for (char& ch : name) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
            return name;
        }
        return "A" + std::to_string(s.axis);
    }
    std::string out = "PC(";
    char buf[32];
    for (std::size_t j = 0; j < s.direction.size(); ++j) {
        std::snprintf(buf, sizeof buf, "%s%.4f", j ? "," : "", s.direction[j]);
        out += buf;
    }
    return out + ")";
}

std::int64_t cpu_us() {
    rusage usage{};
    getrusage(RUSAGE_SELF, &usage);
    return static_cast<std::int64_t>(usage.ru_utime.tv_sec + usage.ru_stime.tv_sec) * 1000000 +
           usage.ru_utime.tv_usec + usage.ru_stime.tv_usec;
}

InitOptions init_options(const CliConfig& cfg) {
    InitOptions opts;
    opts.bins = cfg.bins;
    return opts;
}

KMeansConfig kmeans_config(const CliConfig& cfg) {
    KMeansConfig k;
    k.max_iters = cfg.max_iters;
    k.epsilon = cfg.epsilon;
    return k;
}

int cmd_cluster(const CliConfig& cfg) {
    if (cfg.datasets.size() != 1) throw DomainError("cluster takes exactly one --dataset");
    const auto method = parse_method(cfg.method);
    const auto ds = load(cfg.datasets.front(), cfg, try_manifest(cfg));
    const auto k = choose_k(ds, cfg);

    const auto start = cpu_us();
    SeededRng rng(cfg.seed, parse_engine(cfg.engine));
    const auto centers = initialize(ds.data, method, k, rng, init_options(cfg));
    const auto result = run_kmeans(ds.data, centers, kmeans_config(cfg));
    const auto cpu_ms = (cpu_us() - start) / 1000;

    std::printf("dataset=%s method=%s n=%zu d=%zu k=%zu seed=%llu\n", ds.name.c_str(),
                std::string(to_string(method)).c_str(), ds.data.n(), ds.data.d(), k,
                static_cast<unsigned long long>(cfg.seed));
    std::printf("initial_sse=%.6f\n", result.initial_sse);
    std::printf("final_sse=%.6f\n", result.final_sse);
    std::printf("iterations=%d\n", result.iterations);
    std::printf("cpu_ms=%lld\n", static_cast<long long>(cpu_ms));
    return 0;
}

int cmd_inspect(const CliConfig& cfg) {
    const auto manifest = try_manifest(cfg);
    if (cfg.datasets.empty()) throw DomainError("inspect needs --dataset");
    for (const auto& source : cfg.datasets) {
        const auto ds = load(source, cfg, manifest);
        const auto& raw = ds.raw;
        std::printf("%s: N=%zu D=%zu K'=%s\n", ds.name.c_str(), raw.n(), raw.d(),
                    raw.labels() ? std::to_string(class_count(raw)).c_str() : "-");
        for (std::size_t j = 0; j < raw.d(); ++j) {
            const std::string name =
                raw.attribute_names().empty() ? "A" + std::to_string(j) : raw.attribute_names()[j];
            std::printf("  %-12s min=%.6g max=%.6g\n", name.c_str(), raw.attr_min()[j], raw.attr_max()[j]);
        }
    }
    return 0;
}

int cmd_trace(const CliConfig& cfg) {
    if (cfg.datasets.size() != 1) throw DomainError("trace takes exactly one --dataset");
    const auto method = parse_method(cfg.method);
    AxisRule axis;
    SplitRule split;
    switch (method) {
        case InitMethod::V: axis = AxisRule::variance; split = SplitRule::mean; break;
        case InitMethod::P: axis = AxisRule::pca; split = SplitRule::mean; break;
        case InitMethod::OV: axis = AxisRule::variance; split = SplitRule::otsu; break;
        case InitMethod::OP: axis = AxisRule::pca; split = SplitRule::otsu; break;
        default: throw DomainError("trace needs a hierarchical method (V, P, OV, OP)");
    }
    const auto ds = load(cfg.datasets.front(), cfg, try_manifest(cfg));
    const auto k = choose_k(ds, cfg);
    auto opts = init_options(cfg);
    opts.record_splits = true;
    const auto result = hierarchical_init(ds.data, k, axis, split, opts);

    std::size_t i = 0;
    for (const auto& s : result.splits) {
        std::printf("split %zu: node %zu (n=%zu, sse=%.6f) %s @ %.6f", ++i, s.node_order, s.node_size,
                    s.parent_sse, axis_label(ds.data, s).c_str(), s.threshold);
        if (s.split_rule == SplitRule::otsu && s.otsu_bin)
            std::printf(" [otsu bin %zu, mean bin %zu]", *s.otsu_bin, s.mean_bin);
        std::printf(" -> left n=%zu sse=%.6f, right n=%zu sse=%.6f\n", s.left_size, s.left_sse,
                    s.right_size, s.right_sse);
    }
    for (std::size_t c = 0; c < result.centers.k(); ++c) {
        std::printf("center %zu:", c);
        for (double v : result.centers.center(c)) std::printf(" %.6f", v);
        std::printf("\n");
    }
    return 0;
}

int cmd_bench(const CliConfig& cfg) {
    const auto manifest = try_manifest(cfg);
    std::vector<std::string> specs = cfg.datasets;
    if (specs.empty()) {
        for (const auto& e : manifest)
            if (e.schema.class_column) specs.push_back(e.name);
        if (specs.empty()) throw DomainError("no labelled datasets in " + manifest_path(cfg).string());
    }
    if (cfg.output.empty()) throw DomainError("bench needs --output");

    std::vector<BenchDataset> datasets;
    std::vector<DatasetKey> keys;
    for (const auto& source : specs) {
        auto ds = load(source, cfg, manifest);
        const auto k = choose_k(ds, cfg);
        keys.push_back({ds.id, ds.name});
        datasets.push_back({ds.id, ds.name, std::move(ds.data), k});
    }
    const auto methods = parse_method_list(cfg.methods);

    BenchOptions opts;
    opts.init = init_options(cfg);
    opts.engine = parse_engine(cfg.engine);
    opts.threads = cfg.threads;
    auto records = run_benchmark(datasets, methods, cfg.runs, cfg.seed, kmeans_config(cfg), opts);

    const auto mode = cfg.compare == "exact" ? CompareMode::exact : CompareMode::rounded;
    const auto report = build_report(std::move(records), keys, methods, mode);
    const auto files = emit_report(report, cfg.output);

    std::size_t failed = 0;
    for (const auto& r : report.records)
        if (r.failed) {
            ++failed;
            std::fprintf(stderr, "run failed: dataset=%s method=%s seed=%llu: %s\n", r.dataset.c_str(),
                         std::string(to_string(r.method)).c_str(),
                         static_cast<unsigned long long>(r.seed), r.error.c_str());
        }
    std::printf("%zu datasets, %zu runs (%zu failed)\n", datasets.size(), report.records.size(), failed);
    for (const auto& cmp : report.comparisons) {
        std::printf("%s vs %s (worse/same/better):", std::string(to_string(cmp.a)).c_str(),
                    std::string(to_string(cmp.b)).c_str());
        for (std::size_t c = 0; c < kNormalizedCriteria; ++c)
            std::printf(" %s %d/%d/%d", std::string(to_string(static_cast<Criterion>(c))).c_str(),
                        cmp.tally[c].worse, cmp.tally[c].same, cmp.tally[c].better);
        std::printf("\n");
    }
    for (const auto& f : files) std::printf("wrote %s\n", f.string().c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-means initialization toolkit"};
    app.require_subcommand(1);
    CliConfig cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--dataset,-d", cfg.datasets, "Manifest name/id or file path");
        sub->add_option("--manifest", cfg.manifest, "Dataset manifest (default $KINIT_DATA_DIR/manifest.tsv)");
        sub->add_option("--class-column", cfg.class_column, "Zero-based class column for plain files");
        sub->add_option("--delimiter", cfg.delimiter, "comma|tab|semicolon|whitespace for plain files");
        sub->add_flag("--header", cfg.header, "Plain file has a header line");
        sub->add_flag("--no-normalize", cfg.no_normalize, "Skip min-max normalization");
        sub->add_option("--bins,-L", cfg.bins, "Histogram bins for Otsu splits")->check(CLI::Range(2, 1 << 20));
    };
    auto add_k = [&](CLI::App* sub) {
        sub->add_option("--k,-k", cfg.k, "Number of clusters (default: number of classes)")
            ->check(CLI::PositiveNumber);
    };
    auto add_run = [&](CLI::App* sub) {
        sub->add_option("--seed", cfg.seed, "Seed (base seed for bench)");
        sub->add_option("--epsilon", cfg.epsilon, "Relative SSE improvement threshold")->check(CLI::NonNegativeNumber);
        sub->add_option("--max-iters", cfg.max_iters, "Iteration cap")->check(CLI::PositiveNumber);
        sub->add_option("--engine", cfg.engine, "mt19937|mt19937_64");
    };

    auto* cluster = app.add_subcommand("cluster", "Run one initializer followed by k-means");
    add_common(cluster);
    add_k(cluster);
    add_run(cluster);
    cluster->add_option("--method,-m", cfg.method, "F|M|K|X|V|P|OV|OP");

    auto* bench = app.add_subcommand("bench", "Run the benchmark protocol and write a report");
    add_common(bench);
    add_k(bench);
    add_run(bench);
    bench->add_option("--methods", cfg.methods, "Comma list of methods or 'all'");
    bench->add_option("--runs", cfg.runs, "Runs per random method")->check(CLI::PositiveNumber);
    bench->add_option("--output,-o", cfg.output, "Report directory")->required();
    bench->add_option("--compare", cfg.compare, "Relative comparison mode")
        ->check(CLI::IsMember({"rounded", "exact"}));
    bench->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");

    auto* inspect = app.add_subcommand("inspect", "Print N, D, K' and attribute ranges");
    add_common(inspect);

    auto* trace = app.add_subcommand("trace", "Print the split sequence of a hierarchical method");
    add_common(trace);
    add_k(trace);
    trace->add_option("--method,-m", cfg.method, "V|P|OV|OP");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cfg.k && cfg.class_column)
            throw DomainError("--k and --class-column are mutually exclusive");
        if (*cluster) return cmd_cluster(cfg);
        if (*bench) return cmd_bench(cfg);
        if (*inspect) return cmd_inspect(cfg);
        if (*trace) return cmd_trace(cfg);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "kinit: %s\n", e.what());
        return 1;
    }
    return 1;
}
