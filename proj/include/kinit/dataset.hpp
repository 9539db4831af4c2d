#ifndef KINIT_DATASET_HPP
#define KINIT_DATASET_HPP

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace kinit {

/// How to read a delimited text file. A delimiter of ' ' splits on runs of
/// whitespace; anything else splits on that exact character.
struct DatasetSchema {
    char delimiter = ',';
    std::optional<std::size_t> class_column;
    std::string missing_token = "?";
    bool has_header = false;
    std::vector<std::size_t> ignore_columns;
};

/// Immutable N x D matrix of finite doubles, stored row-major.
class Dataset {
public:
    Dataset(std::string name, std::size_t n, std::size_t d, std::vector<double> values,
            std::optional<std::vector<std::string>> labels = std::nullopt,
            std::vector<std::string> attribute_names = {});

    std::size_t n() const noexcept { return n_; }
    std::size_t d() const noexcept { return d_; }
    const std::string& name() const noexcept { return name_; }

    std::span<const double> row(std::size_t i) const noexcept {
        return {values_.data() + i * d_, d_};
    }
    double operator()(std::size_t i, std::size_t j) const noexcept { return values_[i * d_ + j]; }
    std::span<const double> values() const noexcept { return values_; }

    const std::optional<std::vector<std::string>>& labels() const noexcept { return labels_; }
    const std::vector<double>& attr_min() const noexcept { return attr_min_; }
    const std::vector<double>& attr_max() const noexcept { return attr_max_; }

    /// Column names from the header line; empty when the file had none.
    const std::vector<std::string>& attribute_names() const noexcept { return attribute_names_; }

    /// Copy with rows reordered so that row i of the result is row order[i] of this.
    Dataset permuted(std::span<const std::size_t> order) const;

private:
    std::string name_;
    std::size_t n_;
    std::size_t d_;
    std::vector<double> values_;
    std::optional<std::vector<std::string>> labels_;
    std::vector<std::string> attribute_names_;
    std::vector<double> attr_min_;
    std::vector<double> attr_max_;
};

Dataset load_delimited(std::istream& source, const DatasetSchema& schema,
                       std::string name = "dataset");
Dataset load_file(const std::filesystem::path& path, const DatasetSchema& schema);

/// Maps every attribute onto [0, 1]. Constant attributes become all zeros.
Dataset min_max_normalize(const Dataset& ds);

std::size_t class_count(const Dataset& ds);

/// One line of a benchmark manifest.
struct ManifestEntry {
    int id = 0;
    std::string name;
    std::filesystem::path path;
    DatasetSchema schema;
};

/// Reads a manifest: one dataset per line with tab/space separated fields
///   id name path delimiter class_column header ignore_columns
/// where delimiter is one of comma|tab|space|semicolon|whitespace, class_column
/// is a zero-based index or '-', header is yes|no and ignore_columns is a
/// comma list or '-'. Relative paths resolve against the manifest directory.
std::vector<ManifestEntry> load_manifest(const std::filesystem::path& path);

}  // namespace kinit

#endif  // KINIT_DATASET_HPP
