#include "kinit/dataset.hpp"

#include "kinit/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace kinit {

Dataset::Dataset(std::string name, std::size_t n, std::size_t d, std::vector<double> values,
                 std::optional<std::vector<std::string>> labels,
                 std::vector<std::string> attribute_names)
    : name_(std::move(name)),
      n_(n),
      d_(d),
      values_(std::move(values)),
      labels_(std::move(labels)),
      attribute_names_(std::move(attribute_names)) {
    if (n_ == 0) throw EmptyDataset();
    if (d_ == 0) throw DimensionError("dataset needs at least one attribute");
    if (values_.size() != n_ * d_) throw DimensionError("value count does not match n*d");
    if (labels_ && labels_->size() != n_) throw DimensionError("label count does not match n");
    if (!attribute_names_.empty() && attribute_names_.size() != d_)
        throw DimensionError("attribute name count does not match d");

    attr_min_.assign(values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(d_));
    attr_max_ = attr_min_;
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < d_; ++j) {
            const double v = values_[i * d_ + j];
            if (!std::isfinite(v)) throw DomainError("non-finite value in dataset");
            attr_min_[j] = std::min(attr_min_[j], v);
            attr_max_[j] = std::max(attr_max_[j], v);
        }
    }
}

Dataset Dataset::permuted(std::span<const std::size_t> order) const {
    if (order.size() != n_) throw DimensionError("permutation length does not match n");
    std::vector<double> values;
    values.reserve(values_.size());
    std::optional<std::vector<std::string>> labels;
    if (labels_) labels.emplace();
    for (std::size_t src : order) {
        auto r = row(src);
        values.insert(values.end(), r.begin(), r.end());
        if (labels) labels->push_back((*labels_)[src]);
    }
    return Dataset(name_, n_, d_, std::move(values), std::move(labels), attribute_names_);
}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line, char delimiter) {
    std::vector<std::string_view> out;
    if (delimiter == ' ') {
        std::size_t pos = 0;
        while (pos < line.size()) {
            pos = line.find_first_not_of(" \t", pos);
            if (pos == std::string_view::npos) break;
            auto end = line.find_first_of(" \t", pos);
            if (end == std::string_view::npos) end = line.size();
            out.push_back(line.substr(pos, end - pos));
            pos = end;
        }
        return out;
    }
    std::size_t start = 0;
    while (true) {
        const auto end = line.find(delimiter, start);
        out.push_back(trim(line.substr(start, end == std::string_view::npos ? end : end - start)));
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return out;
}

std::optional<double> parse_real(std::string_view field) {
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    double value = 0.0;
    const auto* end = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (ec != std::errc() || ptr != end || !std::isfinite(value)) return std::nullopt;
    return value;
}

}  // namespace

Dataset load_delimited(std::istream& source, const DatasetSchema& schema, std::string name) {
    const std::set<std::size_t> ignored(schema.ignore_columns.begin(), schema.ignore_columns.end());
    std::vector<double> values;
    std::vector<std::string> labels;
    std::vector<std::string> header;
    std::size_t columns = 0;
    std::size_t d = 0;
    std::size_t n = 0;
    std::size_t line_no = 0;
    bool header_pending = schema.has_header;

    auto is_attribute = [&](std::size_t c) {
        return !ignored.contains(c) && !(schema.class_column && *schema.class_column == c);
    };

    std::string line;
    std::vector<double> row;
    while (std::getline(source, line)) {
        ++line_no;
        const auto content = trim(line);
        if (content.empty()) continue;
        const auto fields = split_fields(content, schema.delimiter);

        if (columns == 0) {
            columns = fields.size();
            if (schema.class_column && *schema.class_column >= columns)
                throw ParseError(line_no, "class column " + std::to_string(*schema.class_column) +
                                              " out of range");
            for (std::size_t c = 0; c < columns; ++c)
                if (is_attribute(c)) ++d;
            if (d == 0) throw ParseError(line_no, "no attribute columns");
        } else if (fields.size() != columns) {
            throw ParseError(line_no, "expected " + std::to_string(columns) + " fields, found " +
                                          std::to_string(fields.size()));
        }

        if (header_pending) {
            header_pending = false;
            for (std::size_t c = 0; c < columns; ++c) {
                if (!is_attribute(c)) continue;
                std::string h(fields[c]);
                std::erase(h, '"');
                header.push_back(std::move(h));
            }
            continue;
        }

        const bool incomplete = std::any_of(fields.begin(), fields.end(), [&](std::string_view f) {
            return f == schema.missing_token;
        });
        if (incomplete) continue;

        row.clear();
        for (std::size_t c = 0; c < columns; ++c) {
            if (!is_attribute(c)) continue;
            auto v = parse_real(fields[c]);
            if (!v)
                throw ParseError(line_no, "non-numeric field '" + std::string(fields[c]) +
                                              "' in column " + std::to_string(c));
            row.push_back(*v);
        }
        values.insert(values.end(), row.begin(), row.end());
        if (schema.class_column) labels.emplace_back(fields[*schema.class_column]);
        ++n;
    }

    if (n == 0) throw EmptyDataset();
    std::optional<std::vector<std::string>> label_opt;
    if (schema.class_column) label_opt = std::move(labels);
    return Dataset(std::move(name), n, d, std::move(values), std::move(label_opt), std::move(header));
}

Dataset load_file(const std::filesystem::path& path, const DatasetSchema& schema) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    return load_delimited(in, schema, path.stem().string());
}

Dataset min_max_normalize(const Dataset& ds) {
    const std::size_t d = ds.d();
    std::vector<double> values(ds.values().begin(), ds.values().end());
    const auto& lo = ds.attr_min();
    const auto& hi = ds.attr_max();
    for (std::size_t i = 0; i < ds.n(); ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            double& v = values[i * d + j];
            const double range = hi[j] - lo[j];
            v = range > 0.0 ? (v - lo[j]) / range : 0.0;
        }
    }
    return Dataset(ds.name(), ds.n(), d, std::move(values), ds.labels(), ds.attribute_names());
}

std::size_t class_count(const Dataset& ds) {
    if (!ds.labels()) throw MissingLabels();
    const std::set<std::string> distinct(ds.labels()->begin(), ds.labels()->end());
    return distinct.size();
}

namespace {

char parse_delimiter(const std::string& token, std::size_t line_no) {
    if (token == "comma" || token == ",") return ',';
    if (token == "tab") return '\t';
    if (token == "semicolon" || token == ";") return ';';
    if (token == "space" || token == "whitespace") return ' ';
    throw ParseError(line_no, "unknown delimiter '" + token + "'");
}

std::size_t parse_index(const std::string& token, std::size_t line_no) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError(line_no, "bad column index '" + token + "'");
    return value;
}

}  // namespace

std::vector<ManifestEntry> load_manifest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open manifest " + path.string());
    const auto base = path.parent_path();

    std::vector<ManifestEntry> entries;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto content = trim(line);
        if (content.empty() || content.front() == '#') continue;
        std::istringstream fields{std::string(content)};
        std::string id, name, file, delim, cls, header, ignore;
        if (!(fields >> id >> name >> file >> delim >> cls >> header >> ignore))
            throw ParseError(line_no, "manifest lines need 7 fields");

        ManifestEntry e;
        e.id = static_cast<int>(parse_index(id, line_no));
        e.name = name;
        e.path = std::filesystem::path(file).is_absolute() ? std::filesystem::path(file) : base / file;
        e.schema.delimiter = parse_delimiter(delim, line_no);
        if (cls != "-") e.schema.class_column = parse_index(cls, line_no);
        if (header != "yes" && header != "no")
            throw ParseError(line_no, "header field must be yes or no");
        e.schema.has_header = header == "yes";
        if (ignore != "-") {
            std::istringstream list(ignore);
            std::string item;
            while (std::getline(list, item, ','))
                e.schema.ignore_columns.push_back(parse_index(item, line_no));
        }
        entries.push_back(std::move(e));
    }
    return entries;
}

}  // namespace kinit
