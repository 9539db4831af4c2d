#include "kinit/dataset.hpp"
#include "kinit/error.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

using namespace kinit;

namespace {

Dataset parse(const std::string& text, DatasetSchema schema = {}) {
    std::istringstream in(text);
    return load_delimited(in, schema);
}

std::vector<double> column(const Dataset& ds, std::size_t j) {
    std::vector<double> out;
    for (std::size_t i = 0; i < ds.n(); ++i) out.push_back(ds(i, j));
    return out;
}

}  // namespace

TEST_CASE("load_delimited splits off the class column") {
    DatasetSchema schema;
    schema.class_column = 2;
    const auto ds = parse("1,2,a\n3,4,b\n5,6,a", schema);
    CHECK(ds.n() == 3);
    CHECK(ds.d() == 2);
    REQUIRE(ds.labels());
    CHECK(*ds.labels() == std::vector<std::string>{"a", "b", "a"});
    CHECK(ds(2, 1) == 6.0);
    CHECK(ds.attr_min() == std::vector<double>{1, 2});
    CHECK(ds.attr_max() == std::vector<double>{5, 6});
}

TEST_CASE("rows holding the missing token are dropped") {
    const auto ds = parse("1,2,3\n1,?,3\n4,5,6\n");
    CHECK(ds.n() == 2);
    CHECK(ds(1, 0) == 4.0);
}

TEST_CASE("whitespace delimiter, header and ignored columns") {
    DatasetSchema schema;
    schema.delimiter = ' ';
    schema.has_header = true;
    schema.ignore_columns = {0};
    const auto ds = parse("id  x   y\n 7  1.5 -2\n8\t2.5\t+3e1\n\n", schema);
    CHECK(ds.n() == 2);
    CHECK(ds.d() == 2);
    CHECK(ds.attribute_names() == std::vector<std::string>{"x", "y"});
    CHECK(ds(1, 1) == 30.0);
}

TEST_CASE("parse errors carry the line number") {
    SUBCASE("non-numeric field") {
        try {
            parse("1,2\n3,abc\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
        }
    }
    SUBCASE("ragged row") {
        try {
            parse("1,2\n3,4\n5,6,7\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 3);
        }
    }
    SUBCASE("class column out of range") {
        DatasetSchema schema;
        schema.class_column = 5;
        CHECK_THROWS_AS(parse("1,2\n", schema), ParseError);
    }
    SUBCASE("non-finite value") { CHECK_THROWS_AS(parse("1,inf\n"), ParseError); }
}

TEST_CASE("no retained rows is an EmptyDataset") {
    CHECK_THROWS_AS(parse(""), EmptyDataset);
    CHECK_THROWS_AS(parse("1,?\n?,2\n"), EmptyDataset);
}

TEST_CASE("min_max_normalize maps each attribute onto [0, 1]") {
    const auto ds = testing::make_dataset(3, {0, 7, -1, 5, 7, 0, 10, 7, 3});
    const auto norm = min_max_normalize(ds);
    CHECK(column(norm, 0) == std::vector<double>{0, 0.5, 1});
    CHECK(column(norm, 1) == std::vector<double>{0, 0, 0});  // constant column
    CHECK(column(norm, 2) == std::vector<double>{0, 0.25, 1});
    for (std::size_t j = 0; j < 3; ++j) {
        CHECK(norm.attr_min()[j] == 0.0);
        CHECK(norm.attr_max()[j] <= 1.0);
    }
}

TEST_CASE("normalization is idempotent and preserves per-attribute order") {
    std::mt19937_64 gen(7);
    for (int trial = 0; trial < 50; ++trial) {
        const auto ds = testing::random_dataset(gen, 1 + gen() % 40, 1 + gen() % 6);
        const auto once = min_max_normalize(ds);
        const auto twice = min_max_normalize(once);
        REQUIRE(std::equal(once.values().begin(), once.values().end(), twice.values().begin()));
        for (std::size_t j = 0; j < ds.d(); ++j)
            for (std::size_t a = 0; a < ds.n(); ++a)
                for (std::size_t b = 0; b < ds.n(); ++b)
                    if (ds(a, j) < ds(b, j)) REQUIRE(once(a, j) <= once(b, j));
    }
}

TEST_CASE("loading the same bytes twice yields the same dataset") {
    const std::string text = "0.1,0.2,x\n0.3,0.4,y\n";
    DatasetSchema schema;
    schema.class_column = 2;
    const auto a = min_max_normalize(parse(text, schema));
    const auto b = min_max_normalize(parse(text, schema));
    CHECK(std::equal(a.values().begin(), a.values().end(), b.values().begin()));
    CHECK(a.labels() == b.labels());
}

TEST_CASE("class_count") {
    DatasetSchema schema;
    schema.class_column = 1;
    CHECK(class_count(parse("1,a\n2,a\n", schema)) == 1);
    CHECK(class_count(parse("1,a\n2,b\n3,c\n4,a\n", schema)) == 3);
    CHECK_THROWS_AS(class_count(parse("1,2\n")), MissingLabels);
}

TEST_CASE("bundled datasets have the expected shapes") {
    const auto manifest = load_manifest(testing::data_dir() / "manifest.tsv");
    REQUIRE(manifest.size() >= 5);

    const auto iris = testing::load_reference("iris", false);
    CHECK(iris.n() == 150);
    CHECK(iris.d() == 4);
    CHECK(class_count(iris) == 3);

    const auto bcw = testing::load_reference("breast-cancer-wisconsin", false);
    CHECK(bcw.n() == 683);
    CHECK(bcw.d() == 9);
    CHECK(class_count(bcw) == 2);

    const auto wine = testing::load_reference("wine", false);
    CHECK(wine.n() == 178);
    CHECK(wine.d() == 13);
    CHECK(class_count(wine) == 3);

    const auto glass = testing::load_reference("glass", false);
    CHECK(glass.n() == 214);
    CHECK(glass.d() == 9);
    CHECK(class_count(glass) == 6);

    const auto ruspini = testing::load_reference("ruspini", false);
    CHECK(ruspini.n() == 75);
    CHECK(ruspini.d() == 2);
    CHECK_FALSE(ruspini.labels());
}

TEST_CASE("manifest parsing") {
    const auto dir = std::filesystem::temp_directory_path() / "kinit_manifest_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "m.tsv";
    {
        std::ofstream out(path);
        out << "# comment\n3 foo foo.txt whitespace - yes 0,2\n";
    }
    const auto entries = load_manifest(path);
    REQUIRE(entries.size() == 1);
    CHECK(entries[0].id == 3);
    CHECK(entries[0].path == dir / "foo.txt");
    CHECK(entries[0].schema.delimiter == ' ');
    CHECK_FALSE(entries[0].schema.class_column);
    CHECK(entries[0].schema.has_header);
    CHECK(entries[0].schema.ignore_columns == std::vector<std::size_t>{0, 2});

    {
        std::ofstream out(path);
        out << "1 foo foo.txt pipe - no -\n";
    }
    CHECK_THROWS_AS(load_manifest(path), ParseError);
    CHECK_THROWS_AS(load_manifest(dir / "missing.tsv"), IoError);
}
