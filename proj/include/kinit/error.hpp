#ifndef KINIT_ERROR_HPP
#define KINIT_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kinit {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class EmptyDataset : public Error {
public:
    EmptyDataset() : Error("dataset has no complete rows") {}
};

class MissingLabels : public Error {
public:
    MissingLabels() : Error("dataset has no class labels") {}
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class DegenerateCovariance : public Error {
public:
    DegenerateCovariance() : Error("covariance matrix is zero") {}
};

class DegenerateRange : public Error {
public:
    DegenerateRange() : Error("projected values have zero range") {}
};

class DegenerateHistogram : public Error {
public:
    DegenerateHistogram() : Error("histogram has fewer than two nonempty bins") {}
};

class TooManyClusters : public Error {
public:
    TooManyClusters(std::size_t k, std::size_t n)
        : Error("k=" + std::to_string(k) + " exceeds point count " + std::to_string(n)) {}
};

class UnsplittableData : public Error {
public:
    explicit UnsplittableData(std::size_t leaves)
        : Error("no splittable cluster left after " + std::to_string(leaves) + " leaves"),
          leaves_(leaves) {}
    std::size_t leaves() const noexcept { return leaves_; }

private:
    std::size_t leaves_;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace kinit

#endif  // KINIT_ERROR_HPP
