#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "simplexmetrics/rational.hpp"

namespace simplexmetrics {

struct NonSquareError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotSymmetricError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotPositiveDefiniteError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dense row-major matrix of exact rationals. Immutable in spirit:
// operations return new values.
class RationalMatrix {
public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}
    RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_)
            throw DimensionMismatch("entry count does not match rows*cols");
    }

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    bool is_symmetric() const;

    bool operator==(const RationalMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

// Dense row-major binary64 matrix; entries must be finite.
class FloatMatrix {
public:
    FloatMatrix() : rows_(0), cols_(0) {}
    FloatMatrix(std::size_t rows, std::size_t cols);
    FloatMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    double& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

private:
    std::size_t rows_, cols_;
    std::vector<double> entries_;
};

// Exact determinant by Bareiss fraction-free elimination.
// The 0x0 matrix has determinant 1 (empty product).
Rational det_exact(const RationalMatrix& m);

RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix transpose(const RationalMatrix& m);

// Floating Cholesky; returns upper-triangular H with H^T H ~ g.
// Pivot test: pivot > tol * max diagonal of g.
FloatMatrix cholesky(const FloatMatrix& g, double tol = 1e-9);

// Exact Cholesky when every pivot square root is a perfect rational
// square; absent otherwise. Throws NotPositiveDefiniteError on a
// pivot <= 0.
std::optional<RationalMatrix> rational_cholesky_if_exact(const RationalMatrix& g);

}  // namespace simplexmetrics
