#include "simplexmetrics/matrix.hpp"

#include <cmath>
#include <utility>

namespace simplexmetrics {

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool RationalMatrix::is_symmetric() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

FloatMatrix::FloatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, 0.0) {}

FloatMatrix::FloatMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw DimensionMismatch("entry count does not match rows*cols");
    for (double v : entries_)
        if (!std::isfinite(v)) throw std::invalid_argument("non-finite matrix entry");
}

Rational det_exact(const RationalMatrix& m) {
    if (!m.square()) throw NonSquareError("det_exact requires a square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;  // empty product

    RationalMatrix a = m;
    Rational prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Rational v = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = v / prev;  // exact division (Bareiss)
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    Rational d = a.at(n - 1, n - 1);
    return sign < 0 ? Rational(-d) : d;
}

RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("mat_mul: inner dimensions differ");
    RationalMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

RationalMatrix transpose(const RationalMatrix& m) {
    RationalMatrix t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            t.at(j, i) = m.at(i, j);
    return t;
}

FloatMatrix cholesky(const FloatMatrix& g, double tol) {
    if (g.rows() != g.cols()) throw NonSquareError("cholesky requires a square matrix");
    const std::size_t n = g.rows();
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            scale = std::max(scale, std::abs(g.at(i, j)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(g.at(i, j) - g.at(j, i)) > tol * (1.0 + scale))
                throw NotSymmetricError("cholesky: matrix not symmetric within tol");

    double max_diag = 0.0;
    for (std::size_t i = 0; i < n; ++i) max_diag = std::max(max_diag, std::abs(g.at(i, i)));
    if (max_diag == 0.0) max_diag = 1.0;

    FloatMatrix h(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double d = g.at(j, j);
        for (std::size_t k = 0; k < j; ++k) d -= h.at(k, j) * h.at(k, j);
        if (d <= tol * max_diag)
            throw NotPositiveDefiniteError("cholesky: non-positive pivot");
        const double hjj = std::sqrt(d);
        h.at(j, j) = hjj;
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = g.at(j, i);
            for (std::size_t k = 0; k < j; ++k) s -= h.at(k, j) * h.at(k, i);
            h.at(j, i) = s / hjj;
        }
    }
    return h;
}

std::optional<RationalMatrix> rational_cholesky_if_exact(const RationalMatrix& g) {
    if (!g.square()) throw NonSquareError("rational_cholesky_if_exact requires square");
    if (!g.is_symmetric()) throw NotSymmetricError("rational_cholesky_if_exact requires symmetric");
    const std::size_t n = g.rows();
    RationalMatrix h(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Rational d = g.at(j, j);
        for (std::size_t k = 0; k < j; ++k) d -= h.at(k, j) * h.at(k, j);
        if (sgn(d) <= 0)
            throw NotPositiveDefiniteError("rational_cholesky_if_exact: non-positive pivot");
        Rational hjj;
        if (!rational_sqrt_exact(d, hjj)) return std::nullopt;
        h.at(j, j) = hjj;
        for (std::size_t i = j + 1; i < n; ++i) {
            Rational s = g.at(j, i);
            for (std::size_t k = 0; k < j; ++k) s -= h.at(k, j) * h.at(k, i);
            h.at(j, i) = s / hjj;
        }
    }
    return h;
}

}  // namespace simplexmetrics
