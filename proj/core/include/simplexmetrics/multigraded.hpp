#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "simplexmetrics/poly.hpp"

namespace simplexmetrics {

// Element of the k-fold tensor power of the free symmetric algebra on an
// n-dimensional space: a polynomial in k blocks of n variables, where the
// multidegree of a term is its per-block degree vector.
class MultiGradedElement {
public:
    MultiGradedElement(std::size_t factors, std::size_t n_dim)
        : factors_(factors), n_dim_(n_dim), poly_(factors * n_dim) {}
    MultiGradedElement(std::size_t factors, std::size_t n_dim, Polynomial p);

    std::size_t factors() const { return factors_; }
    std::size_t n_dim() const { return n_dim_; }
    const Polynomial& poly() const { return poly_; }
    bool is_zero() const { return poly_.is_zero(); }

    // variable index of coordinate i in tensor factor f
    std::size_t var_index(std::size_t f, std::size_t i) const { return f * n_dim_ + i; }

    MultiGradedElement operator+(const MultiGradedElement& o) const;
    MultiGradedElement operator-(const MultiGradedElement& o) const;
    MultiGradedElement operator*(const MultiGradedElement& o) const;

    std::vector<std::size_t> multidegree_of(const Exponents& e) const;

private:
    std::size_t factors_, n_dim_;
    Polynomial poly_;
};

struct MultiDegreeTerm {
    std::vector<std::size_t> multidegree;
    std::size_t total_degree;
};

std::vector<MultiDegreeTerm> multidegree_terms(const MultiGradedElement& e);

inline constexpr std::size_t kDegreeInfinity = std::numeric_limits<std::size_t>::max();

// Minimum total degree among nonzero terms; kDegreeInfinity for zero.
std::size_t min_total_degree(const MultiGradedElement& e);

}  // namespace simplexmetrics
