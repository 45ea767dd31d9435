#include "simplexmetrics/multigraded.hpp"

#include <stdexcept>

namespace simplexmetrics {

MultiGradedElement::MultiGradedElement(std::size_t factors, std::size_t n_dim, Polynomial p)
    : factors_(factors), n_dim_(n_dim), poly_(std::move(p)) {
    if (poly_.nvars() != factors_ * n_dim_)
        throw std::invalid_argument("polynomial variable count does not match grading");
}

MultiGradedElement MultiGradedElement::operator+(const MultiGradedElement& o) const {
    return MultiGradedElement(factors_, n_dim_, poly_ + o.poly_);
}
MultiGradedElement MultiGradedElement::operator-(const MultiGradedElement& o) const {
    return MultiGradedElement(factors_, n_dim_, poly_ - o.poly_);
}
MultiGradedElement MultiGradedElement::operator*(const MultiGradedElement& o) const {
    return MultiGradedElement(factors_, n_dim_, poly_ * o.poly_);
}

std::vector<std::size_t> MultiGradedElement::multidegree_of(const Exponents& e) const {
    std::vector<std::size_t> md(factors_, 0);
    for (std::size_t f = 0; f < factors_; ++f)
        for (std::size_t i = 0; i < n_dim_; ++i) md[f] += e[var_index(f, i)];
    return md;
}

std::vector<MultiDegreeTerm> multidegree_terms(const MultiGradedElement& e) {
    std::vector<MultiDegreeTerm> out;
    for (const auto& [exps, c] : e.poly().terms()) {
        MultiDegreeTerm t;
        t.multidegree = e.multidegree_of(exps);
        t.total_degree = exps_total_degree(exps);
        out.push_back(std::move(t));
    }
    return out;
}

std::size_t min_total_degree(const MultiGradedElement& e) {
    std::size_t best = kDegreeInfinity;
    for (const auto& [exps, c] : e.poly().terms())
        best = std::min(best, exps_total_degree(exps));
    return best;
}

}  // namespace simplexmetrics
