#include <doctest.h>

#include "simplexmetrics/multigraded.hpp"

using namespace simplexmetrics;

namespace {

MultiGradedElement mono(std::size_t k, std::size_t n, const std::vector<std::size_t>& degs) {
    // x_{f,0}^deg[f] in each factor
    Exponents e(k * n, 0);
    for (std::size_t f = 0; f < k; ++f) e[f * n] = static_cast<std::uint8_t>(degs[f]);
    Polynomial p(k * n);
    p.add_term(e, Rational(1));
    return MultiGradedElement(k, n, std::move(p));
}

}  // namespace

TEST_CASE("multidegree bookkeeping") {
    MultiGradedElement a = mono(2, 2, {1, 1});
    auto terms = multidegree_terms(a);
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].multidegree == std::vector<std::size_t>{1, 1});
    CHECK(terms[0].total_degree == 2);

    // product of (1,...,1) and (1,...,1+p,...,1)
    MultiGradedElement b = mono(3, 1, {1, 1, 1});
    MultiGradedElement c = mono(3, 1, {1, 3, 1});  // p = 2 in the middle slot
    auto prod = multidegree_terms(b * c);
    REQUIRE(prod.size() == 1);
    CHECK(prod[0].multidegree == std::vector<std::size_t>{2, 4, 2});

    CHECK(multidegree_terms(MultiGradedElement(2, 2)).empty());
}

TEST_CASE("min_total_degree") {
    CHECK(min_total_degree(mono(2, 2, {1, 1})) == 2);
    CHECK(min_total_degree(MultiGradedElement(2, 2)) == kDegreeInfinity);

    // (omega+theta)^2 - omega^2 with k = 2 and theta of total degree 3
    MultiGradedElement omega = mono(2, 2, {1, 1});
    MultiGradedElement theta = mono(2, 2, {1, 2});
    MultiGradedElement sum = omega + theta;
    MultiGradedElement diff = sum * sum - omega * omega;
    CHECK(min_total_degree(diff) >= 5);

    MultiGradedElement zero_theta = omega + MultiGradedElement(2, 2);
    CHECK((zero_theta * zero_theta - omega * omega).is_zero());
}

TEST_CASE("arithmetic sanity") {
    MultiGradedElement a = mono(2, 2, {1, 1});
    CHECK((a - a).is_zero());
    CHECK(min_total_degree(a + a) == 2);
    CHECK(a.var_index(1, 1) == 3);
}
