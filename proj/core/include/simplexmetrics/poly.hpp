#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "simplexmetrics/rational.hpp"

namespace simplexmetrics {

// Exponent vector of a monomial; length = number of variables.
using Exponents = std::vector<std::uint8_t>;

inline std::size_t exps_total_degree(const Exponents& e) {
    std::size_t d = 0;
    for (auto x : e) d += x;
    return d;
}

// Graded lexicographic: total degree first, then lex on exponents.
bool grlex_less(const Exponents& a, const Exponents& b);

// Sparse multivariate polynomial over Q in a fixed number of variables.
// Variable names are not stored here; callers keep a name table.
class Polynomial {
public:
    Polynomial() : nvars_(0) {}
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, Rational c);
    static Polynomial variable(std::size_t nvars, std::size_t idx);
    static Polynomial monomial(Exponents e, Rational c);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    std::size_t total_degree() const;  // 0 for the zero polynomial

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    bool operator==(const Polynomial& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    Polynomial pow(std::size_t e) const;

    // Full evaluation; assignment.size() must equal nvars().
    Rational eval(const std::vector<Rational>& assignment) const;

    void add_term(const Exponents& e, const Rational& c);

    std::string to_string(const std::vector<std::string>& names) const;

private:
    std::size_t nvars_;
    std::map<Exponents, Rational> terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

// Determinant of a square matrix of polynomials, by cofactor expansion.
// Intended for small matrices (<= 6x6). Empty matrix gives 1.
Polynomial det_poly(const std::vector<std::vector<Polynomial>>& m);

}  // namespace simplexmetrics
