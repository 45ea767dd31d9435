#include "simplexmetrics/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace simplexmetrics {

bool grlex_less(const Exponents& a, const Exponents& b) {
    const std::size_t da = exps_total_degree(a), db = exps_total_degree(b);
    if (da != db) return da < db;
    return a < b;
}

Polynomial Polynomial::constant(std::size_t nvars, Rational c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_.emplace(Exponents(nvars, 0), std::move(c));
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t idx) {
    if (idx >= nvars) throw std::out_of_range("variable index out of range");
    Polynomial p(nvars);
    Exponents e(nvars, 0);
    e[idx] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

Polynomial Polynomial::monomial(Exponents e, Rational c) {
    Polynomial p(e.size());
    if (c != 0) p.terms_.emplace(std::move(e), std::move(c));
    return p;
}

std::size_t Polynomial::total_degree() const {
    std::size_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, exps_total_degree(e));
    return d;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial variable counts differ");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial variable counts differ");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    r -= o;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial variable counts differ");
    Polynomial r(nvars_);
    Exponents e(nvars_, 0);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, t] : terms_) r.terms_.emplace(e, t * c);
    return r;
}

Polynomial Polynomial::pow(std::size_t e) const {
    Polynomial r = Polynomial::constant(nvars_, 1);
    for (std::size_t i = 0; i < e; ++i) r = r * *this;
    return r;
}

Rational Polynomial::eval(const std::vector<Rational>& assignment) const {
    if (assignment.size() != nvars_)
        throw std::invalid_argument("assignment length does not match variable count");
    Rational sum(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            for (std::uint8_t p = 0; p < e[i]; ++p) t *= assignment[i];
        sum += t;
    }
    return sum;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << rational_to_string(c);
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            os << "*" << (i < names.size() ? names[i] : "v" + std::to_string(i));
            if (e[i] > 1) os << "^" << int(e[i]);
        }
    }
    return os.str();
}

Polynomial det_poly(const std::vector<std::vector<Polynomial>>& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("det_poly: matrix not square");
    if (n == 0) return Polynomial::constant(0, 1);
    const std::size_t nv = m[0][0].nvars();
    if (n == 1) return m[0][0];

    // expansion along the first column
    Polynomial det(nv);
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i][0].is_zero()) continue;
        std::vector<std::vector<Polynomial>> minor;
        minor.reserve(n - 1);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == i) continue;
            std::vector<Polynomial> row(m[r].begin() + 1, m[r].end());
            minor.push_back(std::move(row));
        }
        Polynomial term = m[i][0] * det_poly(minor);
        if (i % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

}  // namespace simplexmetrics
