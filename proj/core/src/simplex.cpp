#include "simplexmetrics/simplex.hpp"

namespace simplexmetrics {

Simplex::Simplex(std::vector<std::vector<Rational>> pts) : points(std::move(pts)) {
    if (points.empty()) throw EmptySimplexError("simplex needs at least one point");
    for (const auto& p : points)
        if (p.size() != points.front().size())
            throw DimensionMismatch("simplex points have unequal lengths");
}

SquareDistanceData::SquareDistanceData(std::vector<std::vector<Rational>> table)
    : g(std::move(table)) {
    if (g.empty()) throw InvalidDistanceData("empty distance table");
    const std::size_t m = g.size();
    for (const auto& row : g)
        if (row.size() != m) throw InvalidDistanceData("distance table not square");
    for (std::size_t i = 0; i < m; ++i) {
        if (g[i][i] != 0) throw InvalidDistanceData("distance table has nonzero diagonal");
        for (std::size_t j = i + 1; j < m; ++j)
            if (g[i][j] != g[j][i]) throw InvalidDistanceData("distance table not symmetric");
    }
}

Rational heron_triangle(const Rational& a2, const Rational& b2, const Rational& c2) {
    Rational s = a2 * a2 + b2 * b2 + c2 * c2
               - 2 * a2 * b2 - 2 * a2 * c2 - 2 * b2 * c2;
    return -s / 16;
}

CayleyMengerMatrix cm_matrix(const SquareDistanceData& d) {
    const std::size_t m = d.g.size();  // k+1
    RationalMatrix c(m + 1, m + 1);
    for (std::size_t j = 1; j <= m; ++j) {
        c.at(0, j) = 1;
        c.at(j, 0) = 1;
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            c.at(i + 1, j + 1) = d.g[i][j];
    return CayleyMengerMatrix{std::move(c)};
}

Rational cm_factor(std::size_t k) {
    if (k == 0) return Rational(1);  // convention: a point has square volume 1
    Rational pow(1);  // (-2)^k
    for (std::size_t i = 0; i < k; ++i) pow *= -2;
    Rational fact(1);
    for (std::size_t i = 2; i <= k; ++i) fact *= static_cast<unsigned long>(i);
    return Rational(1) / (-pow * fact * fact);
}

Rational vol2_cm(const SquareDistanceData& d) {
    if (d.dim_k() == 0) return Rational(1);
    return cm_factor(d.dim_k()) * det_exact(cm_matrix(d).m);
}

RationalMatrix difference_matrix(const Simplex& s) {
    if (s.dim_k() == 0) throw EmptySimplexError("difference_matrix needs k >= 1");
    const std::size_t n = s.ambient_n();
    const std::size_t k = s.dim_k();
    RationalMatrix y(n, k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < n; ++i)
            y.at(i, j) = s.points[j + 1][i] - s.points[0][i];
    return y;
}

RationalMatrix gram_matrix(const Simplex& s, const RationalMatrix& g_metric) {
    if (g_metric.rows() != s.ambient_n() || g_metric.cols() != s.ambient_n())
        throw DimensionMismatch("metric dimension does not match ambient space");
    RationalMatrix y = difference_matrix(s);
    return mat_mul(transpose(y), mat_mul(g_metric, y));
}

Rational vol2_gram(const Simplex& s, const RationalMatrix& g_metric) {
    const std::size_t k = s.dim_k();
    if (k == 0) return 1;  // empty Gram determinant
    Rational fact(1);
    for (std::size_t i = 2; i <= k; ++i) fact *= static_cast<unsigned long>(i);
    return det_exact(gram_matrix(s, g_metric)) / (fact * fact);
}

SquareDistanceData square_distances_of(const Simplex& s, const RationalMatrix& g_metric) {
    const std::size_t n = s.ambient_n();
    if (g_metric.rows() != n || g_metric.cols() != n)
        throw DimensionMismatch("metric dimension does not match ambient space");
    const std::size_t m = s.points.size();
    std::vector<std::vector<Rational>> g(m, std::vector<Rational>(m, Rational(0)));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            Rational v(0);
            for (std::size_t a = 0; a < n; ++a) {
                Rational da = s.points[i][a] - s.points[j][a];
                if (da == 0) continue;
                for (std::size_t b = 0; b < n; ++b)
                    v += da * g_metric.at(a, b) * (s.points[i][b] - s.points[j][b]);
            }
            g[i][j] = v;
            g[j][i] = v;
        }
    return SquareDistanceData(std::move(g));
}

Rational vol2_metric_via_cm(const Simplex& s, const RationalMatrix& h) {
    const std::size_t n = s.ambient_n();
    if (h.rows() != n || h.cols() != n)
        throw DimensionMismatch("transform dimension does not match ambient space");
    std::vector<std::vector<Rational>> pts;
    pts.reserve(s.points.size());
    for (const auto& p : s.points) {
        std::vector<Rational> q(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                q[i] += h.at(i, j) * p[j];
        pts.push_back(std::move(q));
    }
    Simplex t(std::move(pts));
    return vol2_cm(square_distances_of(t, RationalMatrix::identity(n)));
}

ComparisonReport verify_comparison(const Simplex& s) {
    ComparisonReport r;
    r.k = s.dim_k();
    const std::size_t n = s.ambient_n();
    RationalMatrix id = RationalMatrix::identity(n);
    Rational det_c = det_exact(cm_matrix(square_distances_of(s, id)).m);
    Rational pow(1);
    for (std::size_t i = 0; i < r.k; ++i) pow *= -2;
    r.det_cm_scaled = det_c / -pow;
    r.det_gram = r.k == 0 ? Rational(1) : det_exact(gram_matrix(s, id));
    r.det_gram_squared = r.det_gram * r.det_gram;
    r.identity_holds = (r.det_cm_scaled == r.det_gram);
    r.printed_form_holds = (r.det_cm_scaled == r.det_gram_squared);
    return r;
}

}  // namespace simplexmetrics
