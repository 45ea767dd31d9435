#include "simplexmetrics/riemannian.hpp"

#include "simplexmetrics/simplex.hpp"

#include <stdexcept>

namespace simplexmetrics {

namespace {

Rational factorial(std::size_t k) {
    Rational f(1);
    for (std::size_t i = 2; i <= k; ++i) f *= static_cast<unsigned long>(i);
    return f;
}

// cofactor expansion with every product reduced in the context
Polynomial det_reduced(const std::vector<std::vector<Polynomial>>& m, const JetContext& ctx) {
    const std::size_t n = m.size();
    if (n == 0) return Polynomial::constant(ctx.nvars(), 1);
    if (n == 1) return m[0][0];
    Polynomial det(ctx.nvars());
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i][0].is_zero()) continue;
        std::vector<std::vector<Polynomial>> minor;
        minor.reserve(n - 1);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == i) continue;
            minor.emplace_back(m[r].begin() + 1, m[r].end());
        }
        Polynomial term = ctx.reduce(m[i][0] * det_reduced(minor, ctx)).poly();
        if (i % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

}  // namespace

MetricField::MetricField(std::size_t n_dim, std::vector<std::vector<SymbolicJet>> entries)
    : n_dim_(n_dim), entries_(std::move(entries)) {
    if (entries_.size() != n_dim_)
        throw DimensionMismatch("metric entry table size does not match n");
    for (const auto& row : entries_)
        if (row.size() != n_dim_) throw DimensionMismatch("metric entry table not square");
    for (std::size_t i = 0; i < n_dim_; ++i)
        for (std::size_t j = i + 1; j < n_dim_; ++j) {
            if (!(entries_[i][j].value == entries_[j][i].value) ||
                entries_[i][j].grad != entries_[j][i].grad)
                throw NotSymmetricError("metric field entries not symmetric");
        }
}

std::size_t MetricField::max_entry_degree() const {
    for (const auto& row : entries_)
        for (const auto& e : row)
            if (!e.grad.empty()) return 1;
    return 0;
}

MetricField MetricField::constant(const RationalMatrix& g, std::size_t nvars) {
    if (!g.square()) throw NonSquareError("metric must be square");
    if (!g.is_symmetric()) throw NotSymmetricError("metric must be symmetric");
    const std::size_t n = g.rows();
    std::vector<std::vector<SymbolicJet>> entries(n, std::vector<SymbolicJet>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            entries[i][j] = SymbolicJet{n, Polynomial::constant(nvars, g.at(i, j)), {}, {}};
    return MetricField(n, std::move(entries));
}

FormField::FormField(std::size_t n_dim, std::size_t arity,
                     std::map<std::vector<std::size_t>, SymbolicJet> coeffs)
    : n_dim_(n_dim), arity_(arity), coeffs_(std::move(coeffs)) {
    for (const auto& [subset, jet] : coeffs_) {
        if (subset.size() != arity_)
            throw std::invalid_argument("form coefficient tuple has wrong length");
        for (std::size_t i = 0; i < subset.size(); ++i) {
            if (subset[i] >= n_dim_ || (i > 0 && subset[i] <= subset[i - 1]))
                throw std::invalid_argument("form coefficient tuple not strictly increasing");
        }
    }
}

FormField FormField::determinant_form(std::size_t n_dim, std::size_t nvars) {
    std::vector<std::size_t> all(n_dim);
    for (std::size_t i = 0; i < n_dim; ++i) all[i] = i;
    std::map<std::vector<std::size_t>, SymbolicJet> coeffs;
    coeffs.emplace(all, SymbolicJet{n_dim, Polynomial::constant(nvars, 1), {}, {}});
    return FormField(n_dim, n_dim, std::move(coeffs));
}

std::size_t InfinitesimalSimplex::ambient_n() const {
    for (const VecExpr& v : displacements)
        if (v.plus >= 0) return context->block(v.plus).dim;
    return 0;
}

std::vector<VecExpr> declare_simplex_displacements(JetContextBuilder& b, std::size_t n_dim,
                                                   std::size_t k, bool thin) {
    std::vector<int> blocks(k);
    for (std::size_t i = 0; i < k; ++i)
        blocks[i] = b.add_vector("u" + std::to_string(i + 1), n_dim, 2);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) b.add_difference(blocks[j], blocks[i], 2);
    if (thin) {
        // DN_2 for every face 2-simplex (x_a, x_b, x_c), a < b < c, with
        // x_0's displacement the zero vector
        auto d = [&](std::size_t hi, std::size_t lo) {
            return lo == 0 ? VecExpr(blocks[hi - 1]) : VecExpr(blocks[hi - 1], blocks[lo - 1]);
        };
        for (std::size_t a = 0; a + 2 <= k; ++a)
            for (std::size_t c = a + 1; c <= k; ++c)
                for (std::size_t e = c + 1; e <= k; ++e)
                    b.add_thin_triple(d(c, a), d(e, a), d(e, c));
    }
    std::vector<VecExpr> out;
    out.reserve(k);
    for (int blk : blocks) out.emplace_back(blk);
    return out;
}

InfinitesimalSimplex make_infinitesimal_simplex(std::size_t n_dim, std::size_t k, bool thin) {
    JetContextBuilder b;
    auto disp = declare_simplex_displacements(b, n_dim, k, thin);
    return InfinitesimalSimplex{b.build(), std::move(disp)};
}

JetElement g_pair(const MetricField& field, const JetContext& ctx, const VecExpr& u,
                  const VecExpr& v) {
    const std::size_t n = field.n_dim();
    std::vector<Polynomial> w(n), base(n);
    for (std::size_t i = 0; i < n; ++i) {
        w[i] = ctx.vec_coord(v, i) - ctx.vec_coord(u, i);
        base[i] = ctx.vec_coord(u, i);
    }
    Polynomial acc(ctx.nvars());
    for (std::size_t a = 0; a < n; ++a) {
        if (w[a].is_zero()) continue;
        for (std::size_t b = 0; b < n; ++b) {
            if (w[b].is_zero()) continue;
            Polynomial gab = taylor_apply(field.entry(a, b), base, ctx, 1).poly();
            acc += ctx.reduce(w[a] * gab * w[b]).poly();
        }
    }
    return ctx.reduce(acc);
}

Polynomial cm_vol2_poly(const std::vector<std::vector<Polynomial>>& gtable) {
    const std::size_t m = gtable.size();  // k+1
    if (m == 0) throw std::invalid_argument("empty square-distance table");
    const std::size_t nv = gtable[0][0].nvars();
    std::vector<std::vector<Polynomial>> c(m + 1, std::vector<Polynomial>(m + 1, Polynomial(nv)));
    for (std::size_t j = 1; j <= m; ++j) {
        c[0][j] = Polynomial::constant(nv, 1);
        c[j][0] = Polynomial::constant(nv, 1);
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) c[i + 1][j + 1] = gtable[i][j];
    return det_poly(c) * cm_factor(m - 1);
}

JetElement cm_vol2_reduced(const std::vector<std::vector<Polynomial>>& gtable,
                           const JetContext& ctx) {
    const std::size_t m = gtable.size();
    if (m == 0) throw std::invalid_argument("empty square-distance table");
    const std::size_t nv = ctx.nvars();
    std::vector<std::vector<Polynomial>> c(m + 1, std::vector<Polynomial>(m + 1, Polynomial(nv)));
    for (std::size_t j = 1; j <= m; ++j) {
        c[0][j] = Polynomial::constant(nv, 1);
        c[j][0] = Polynomial::constant(nv, 1);
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) c[i + 1][j + 1] = ctx.reduce(gtable[i][j]).poly();
    return ctx.reduce(det_reduced(c, ctx) * cm_factor(m - 1));
}

JetElement sigma_g(const MetricField& field, const InfinitesimalSimplex& simplex) {
    const JetContext& ctx = *simplex.context;
    const std::size_t m = simplex.dim_k() + 1;
    std::vector<std::vector<Polynomial>> g(m, std::vector<Polynomial>(m, Polynomial(ctx.nvars())));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            Polynomial gij =
                g_pair(field, ctx, simplex.displacement(i), simplex.displacement(j)).poly();
            g[i][j] = gij;
            g[j][i] = std::move(gij);
        }
    return cm_vol2_reduced(g, ctx);
}

JetElement eval_form(const FormField& omega, const JetContext& ctx,
                     const VecExpr& base_displacement, const std::vector<VecExpr>& args) {
    if (args.size() != omega.arity())
        throw DimensionMismatch("form arity does not match argument count");
    const std::size_t n = omega.n_dim();
    const std::size_t k = omega.arity();
    std::vector<Polynomial> base(n);
    for (std::size_t i = 0; i < n; ++i) base[i] = ctx.vec_coord(base_displacement, i);

    Polynomial acc(ctx.nvars());
    for (const auto& [subset, jet] : omega.coeffs()) {
        Polynomial coeff = taylor_apply(jet, base, ctx, 1).poly();
        if (coeff.is_zero()) continue;
        std::vector<std::vector<Polynomial>> m(k, std::vector<Polynomial>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) m[i][j] = ctx.vec_coord(args[j], subset[i]);
        acc += ctx.reduce(coeff * det_reduced(m, ctx)).poly();
    }
    return ctx.reduce(acc);
}

JetElement extend_form(const FormField& omega, const InfinitesimalSimplex& simplex) {
    return eval_form(omega, *simplex.context, VecExpr(), simplex.displacements);
}

JetElement sigma_omega(const FormField& omega, const InfinitesimalSimplex& simplex) {
    Polynomial v = extend_form(omega, simplex).poly();
    return simplex.context->reduce(v * v);
}

JetElement volume_form_squared(const MetricField& field, const InfinitesimalSimplex& simplex) {
    const std::size_t n = field.n_dim();
    if (simplex.dim_k() != n)
        throw DimensionMismatch("volume form needs a top-dimensional simplex");
    const JetContext& ctx = *simplex.context;

    std::vector<std::vector<Polynomial>> g0(n, std::vector<Polynomial>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g0[i][j] = field.entry(i, j).value;
    Polynomial det_g = det_reduced(g0, ctx);

    std::vector<std::vector<Polynomial>> y(n, std::vector<Polynomial>(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            y[i][j] = ctx.vec_coord(simplex.displacements[j], i);
    Polynomial det_y = det_reduced(y, ctx);

    const Rational nf = factorial(n);
    Polynomial sq = ctx.reduce(det_y * det_y).poly();
    return ctx.reduce(det_g * sq * (Rational(1) / (nf * nf)));
}

}  // namespace simplexmetrics
