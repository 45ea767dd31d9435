#include <doctest.h>

#include <random>

#include "simplexmetrics/riemannian.hpp"
#include "simplexmetrics/simplex.hpp"

using namespace simplexmetrics;

TEST_CASE("g_pair with constant identity metric") {
    auto simplex = make_infinitesimal_simplex(2, 1, false);
    const JetContext& ctx = *simplex.context;
    MetricField id = MetricField::constant(RationalMatrix::identity(2), ctx.nvars());

    Polynomial x0 = ctx.vec_coord(VecExpr(0), 0);
    Polynomial x1 = ctx.vec_coord(VecExpr(0), 1);
    JetElement g = g_pair(id, ctx, VecExpr(), VecExpr(0));
    CHECK(g.poly() == ctx.reduce(x0 * x0 + x1 * x1).poly());

    CHECK(g_pair(id, ctx, VecExpr(0), VecExpr(0)).is_zero());
}

TEST_CASE("g_pair on a generic linear metric obeys the base-change identity") {
    // (y-x)^T G(x) (y-x) = (y-x)^T G(y) (y-x) for a 2-infinitesimal pair
    const std::size_t n = 2;
    JetContextBuilder b;
    std::vector<std::vector<std::size_t>> cidx(n, std::vector<std::size_t>(n));
    std::vector<std::vector<std::vector<std::size_t>>> didx(
        n, std::vector<std::vector<std::size_t>>(n, std::vector<std::size_t>(n)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            cidx[i][j] = cidx[j][i] = b.add_parameter("c" + std::to_string(i) + std::to_string(j));
            for (std::size_t l = 0; l < n; ++l)
                didx[i][j][l] = didx[j][i][l] =
                    b.add_parameter("d" + std::to_string(i) + std::to_string(j) + std::to_string(l));
        }
    int u = b.add_vector("u", n, 2);
    int v = b.add_vector("v", n, 2);
    b.add_difference(v, u, 2);
    auto ctx = b.build();

    std::vector<std::vector<SymbolicJet>> entries(n, std::vector<SymbolicJet>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            SymbolicJet jet;
            jet.n_dim = n;
            jet.value = Polynomial::variable(ctx->nvars(), cidx[i][j]);
            for (std::size_t l = 0; l < n; ++l)
                jet.grad.push_back(Polynomial::variable(ctx->nvars(), didx[i][j][l]));
            entries[i][j] = std::move(jet);
        }
    MetricField field(n, std::move(entries));

    JetElement at_u = g_pair(field, *ctx, VecExpr(u), VecExpr(v));
    JetElement at_v = g_pair(field, *ctx, VecExpr(v), VecExpr(u));
    CHECK(ctx->is_zero_mod(at_u.poly() - at_v.poly()));
}

TEST_CASE("metric field validation") {
    SymbolicJet a{2, Polynomial::variable(1, 0), {}, {}};
    SymbolicJet b{2, Polynomial::constant(1, 2), {}, {}};
    SymbolicJet c{2, Polynomial::constant(1, 3), {}, {}};
    CHECK_THROWS_AS(MetricField(2, {{a, b}, {c, a}}), NotSymmetricError);
    CHECK_THROWS_AS(MetricField::constant(RationalMatrix(2, 3), 1), NonSquareError);
}

TEST_CASE("sigma_g basics") {
    auto s1 = make_infinitesimal_simplex(2, 1, false);
    MetricField id1 = MetricField::constant(RationalMatrix::identity(2), s1.context->nvars());
    CHECK(sigma_g(id1, s1).poly() ==
          g_pair(id1, *s1.context, VecExpr(), s1.displacements[0]).poly());

    // repeated displacement: square volume vanishes
    auto s2 = make_infinitesimal_simplex(2, 2, false);
    InfinitesimalSimplex rep{s2.context, {s2.displacements[0], s2.displacements[0]}};
    MetricField id2 = MetricField::constant(RationalMatrix::identity(2), s2.context->nvars());
    CHECK(sigma_g(id2, rep).is_zero());
}

TEST_CASE("cm_vol2_poly agrees with vol2_gram on rational data") {
    std::mt19937_64 gen(41);
    for (int t = 0; t < 25; ++t) {
        const std::size_t n = 1 + gen() % 3;
        const std::size_t k = 1 + gen() % n;
        std::vector<std::vector<Rational>> pts(k + 1, std::vector<Rational>(n));
        for (auto& p : pts)
            for (auto& c : p) c = Rational(static_cast<long>(gen() % 9) - 4);
        Simplex s(pts);
        SquareDistanceData d = square_distances_of(s, RationalMatrix::identity(n));

        std::vector<std::vector<Polynomial>> table(
            k + 1, std::vector<Polynomial>(k + 1, Polynomial(1)));
        for (std::size_t i = 0; i <= k; ++i)
            for (std::size_t j = 0; j <= k; ++j)
                table[i][j] = Polynomial::constant(1, d.g[i][j]);
        Polynomial v = cm_vol2_poly(table);
        CHECK(v.eval({Rational(0)}) == vol2_gram(s, RationalMatrix::identity(n)));
    }
}

TEST_CASE("eval_form is alternating") {
    auto s = make_infinitesimal_simplex(2, 2, false);
    const JetContext& ctx = *s.context;
    FormField det2 = FormField::determinant_form(2, ctx.nvars());

    JetElement base = extend_form(det2, s);
    // the extension of the determinant form is det of the displacement matrix
    std::vector<std::vector<Polynomial>> y(2, std::vector<Polynomial>(2));
    for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t i = 0; i < 2; ++i) y[i][j] = ctx.vec_coord(s.displacements[j], i);
    CHECK(base.poly() == ctx.reduce(det_poly(y)).poly());

    JetElement swapped =
        eval_form(det2, ctx, VecExpr(), {s.displacements[1], s.displacements[0]});
    CHECK(ctx.is_zero_mod(base.poly() + swapped.poly()));

    JetElement repeated =
        eval_form(det2, ctx, VecExpr(), {s.displacements[0], s.displacements[0]});
    CHECK(repeated.is_zero());
}

TEST_CASE("sigma_omega on the line") {
    // Omega = dx on R, pair (x0, x0 + x): extension x, square x^2
    auto s = make_infinitesimal_simplex(1, 1, false);
    const JetContext& ctx = *s.context;
    std::map<std::vector<std::size_t>, SymbolicJet> coeffs;
    coeffs.emplace(std::vector<std::size_t>{0},
                   SymbolicJet{1, Polynomial::constant(ctx.nvars(), 1), {}, {}});
    FormField dx(1, 1, std::move(coeffs));

    Polynomial x = ctx.vec_coord(s.displacements[0], 0);
    CHECK(sigma_omega(dx, s).poly() == ctx.reduce(x * x).poly());

    // squared values agree under the x0 <-> x1 swap
    JetElement from_x1 = eval_form(dx, ctx, s.displacements[0], {VecExpr(-1, s.displacements[0].plus)});
    JetElement from_x0 = eval_form(dx, ctx, VecExpr(), {s.displacements[0]});
    CHECK(ctx.is_zero_mod(from_x1.poly() * from_x1.poly() - from_x0.poly() * from_x0.poly()));
}

TEST_CASE("volume_form_squared with constant metrics") {
    auto s = make_infinitesimal_simplex(2, 2, true);
    const JetContext& ctx = *s.context;
    MetricField id = MetricField::constant(RationalMatrix::identity(2), ctx.nvars());

    std::vector<std::vector<Polynomial>> y(2, std::vector<Polynomial>(2));
    for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t i = 0; i < 2; ++i) y[i][j] = ctx.vec_coord(s.displacements[j], i);
    Polynomial dety = det_poly(y);
    CHECK(volume_form_squared(id, s).poly() ==
          ctx.reduce(dety * dety * Rational(1, 4)).poly());

    // sigma_g agrees for the constant metric as well
    CHECK(ctx.is_zero_mod(volume_form_squared(id, s).poly() - sigma_g(id, s).poly()));

    auto s1 = make_infinitesimal_simplex(2, 1, false);
    MetricField id1 = MetricField::constant(RationalMatrix::identity(2), s1.context->nvars());
    CHECK_THROWS_AS(volume_form_squared(id1, s1), DimensionMismatch);
}
