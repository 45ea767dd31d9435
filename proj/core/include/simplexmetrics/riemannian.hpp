#pragma once

#include <map>
#include <memory>

#include "simplexmetrics/jet.hpp"
#include "simplexmetrics/matrix.hpp"
#include "simplexmetrics/poly.hpp"

namespace simplexmetrics {

// Symmetric n x n metric tensor field G(x) on a chart, with entries of
// polynomial degree <= 1 in the chart coordinates. Each entry is stored as
// its jet at the (symbolic) base point: value and gradient, both
// polynomials over the evaluation context's generators.
class MetricField {
public:
    MetricField(std::size_t n_dim, std::vector<std::vector<SymbolicJet>> entries);

    std::size_t n_dim() const { return n_dim_; }
    std::size_t max_entry_degree() const;
    const SymbolicJet& entry(std::size_t i, std::size_t j) const { return entries_[i][j]; }

    static MetricField constant(const RationalMatrix& g, std::size_t nvars);

private:
    std::size_t n_dim_;
    std::vector<std::vector<SymbolicJet>> entries_;
};

// Alternating k-linear form field Omega(x; -,...,-), one polynomial
// coefficient jet per strictly increasing k-tuple of coordinate directions.
class FormField {
public:
    FormField(std::size_t n_dim, std::size_t arity,
              std::map<std::vector<std::size_t>, SymbolicJet> coeffs);

    std::size_t n_dim() const { return n_dim_; }
    std::size_t arity() const { return arity_; }
    const std::map<std::vector<std::size_t>, SymbolicJet>& coeffs() const { return coeffs_; }

    // Top form det(v_1,...,v_n) on an n-dimensional chart.
    static FormField determinant_form(std::size_t n_dim, std::size_t nvars);

private:
    std::size_t n_dim_, arity_;
    std::map<std::vector<std::size_t>, SymbolicJet> coeffs_;
};

// 2-infinitesimal k-simplex: base point x_0 plus k displacement vectors
// living in a jet context. displacement(0) is the zero vector.
struct InfinitesimalSimplex {
    std::shared_ptr<const JetContext> context;
    std::vector<VecExpr> displacements;  // size k: x_1 - x_0, ..., x_k - x_0

    std::size_t dim_k() const { return displacements.size(); }
    std::size_t ambient_n() const;
    VecExpr displacement(std::size_t vertex) const {
        return vertex == 0 ? VecExpr() : displacements.at(vertex - 1);
    }
};

// Declares displacement blocks u_1..u_k of order 2 in n dimensions with all
// pairwise difference constraints; with thin = true adds the DN_2 relations
// of every face 2-simplex. Returns the displacement expressions.
std::vector<VecExpr> declare_simplex_displacements(JetContextBuilder& b, std::size_t n_dim,
                                                   std::size_t k, bool thin);

InfinitesimalSimplex make_infinitesimal_simplex(std::size_t n_dim, std::size_t k, bool thin);

// (v-u)^T G(x_0+u) (v-u), the square distance of the vertex pair based at
// x_0+u, with G Taylor-applied along u.
JetElement g_pair(const MetricField& field, const JetContext& ctx, const VecExpr& u,
                  const VecExpr& v);

// Cayley-Menger square volume (factor included) of the pairwise square
// distances g_pair(x_i, x_j), computed in the jet algebra.
JetElement sigma_g(const MetricField& field, const InfinitesimalSimplex& simplex);

// Omega evaluated at x_0 + base_displacement on the argument vectors.
JetElement eval_form(const FormField& omega, const JetContext& ctx,
                     const VecExpr& base_displacement, const std::vector<VecExpr>& args);

// The extension of a k-form to 2-infinitesimal simplices:
// Omega(x_0; x_1-x_0, ..., x_k-x_0).
JetElement extend_form(const FormField& omega, const InfinitesimalSimplex& simplex);

// extend_form squared: the square-density induced by the form.
JetElement sigma_omega(const FormField& omega, const InfinitesimalSimplex& simplex);

// det G(x_0) det(Y)^2 / (n!)^2, the square of the volume form candidate;
// no square root is ever taken.
JetElement volume_form_squared(const MetricField& field, const InfinitesimalSimplex& simplex);

// Cayley-Menger square volume of a symbolic square-distance table: border
// with (0,1,...,1), take the determinant, apply the combinatorial factor.
Polynomial cm_vol2_poly(const std::vector<std::vector<Polynomial>>& gtable);

// Same, with every intermediate product reduced in the context.
JetElement cm_vol2_reduced(const std::vector<std::vector<Polynomial>>& gtable,
                           const JetContext& ctx);

}  // namespace simplexmetrics
