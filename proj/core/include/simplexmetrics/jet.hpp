#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "simplexmetrics/poly.hpp"

namespace simplexmetrics {

struct UnknownVectorError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BadOrderError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DegreeOverflowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OrderTooSmallError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class JetContext;

// Element of the nilpotent quotient algebra: a polynomial in normal form
// against its context's ideal.
class JetElement {
public:
    JetElement() : ctx_(nullptr) {}
    JetElement(const JetContext* ctx, Polynomial normal_form)
        : ctx_(ctx), poly_(std::move(normal_form)) {}

    const JetContext* context() const { return ctx_; }
    const Polynomial& poly() const { return poly_; }
    bool is_zero() const { return poly_.is_zero(); }

    bool operator==(const JetElement& o) const {
        return ctx_ == o.ctx_ && poly_ == o.poly_;
    }

    std::string to_string() const;

private:
    const JetContext* ctx_;
    Polynomial poly_;
};

// Reference to an infinitesimal displacement vector, or the difference of
// two. Block index -1 stands for the zero displacement (the base point).
struct VecExpr {
    int plus = -1;
    int minus = -1;
    VecExpr() = default;
    VecExpr(int p) : plus(p) {}          // NOLINT: implicit from block index
    VecExpr(int p, int m) : plus(p), minus(m) {}
};

// Finite-dimensional quotient of Q[generators] by a nilpotency ideal.
// Immutable after construction; normal forms of all monomials within the
// degree caps are precomputed by one exact row reduction.
class JetContext {
public:
    struct Block {
        std::string name;
        int order;               // 1 or 2
        std::size_t first_var;   // contiguous var indices [first_var, first_var + dim)
        std::size_t dim;
    };

    std::size_t nvars() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    std::size_t n_blocks() const { return blocks_.size(); }
    const Block& block(std::size_t b) const { return blocks_.at(b); }
    std::size_t degree_bound() const { return degree_bound_; }
    const std::vector<Polynomial>& relations() const { return relations_; }
    std::size_t quotient_dimension() const;  // dim over Q (inf part only)

    bool is_infinitesimal_var(std::size_t idx) const { return block_of_[idx] >= 0; }

    Polynomial var(std::size_t idx) const { return Polynomial::variable(nvars(), idx); }
    // i-th coordinate of a displacement expression, as a polynomial.
    Polynomial vec_coord(const VecExpr& v, std::size_t i) const;

    JetElement reduce(const Polynomial& e) const;
    bool is_zero_mod(const Polynomial& e) const { return reduce(e).is_zero(); }

private:
    friend class JetContextBuilder;
    JetContext() = default;
    void build_normal_forms();

    std::vector<std::string> names_;
    std::vector<Block> blocks_;
    std::vector<int> block_of_;  // per var: block index, or -1 for parameters
    std::vector<Polynomial> relations_;
    std::size_t degree_bound_ = 0;

    // Quotient basis: infinitesimal monomials within the per-block caps,
    // grlex-descending; pivot monomials carry a rewrite into smaller ones.
    std::vector<Exponents> basis_;                 // index -> inf exponent vector
    std::map<Exponents, std::size_t> basis_index_;
    using SparseRow = std::vector<std::pair<std::size_t, Rational>>;
    std::vector<std::optional<SparseRow>> rewrite_;  // tail of pivot rows

    bool within_caps(const Exponents& inf_exps) const;
    void split_term(const Exponents& e, Exponents& inf_part, Exponents& par_part) const;
};

class JetContextBuilder {
public:
    std::size_t add_parameter(const std::string& name);
    // Declares an infinitesimal vector of `dim` coordinates with nilpotency
    // order `r` in {1,2}: all products of r+1 of its coordinates vanish.
    int add_vector(const std::string& name, std::size_t dim, int order);
    // (v_i - v_j) has order r: all products of r+1 of its coordinates vanish.
    void add_difference(int i, int j, int order);
    // DN_2 on the difference triple (a, b, c): every product of three
    // coordinates of vectors drawn (with repetition) from {a,b,c} vanishes.
    void add_thin_triple(const VecExpr& a, const VecExpr& b, const VecExpr& c);
    void set_degree_bound(std::size_t bound) { manual_bound_ = bound; }

    std::shared_ptr<const JetContext> build() const;

private:
    struct DiffSpec { int i, j, order; };
    struct ThinSpec { VecExpr a, b, c; };
    std::vector<std::string> names_;
    std::vector<JetContext::Block> blocks_;
    std::vector<int> block_of_;
    std::vector<DiffSpec> diffs_;
    std::vector<ThinSpec> thins_;
    std::optional<std::size_t> manual_bound_;
};

struct ThinTriple {
    int i, j;  // face (x_0, x_i, x_j) of a simplex context
};

// Convenience builder for 2-infinitesimal style contexts: one block per
// declared vector, difference constraints for the listed pairs, DN_2
// relations for the listed thin triples (faces at the base vertex).
std::shared_ptr<const JetContext> make_context_infinitesimal(
    std::size_t n_dim,
    const std::vector<std::pair<std::string, int>>& vectors,
    const std::vector<std::pair<int, int>>& pair_constraints = {},
    const std::vector<ThinTriple>& thin_triples = {});

// All DN_2 products of the triple (a, b, c): one coordinate of each of
// three vectors drawn with repetition from the triple. Useful for checking
// that a context already annihilates a triple without adding it.
std::vector<Polynomial> dn2_relation_products(const JetContext& ctx, const VecExpr& a,
                                              const VecExpr& b, const VecExpr& c);

// Truncated symbolic jet of a function of an n-dimensional displacement:
// value, gradient, and Hessian entries are polynomials (typically in fresh
// parameter generators).
struct SymbolicJet {
    std::size_t n_dim = 0;
    Polynomial value;
    std::vector<Polynomial> grad;                 // size n_dim, or empty
    std::vector<std::vector<Polynomial>> hess;    // n_dim x n_dim symmetric, or empty
};

// Truncated Taylor polynomial f(base + delta) up to `order` derivative
// levels, reduced in ctx. Jet data beyond `order` must reduce to zero when
// contracted with the displacement; otherwise OrderTooSmallError.
JetElement taylor_apply(const SymbolicJet& f, const std::vector<Polynomial>& delta,
                        const JetContext& ctx, int order);

}  // namespace simplexmetrics
