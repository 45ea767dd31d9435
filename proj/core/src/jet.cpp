#include "simplexmetrics/jet.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace simplexmetrics {

namespace {

// multisets of size k from {0,...,m-1}, non-decreasing
void multisets(std::size_t m, std::size_t k, std::vector<std::size_t>& cur,
               std::size_t start, const std::function<void(const std::vector<std::size_t>&)>& f) {
    if (cur.size() == k) {
        f(cur);
        return;
    }
    for (std::size_t i = start; i < m; ++i) {
        cur.push_back(i);
        multisets(m, k, cur, i, f);
        cur.pop_back();
    }
}

void for_each_multiset(std::size_t m, std::size_t k,
                       const std::function<void(const std::vector<std::size_t>&)>& f) {
    std::vector<std::size_t> cur;
    multisets(m, k, cur, 0, f);
}

}  // namespace

std::string JetElement::to_string() const {
    return ctx_ ? poly_.to_string(ctx_->names()) : poly_.to_string({});
}

Polynomial JetContext::vec_coord(const VecExpr& v, std::size_t i) const {
    Polynomial p(nvars());
    if (v.plus >= 0) {
        const Block& b = block(static_cast<std::size_t>(v.plus));
        if (i >= b.dim) throw std::out_of_range("vector coordinate out of range");
        p += var(b.first_var + i);
    }
    if (v.minus >= 0) {
        const Block& b = block(static_cast<std::size_t>(v.minus));
        if (i >= b.dim) throw std::out_of_range("vector coordinate out of range");
        p -= var(b.first_var + i);
    }
    return p;
}

bool JetContext::within_caps(const Exponents& inf_exps) const {
    for (const Block& b : blocks_) {
        std::size_t d = 0;
        for (std::size_t i = 0; i < b.dim; ++i) d += inf_exps[b.first_var + i];
        if (d > static_cast<std::size_t>(b.order)) return false;
    }
    return true;
}

void JetContext::split_term(const Exponents& e, Exponents& inf_part, Exponents& par_part) const {
    inf_part.assign(nvars(), 0);
    par_part.assign(nvars(), 0);
    for (std::size_t i = 0; i < nvars(); ++i) {
        if (block_of_[i] >= 0)
            inf_part[i] = e[i];
        else
            par_part[i] = e[i];
    }
}

std::size_t JetContext::quotient_dimension() const {
    std::size_t d = 0;
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (!rewrite_[i]) ++d;
    return d;
}

JetElement JetContext::reduce(const Polynomial& e) const {
    if (e.nvars() != nvars())
        throw std::invalid_argument("polynomial uses a different generator set");
    Polynomial r(nvars());
    Exponents inf_part, par_part, combined(nvars(), 0);
    for (const auto& [exps, coeff] : e.terms()) {
        split_term(exps, inf_part, par_part);
        if (exps_total_degree(inf_part) == 0) {
            r.add_term(exps, coeff);
            continue;
        }
        if (!within_caps(inf_part)) continue;  // monomial ideal
        auto it = basis_index_.find(inf_part);
        if (it == basis_index_.end())
            throw DegreeOverflowError("monomial exceeds the context degree bound");
        const auto& rw = rewrite_[it->second];
        if (!rw) {
            r.add_term(exps, coeff);
            continue;
        }
        for (const auto& [bidx, c] : *rw) {
            for (std::size_t i = 0; i < nvars(); ++i)
                combined[i] = par_part[i] + basis_[bidx][i];
            r.add_term(combined, coeff * c);
        }
    }
    return JetElement(this, std::move(r));
}

namespace {

using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

// row -= c * other; both sorted ascending by index
SparseRow axpy(const SparseRow& row, const Rational& c, const SparseRow& other) {
    SparseRow out;
    out.reserve(row.size() + other.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < other.size()) {
        if (j == other.size() || (i < row.size() && row[i].first < other[j].first)) {
            out.push_back(row[i++]);
        } else if (i == row.size() || other[j].first < row[i].first) {
            out.emplace_back(other[j].first, -c * other[j].second);
            ++j;
        } else {
            Rational v = row[i].second - c * other[j].second;
            if (v != 0) out.emplace_back(row[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

struct Rref {
    std::vector<std::size_t> pivot_of;  // basis index -> row id, SIZE_MAX if none
    std::vector<SparseRow> rows;

    explicit Rref(std::size_t ncols) : pivot_of(ncols, SIZE_MAX) {}

    bool insert(SparseRow row) {
        while (!row.empty()) {
            const std::size_t lead = row.front().first;
            if (pivot_of[lead] == SIZE_MAX) {
                const Rational inv = Rational(1) / row.front().second;
                for (auto& [idx, c] : row) c *= inv;
                pivot_of[lead] = rows.size();
                rows.push_back(std::move(row));
                return true;
            }
            row = axpy(row, row.front().second, rows[pivot_of[lead]]);
        }
        return false;
    }
};

}  // namespace

void JetContext::build_normal_forms() {
    // Enumerate the quotient basis candidates: infinitesimal monomials
    // within the per-block caps and the degree bound, grlex-descending.
    std::vector<Exponents> monos;
    Exponents cur(nvars(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t b) {
        if (b == blocks_.size()) {
            monos.push_back(cur);
            return;
        }
        const Block& blk = blocks_[b];
        std::function<void(std::size_t, std::size_t)> coords = [&](std::size_t i, std::size_t used) {
            if (i == blk.dim) {
                rec(b + 1);
                return;
            }
            for (std::size_t e = 0; used + e <= static_cast<std::size_t>(blk.order); ++e) {
                cur[blk.first_var + i] = static_cast<std::uint8_t>(e);
                coords(i + 1, used + e);
            }
            cur[blk.first_var + i] = 0;
        };
        coords(0, 0);
    };
    rec(0);

    basis_.clear();
    for (auto& m : monos)
        if (exps_total_degree(m) <= degree_bound_) basis_.push_back(std::move(m));
    std::sort(basis_.begin(), basis_.end(),
              [](const Exponents& a, const Exponents& b) { return grlex_less(b, a); });
    basis_index_.clear();
    for (std::size_t i = 0; i < basis_.size(); ++i) basis_index_[basis_[i]] = i;

    // Express a polynomial in basis coordinates, dropping monomial-ideal
    // terms; returns false if a surviving term misses the basis (possible
    // only with a manually lowered degree bound).
    auto to_row = [&](const Polynomial& p, SparseRow& out) -> bool {
        std::map<std::size_t, Rational> acc;
        for (const auto& [e, c] : p.terms()) {
            if (!within_caps(e)) continue;
            auto it = basis_index_.find(e);
            if (it == basis_index_.end()) return false;
            auto [a, inserted] = acc.emplace(it->second, c);
            if (!inserted) a->second += c;
        }
        out.clear();
        for (auto& [i, c] : acc)
            if (c != 0) out.emplace_back(i, std::move(c));
        return true;
    };

    Rref rref(basis_.size());
    std::set<SparseRow> seen;

    for (const Polynomial& rel : relations_) {
        // pre-truncate the relation against the monomial ideal
        Polynomial relT(nvars());
        for (const auto& [e, c] : rel.terms())
            if (within_caps(e)) relT.add_term(e, c);
        if (relT.is_zero()) continue;

        for (const Exponents& m : basis_) {
            Polynomial prod(nvars());
            Exponents pe(nvars(), 0);
            for (const auto& [e, c] : relT.terms()) {
                for (std::size_t i = 0; i < nvars(); ++i) pe[i] = e[i] + m[i];
                if (within_caps(pe)) prod.add_term(pe, c);
            }
            if (prod.is_zero()) continue;
            SparseRow row;
            if (!to_row(prod, row)) continue;  // would exceed a manual bound
            if (row.empty()) continue;
            const Rational inv = Rational(1) / row.front().second;
            for (auto& [idx, c] : row) c *= inv;
            if (!seen.insert(row).second) continue;
            rref.insert(std::move(row));
        }
    }

    // Back-substitute so pivot tails contain only non-pivot monomials;
    // process smaller monomials (larger indices) first.
    std::vector<std::size_t> pivot_idxs;
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (rref.pivot_of[i] != SIZE_MAX) pivot_idxs.push_back(i);
    std::sort(pivot_idxs.rbegin(), pivot_idxs.rend());

    rewrite_.assign(basis_.size(), std::nullopt);
    for (std::size_t p : pivot_idxs) {
        SparseRow& row = rref.rows[rref.pivot_of[p]];
        SparseRow tail(row.begin() + 1, row.end());
        for (bool changed = true; changed;) {
            changed = false;
            for (std::size_t t = 0; t < tail.size(); ++t) {
                if (rewrite_[tail[t].first]) {
                    const SparseRow sub = *rewrite_[tail[t].first];
                    const Rational c = tail[t].second;
                    tail.erase(tail.begin() + t);
                    tail = axpy(tail, -c, sub);
                    changed = true;
                    break;
                }
            }
        }
        // mono_p = -tail
        for (auto& [idx, c] : tail) c = -c;
        rewrite_[p] = std::move(tail);
    }
}

std::size_t JetContextBuilder::add_parameter(const std::string& name) {
    names_.push_back(name);
    block_of_.push_back(-1);
    return names_.size() - 1;
}

int JetContextBuilder::add_vector(const std::string& name, std::size_t dim, int order) {
    if (order < 1 || order > 2) throw BadOrderError("vector order must be 1 or 2");
    if (dim == 0) throw std::invalid_argument("vector dimension must be positive");
    JetContext::Block b{name, order, names_.size(), dim};
    for (std::size_t i = 0; i < dim; ++i) {
        names_.push_back(dim == 1 ? name : name + std::to_string(i + 1));
        block_of_.push_back(static_cast<int>(blocks_.size()));
    }
    blocks_.push_back(b);
    return static_cast<int>(blocks_.size()) - 1;
}

void JetContextBuilder::add_difference(int i, int j, int order) {
    if (order < 1 || order > 2) throw BadOrderError("difference order must be 1 or 2");
    if (i < 0 || j < 0 || i >= static_cast<int>(blocks_.size()) ||
        j >= static_cast<int>(blocks_.size()))
        throw UnknownVectorError("difference references an undeclared vector");
    if (blocks_[i].dim != blocks_[j].dim)
        throw std::invalid_argument("difference of vectors with unequal dimensions");
    diffs_.push_back({i, j, order});
}

void JetContextBuilder::add_thin_triple(const VecExpr& a, const VecExpr& b, const VecExpr& c) {
    for (const VecExpr* v : {&a, &b, &c}) {
        for (int idx : {v->plus, v->minus})
            if (idx >= static_cast<int>(blocks_.size()))
                throw UnknownVectorError("thin triple references an undeclared vector");
    }
    thins_.push_back({a, b, c});
}

std::shared_ptr<const JetContext> JetContextBuilder::build() const {
    auto ctx = std::shared_ptr<JetContext>(new JetContext());
    ctx->names_ = names_;
    ctx->blocks_ = blocks_;
    ctx->block_of_ = block_of_;

    std::size_t auto_bound = 0;
    for (const auto& b : blocks_) auto_bound += static_cast<std::size_t>(b.order);
    ctx->degree_bound_ = manual_bound_.value_or(auto_bound);

    const std::size_t nv = names_.size();
    auto coord = [&](const VecExpr& v, std::size_t i) { return ctx->vec_coord(v, i); };

    // D_r monomial relations per vector block
    for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
        const auto& b = blocks_[bi];
        for_each_multiset(b.dim, static_cast<std::size_t>(b.order) + 1,
                          [&](const std::vector<std::size_t>& sel) {
                              Polynomial p = Polynomial::constant(nv, 1);
                              for (std::size_t s : sel)
                                  p = p * ctx->var(b.first_var + s);
                              ctx->relations_.push_back(std::move(p));
                          });
    }
    // difference-vector relations, expanded
    for (const auto& d : diffs_) {
        const std::size_t dim = blocks_[d.i].dim;
        VecExpr v(d.i, d.j);
        for_each_multiset(dim, static_cast<std::size_t>(d.order) + 1,
                          [&](const std::vector<std::size_t>& sel) {
                              Polynomial p = Polynomial::constant(nv, 1);
                              for (std::size_t s : sel) p = p * coord(v, s);
                              ctx->relations_.push_back(std::move(p));
                          });
    }
    // DN_2 relations: products of three coordinates of vectors from the
    // triple, repetitions allowed
    for (const auto& t : thins_) {
        const VecExpr vecs[3] = {t.a, t.b, t.c};
        std::size_t dim = 0;
        for (const VecExpr& v : vecs)
            if (v.plus >= 0) dim = blocks_[v.plus].dim;
        std::vector<std::pair<const VecExpr*, std::size_t>> items;
        for (const VecExpr& v : vecs)
            for (std::size_t i = 0; i < dim; ++i) items.emplace_back(&v, i);
        for_each_multiset(items.size(), 3, [&](const std::vector<std::size_t>& sel) {
            Polynomial p = Polynomial::constant(nv, 1);
            for (std::size_t s : sel) p = p * coord(*items[s].first, items[s].second);
            if (!p.is_zero()) ctx->relations_.push_back(std::move(p));
        });
    }

    ctx->build_normal_forms();
    return ctx;
}

std::shared_ptr<const JetContext> make_context_infinitesimal(
    std::size_t n_dim, const std::vector<std::pair<std::string, int>>& vectors,
    const std::vector<std::pair<int, int>>& pair_constraints,
    const std::vector<ThinTriple>& thin_triples) {
    JetContextBuilder b;
    for (const auto& [name, order] : vectors) b.add_vector(name, n_dim, order);
    for (const auto& [i, j] : pair_constraints) {
        if (i < 0 || j < 0 || i >= static_cast<int>(vectors.size()) ||
            j >= static_cast<int>(vectors.size()))
            throw UnknownVectorError("pair constraint references an undeclared vector");
        const int order = std::min(2, vectors[i].second + vectors[j].second);
        b.add_difference(i, j, order);
    }
    for (const ThinTriple& t : thin_triples) {
        // vertex indices: 1 <= i < j, vertex v's displacement is block v-1
        if (t.i < 1 || t.j < 1 || t.i >= t.j || t.j > static_cast<int>(vectors.size()))
            throw UnknownVectorError("thin triple references an undeclared vector");
        b.add_thin_triple(VecExpr(t.i - 1), VecExpr(t.j - 1), VecExpr(t.j - 1, t.i - 1));
    }
    return b.build();
}

std::vector<Polynomial> dn2_relation_products(const JetContext& ctx, const VecExpr& a,
                                              const VecExpr& b, const VecExpr& c) {
    const VecExpr vecs[3] = {a, b, c};
    std::size_t dim = 0;
    for (const VecExpr& v : vecs)
        if (v.plus >= 0) dim = ctx.block(v.plus).dim;
    std::vector<std::pair<const VecExpr*, std::size_t>> items;
    for (const VecExpr& v : vecs)
        for (std::size_t i = 0; i < dim; ++i) items.emplace_back(&v, i);
    std::vector<Polynomial> out;
    for_each_multiset(items.size(), 3, [&](const std::vector<std::size_t>& sel) {
        Polynomial p = Polynomial::constant(ctx.nvars(), 1);
        for (std::size_t s : sel) p = p * ctx.vec_coord(*items[s].first, items[s].second);
        if (!p.is_zero()) out.push_back(std::move(p));
    });
    return out;
}

JetElement taylor_apply(const SymbolicJet& f, const std::vector<Polynomial>& delta,
                        const JetContext& ctx, int order) {
    if (delta.size() != f.n_dim)
        throw std::invalid_argument("displacement dimension does not match jet");
    const std::size_t nv = ctx.nvars();
    Polynomial acc = f.value;

    Polynomial lin(nv);
    if (!f.grad.empty()) {
        if (f.grad.size() != f.n_dim) throw std::invalid_argument("bad gradient size");
        for (std::size_t l = 0; l < f.n_dim; ++l) lin += f.grad[l] * delta[l];
    }
    Polynomial quad(nv);
    if (!f.hess.empty()) {
        if (f.hess.size() != f.n_dim) throw std::invalid_argument("bad hessian size");
        for (std::size_t l = 0; l < f.n_dim; ++l)
            for (std::size_t m = 0; m < f.n_dim; ++m)
                quad += f.hess[l][m] * delta[l] * delta[m];
        quad = quad * Rational(1, 2);
    }

    if (order >= 1)
        acc += lin;
    else if (!lin.is_zero() && !ctx.is_zero_mod(lin))
        throw OrderTooSmallError("discarded first-order Taylor term does not vanish");
    if (order >= 2)
        acc += quad;
    else if (!quad.is_zero() && !ctx.is_zero_mod(quad))
        throw OrderTooSmallError("discarded second-order Taylor term does not vanish");

    return ctx.reduce(acc);
}

}  // namespace simplexmetrics
