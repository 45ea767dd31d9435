// Acceptance suite: one line per criterion, nonzero exit iff any fails.
#include <iostream>
#include <random>
#include <set>
#include <string>

#include "simplexmetrics/multigraded.hpp"
#include "simplexmetrics/simplex.hpp"
#include "simplexmetrics/verify.hpp"

namespace sm = simplexmetrics;

namespace {

long long draw(std::mt19937_64& gen, long long lo, long long hi) {
    return lo + static_cast<long long>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
}

sm::Rational rnd_rational(std::mt19937_64& gen) {
    sm::Rational q(static_cast<long>(draw(gen, -30, 30)), static_cast<long>(draw(gen, 1, 9)));
    q.canonicalize();
    return q;
}

sm::Simplex random_simplex(std::mt19937_64& gen, std::size_t k, std::size_t n, long bound) {
    std::vector<std::vector<sm::Rational>> pts(k + 1, std::vector<sm::Rational>(n));
    for (auto& p : pts)
        for (auto& c : p) c = sm::Rational(static_cast<long>(draw(gen, -bound, bound)));
    return sm::Simplex(pts);
}

bool criterion1() {
    return sm::cm_factor(1) == sm::Rational(1, 2) && sm::cm_factor(2) == sm::Rational(-1, 16) &&
           sm::cm_factor(3) == sm::Rational(1, 288);
}

bool criterion2() {
    std::mt19937_64 gen(101);
    for (int t = 0; t < 1000; ++t) {
        sm::Rational a2 = rnd_rational(gen), b2 = rnd_rational(gen), c2 = rnd_rational(gen);
        sm::SquareDistanceData d(std::vector<std::vector<sm::Rational>>{
            {0, a2, b2}, {a2, 0, c2}, {b2, c2, 0}});
        if (sm::heron_triangle(a2, b2, c2) != sm::vol2_cm(d)) return false;
    }
    return true;
}

bool criterion3() {
    std::mt19937_64 gen(102);
    for (int t = 0; t < 500; ++t) {
        const auto n = static_cast<std::size_t>(draw(gen, 1, 5));
        const auto k = static_cast<std::size_t>(draw(gen, 1, static_cast<long long>(n)));
        sm::Simplex s = random_simplex(gen, k, n, 9);
        sm::ComparisonReport r = sm::verify_comparison(s);
        if (!r.identity_holds) return false;
        sm::RationalMatrix id = sm::RationalMatrix::identity(n);
        if (sm::vol2_cm(sm::square_distances_of(s, id)) != sm::vol2_gram(s, id)) return false;
    }
    return true;
}

bool criterion4() {
    std::mt19937_64 gen(103);
    for (int t = 0; t < 200; ++t) {
        const auto n = static_cast<std::size_t>(draw(gen, 1, 4));
        const auto k = static_cast<std::size_t>(draw(gen, 1, static_cast<long long>(n)));
        sm::Simplex s = random_simplex(gen, k, n, 6);
        sm::RationalMatrix h(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                h.at(i, j) = sm::Rational(static_cast<long>(draw(gen, -4, 4)));
        sm::RationalMatrix g = sm::mat_mul(sm::transpose(h), h);
        if (sm::vol2_gram(s, g) != sm::vol2_metric_via_cm(s, h)) return false;
        if (sm::det_exact(g) != sm::det_exact(h) * sm::det_exact(h)) return false;
    }
    return true;
}

bool criterion5() {
    for (std::size_t k = 1; k <= 3; ++k)
        if (!sm::check_cm_symmetry(k).passed()) return false;
    for (std::size_t k = 1; k <= 3; ++k)
        for (std::size_t n = k; n <= 4; ++n)
            if (!sm::check_gram_symmetry(k, n).passed()) return false;
    return true;
}

bool criterion6() {
    const std::set<std::string> required = {
        "check_prop_ab",        "check_squaring",          "check_extension_independence",
        "check_thin_lemma",     "check_thin_examples",     "check_volume_form_theorem"};
    std::set<std::string> seen;
    for (const auto& r : sm::run_all(3, 3, 1)) {
        if (r.status == sm::CheckStatus::fail) return false;
        if (required.count(r.check_name) && r.status == sm::CheckStatus::pass)
            seen.insert(r.check_name);
    }
    return seen == required;
}

bool criterion7() {
    auto r = sm::check_thin_lemma(2);
    if (!r.passed() || r.parameters.count("witness_without_thinness") == 0) return false;
    if (r.parameters.at("witness_without_thinness").empty()) return false;

    auto ctx = sm::make_context_infinitesimal(1, {{"x", 2}, {"y", 2}}, {{0, 1}}, {});
    sm::Polynomial x = ctx->vec_coord(sm::VecExpr(0), 0);
    sm::Polynomial y = ctx->vec_coord(sm::VecExpr(1), 0);
    return !ctx->is_zero_mod(x * x * y);
}

bool criterion8() {
    std::mt19937_64 gen(104);
    for (std::size_t k = 1; k <= 3; ++k) {
        const std::size_t n = 2;
        const std::size_t nv = k * n;
        for (int trial = 0; trial < 50; ++trial) {
            sm::Polynomial po(nv);
            {
                sm::Exponents e(nv, 0);
                for (std::size_t f = 0; f < k; ++f)
                    e[f * n + static_cast<std::size_t>(draw(gen, 0, 1))] += 1;
                po.add_term(e, sm::Rational(static_cast<long>(draw(gen, 1, 5))));
            }
            sm::MultiGradedElement omega(k, n, po);
            sm::Polynomial pt(nv);
            const std::size_t nterms = 1 + static_cast<std::size_t>(draw(gen, 0, 2));
            for (std::size_t tm = 0; tm < nterms; ++tm) {
                sm::Exponents e(nv, 0);
                for (std::size_t f = 0; f < k; ++f)
                    e[f * n + static_cast<std::size_t>(draw(gen, 0, 1))] += 1;
                std::size_t extra = 1 + static_cast<std::size_t>(draw(gen, 0, 2));
                for (std::size_t x = 0; x < extra; ++x)
                    e[static_cast<std::size_t>(draw(gen, 0, static_cast<long long>(nv) - 1))] += 1;
                pt.add_term(e, sm::Rational(static_cast<long>(draw(gen, -5, 5))));
            }
            sm::MultiGradedElement theta(k, n, pt);
            sm::MultiGradedElement sum = omega + theta;
            sm::MultiGradedElement diff = sum * sum - omega * omega;
            if (sm::min_total_degree(diff) < 2 * k + 1) return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    struct Entry {
        const char* name;
        bool (*fn)();
    };
    const Entry entries[] = {
        {"criterion 1: factor table 1/2, -1/16, 1/288", criterion1},
        {"criterion 2: Heron = Cayley-Menger on 1000 random triples", criterion2},
        {"criterion 3: determinant comparison on 500 random simplices", criterion3},
        {"criterion 4: metric change G = H^T H on 200 random instances", criterion4},
        {"criterion 5: symbolic permutation invariance", criterion5},
        {"criterion 6: verification suite at n <= 3, k <= 3", criterion6},
        {"criterion 7: negative controls without thinness", criterion7},
        {"criterion 8: degree lemma over 50 random theta per size", criterion8},
    };
    bool all = true;
    for (const Entry& e : entries) {
        bool ok = false;
        try {
            ok = e.fn();
        } catch (const std::exception& ex) {
            std::cout << e.name << ": FAIL (exception: " << ex.what() << ")\n";
            all = false;
            continue;
        }
        std::cout << e.name << (ok ? ": PASS" : ": FAIL") << "\n";
        all = all && ok;
    }
    return all ? 0 : 1;
}
