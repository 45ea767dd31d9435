#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "simplexmetrics/jet.hpp"

namespace simplexmetrics {

enum class CheckStatus { pass, fail, skipped };

struct VerificationReport {
    std::string check_name;
    std::string description;
    CheckStatus status = CheckStatus::skipped;
    std::string witness;  // nonzero residual, present on failure
    std::map<std::string, std::string> parameters;

    bool passed() const { return status == CheckStatus::pass; }
};

std::string to_json_line(const VerificationReport& r);

// Cayley-Menger determinant is invariant under all (k+1)! vertex
// permutations, as a polynomial identity in symbolic square distances.
VerificationReport check_cm_symmetry(std::size_t k);

// det(Y^T Y) is invariant under all (k+1)! vertex permutations of a fully
// symbolic simplex, including the permutations that move x_0.
VerificationReport check_gram_symmetry(std::size_t k, std::size_t n);

// A vanishing-diagonal g is symmetric iff it vanishes on order-1 pairs,
// verified over a generic quadratic model g = Omega + quadratic part.
VerificationReport check_prop_ab(std::size_t n);

// The squared extended form takes equal values under the x_0 <-> x_1 swap
// on 2-infinitesimal simplices; the unsquared values need not agree.
VerificationReport check_squaring(std::size_t k, std::size_t n);

// Degree counting: (omega+theta)^2 - omega^2 has total degree >= 2k+1, and
// such elements vanish on 2-infinitesimal k-simplices.
VerificationReport check_extension_independence(std::size_t k, std::size_t n,
                                                std::uint64_t seed = 1, std::size_t trials = 50);

// On a thin triple the metric may be sampled at any vertex; the residual is
// nonzero when the thinness relations are omitted.
VerificationReport check_thin_lemma(std::size_t n);

// The one-dimensional examples: x^2 y = x y^2 under 2-infinitesimality,
// x^2 y = 0 exactly under thinness, and 2-whiskers are thin.
VerificationReport check_thin_examples();

// volume_form_squared agrees with sigma_g on generic thin n-simplices, and
// the constant-metric change-of-metric identity holds on rational
// instances.
VerificationReport check_volume_form_theorem(std::size_t n, std::uint64_t seed = 1);

// Runs every check at all admissible sizes; sizes above the limits are
// reported as skipped. Deterministic given the seed; sorted by name.
std::vector<VerificationReport> run_all(std::size_t max_n, std::size_t max_k,
                                        std::uint64_t seed);

}  // namespace simplexmetrics
