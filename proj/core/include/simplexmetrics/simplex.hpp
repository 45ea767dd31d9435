#pragma once

#include <cstddef>
#include <vector>

#include "simplexmetrics/matrix.hpp"
#include "simplexmetrics/rational.hpp"

namespace simplexmetrics {

struct InvalidDistanceData : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct EmptySimplexError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Ordered k-simplex: k+1 points in Q^n.
struct Simplex {
    std::vector<std::vector<Rational>> points;

    Simplex() = default;
    explicit Simplex(std::vector<std::vector<Rational>> pts);

    std::size_t dim_k() const { return points.size() - 1; }
    std::size_t ambient_n() const { return points.empty() ? 0 : points.front().size(); }
};

// Symmetric (k+1)x(k+1) table of pairwise square distances, zero diagonal.
// Entries may be arbitrary rationals; realizability is not checked.
struct SquareDistanceData {
    std::vector<std::vector<Rational>> g;

    SquareDistanceData() = default;
    explicit SquareDistanceData(std::vector<std::vector<Rational>> table);

    std::size_t dim_k() const { return g.size() - 1; }
};

// (k+2)x(k+2) matrix bordered with (0,1,...,1); rows/cols indexed
// -1,0,...,k in the usual convention, stored 0..k+1 here.
struct CayleyMengerMatrix {
    RationalMatrix m;
    std::size_t dim_k() const { return m.rows() - 2; }
};

// Heron's formula on square side lengths: -(a4+b4+c4-2(..))/16 rewritten
// in the squares a2,b2,c2.
Rational heron_triangle(const Rational& a2, const Rational& b2, const Rational& c2);

CayleyMengerMatrix cm_matrix(const SquareDistanceData& d);

// 1 / (-(-2)^k (k!)^2); gives 1, 1/2, -1/16, 1/288, ... for k = 0,1,2,3.
Rational cm_factor(std::size_t k);

// Square volume of the k-simplex from its square-distance table.
Rational vol2_cm(const SquareDistanceData& d);

// n x k matrix Y whose column j is points[j] - points[0].
RationalMatrix difference_matrix(const Simplex& s);

// Y^T G Y; with G = I this is the plain Gram matrix.
RationalMatrix gram_matrix(const Simplex& s, const RationalMatrix& g_metric);

// det(Y^T G Y) / (k!)^2; k = 0 gives 1.
Rational vol2_gram(const Simplex& s, const RationalMatrix& g_metric);

SquareDistanceData square_distances_of(const Simplex& s, const RationalMatrix& g_metric);

// Square volume under the metric G = H^T H, computed as the identity-metric
// Cayley-Menger volume of the transformed simplex (H x_0, ..., H x_k).
Rational vol2_metric_via_cm(const Simplex& s, const RationalMatrix& h);

struct ComparisonReport {
    std::size_t k = 0;
    Rational det_cm_scaled;      // det(C) / (-(-2)^k)
    Rational det_gram;           // det(Y^T Y)
    Rational det_gram_squared;   // det(Y^T Y)^2, the literal printed form
    bool identity_holds = false;          // det_cm_scaled == det_gram
    bool printed_form_holds = false;      // det_cm_scaled == det_gram^2
};

// Evaluates both sides of the determinant comparison, in the corrected
// and in the literal (squared) reading.
ComparisonReport verify_comparison(const Simplex& s);

}  // namespace simplexmetrics
