#pragma once

#include <string>
#include <vector>

#include "mirrorx/liealg.hpp"
#include "mirrorx/qseries.hpp"

namespace mirrorx::affinechar {

using liealg::AlgebraKind;
using liealg::Weight;
using qseries::QSeries;

// Integrable highest-weight module label L_g(k, lambda).
struct AffineModuleLabel {
    AlgebraKind algebra;
    int level = 1;
    Weight weight;  // A-family only; B2/G2 labels carry level-only data

    AffineModuleLabel(AlgebraKind a, int k);                 // vacuum (or scalar-table) label
    AffineModuleLabel(AlgebraKind a, int k, Weight lambda);  // A-family
};

// c = k dim(g) / (k + hv). The factor follows the worked arithmetic
// 30/(10+2) = 5/2; see the test suite for the pinned values.
Rational centralCharge(const AffineModuleLabel& label);

// Sugawara conformal weight (lambda, lambda + 2 rho) / (2 (k + hv)).
// Calibrated by h_{L3+L7} = 2 at sl(10) level 2.
Rational conformalWeight(const AffineModuleLabel& label);

// Theta series of the A_{n-1} root lattice coset indexed by i in 0..n-1
// (the level-1 module labels): coefficient of q^m counts coset vectors of
// squared norm 2m + const. Realized as {x in Z^n : sum x = i} with the
// hyperplane-projected norm |x|^2 - i^2/n.
QSeries thetaSeriesA(int n, int cosetIndex, int order);

// Graded dimensions of L_{sl(N)}(1, Lambda_i): Theta_{L+lambda_i}/eta^{N-1},
// leadExp = h_i - (N-1)/24.
QSeries level1CharacterSlN(int N, int fundamentalIndex, int order);

// Graded dimensions of L_{sl(2)}(k, j) from the specialized Weyl-Kac
// character: [sum_n (2n(k+2)+j+1) q^{(k+2)n^2+(j+1)n}] / prod(1-q^m)^3,
// shifted by h_j - c/24.
QSeries sl2AffineCharacter(int k, int j, int order);

// Graded dimensions dim L(k,lambda)(d) for d = 0..depth via the affine
// Freudenthal recursion (type A).
std::vector<Integer> affineGradedDims(const AffineModuleLabel& label, int depth);

enum class Growth { Polynomial, SuperPolynomial, Inconclusive };

struct GrowthVerdict {
    Growth classification = Growth::Inconclusive;
    double fittedExponent = 0.0;  // polynomial: max log a_n / log n; super-poly: sqrt-n slope
    double r2 = 0.0;              // fit quality of the sqrt-n model
    std::vector<double> diagnostics;
    std::string note;
};

// Dichotomy classifier per the windowed policy: trailing 40% of available
// coefficients; polynomial iff max(log a_n/log n) < 1.5 x median; super-
// polynomial iff log a_n ~ c sqrt(n) with c > 0, R^2 > 0.99 and the ratio
// log a_n / sqrt(n) within 10% of its limit across the window.
GrowthVerdict growthClassify(const QSeries& series);

}  // namespace mirrorx::affinechar
