#pragma once

#include <set>
#include <vector>

#include "torusq/phase.hpp"
#include "torusq/sl2z.hpp"

namespace torusq {

// One term e^{2πirc} r^d β(r) of the expansion of the shear-b invariant,
// with the exact coefficient evaluator β(r) = (α√r + δ) e^{iπb/(2r)}.
// Summed over all terms this reproduces the closed form exactly; the
// 1/√r series of the term is recovered by Taylor-expanding the prefactor.
struct AecTerm {
    Rational c;       // Chern-Simons phase, in [0,1)
    Rational d;       // growth exponent, half-integer
    Complex alpha;    // coefficient of √r
    Complex delta;    // constant part
    long long shear;  // b, fixing the e^{iπb/(2r)} prefactor

    Complex exact_value(long long r) const;
    // l-th coefficient of the 1/√r series of β(r)/(b_j r^{d_j - d}),
    // combining the prefactor Taylor series with the δ/α correction.
    Complex series_coefficient(int l) const;
    Complex leading() const { return alpha != Complex(0, 0) ? alpha : delta; }
    // Taylor coefficients of e^{iπb/(2r)} alone: nonzero only at even l.
    Complex prefactor_series(int l) const;
};

// The regrouped expansion terms of the shear-b closed form; interior terms
// carry √(2r/|b|), the endpoint terms √(r/(2|b|)) - 1/2, and for odd b the
// growth-0 term at c = -b/4 mod 1 carries -1/2.
std::vector<AecTerm> aec_terms_su2(long long b);

// Σ_j e^{2πirc_j} β_j(r): equals the closed form exactly.
Complex evaluate_expansion(const std::vector<AecTerm>& terms, long long r);

// Σ_j e^{2πirc_j} r^{d_j} b_j (1 + Σ_{l=1}^L a_j^l r^{-l/2}).
Complex evaluate_expansion_truncated(const std::vector<AecTerm>& terms, long long r, int L);

struct AecSlope {
    int L = 0;
    double slope = 0;      // least-squares slope of log|residual| vs log r
    double bound = 0;      // d - (L+1)/2 + 0.3
    int points = 0;        // residuals above the noise floor
    bool pass = true;
};

struct AecReport {
    long long b = 1;
    int k_max = 0;
    std::vector<AecTerm> terms;
    double exact_max_residual = 0;  // closed form vs exact-coefficient expansion
    std::vector<AecSlope> slopes;
    bool pass = true;
};

// Checks |Z_k - truncated expansion| = O(r^{d-(L+1)/2}) by a log-log slope
// fit over k in [k_max/2, k_max], residuals below 1e-13 excluded.
AecReport verify_aec(long long b, int k_max, int L_max);

// Phase and growth-rate sets per conjugacy class: (±id) -> ({0},{1});
// trace ±2 -> ({j²/b}, {1/2}) plus ({-b/4}, {0}) for odd b; hyperbolic ->
// (quadratic-form phases over both trace branches, {0}).
struct TableRow {
    std::set<Rational> c;
    std::set<Rational> d;
};
TableRow table_row(const BundleClass& cls);

}  // namespace torusq
