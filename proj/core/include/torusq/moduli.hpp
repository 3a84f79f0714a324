#pragma once

#include <Eigen/Dense>
#include <set>
#include <vector>

#include "torusq/rational.hpp"

namespace torusq {

// A component of the flat SU(2) moduli space of the shear-b torus bundle,
// with its (locally constant) Chern-Simons value reduced to [0,1).
struct ModuliComponent {
    enum class Kind { point, pillowcase, torus, central };
    Kind kind = Kind::pillowcase;
    Rational cs;
    bool irreducible = false;
    long long j = 0;  // the M_{j/b} index; unused for the point component
};

// Holonomy triple of the bundle group presentation: AB = BA, CAC⁻¹ = A,
// CBC⁻¹ = A^m B with m = -b. Relations validated to 1e-10 on construction.
struct ConnectionTriple {
    Eigen::Matrix2cd A, B, C;
    long long m = 1;

    ConnectionTriple(const Eigen::Matrix2cd& A_, const Eigen::Matrix2cd& B_,
                     const Eigen::Matrix2cd& C_, long long m_);
};

struct CohomologyDims {
    int h0 = 0;
    int h1 = 0;
};

// Component list for shear b != 0: b odd gives one pillowcase,
// (|b|-1)/2 tori and one irreducible point (cs = 1 - b/4 mod 1); b even
// gives two pillowcases and |b|/2 - 1 tori. The torus-family CS values
// are j²/b mod 1.
std::vector<ModuliComponent> su2_components(long long b);

// CS value of a completely reducible flat connection with holonomy
// eigenvalue exponents a_1..a_N: (1/2) b (Σa² + (Σa)² - 2 a_N Σa) mod 1.
// Requires Σa_l ∈ Z and b·a_l ∈ Z.
Rational sun_cs_completely_reducible(int N, long long b, const std::vector<Rational>& a);

// Partially reducible / irreducible case with invariant-subspace dimensions
// i_1..i_r: -(1/2) b Σ i_l a_l (i_r a_r - a_l) + (1/4)((-1)^x - 1) mod 1
// with x = b (1 - a_r i_r) Σ i_l a_l. Requires Σ i_l a_l ∈ Z, b i_l a_l ∈ Z.
Rational sun_cs_partially_reducible(int N, long long b, const std::vector<long long>& blocks,
                                    const std::vector<Rational>& a);

// SU(3) CS value families for shear b: {(n²+m²+nm)/b}, {3n²/(4b)}, {-b/3},
// all mod 1.
std::set<Rational> su3_cs_phase_set(long long b);

// The relator map on su(2)³ in the basis {e1,e2,e3}; 9x9 real.
Eigen::Matrix<double, 9, 9> cocycle_matrix(const ConnectionTriple& t);

// h0 = dim of the common Ad-fixed space, h1 = dim ker R - dim B¹, ranks by
// singular values against an absolute 1e-8 threshold.
CohomologyDims cohomology_dims(const ConnectionTriple& t);

// Generic value of (h1 - h0)/2 on the component, sampled at 32 seeded
// quasi-random parameter points bounded away from {0, 1/2}.
Rational growth_rate(const ModuliComponent& component, long long b);

// Helpers for building sample triples.
Eigen::Matrix2cd su2_diag(double theta);            // diag(e^{2πiθ}, e^{-2πiθ})
Eigen::Matrix2cd su2_off_diag(double theta);        // [[0, e^{2πiθ}], [-e^{-2πiθ}, 0]]
ConnectionTriple irreducible_point_triple(long long b);  // the M_{-b/4} holonomy, b odd

}  // namespace torusq
