#pragma once

#include <Eigen/Dense>

#include "torusq/phase.hpp"
#include "torusq/sl2z.hpp"
#include "torusq/weightlat.hpp"

namespace torusq {

// Root of unity convention: a = e^{-2πi/(2Nr)} with r = k+N throughout.

struct InvariantResult {
    Complex value;
    int N = 2;
    int k = 0;
    int r = 2;
    enum class Method { direct, closed, word } method = Method::direct;
    bool framing_corrected = false;
};

// a^{E(λ)}, the diagonal twist entry; unimodular.
Complex t_matrix_entry(int N, int k, const YoungDiagram& lambda);
RationalPhase t_matrix_phase(int N, int k, const YoungDiagram& lambda);

// Trace sums over the labels: trace 2 sums a^{bE(λ)} over all of Γ_{N,k},
// trace -2 restricts to the self-dual labels. Rejects other classes.
InvariantResult invariant_direct(int N, int k, const BundleClass& cls);

// N = 2 only: eigenvalue of the curve operator of a colour-j unknot on the
// basis vector l; equals χ_j(π(l+1)/r).
double curve_operator_eigenvalue(int k, int j, int l);

// N = 2, trace 2 with a colour-j link along a fiber: direct sum and the
// closed form; b != 0. These two are oracle pairs.
Complex invariant_su2_link_direct(int k, long long b, int j);
Complex invariant_su2_link_closed(int k, long long b, int j);

// N = 2 closed form for the link-less manifolds, b != 0.
Complex invariant_su2_closed(int k, long long b);

// N = 3 closed form, b != 0.
Complex invariant_su3_closed(int k, long long b);

// |Γ_{N,k}| = (r-1)(r-2)...(r-(N-1)) / (N-1)!
long long verlinde_dim(int N, int k);

// Closed form for the self-dual label count (trace -2, b = 0).
Complex tilde_verlinde(int N, int k);

// N = 3 closed form for the trace -2, b = 1 bundle (case split on r mod 4).
Complex invariant_su3_tilde1(int k);

// N = 2: the finite-order invariants, framing-uncorrected.
Complex invariant_finite_order(int k, FiniteOrderTag tag);

// N = 2: |Z_k(T_U)| for hyperbolic U from the double Gauss sum over both
// trace branches; the external framing prefactor is dropped, so only the
// modulus is meaningful. Requires |a+d| > 2 and c != 0.
double invariant_hyperbolic_modulus(long long k, const SL2ZMatrix& U);

// N = 2: |tr of the S/T word product| along sl2z_word(U); the projective
// phase is not contractual, only the modulus.
double invariant_word_modulus(int k, const SL2ZMatrix& U);
Complex invariant_word_trace(int k, const SL2ZMatrix& U);

// N = 2: S_{jl} = sqrt(2/r) sin(π(j+1)(l+1)/r); symmetric and orthogonal.
Eigen::MatrixXd s_matrix(int k);

// N = 2: D⁻¹Δ with Δ = Σ_j T_jj⁻¹ [j+1]²; equals (e^{2πic/24})³, c = 3k/r.
Complex framing_factor(int k);

// e^{2πic/24} with c = (N²-1)k/r, as an exact phase.
Complex central_charge_anomaly(int N, int k);

}  // namespace torusq
