#pragma once

#include <vector>

#include "torusq/phase.hpp"
#include "torusq/rational.hpp"

namespace torusq {

using IntMatrix = std::vector<std::vector<long long>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

// Lattice presented by the Gram matrix of a chosen basis. Gram must be
// symmetric positive definite with rational entries.
struct IntegralLattice {
    int rank = 0;
    RationalMatrix gram;

    IntegralLattice() = default;
    IntegralLattice(int rank_, RationalMatrix gram_);

    const RationalMatrix& dual_gram() const { return dual_gram_; }
    double volume() const;       // sqrt(det Gram)
    double dual_volume() const;  // 1/volume

private:
    RationalMatrix dual_gram_;  // Gram⁻¹
};

// Data of the reciprocity transform: e^{iπ⟨λ,Bλ⟩/r + 2πi⟨λ,ψ⟩} summed over
// Λ/rΛ against its dual-side counterpart. B acts by an integer matrix on the
// lattice basis and must be self-adjoint for the Gram form; ψ is given in
// dual-basis coordinates. The six integrality conditions are validated on
// construction and violations throw.
struct GaussSumProblem {
    IntegralLattice lattice;
    IntMatrix B;
    std::vector<Rational> psi;
    long long r = 1;
    bool audit = false;  // brute-force sign cross-check in lattice_gauss_rhs

    GaussSumProblem(IntegralLattice lat, IntMatrix B_, std::vector<Rational> psi_, long long r_,
                    bool audit_ = false);
};

// Σ_{n=0}^{|c|-1} e^{iπ(an²+bn)/c}; requires a,c != 0 and ac+b even.
Complex gauss_sum_1d(long long a, long long b, long long c);

// |c/a|^{1/2} e^{iπ(|ac|-b²)/(4ac)} Σ_{n=0}^{|a|-1} e^{-iπ(cn²+bn)/a};
// equals gauss_sum_1d under the same hypotheses.
Complex reciprocity_rhs_1d(long long a, long long b, long long c);

// vol(Λ*) Σ_{λ∈Λ/rΛ} e^{iπ⟨λ,Bλ⟩/r} e^{2πi⟨λ,ψ⟩}, coset representatives
// {0..r-1}^l in lexicographic order.
Complex lattice_gauss_lhs(const GaussSumProblem& p);

// det(B/i)^{-1/2} r^{l/2} Σ_{μ∈Λ*/BΛ*} e^{-iπ⟨μ+ψ, rB⁻¹(μ+ψ)⟩}. The branch of
// det(B/i)^{-1/2} is taken factor-wise over the spectrum of B, giving
// |det B|^{-1/2} e^{iπ(p-q)/4} for signature (p,q).
Complex lattice_gauss_rhs(const GaussSumProblem& p);

// Coset representatives of Z^l / M Z^l via the Smith normal form D = U M V;
// exactly |det M| of them, pairwise inequivalent.
std::vector<std::vector<long long>> enumerate_quotient(const IntMatrix& M);

// D = U*M*V with U, V unimodular and D diagonal, d_i | d_{i+1}.
struct SmithForm {
    IntMatrix U, D, V;
};
SmithForm smith_normal_form(const IntMatrix& M);

long long int_det(const IntMatrix& M);

}  // namespace torusq
