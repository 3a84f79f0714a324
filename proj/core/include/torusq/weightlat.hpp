#pragma once

#include <functional>
#include <vector>

#include "torusq/rational.hpp"

namespace torusq {

// Young diagram as a trimmed, weakly decreasing list of positive row
// lengths; the empty list is the empty diagram. Labels of the quantum
// SU(N) theory at level k are the diagrams with < N rows and rows <= k.
struct YoungDiagram {
    std::vector<int> rows;

    YoungDiagram() = default;
    explicit YoungDiagram(std::vector<int> r);

    int row(int i) const { return i < (int)rows.size() ? rows[i] : 0; }
    long long cells() const;
    bool in_gamma(int N, int k) const;

    friend bool operator==(const YoungDiagram& a, const YoungDiagram& b) { return a.rows == b.rows; }
    friend auto operator<=>(const YoungDiagram& a, const YoungDiagram& b) = default;
};

// Weight written over the fundamental weights Λ_1..Λ_{N-1}.
struct WeightVector {
    std::vector<long long> coeffs;
    int N = 2;

    bool dominant() const;
    bool in_level(int k) const;  // dominant and ⟨λ,θ⟩ <= k

    friend bool operator==(const WeightVector& a, const WeightVector& b) = default;
};

// ⟨Λ_i, Λ_j⟩ = min(i,j) - ij/N, the inverse Cartan matrix of A_{N-1}.
struct InnerProductTable {
    int N;
    explicit InnerProductTable(int N_);
    Rational at(int i, int j) const;  // 1-based
};

WeightVector rho_weight(int N);  // all-ones coefficients

// All labels with < N rows and row length <= k, in graded lexicographic
// order (by cell count, then by the row vector). |result| = C(k+N-1, N-1).
std::vector<YoungDiagram> enumerate_diagrams(int N, int k);

// Visits the same diagrams in the same order without materialising them.
void for_each_diagram(int N, int k, const std::function<void(const YoungDiagram&)>& fn);

// ε_i = λ_i - λ_{i+1} with λ_N = 0; bijection onto dominant weights.
WeightVector diagram_to_weight(const YoungDiagram& lambda, int N);
YoungDiagram weight_to_diagram(const WeightVector& w);

Rational inner_product(const WeightVector& mu, const WeightVector& nu);

// E(λ) = -|λ|² + N²|λ| + 2N Σ_{(i,j)∈λ} (j-i): the twist exponent; satisfies
// ⟨λ+ρ, λ+ρ⟩ - N·dim SU(N)/12 = E(λ)/N exactly.
long long casimir_exponent(const YoungDiagram& lambda, int N);

// Label duality λ_i -> λ_1 - λ_{N+1-i}; an involution of Γ_{N,k}.
YoungDiagram involution_star(const YoungDiagram& lambda, int N);

inline bool is_self_dual(const YoungDiagram& lambda, int N) {
    return involution_star(lambda, N) == lambda;
}

}  // namespace torusq
