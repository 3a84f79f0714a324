#include "torusq/gaussrec.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace torusq {

namespace {

RationalMatrix rational_identity(int n) {
    RationalMatrix I(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i) I[i][i] = Rational(1);
    return I;
}

Rational rational_det(RationalMatrix A) {
    const int n = (int)A.size();
    Rational det(1);
    for (int t = 0; t < n; ++t) {
        int piv = -1;
        for (int i = t; i < n; ++i)
            if (!A[i][t].is_zero()) { piv = i; break; }
        if (piv < 0) return Rational(0);
        if (piv != t) { std::swap(A[piv], A[t]); det = -det; }
        det *= A[t][t];
        for (int i = t + 1; i < n; ++i) {
            Rational f = A[i][t] / A[t][t];
            for (int j = t; j < n; ++j) A[i][j] -= f * A[t][j];
        }
    }
    return det;
}

RationalMatrix rational_inverse(RationalMatrix A) {
    const int n = (int)A.size();
    RationalMatrix inv = rational_identity(n);
    for (int t = 0; t < n; ++t) {
        int piv = -1;
        for (int i = t; i < n; ++i)
            if (!A[i][t].is_zero()) { piv = i; break; }
        if (piv < 0) throw std::domain_error("rational_inverse: singular matrix");
        std::swap(A[piv], A[t]);
        std::swap(inv[piv], inv[t]);
        Rational p = A[t][t];
        for (int j = 0; j < n; ++j) { A[t][j] /= p; inv[t][j] /= p; }
        for (int i = 0; i < n; ++i) {
            if (i == t || A[i][t].is_zero()) continue;
            Rational f = A[i][t];
            for (int j = 0; j < n; ++j) {
                A[i][j] -= f * A[t][j];
                inv[i][j] -= f * inv[t][j];
            }
        }
    }
    return inv;
}

bool is_symmetric(const RationalMatrix& A) {
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = i + 1; j < A.size(); ++j)
            if (!(A[i][j] == A[j][i])) return false;
    return true;
}

// Gram*B, the matrix of the quadratic form ⟨x, Bx⟩ on the lattice basis.
RationalMatrix primal_form(const GaussSumProblem& p) {
    const int l = p.lattice.rank;
    RationalMatrix P(l, std::vector<Rational>(l, Rational(0)));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            for (int m = 0; m < l; ++m)
                P[i][j] += p.lattice.gram[i][m] * Rational(p.B[m][j]);
    return P;
}

}  // namespace

IntegralLattice::IntegralLattice(int rank_, RationalMatrix gram_) : rank(rank_), gram(std::move(gram_)) {
    if (rank < 1 || (int)gram.size() != rank)
        throw std::invalid_argument("IntegralLattice: bad rank");
    for (const auto& row : gram)
        if ((int)row.size() != rank) throw std::invalid_argument("IntegralLattice: bad Gram shape");
    if (!is_symmetric(gram)) throw std::invalid_argument("IntegralLattice: Gram not symmetric");
    // positive definiteness via leading principal minors
    for (int t = 1; t <= rank; ++t) {
        RationalMatrix lead(t, std::vector<Rational>(t));
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j) lead[i][j] = gram[i][j];
        if (!(rational_det(lead) > Rational(0)))
            throw std::invalid_argument("IntegralLattice: Gram not positive definite");
    }
    dual_gram_ = rational_inverse(gram);
}

double IntegralLattice::volume() const { return std::sqrt(rational_det(gram).to_double()); }
double IntegralLattice::dual_volume() const { return 1.0 / volume(); }

GaussSumProblem::GaussSumProblem(IntegralLattice lat, IntMatrix B_, std::vector<Rational> psi_,
                                 long long r_, bool audit_)
    : lattice(std::move(lat)), B(std::move(B_)), psi(std::move(psi_)), r(r_), audit(audit_) {
    const int l = lattice.rank;
    if (r == 0) throw std::invalid_argument("GaussSumProblem: r must be nonzero");
    if ((int)B.size() != l) throw std::invalid_argument("GaussSumProblem: B shape");
    for (const auto& row : B)
        if ((int)row.size() != l) throw std::invalid_argument("GaussSumProblem: B shape");
    if ((int)psi.size() != l) throw std::invalid_argument("GaussSumProblem: psi shape");

    RationalMatrix P = primal_form(*this);  // Gram*B
    if (!is_symmetric(P)) throw std::invalid_argument("GaussSumProblem: B not self-adjoint");
    if (rational_det(P).is_zero()) throw std::invalid_argument("GaussSumProblem: B singular");

    // The six integrality conditions, checked on basis vectors:
    //   (GB)_{ij} ∈ Z, r(GB)_{ii} even   -- ½r⟨λ,Bλ⟩, ⟨λ,Bη⟩ ∈ Z
    //   rψ_i ∈ Z                          -- r⟨λ,ψ⟩ ∈ Z
    //   r(BG⁻¹)_{ij} ∈ Z, r(BG⁻¹)_{ii} even -- ½r⟨μ,Bμ⟩ ∈ Z
    //   r(G⁻¹)_{ij} ∈ Z                   -- r⟨μ,ξ⟩ ∈ Z
    //   r(G⁻¹ψ)_i ∈ Z                     -- r⟨μ,ψ⟩ ∈ Z
    auto integral = [](const Rational& q) { return q.is_integer(); };
    auto even_integer = [](const Rational& q) { return q.is_integer() && q.num() % 2 == 0; };
    const Rational rr((long long)r);
    for (int i = 0; i < l; ++i) {
        if (!even_integer(rr * P[i][i]))
            throw std::invalid_argument("GaussSumProblem: r<e_i,Be_i> not even");
        for (int j = 0; j < l; ++j)
            if (!integral(P[i][j]))
                throw std::invalid_argument("GaussSumProblem: <e_i,Be_j> not integral");
        if (!integral(rr * psi[i]))
            throw std::invalid_argument("GaussSumProblem: r<lambda,psi> not integral");
    }
    const RationalMatrix& Gi = lattice.dual_gram();
    RationalMatrix Q(l, std::vector<Rational>(l, Rational(0)));  // B*G⁻¹, the dual form
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            for (int m = 0; m < l; ++m) Q[i][j] += Rational(B[i][m]) * Gi[m][j];
    for (int i = 0; i < l; ++i) {
        if (!even_integer(rr * Q[i][i]))
            throw std::invalid_argument("GaussSumProblem: r<mu,Bmu> not even");
        Rational rp(0);
        for (int j = 0; j < l; ++j) {
            if (!integral(rr * Gi[i][j]))
                throw std::invalid_argument("GaussSumProblem: r<mu,xi> not integral");
            if (i != j && !integral(rr * Q[i][j]))
                throw std::invalid_argument("GaussSumProblem: r<mu,Bmu> not integral");
            rp += Gi[i][j] * psi[j];
        }
        if (!integral(rr * rp))
            throw std::invalid_argument("GaussSumProblem: r<mu,psi> not integral");
    }
}

Complex gauss_sum_1d(long long a, long long b, long long c) {
    if (a == 0 || c == 0) throw std::invalid_argument("gauss_sum_1d: a, c must be nonzero");
    if ((a * c + b) % 2 != 0) throw std::invalid_argument("gauss_sum_1d: ac+b must be even");
    Complex s(0, 0);
    long long cc = std::llabs(c);
    for (long long n = 0; n < cc; ++n)
        s += phase_pi(Rational(a * n * n + b * n, c));
    return s;
}

Complex reciprocity_rhs_1d(long long a, long long b, long long c) {
    if (a == 0 || c == 0) throw std::invalid_argument("reciprocity_rhs_1d: a, c must be nonzero");
    if ((a * c + b) % 2 != 0) throw std::invalid_argument("reciprocity_rhs_1d: ac+b must be even");
    Complex s(0, 0);
    long long aa = std::llabs(a);
    for (long long n = 0; n < aa; ++n)
        s += phase_pi(-Rational(c * n * n + b * n, a));
    double scale = std::sqrt(std::fabs((double)c / (double)a));
    Complex twist = phase_pi(Rational(std::llabs(a * c) - b * b, 4 * a * c));
    return scale * twist * s;
}

Complex lattice_gauss_lhs(const GaussSumProblem& p) {
    const int l = p.lattice.rank;
    RationalMatrix P = primal_form(p);
    long long rr = std::llabs(p.r);
    // integer quadratic form x^T (GB) x
    std::vector<long long> Pi(l * l);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) Pi[i * l + j] = P[i][j].num();

    std::vector<long long> x(l, 0);
    Complex s(0, 0);
    while (true) {
        long long q2 = 0;
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) q2 += Pi[i * l + j] * x[i] * x[j];
        Rational expo = Rational(q2, p.r);
        for (int i = 0; i < l; ++i) expo += Rational(2) * Rational(x[i]) * p.psi[i];
        s += phase_pi(expo);
        int t = l - 1;
        while (t >= 0 && x[t] == rr - 1) { x[t] = 0; --t; }
        if (t < 0) break;
        ++x[t];
    }
    return p.lattice.dual_volume() * s;
}

Complex lattice_gauss_rhs(const GaussSumProblem& p) {
    const int l = p.lattice.rank;
    // B acts on the dual basis by B^T; cosets of Λ*/BΛ* are Z^l / B^T Z^l.
    IntMatrix Bt(l, std::vector<long long>(l));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) Bt[i][j] = p.B[j][i];
    auto reps = enumerate_quotient(Bt);

    // ⟨μ+ψ, B⁻¹(μ+ψ)⟩ in dual coordinates is (y+ψ)^T (GB)⁻¹ (y+ψ).
    RationalMatrix W = rational_inverse(primal_form(p));

    Complex s(0, 0);
    for (const auto& y : reps) {
        std::vector<Rational> v(l);
        for (int i = 0; i < l; ++i) v[i] = Rational(y[i]) + p.psi[i];
        Rational q(0);
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) q += v[i] * W[i][j] * v[j];
        s += phase_pi(-Rational(p.r) * q);
    }

    // det(B/i)^{-1/2} factor-wise over the spectrum: each eigenvalue β
    // contributes |β|^{-1/2} e^{i sgn(β) π/4}.
    Eigen::MatrixXd Pd(l, l);
    RationalMatrix P = primal_form(p);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) Pd(i, j) = P[i][j].to_double();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Pd);
    int pos = 0, neg = 0;
    for (int i = 0; i < l; ++i) (es.eigenvalues()[i] > 0 ? pos : neg)++;

    double absdetB = std::fabs((double)int_det(p.B));
    Complex det_factor = std::pow(absdetB, -0.5) * phase_pi(Rational(pos - neg, 4));
    Complex rhs = det_factor * std::pow((double)std::llabs(p.r), l / 2.0) * s;

    if (p.audit) {
        Complex lhs = lattice_gauss_lhs(p);
        double scale = 1.0 + std::abs(lhs);
        if (std::abs(lhs - rhs) > 1e-6 * scale)
            throw std::runtime_error("lattice_gauss_rhs: sign audit failed against brute force");
    }
    return rhs;
}

SmithForm smith_normal_form(const IntMatrix& M) {
    const int n = (int)M.size();
    for (const auto& row : M)
        if ((int)row.size() != n) throw std::invalid_argument("smith_normal_form: square matrix required");
    SmithForm f;
    f.D = M;
    f.U = IntMatrix(n, std::vector<long long>(n, 0));
    f.V = IntMatrix(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) f.U[i][i] = f.V[i][i] = 1;
    auto& D = f.D;

    auto row_op = [&](int dst, int src, long long q) {  // row dst -= q * row src
        for (int j = 0; j < n; ++j) {
            D[dst][j] -= q * D[src][j];
            f.U[dst][j] -= q * f.U[src][j];
        }
    };
    auto col_op = [&](int dst, int src, long long q) {
        for (int i = 0; i < n; ++i) {
            D[i][dst] -= q * D[i][src];
            f.V[i][dst] -= q * f.V[i][src];
        }
    };
    auto row_swap = [&](int i1, int i2) { std::swap(D[i1], D[i2]); std::swap(f.U[i1], f.U[i2]); };
    auto col_swap = [&](int j1, int j2) {
        for (int i = 0; i < n; ++i) { std::swap(D[i][j1], D[i][j2]); std::swap(f.V[i][j1], f.V[i][j2]); }
    };

    for (int t = 0; t < n; ++t) {
        while (true) {
            // smallest nonzero pivot in the trailing block
            int pi = -1, pj = -1;
            for (int i = t; i < n; ++i)
                for (int j = t; j < n; ++j)
                    if (D[i][j] != 0 &&
                        (pi < 0 || std::llabs(D[i][j]) < std::llabs(D[pi][pj]))) { pi = i; pj = j; }
            if (pi < 0) break;  // trailing block zero
            if (pi != t) row_swap(t, pi);
            if (pj != t) col_swap(t, pj);

            bool clean = true;
            for (int i = t + 1; i < n; ++i)
                if (D[i][t] != 0) { row_op(i, t, D[i][t] / D[t][t]); if (D[i][t] != 0) clean = false; }
            for (int j = t + 1; j < n; ++j)
                if (D[t][j] != 0) { col_op(j, t, D[t][j] / D[t][t]); if (D[t][j] != 0) clean = false; }
            if (!clean) continue;

            // divisibility: pivot must divide the rest of the block
            bool divides = true;
            for (int i = t + 1; i < n && divides; ++i)
                for (int j = t + 1; j < n && divides; ++j)
                    if (D[i][j] % D[t][t] != 0) {
                        row_op(t, i, -1);  // add row i, then re-reduce
                        divides = false;
                    }
            if (divides) break;
        }
        if (D[t][t] < 0) {
            for (int j = 0; j < n; ++j) { D[t][j] = -D[t][j]; f.U[t][j] = -f.U[t][j]; }
        }
    }
    return f;
}

long long int_det(const IntMatrix& M) {
    // fraction-free Gaussian elimination (Bareiss)
    const int n = (int)M.size();
    std::vector<std::vector<__int128>> A(n, std::vector<__int128>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A[i][j] = M[i][j];
    __int128 prev = 1;
    int sign = 1;
    for (int t = 0; t < n - 1; ++t) {
        if (A[t][t] == 0) {
            int piv = -1;
            for (int i = t + 1; i < n; ++i)
                if (A[i][t] != 0) { piv = i; break; }
            if (piv < 0) return 0;
            std::swap(A[t], A[piv]);
            sign = -sign;
        }
        for (int i = t + 1; i < n; ++i)
            for (int j = t + 1; j < n; ++j)
                A[i][j] = (A[i][j] * A[t][t] - A[i][t] * A[t][j]) / prev;
        prev = A[t][t];
    }
    __int128 det = sign * A[n - 1][n - 1];
    if (det > INT64_MAX || det < INT64_MIN) throw std::overflow_error("int_det: overflow");
    return (long long)det;
}

std::vector<std::vector<long long>> enumerate_quotient(const IntMatrix& M) {
    const int n = (int)M.size();
    long long det = int_det(M);
    if (det == 0) throw std::invalid_argument("enumerate_quotient: singular matrix");
    SmithForm f = smith_normal_form(M);

    // invert the unimodular U by adjugate (det = ±1)
    long long du = int_det(f.U);
    IntMatrix Uinv(n, std::vector<long long>(n, 0));
    if (n == 1) {
        Uinv[0][0] = du;
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                IntMatrix minor(n - 1, std::vector<long long>(n - 1));
                for (int a = 0, ai = 0; a < n; ++a) {
                    if (a == j) continue;
                    for (int b = 0, bj = 0; b < n; ++b) {
                        if (b == i) continue;
                        minor[ai][bj++] = f.U[a][b];
                    }
                    ++ai;
                }
                long long c = int_det(minor);
                Uinv[i][j] = du * (((i + j) % 2 == 0) ? c : -c);
            }
    }

    std::vector<std::vector<long long>> reps;
    reps.reserve((size_t)std::llabs(det));
    std::vector<long long> t(n, 0);
    while (true) {
        std::vector<long long> x(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) x[i] += Uinv[i][j] * t[j];
        reps.push_back(std::move(x));
        int p = n - 1;
        while (p >= 0 && t[p] == f.D[p][p] - 1) { t[p] = 0; --p; }
        if (p < 0) break;
        ++t[p];
    }
    return reps;
}

}  // namespace torusq
