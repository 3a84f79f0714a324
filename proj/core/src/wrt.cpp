#include "torusq/wrt.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace torusq {

namespace {

long long sgn(long long x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

}  // namespace

RationalPhase t_matrix_phase(int N, int k, const YoungDiagram& lambda) {
    if (!lambda.in_gamma(N, k)) throw std::invalid_argument("t_matrix_entry: label out of range");
    long long r = k + N;
    return RationalPhase(Rational(-casimir_exponent(lambda, N), N * r));
}

Complex t_matrix_entry(int N, int k, const YoungDiagram& lambda) {
    return t_matrix_phase(N, k, lambda).value();
}

InvariantResult invariant_direct(int N, int k, const BundleClass& cls) {
    if (N < 2 || k < 0) throw std::invalid_argument("invariant_direct: N >= 2, k >= 0 required");
    bool self_dual_only;
    long long b;
    switch (cls.kind) {
        case BundleClass::Kind::trace2: self_dual_only = false; b = cls.shear; break;
        case BundleClass::Kind::trace_minus2: self_dual_only = true; b = cls.shear; break;
        default: throw std::invalid_argument("invariant_direct: trace ±2 classes only");
    }
    const long long r = k + N;
    Complex sum(0, 0);
    for_each_diagram(N, k, [&](const YoungDiagram& lambda) {
        if (self_dual_only && !is_self_dual(lambda, N)) return;
        sum += phase_pi(Rational(-b * casimir_exponent(lambda, N), N * r));
    });
    InvariantResult res;
    res.value = sum;
    res.N = N;
    res.k = k;
    res.r = (int)r;
    res.method = InvariantResult::Method::direct;
    return res;
}

double curve_operator_eigenvalue(int k, int j, int l) {
    if (j < 0 || j > k || l < 0 || l > k)
        throw std::invalid_argument("curve_operator_eigenvalue: labels out of range");
    const double r = k + 2;
    // (a^{2(j+1)(l+1)} - a^{-2(j+1)(l+1)})/(a^{2(l+1)} - a^{-2(l+1)})
    //  = sin(π(j+1)(l+1)/r)/sin(π(l+1)/r), the character χ_j at π(l+1)/r
    return std::sin(M_PI * (j + 1) * (l + 1) / r) / std::sin(M_PI * (l + 1) / r);
}

Complex invariant_su2_link_direct(int k, long long b, int j) {
    if (j < 0 || j > k) throw std::invalid_argument("invariant_su2_link_direct: j out of range");
    if (b == 0) throw std::invalid_argument("invariant_su2_link_direct: b must be nonzero");
    const long long r = k + 2;
    Complex sum(0, 0);
    for (int n = 0; n <= k; ++n) {
        Complex tw = phase_pi(Rational(-b * ((long long)n * n + 2 * n), 2 * r));
        sum += tw * curve_operator_eigenvalue(k, j, n);
    }
    return sum;
}

Complex invariant_su2_link_closed(int k, long long b, int j) {
    if (j < 0 || j > k) throw std::invalid_argument("invariant_su2_link_closed: j out of range");
    if (b == 0) throw std::invalid_argument("invariant_su2_link_closed: b must be nonzero");
    const long long r = k + 2;
    const long long ab = std::llabs(b);

    Complex gauss(0, 0);
    for (long long n = 0; n < ab; ++n) {
        Complex outer = phase_2pi(Rational(r * n * n, b));
        Complex inner(0, 0);
        for (int l = 0; l <= j; ++l) {
            long long m = 2LL * l - j;
            inner += phase_2pi(Rational(m * m, 4 * b * r) + Rational(m * n, b));
        }
        gauss += outer * inner;
    }
    Complex corner = std::sqrt(r / (2.0 * ab)) * phase_pi(Rational(-sgn(b), 4)) * gauss;
    Complex tail = -Complex(j + 1, 0) / 2.0 -
                   ((j % 2 == 0 ? 1.0 : -1.0) * (j + 1) / 2.0) * phase_pi(Rational(-b * r, 2));
    return phase_pi(Rational(b, 2 * r)) * (corner + tail);
}

Complex invariant_su2_closed(int k, long long b) {
    if (b == 0) throw std::invalid_argument("invariant_su2_closed: b must be nonzero");
    const long long r = k + 2;
    const long long ab = std::llabs(b);
    Complex gauss(0, 0);
    for (long long n = 0; n < ab; ++n) gauss += phase_2pi(Rational(r * n * n, b));
    Complex val = std::sqrt(r / (2.0 * ab)) * phase_pi(Rational(-sgn(b), 4)) * gauss -
                  Complex(0.5, 0) - 0.5 * phase_pi(Rational(-r * b, 2));
    return phase_pi(Rational(b, 2 * r)) * val;
}

Complex invariant_su3_closed(int k, long long b) {
    if (b == 0) throw std::invalid_argument("invariant_su3_closed: b must be nonzero");
    if (b < 0) return std::conj(invariant_su3_closed(k, -b));
    const long long r = k + 3;

    Complex dbl(0, 0);
    for (long long n = 0; n < 3 * b; ++n)
        for (long long m = 0; m < 3 * b; ++m)
            dbl += phase_2pi(Rational(r * (n * n + m * m - n * m), b));
    Complex term1 = Complex(0, -std::sqrt(3.0) / (18.0 * b)) * (double)r * dbl;

    Complex single(0, 0);
    for (long long n = 0; n < 2 * b; ++n) single += phase_pi(Rational(3 * r * n * n, 2 * b));
    Complex term2 = -0.5 * std::sqrt(3.0 / (2.0 * b)) * phase_pi(Rational(-1, 4)) *
                    std::sqrt((double)r) * single;

    Complex term3 = Complex(1.0 / 3.0, 0) + (2.0 / 3.0) * phase_2pi(Rational(-r * b, 3));

    return phase_2pi(Rational(b, r)) * (term1 + term2 + term3);
}

long long verlinde_dim(int N, int k) {
    if (N < 2) throw std::invalid_argument("verlinde_dim: N >= 2 required");
    const long long r = k + N;
    __int128 num = 1, den = 1;
    for (long long i = 1; i <= N - 1; ++i) {
        num *= (r - i);
        den *= i;
    }
    __int128 v = num / den;
    if (v > INT64_MAX) throw std::overflow_error("verlinde_dim: overflow");
    return (long long)v;
}

Complex tilde_verlinde(int N, int k) {
    if (N < 2) throw std::invalid_argument("tilde_verlinde: N >= 2 required");
    const long long r = k + N;
    const Rational half(1, 2);
    double sgn_r = (r % 2 == 0) ? 1.0 : -1.0;  // e^{iπr}
    if (N % 2 == 0) {
        long long n = N / 2;
        Rational A = Rational(r, 2) - Rational(n, 2);
        for (long long l = 1; l <= n - 1; ++l) A *= Rational(r, 2) - Rational(l);
        Rational B(1);
        for (long long l = 1; l <= n; ++l) B *= Rational(r + 1, 2) - Rational(l);
        Rational fact(1);
        for (long long l = 2; l <= n; ++l) fact *= Rational(l);
        Rational p = (A + B) / fact;
        Rational m = (A - B) / fact;
        return Complex(p.to_double() + m.to_double() * sgn_r, 0);
    }
    long long n = (N + 1) / 2;
    Rational A(1), B(1);
    for (long long l = 1; l <= n - 1; ++l) {
        A *= Rational(r, 2) - Rational(l);
        B *= Rational(r + 1, 2) - Rational(l);
    }
    Rational fact(2);
    for (long long l = 2; l <= n - 1; ++l) fact *= Rational(l);
    Rational p = (A + B) / fact;
    Rational m = (A - B) / fact;
    return Complex(p.to_double() + m.to_double() * sgn_r, 0);
}

Complex invariant_su3_tilde1(int k) {
    const long long r = k + 3;
    // self-dual trace sum e^{2πi/r} Σ_{n=1}^{⌊(r-1)/2⌋} e^{-2πin²/r}, summed in
    // closed form by the parity of r
    Complex pref = phase_2pi(Rational(1, r));
    if (r % 4 == 0)
        return pref * (std::sqrt(r / 2.0) * phase_pi(Rational(-1, 4)) - 1.0);
    if (r % 4 == 2) return Complex(0, 0);
    Complex inner = std::sqrt(r / 2.0) * phase_pi(Rational(-1, 4)) *
                        (1.0 + phase_pi(Rational(r, 2))) -
                    1.0;
    return pref * 0.5 * inner;
}

Complex invariant_finite_order(int k, FiniteOrderTag tag) {
    const long long r = k + 2;
    const Complex one(1, 0);
    auto f3 = [&]() {
        return Complex(0, 1) / (2.0 * std::sqrt(3.0)) * (2.0 * phase_2pi(Rational(-r, 3)) + one) +
               0.5 * Complex(0, -1);
    };
    auto f4 = [&]() { return 0.5 * (phase_pi(Rational(r, 1)) + one); };
    auto f6 = [&]() {
        return Complex(0, 1) / (2.0 * std::sqrt(3.0)) * (2.0 * phase_2pi(Rational(r, 3)) + one) +
               Complex(0.5, 0);
    };
    switch (tag) {
        case FiniteOrderTag::identity:
        case FiniteOrderTag::involution: return Complex((double)(r - 1), 0);
        case FiniteOrderTag::f3: return f3();
        case FiniteOrderTag::f3_inv: return std::conj(f3());
        case FiniteOrderTag::f4: return f4();
        case FiniteOrderTag::f4_inv: return std::conj(f4());
        case FiniteOrderTag::f6: return f6();
        case FiniteOrderTag::f6_inv: return std::conj(f6());
    }
    throw std::logic_error("invariant_finite_order");
}

double invariant_hyperbolic_modulus(long long k, const SL2ZMatrix& U) {
    const long long t = U.trace();
    if (std::llabs(t) <= 2) throw std::invalid_argument("invariant_hyperbolic_modulus: |trace| > 2 required");
    if (U.c == 0) throw std::invalid_argument("invariant_hyperbolic_modulus: c != 0 required");
    if (k < 0) throw std::invalid_argument("invariant_hyperbolic_modulus: k >= 0 required");
    const long long r = k + 2;
    const long long ac = std::llabs(U.c);

    Complex total(0, 0);
    for (long long s : {+1LL, -1LL}) {
        const long long u = t - 2 * s;
        const long long au = std::llabs(u);
        Complex inner(0, 0);
        if (r % u == 0) {
            // every exponent is an integer multiple of 2π
            inner = Complex((double)(ac * au), 0);
        } else {
            for (long long beta = 0; beta < ac; ++beta)
                for (long long gamma = 1; gamma <= au; ++gamma) {
                    long long q = -U.c * gamma * gamma + (U.a - U.d) * gamma * beta +
                                  U.b * beta * beta;
                    inner += phase_2pi(Rational(r * q, u));
                }
        }
        total += (double)(s * sgn(u)) / (2.0 * ac * std::sqrt((double)au)) * inner;
    }
    return std::abs(total);
}

Complex invariant_word_trace(int k, const SL2ZMatrix& U) {
    const int dim = k + 1;
    Sl2zWord word = sl2z_word(U);

    Eigen::MatrixXcd M = Eigen::MatrixXcd::Identity(dim, dim);
    Eigen::MatrixXcd S = s_matrix(k).cast<Complex>();
    Eigen::VectorXcd tdiag(dim), tdiag_inv(dim);
    for (int j = 0; j < dim; ++j) {
        // letter T represents [[1,1],[0,1]] = t_μ⁻¹, so it acts by a^{-E(j)}
        Complex tw = t_matrix_entry(2, k, YoungDiagram(j > 0 ? std::vector<int>{j} : std::vector<int>{}));
        tdiag(j) = std::conj(tw);
        tdiag_inv(j) = tw;
    }
    for (Sl2zLetter l : word.letters) {
        switch (l) {
            case Sl2zLetter::S: M = M * S; break;
            case Sl2zLetter::T: M = M * tdiag.asDiagonal(); break;
            case Sl2zLetter::Tinv: M = M * tdiag_inv.asDiagonal(); break;
        }
    }
    return M.trace();
}

double invariant_word_modulus(int k, const SL2ZMatrix& U) {
    return std::abs(invariant_word_trace(k, U));
}

Eigen::MatrixXd s_matrix(int k) {
    const int dim = k + 1;
    const double r = k + 2;
    Eigen::MatrixXd S(dim, dim);
    for (int j = 0; j < dim; ++j)
        for (int l = 0; l <= j; ++l) {
            double v = std::sqrt(2.0 / r) * std::sin(M_PI * (j + 1) * (l + 1) / r);
            S(j, l) = v;
            S(l, j) = v;
        }
    return S;
}

Complex framing_factor(int k) {
    const long long r = k + 2;
    const double sr = std::sin(M_PI / r);
    const double rank = std::sqrt(r / 2.0) / sr;  // D
    Complex delta(0, 0);
    for (int j = 0; j <= k; ++j) {
        double qdim = std::sin(M_PI * (j + 1) / r) / sr;  // [j+1]
        delta += phase_pi(Rational((long long)j * j + 2 * j, 2 * r)) * (qdim * qdim);
    }
    return delta / rank;
}

Complex central_charge_anomaly(int N, int k) {
    // e^{2πic/24}, c = (N²-1)k/r
    const long long r = k + N;
    return phase_2pi(Rational((long long)(N * N - 1) * k, 24 * r));
}

}  // namespace torusq
