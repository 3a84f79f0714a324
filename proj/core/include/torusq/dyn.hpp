#pragma once

#include <string>

#include "torusq/sl2z.hpp"

namespace torusq {

using BigInt = __int128;
std::string bigint_to_string(BigInt v);

struct StretchEstimate {
    double lambda = 1.0;
    int n = 1;
    enum class Method { invariant, root_limit, spectral } method = Method::spectral;
};

// Largest eigenvalue modulus: (|a+d| + sqrt((a+d)²-4))/2 for |trace| > 2,
// 1 otherwise (parabolic and elliptic classes).
double spectral_radius(const SL2ZMatrix& U);

// λ = |Z_k(T_U)|^{-2} at level k = n((a+d)²-4) - 2; level-independent.
StretchEstimate stretch_via_invariant(const SL2ZMatrix& U, int n);

// Fixed points of U^m on the torus moduli space:
// |2+tr U^m| + |2-tr U^m| - n_shared, the shared count enumerated over the
// four half-integer points. Requires |tr U^m| != 2. Ratios of consecutive
// counts converge to the stretch factor.
BigInt fixed_point_count(const SL2ZMatrix& U, int m);

// λ estimate from the n-th root of |Z_{k_n}(T_{U^n})| with
// k_n = (tr U^n)² - 6; the level makes every Gauss summand collapse to 1.
StretchEstimate root_limit(const SL2ZMatrix& U, int n);

// trace of U^m in exact 128-bit arithmetic (Chebyshev-style recurrence);
// throws on overflow.
BigInt sl2z_trace_power(const SL2ZMatrix& U, int m);

}  // namespace torusq
