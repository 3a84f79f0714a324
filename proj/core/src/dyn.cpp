#include "torusq/dyn.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "torusq/wrt.hpp"

namespace torusq {

namespace {

BigInt checked_mul(BigInt a, BigInt b) {
    if (a == 0 || b == 0) return 0;
    BigInt r = a * b;
    if (r / b != a) throw std::overflow_error("dyn: 128-bit overflow in matrix power");
    return r;
}

BigInt big_abs(BigInt v) { return v < 0 ? -v : v; }

double big_to_double(BigInt v) {
    bool neg = v < 0;
    if (neg) v = -v;
    double out = 0;
    double scale = 1;
    while (v > 0) {
        out += (double)(long long)(v % 1000000000) * scale;
        v /= 1000000000;
        scale *= 1e9;
    }
    return neg ? -out : out;
}

// |Z| for levels where every Gauss summand is 1: both branch sums collapse
// to |c||t∓2| and |Z| = (√|t+2| - √|t-2|)/2, written in rationalised form
// to avoid cancellation for large traces.
double collapsed_modulus(double abs_trace) {
    return 2.0 / (std::sqrt(abs_trace + 2.0) + std::sqrt(abs_trace - 2.0));
}

}  // namespace

std::string bigint_to_string(BigInt v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    if (neg) v = -v;
    std::string s;
    while (v > 0) {
        s.push_back('0' + (char)(v % 10));
        v /= 10;
    }
    if (neg) s.push_back('-');
    return std::string(s.rbegin(), s.rend());
}

double spectral_radius(const SL2ZMatrix& U) {
    if (!U.unimodular()) throw std::invalid_argument("spectral_radius: det != 1");
    double t = std::llabs(U.trace());
    if (t <= 2) return 1.0;
    return (t + std::sqrt(t * t - 4.0)) / 2.0;
}

BigInt sl2z_trace_power(const SL2ZMatrix& U, int m) {
    if (m < 0) throw std::invalid_argument("sl2z_trace_power: m >= 0 required");
    // t_0 = 2, t_1 = tr U, t_{j+1} = (tr U) t_j - t_{j-1}
    BigInt prev = 2, cur = U.trace();
    if (m == 0) return prev;
    for (int j = 1; j < m; ++j) {
        BigInt next = checked_mul(U.trace(), cur) - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

StretchEstimate stretch_via_invariant(const SL2ZMatrix& U, int n) {
    if (n < 1) throw std::invalid_argument("stretch_via_invariant: n >= 1 required");
    long long t = U.trace();
    if (std::llabs(t) <= 2) throw std::invalid_argument("stretch_via_invariant: |trace| > 2 required");
    long long k = n * (t * t - 4) - 2;
    double z = invariant_hyperbolic_modulus(k, U);
    return {1.0 / (z * z), n, StretchEstimate::Method::invariant};
}

BigInt fixed_point_count(const SL2ZMatrix& U, int m) {
    if (m < 1) throw std::invalid_argument("fixed_point_count: m >= 1 required");
    if (!U.unimodular()) throw std::invalid_argument("fixed_point_count: det != 1");
    BigInt tm = sl2z_trace_power(U, m);
    if (big_abs(tm) == 2)
        throw std::invalid_argument("fixed_point_count: |tr U^m| = 2, count undefined");

    // U^m mod 2, by squaring
    auto mul2 = [](const SL2ZMatrix& x, const SL2ZMatrix& y) {
        return SL2ZMatrix{(x.a * y.a + x.b * y.c) & 1, (x.a * y.b + x.b * y.d) & 1,
                          (x.c * y.a + x.d * y.c) & 1, (x.c * y.b + x.d * y.d) & 1};
    };
    SL2ZMatrix W{1, 0, 0, 1};
    SL2ZMatrix base{U.a & 1 ? 1 : 0, U.b & 1 ? 1 : 0, U.c & 1 ? 1 : 0, U.d & 1 ? 1 : 0};
    int e = m;
    while (e > 0) {
        if (e & 1) W = mul2(W, base);
        base = mul2(base, base);
        e >>= 1;
    }
    // half-integer points (ε1/2, ε2/2) fixed by U^m: (W - I)ε ≡ 0 mod 2
    int shared = 0;
    for (int e1 = 0; e1 <= 1; ++e1)
        for (int e2 = 0; e2 <= 1; ++e2) {
            long long r1 = (W.a * e1 + W.b * e2 - e1) & 1;
            long long r2 = (W.c * e1 + W.d * e2 - e2) & 1;
            if (r1 == 0 && r2 == 0) ++shared;
        }
    return big_abs(tm + 2) + big_abs(tm - 2) - shared;
}

StretchEstimate root_limit(const SL2ZMatrix& U, int n) {
    if (n < 1) throw std::invalid_argument("root_limit: n >= 1 required");
    if (std::llabs(U.trace()) <= 2) throw std::invalid_argument("root_limit: |trace| > 2 required");
    // k_n = (tr U^n)² - 6, so r = (t-2)(t+2) divides every phase denominator
    double t = std::fabs(big_to_double(sl2z_trace_power(U, n)));
    double z = collapsed_modulus(t);
    double root = std::pow(z, 1.0 / n);
    return {1.0 / (root * root), n, StretchEstimate::Method::root_limit};
}

}  // namespace torusq
