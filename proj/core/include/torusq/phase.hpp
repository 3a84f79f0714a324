#pragma once

#include <cmath>
#include <complex>

#include "torusq/rational.hpp"

namespace torusq {

using Complex = std::complex<double>;

// Unimodular number e^{iπq} carried as the exact rational q, canonically
// reduced mod 2. All invariant sums reduce their exponents through this
// before touching floating point, so phases are exact mod 2 regardless of
// how large the raw exponents were.
class RationalPhase {
public:
    RationalPhase() : q_(0) {}
    explicit RationalPhase(const Rational& q) : q_(mod_two(q)) {}

    const Rational& exponent() const { return q_; }

    RationalPhase operator*(const RationalPhase& o) const { return RationalPhase(q_ + o.q_); }
    RationalPhase conj() const { return RationalPhase(-q_); }
    RationalPhase pow(long long e) const { return RationalPhase(q_ * Rational(e)); }

    Complex value() const {
        // quarter-integer phases are exact
        if (q_.den() == 1) return q_.num() == 0 ? Complex(1, 0) : Complex(-1, 0);
        if (q_.den() == 2) return q_.num() == 1 ? Complex(0, 1) : Complex(0, -1);
        double t = M_PI * q_.to_double();
        return Complex(std::cos(t), std::sin(t));
    }

    friend bool operator==(const RationalPhase& a, const RationalPhase& b) { return a.q_ == b.q_; }

private:
    Rational q_;  // in [0, 2)
};

// e^{iπq}
inline Complex phase_pi(const Rational& q) { return RationalPhase(q).value(); }

// e^{2πiq}
inline Complex phase_2pi(const Rational& q) { return RationalPhase(q * Rational(2)).value(); }

}  // namespace torusq
