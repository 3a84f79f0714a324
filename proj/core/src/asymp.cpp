#include "torusq/asymp.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "torusq/wrt.hpp"

namespace torusq {

namespace {

long long sgn(long long x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// (iπb/2)^m / m!
Complex prefactor_taylor(long long b, int m) {
    Complex z(0, M_PI * b / 2.0);
    Complex acc(1, 0);
    for (int i = 1; i <= m; ++i) acc *= z / (double)i;
    return acc;
}

}  // namespace

Complex AecTerm::exact_value(long long r) const {
    Complex phase = phase_2pi(mod_one(Rational(r) * c));
    Complex coeff = alpha * std::sqrt((double)r) + delta;
    return phase * coeff * phase_pi(Rational(shear, 2 * r));
}

Complex AecTerm::prefactor_series(int l) const {
    if (l % 2 != 0) return Complex(0, 0);
    return prefactor_taylor(shear, l / 2);
}

Complex AecTerm::series_coefficient(int l) const {
    if (alpha == Complex(0, 0)) {
        // growth-0 term: only the prefactor series, integer powers of 1/r
        return l % 2 == 0 ? prefactor_taylor(shear, l / 2) : Complex(0, 0);
    }
    if (l % 2 == 0) return prefactor_taylor(shear, l / 2);
    return (delta / alpha) * prefactor_taylor(shear, (l - 1) / 2);
}

std::vector<AecTerm> aec_terms_su2(long long b) {
    if (b == 0) throw std::invalid_argument("aec_terms_su2: b must be nonzero");
    const long long ab = std::llabs(b);
    const Complex quarter_turn = phase_pi(Rational(-sgn(b), 4));
    const Complex interior = std::sqrt(2.0 / ab) * quarter_turn;
    const Complex endpoint = std::sqrt(1.0 / (2.0 * ab)) * quarter_turn;

    std::vector<AecTerm> terms;
    auto cs = [&](long long n) { return mod_one(Rational(n * n, b)); };

    terms.push_back({cs(0), Rational(1, 2), endpoint, Complex(-0.5, 0), b});
    if (b % 2 == 0) {
        for (long long n = 1; n < ab / 2; ++n)
            terms.push_back({cs(n), Rational(1, 2), interior, Complex(0, 0), b});
        terms.push_back({cs(ab / 2), Rational(1, 2), endpoint, Complex(-0.5, 0), b});
    } else {
        for (long long n = 1; n <= (ab - 1) / 2; ++n)
            terms.push_back({cs(n), Rational(1, 2), interior, Complex(0, 0), b});
        terms.push_back({mod_one(Rational(-b, 4)), Rational(0), Complex(0, 0), Complex(-0.5, 0), b});
    }
    return terms;
}

Complex evaluate_expansion(const std::vector<AecTerm>& terms, long long r) {
    Complex sum(0, 0);
    for (const AecTerm& t : terms) sum += t.exact_value(r);
    return sum;
}

Complex evaluate_expansion_truncated(const std::vector<AecTerm>& terms, long long r, int L) {
    Complex sum(0, 0);
    for (const AecTerm& t : terms) {
        Complex series(1, 0);
        for (int l = 1; l <= L; ++l)
            series += t.series_coefficient(l) * std::pow((double)r, -l / 2.0);
        Complex phase = phase_2pi(mod_one(Rational(r) * t.c));
        sum += phase * std::pow((double)r, t.d.to_double()) * t.leading() * series;
    }
    return sum;
}

AecReport verify_aec(long long b, int k_max, int L_max) {
    if (b == 0) throw std::invalid_argument("verify_aec: b must be nonzero");
    if (k_max < 8) throw std::invalid_argument("verify_aec: k_max too small");
    AecReport report;
    report.b = b;
    report.k_max = k_max;
    report.terms = aec_terms_su2(b);

    for (int k = 1; k <= k_max; ++k) {
        long long r = k + 2;
        double res = std::abs(invariant_su2_closed(k, b) - evaluate_expansion(report.terms, r));
        report.exact_max_residual = std::max(report.exact_max_residual, res);
    }
    report.pass = report.exact_max_residual <= 1e-10;

    const double d = 0.5;  // max growth exponent of the family
    for (int L = 0; L <= L_max; ++L) {
        AecSlope s;
        s.L = L;
        s.bound = d - (L + 1) / 2.0 + 0.3;
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int n = 0;
        for (int k = k_max / 2; k <= k_max; ++k) {
            long long r = k + 2;
            double res =
                std::abs(invariant_su2_closed(k, b) - evaluate_expansion_truncated(report.terms, r, L));
            if (res < 1e-13) continue;  // double-precision floor
            double x = std::log((double)r), y = std::log(res);
            sx += x; sy += y; sxx += x * x; sxy += x * y;
            ++n;
        }
        s.points = n;
        if (n >= 2) {
            s.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
            s.pass = s.slope <= s.bound;
        } else {
            // residuals at the noise floor throughout: decay certainly fast enough
            s.slope = -INFINITY;
            s.pass = true;
        }
        report.slopes.push_back(s);
        report.pass = report.pass && s.pass;
    }
    return report;
}

TableRow table_row(const BundleClass& cls) {
    TableRow row;
    switch (cls.kind) {
        case BundleClass::Kind::finite_order:
            if (cls.tag != FiniteOrderTag::identity && cls.tag != FiniteOrderTag::involution)
                throw std::invalid_argument("table_row: only ±id among the finite-order classes");
            row.c.insert(Rational(0));
            row.d.insert(Rational(1));
            return row;
        case BundleClass::Kind::trace2:
        case BundleClass::Kind::trace_minus2: {
            long long b = cls.shear;
            if (b == 0) {
                row.c.insert(Rational(0));
                row.d.insert(Rational(1));
                return row;
            }
            long long ab = std::llabs(b);
            long long top = b % 2 == 0 ? ab / 2 : (ab - 1) / 2;
            for (long long j = 0; j <= top; ++j) row.c.insert(mod_one(Rational(j * j, b)));
            row.d.insert(Rational(1, 2));
            if (b % 2 != 0) {
                row.c.insert(mod_one(Rational(-b, 4)));
                row.d.insert(Rational(0));
            }
            return row;
        }
        case BundleClass::Kind::hyperbolic: {
            const SL2ZMatrix& U = cls.monodromy;
            long long t = U.trace();
            if (U.c == 0) throw std::invalid_argument("table_row: hyperbolic class needs c != 0");
            for (long long s : {+1LL, -1LL}) {
                long long u = t - 2 * s;
                for (long long beta = 0; beta < std::llabs(U.c); ++beta)
                    for (long long gamma = 1; gamma <= std::llabs(u); ++gamma) {
                        long long q = -U.c * gamma * gamma + (U.a - U.d) * gamma * beta +
                                      U.b * beta * beta;
                        row.c.insert(mod_one(Rational(q, u)));
                    }
            }
            row.d.insert(Rational(0));
            return row;
        }
    }
    throw std::logic_error("table_row");
}

}  // namespace torusq
