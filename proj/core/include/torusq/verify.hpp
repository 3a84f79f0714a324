#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace torusq {

struct CheckResult {
    std::string name;
    double residual = 0;   // worst observed deviation (0 for exact checks)
    double tolerance = 0;  // 0 means the check is exact
    bool pass = false;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool pass = true;

    void add(CheckResult c) {
        pass = pass && c.pass;
        checks.push_back(std::move(c));
    }
};

struct VerifyOptions {
    std::uint64_t seed = 0xC0FFEE;  // default seed for the randomized suites
    int trials = 1000;
    int kmax = 200;
    int bmax = 12;
};

// Scalar and lattice reciprocity on seeded instances; quotient enumeration.
SuiteReport verify_gauss(const VerifyOptions& opts);

// SU(2) direct = closed = word modulus; SU(3) closed = direct.
SuiteReport verify_oracle(const VerifyOptions& opts);

// Exact-coefficient expansion identity, truncation slopes, phase sets.
SuiteReport verify_aec_suite(const VerifyOptions& opts);

// Generic cohomology dimensions and growth rates per component.
SuiteReport verify_growth(const VerifyOptions& opts);

// Exact weight/diagram identity over N <= 6, k <= 12.
SuiteReport verify_lemma(const VerifyOptions& opts);

// |D⁻¹Δ - (e^{2πic/24})³| over 1 <= k <= kmax.
SuiteReport verify_framing(const VerifyOptions& opts);

SuiteReport verify_all(const VerifyOptions& opts);

// Deterministic generator for hyperbolic test matrices.
struct SeededSl2z;

}  // namespace torusq
