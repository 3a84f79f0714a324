#pragma once

#include <string>
#include <vector>

#include "torusq/sl2z.hpp"
#include "torusq/wrt.hpp"

namespace torusq {

struct ScanRecord {
    int k = 0;
    int r = 0;
    double re = 0, im = 0, abs = 0, arg = 0;  // arg in (-π, π]
};

ScanRecord make_scan_record(int k, int r, Complex z);

// One record per level k in [kmin, kmax] for the shear-b bundle. Method
// "direct" is available for every N; "closed" for N = 2, 3 (b != 0).
std::vector<ScanRecord> scan_invariants(int N, long long b, int kmin, int kmax,
                                        InvariantResult::Method method = InvariantResult::Method::direct);

// Header k,r,re,im,abs,arg; 17 significant digits; byte-deterministic.
std::string scan_to_csv(const std::vector<ScanRecord>& records);

// Self-contained scatter of (re, im) with unit-circle gridlines.
std::string scan_to_svg(const std::vector<ScanRecord>& records);

std::string format_float(double v);  // %.17g

}  // namespace torusq
