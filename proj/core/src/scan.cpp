#include "torusq/scan.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace torusq {

std::string format_float(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

ScanRecord make_scan_record(int k, int r, Complex z) {
    ScanRecord rec;
    rec.k = k;
    rec.r = r;
    rec.re = z.real();
    rec.im = z.imag();
    rec.abs = std::hypot(z.real(), z.imag());
    rec.arg = std::atan2(z.imag(), z.real());
    if (rec.arg <= -M_PI) rec.arg = M_PI;
    return rec;
}

std::vector<ScanRecord> scan_invariants(int N, long long b, int kmin, int kmax,
                                        InvariantResult::Method method) {
    if (kmin < 0 || kmax < kmin) throw std::invalid_argument("scan_invariants: bad k range");
    std::vector<ScanRecord> out;
    out.reserve(kmax - kmin + 1);
    for (int k = kmin; k <= kmax; ++k) {
        Complex z;
        switch (method) {
            case InvariantResult::Method::direct:
                z = invariant_direct(N, k, BundleClass::Trace2(b)).value;
                break;
            case InvariantResult::Method::closed:
                if (b == 0) {
                    z = Complex((double)verlinde_dim(N, k), 0);
                } else if (N == 2) {
                    z = invariant_su2_closed(k, b);
                } else if (N == 3) {
                    z = invariant_su3_closed(k, b);
                } else {
                    throw std::invalid_argument("scan_invariants: closed form needs N = 2 or 3");
                }
                break;
            default:
                throw std::invalid_argument("scan_invariants: direct or closed only");
        }
        out.push_back(make_scan_record(k, k + N, z));
    }
    return out;
}

std::string scan_to_csv(const std::vector<ScanRecord>& records) {
    std::string out = "k,r,re,im,abs,arg\n";
    for (const ScanRecord& r : records) {
        out += std::to_string(r.k);
        out += ',';
        out += std::to_string(r.r);
        out += ',';
        out += format_float(r.re);
        out += ',';
        out += format_float(r.im);
        out += ',';
        out += format_float(r.abs);
        out += ',';
        out += format_float(r.arg);
        out += '\n';
    }
    return out;
}

std::string scan_to_svg(const std::vector<ScanRecord>& records) {
    const int size = 800;
    const double center = size / 2.0;
    double max_abs = 1.0;
    for (const ScanRecord& r : records) max_abs = std::max(max_abs, r.abs);
    const double scale = (size / 2.0 - 40.0) / max_abs;

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
           "viewBox=\"0 0 800 800\">\n";
    svg += "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
    svg += "<line x1=\"0\" y1=\"400\" x2=\"800\" y2=\"400\" stroke=\"#cccccc\"/>\n";
    svg += "<line x1=\"400\" y1=\"0\" x2=\"400\" y2=\"800\" stroke=\"#cccccc\"/>\n";
    for (int ring = 1; ring <= (int)max_abs; ++ring) {
        svg += "<circle cx=\"400\" cy=\"400\" r=\"" + format_float(ring * scale) +
               "\" fill=\"none\" stroke=\"#dddddd\"/>\n";
    }
    svg += "<circle cx=\"400\" cy=\"400\" r=\"" + format_float(scale) +
           "\" fill=\"none\" stroke=\"#888888\"/>\n";
    for (const ScanRecord& r : records) {
        double x = center + r.re * scale;
        double y = center - r.im * scale;
        svg += "<circle cx=\"" + format_float(x) + "\" cy=\"" + format_float(y) +
               "\" r=\"2\" fill=\"#1f4e9c\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace torusq
