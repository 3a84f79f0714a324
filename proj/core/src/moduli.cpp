#include "torusq/moduli.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace torusq {

namespace {

constexpr double kRankThreshold = 1e-8;

Eigen::Matrix2cd matrix_power(const Eigen::Matrix2cd& M, long long e) {
    Eigen::Matrix2cd base = e >= 0 ? M : Eigen::Matrix2cd(M.inverse());
    long long n = std::llabs(e);
    Eigen::Matrix2cd out = Eigen::Matrix2cd::Identity();
    while (n > 0) {
        if (n & 1) out = out * base;
        base = base * base;
        n >>= 1;
    }
    return out;
}

// su(2) basis e1 = [[0,i],[i,0]], e2 = [[0,-1],[1,0]], e3 = [[i,0],[0,-i]].
Eigen::Matrix2cd su2_basis(int i) {
    const std::complex<double> I(0, 1);
    Eigen::Matrix2cd e;
    switch (i) {
        case 0: e << 0, I, I, 0; break;
        case 1: e << 0, -1, 1, 0; break;
        default: e << I, 0, 0, -I; break;
    }
    return e;
}

Eigen::Vector3d su2_coords(const Eigen::Matrix2cd& X) {
    // X = y1 e1 + y2 e2 + y3 e3  =>  X_01 = i y1 - y2, X_00 = i y3
    return {X(0, 1).imag(), -X(0, 1).real(), X(0, 0).imag()};
}

Eigen::Matrix3d adjoint(const Eigen::Matrix2cd& U) {
    Eigen::Matrix3d ad;
    Eigen::Matrix2cd Uinv = U.adjoint();  // unitary
    for (int i = 0; i < 3; ++i) ad.col(i) = su2_coords(U * su2_basis(i) * Uinv);
    return ad;
}

// Σ_{n=0}^{m-1} Ad(A)^n for m >= 0, -Σ_{n=m}^{-1} Ad(A)^n for m < 0, so that
// the image of α^m under a cocycle is Φ_m(A) u(α).
Eigen::Matrix3d power_sum(const Eigen::Matrix3d& adA, long long m) {
    Eigen::Matrix3d acc = Eigen::Matrix3d::Zero();
    if (m >= 0) {
        Eigen::Matrix3d p = Eigen::Matrix3d::Identity();
        for (long long n = 0; n < m; ++n) {
            acc += p;
            p = adA * p;
        }
        return acc;
    }
    Eigen::Matrix3d adAinv = adA.transpose();  // Ad is orthogonal
    Eigen::Matrix3d p = adAinv;
    for (long long n = -1; n >= m; --n) {
        acc -= p;
        p = adAinv * p;
    }
    return acc;
}

int svd_rank(const Eigen::MatrixXd& M) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
    int rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()[i] > kRankThreshold) ++rank;
    return rank;
}

// Low-discrepancy parameter stream in [0,1), kept 0.05 away from {0, 1/2}.
double generic_parameter(int index) {
    const double golden = 0.6180339887498949;
    double u = std::fmod(0.12345 + golden * (index + 1), 1.0);
    return u < 0.5 ? 0.05 + 0.4 * (u * 2.0) : 0.55 + 0.4 * ((u - 0.5) * 2.0);
}

}  // namespace

Eigen::Matrix2cd su2_diag(double theta) {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    m(0, 0) = std::polar(1.0, 2 * M_PI * theta);
    m(1, 1) = std::polar(1.0, -2 * M_PI * theta);
    return m;
}

Eigen::Matrix2cd su2_off_diag(double theta) {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    m(0, 1) = std::polar(1.0, 2 * M_PI * theta);
    m(1, 0) = -std::polar(1.0, -2 * M_PI * theta);
    return m;
}

ConnectionTriple::ConnectionTriple(const Eigen::Matrix2cd& A_, const Eigen::Matrix2cd& B_,
                                   const Eigen::Matrix2cd& C_, long long m_)
    : A(A_), B(B_), C(C_), m(m_) {
    Eigen::Matrix2cd Am = matrix_power(A, m);
    double res = (A * B - B * A).norm();
    res = std::max(res, (C * A * C.adjoint() - A).norm());
    res = std::max(res, (C * B * C.adjoint() - Am * B).norm());
    if (res > 1e-10) throw std::invalid_argument("ConnectionTriple: relations violated");
}

std::vector<ModuliComponent> su2_components(long long b) {
    if (b == 0) throw std::invalid_argument("su2_components: b must be nonzero");
    const long long ab = std::llabs(b);
    std::vector<ModuliComponent> out;

    auto cs_of = [&](long long j) { return mod_one(Rational(j * j, b)); };

    out.push_back({ModuliComponent::Kind::pillowcase, cs_of(0), false, 0});
    long long torus_top = (b % 2 == 0) ? ab / 2 - 1 : (ab - 1) / 2;
    for (long long j = 1; j <= torus_top; ++j)
        out.push_back({ModuliComponent::Kind::torus, cs_of(j), false, j});
    if (b % 2 == 0) {
        out.push_back({ModuliComponent::Kind::pillowcase, cs_of(ab / 2), false, ab / 2});
    } else {
        out.push_back({ModuliComponent::Kind::point,
                       mod_one(Rational(1) - Rational(b, 4)), true, 0});
    }
    return out;
}

Rational sun_cs_completely_reducible(int N, long long b, const std::vector<Rational>& a) {
    if ((int)a.size() != N) throw std::invalid_argument("sun_cs_completely_reducible: need N entries");
    Rational sum(0), sq(0);
    for (const Rational& x : a) {
        sum += x;
        sq += x * x;
    }
    if (!sum.is_integer())
        throw std::invalid_argument("sun_cs_completely_reducible: sum of a_l not integral");
    for (const Rational& x : a)
        if (!(Rational(b) * x).is_integer())
            throw std::invalid_argument("sun_cs_completely_reducible: b*a_l not integral");
    Rational val = Rational(b, 2) * (sq + sum * sum - Rational(2) * a[N - 1] * sum);
    return mod_one(val);
}

Rational sun_cs_partially_reducible(int N, long long b, const std::vector<long long>& blocks,
                                    const std::vector<Rational>& a) {
    const size_t rb = blocks.size();
    if (rb == 0 || rb != a.size())
        throw std::invalid_argument("sun_cs_partially_reducible: blocks/a size mismatch");
    long long tot = 0;
    for (size_t i = 0; i < rb; ++i) {
        if (blocks[i] < 1 || (i > 0 && blocks[i] < blocks[i - 1]))
            throw std::invalid_argument("sun_cs_partially_reducible: blocks must be increasing positive");
        tot += blocks[i];
    }
    if (tot != N) throw std::invalid_argument("sun_cs_partially_reducible: blocks must sum to N");
    Rational weighted(0);
    for (size_t i = 0; i < rb; ++i) weighted += Rational(blocks[i]) * a[i];
    if (!weighted.is_integer())
        throw std::invalid_argument("sun_cs_partially_reducible: sum i_l a_l not integral");
    for (size_t i = 0; i < rb; ++i)
        if (!(Rational(b * blocks[i]) * a[i]).is_integer())
            throw std::invalid_argument("sun_cs_partially_reducible: b*i_l*a_l not integral");

    Rational last = Rational(blocks[rb - 1]) * a[rb - 1];  // i_r a_r
    Rational val(0);
    for (size_t i = 0; i < rb; ++i)
        val += Rational(blocks[i]) * a[i] * (last - a[i]);
    val = Rational(-b, 2) * val;

    Rational x = Rational(b) * (Rational(1) - last) * weighted;  // parity of (-1)^x
    if (!x.is_integer()) throw std::logic_error("sun_cs_partially_reducible: sign exponent not integral");
    if (x.num() % 2 != 0) val -= Rational(1, 2);  // (1/4)((-1)^x - 1)
    return mod_one(val);
}

std::set<Rational> su3_cs_phase_set(long long b) {
    if (b == 0) throw std::invalid_argument("su3_cs_phase_set: b must be nonzero");
    const long long ab = std::llabs(b);
    std::set<Rational> out;
    for (long long n = 0; n < 3 * ab; ++n)
        for (long long m = 0; m < 3 * ab; ++m)
            out.insert(mod_one(Rational(n * n + m * m + n * m, b)));
    for (long long n = 0; n < 2 * ab; ++n) out.insert(mod_one(Rational(3 * n * n, 4 * b)));
    out.insert(mod_one(Rational(-b, 3)));
    return out;
}

Eigen::Matrix<double, 9, 9> cocycle_matrix(const ConnectionTriple& t) {
    Eigen::Matrix3d adA = adjoint(t.A);
    Eigen::Matrix3d adB = adjoint(t.B);
    Eigen::Matrix3d adC = adjoint(t.C);
    Eigen::Matrix3d adAmB = adjoint(matrix_power(t.A, t.m) * t.B);
    Eigen::Matrix3d I = Eigen::Matrix3d::Identity();

    Eigen::Matrix<double, 9, 9> R = Eigen::Matrix<double, 9, 9>::Zero();
    // rows: images of the relators αβα⁻¹β⁻¹, αδα⁻¹δ⁻¹, δβδ⁻¹α⁻mβ⁻¹
    R.block<3, 3>(0, 0) = I - adB;
    R.block<3, 3>(0, 3) = -(I - adA);
    R.block<3, 3>(3, 0) = I - adC;
    R.block<3, 3>(3, 6) = -(I - adA);
    R.block<3, 3>(6, 0) = -adB * power_sum(adA, t.m);
    R.block<3, 3>(6, 3) = adC - I;
    R.block<3, 3>(6, 6) = I - adAmB;
    return R;
}

CohomologyDims cohomology_dims(const ConnectionTriple& t) {
    Eigen::Matrix3d adA = adjoint(t.A);
    Eigen::Matrix3d adB = adjoint(t.B);
    Eigen::Matrix3d adC = adjoint(t.C);
    Eigen::Matrix3d I = Eigen::Matrix3d::Identity();

    Eigen::MatrixXd stacked(9, 3);
    stacked.block<3, 3>(0, 0) = adA - I;
    stacked.block<3, 3>(3, 0) = adB - I;
    stacked.block<3, 3>(6, 0) = adC - I;
    int h0 = 3 - svd_rank(stacked);

    Eigen::MatrixXd coboundary(9, 3);  // x -> (x - Ad(A)x, x - Ad(B)x, x - Ad(C)x)
    coboundary.block<3, 3>(0, 0) = I - adA;
    coboundary.block<3, 3>(3, 0) = I - adB;
    coboundary.block<3, 3>(6, 0) = I - adC;

    int ker_r = 9 - svd_rank(cocycle_matrix(t));
    int h1 = ker_r - svd_rank(coboundary);
    return {h0, h1};
}

ConnectionTriple irreducible_point_triple(long long b) {
    if (b % 2 == 0) throw std::invalid_argument("irreducible_point_triple: b must be odd");
    Eigen::Matrix2cd A = -Eigen::Matrix2cd::Identity();
    Eigen::Matrix2cd B = su2_diag(0.25);  // diag(i, -i)
    Eigen::Matrix2cd C;
    C << 0, 1, -1, 0;
    return ConnectionTriple(A, B, C, -b);
}

Rational growth_rate(const ModuliComponent& component, long long b) {
    if (b == 0) throw std::invalid_argument("growth_rate: b must be nonzero");
    const long long m = -b;
    if (component.kind == ModuliComponent::Kind::point)
        return Rational(0);  // h0 = h1 = 0 at the irreducible point

    std::map<std::pair<int, int>, int> votes;
    for (int i = 0; i < 32; ++i) {
        double s = generic_parameter(2 * i);
        double t = generic_parameter(2 * i + 1);
        Eigen::Matrix2cd A = su2_diag((double)component.j / (double)m);
        ConnectionTriple triple(A, su2_diag(s), su2_diag(t), m);
        CohomologyDims h = cohomology_dims(triple);
        votes[{h.h0, h.h1}]++;
    }
    std::pair<int, int> mode = votes.begin()->first;
    for (const auto& [dims, count] : votes)
        if (count > votes.at(mode)) mode = dims;
    return Rational(mode.second - mode.first, 2);
}

}  // namespace torusq
