#include "torusq/sl2z.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace torusq {

std::string finite_order_tag_name(FiniteOrderTag t) {
    switch (t) {
        case FiniteOrderTag::identity: return "id";
        case FiniteOrderTag::involution: return "involution";
        case FiniteOrderTag::f3: return "f3";
        case FiniteOrderTag::f3_inv: return "f3-inv";
        case FiniteOrderTag::f4: return "f4";
        case FiniteOrderTag::f4_inv: return "f4-inv";
        case FiniteOrderTag::f6: return "f6";
        case FiniteOrderTag::f6_inv: return "f6-inv";
    }
    throw std::logic_error("finite_order_tag_name");
}

FiniteOrderTag finite_order_tag_from_name(const std::string& s) {
    if (s == "id") return FiniteOrderTag::identity;
    if (s == "involution" || s == "minus-id") return FiniteOrderTag::involution;
    if (s == "f3") return FiniteOrderTag::f3;
    if (s == "f3-inv") return FiniteOrderTag::f3_inv;
    if (s == "f4") return FiniteOrderTag::f4;
    if (s == "f4-inv") return FiniteOrderTag::f4_inv;
    if (s == "f6") return FiniteOrderTag::f6;
    if (s == "f6-inv") return FiniteOrderTag::f6_inv;
    throw std::invalid_argument("unknown finite-order tag: " + s);
}

SL2ZMatrix finite_order_representative(FiniteOrderTag t) {
    switch (t) {
        case FiniteOrderTag::identity: return {1, 0, 0, 1};
        case FiniteOrderTag::involution: return {-1, 0, 0, -1};
        case FiniteOrderTag::f3: return {0, -1, 1, -1};
        case FiniteOrderTag::f3_inv: return {-1, 1, -1, 0};
        case FiniteOrderTag::f4: return {0, -1, 1, 0};
        case FiniteOrderTag::f4_inv: return {0, 1, -1, 0};
        case FiniteOrderTag::f6: return {0, 1, -1, 1};
        case FiniteOrderTag::f6_inv: return {1, -1, 1, 0};
    }
    throw std::logic_error("finite_order_representative");
}

BundleClass classify(const SL2ZMatrix& U) {
    if (!U.unimodular()) throw std::invalid_argument("classify: det != 1");
    long long t = U.trace();

    if (std::llabs(t) > 2) return BundleClass::Hyperbolic(U);

    if (t == 2 && U == sl2z_identity()) return BundleClass::FiniteOrder(FiniteOrderTag::identity);
    if (t == -2 && U == sl2z_identity().neg())
        return BundleClass::FiniteOrder(FiniteOrderTag::involution);

    if (std::llabs(t) == 2) {
        // V = ±U = I + N with N nilpotent; a primitive kernel vector of N is
        // the eigenvector, completed to a det-1 basis (v, w).
        long long eps = t / 2;
        SL2ZMatrix V = eps == 1 ? U : U.neg();
        long long p = V.a - 1, q = V.b, s = V.c;
        long long v1, v2;
        if (p == 0 && q == 0) {
            v1 = 0; v2 = 1;
        } else {
            v1 = -q; v2 = p;
            if (v1 == 0 && v2 == 0) { v1 = p; v2 = s; }
        }
        long long g = std::gcd(std::llabs(v1), std::llabs(v2));
        v1 /= g; v2 /= g;
        // w with v1*w2 - v2*w1 = 1 via extended gcd
        long long w1 = 0, w2 = 0;
        {
            long long x0 = v1, y0 = v2;
            long long s0 = 1, s1 = 0, t0 = 0, t1 = 1;
            while (y0 != 0) {
                long long qd = x0 / y0;
                long long tmp = x0 - qd * y0; x0 = y0; y0 = tmp;
                tmp = s0 - qd * s1; s0 = s1; s1 = tmp;
                tmp = t0 - qd * t1; t0 = t1; t1 = tmp;
            }
            // x0 = gcd = ±1 since (v1,v2) primitive; v1*s0 + v2*t0 = x0
            w2 = s0 * x0;
            w1 = -t0 * x0;
        }
        SL2ZMatrix P{v1, w1, v2, w2};  // columns v, w
        SL2ZMatrix C = P.inverse() * U * P;
        long long shear = -C.b * eps;
        return eps == 1 ? BundleClass::Trace2(shear) : BundleClass::TraceMinus2(shear);
    }

    // elliptic: order from the trace, rotation sense from sign of c
    // (conjugation-invariant in SL(2,R) for elliptic elements)
    if (t == 0) return BundleClass::FiniteOrder(U.c > 0 ? FiniteOrderTag::f4 : FiniteOrderTag::f4_inv);
    if (t == -1) return BundleClass::FiniteOrder(U.c > 0 ? FiniteOrderTag::f3 : FiniteOrderTag::f3_inv);
    return BundleClass::FiniteOrder(U.c < 0 ? FiniteOrderTag::f6 : FiniteOrderTag::f6_inv);
}

SL2ZMatrix Sl2zWord::product() const {
    SL2ZMatrix M = sl2z_identity();
    for (Sl2zLetter l : letters) {
        switch (l) {
            case Sl2zLetter::S: M = M * sl2z_S(); break;
            case Sl2zLetter::T: M = M * sl2z_T(); break;
            case Sl2zLetter::Tinv: M = M * sl2z_T().inverse(); break;
        }
    }
    return negated ? M.neg() : M;
}

Sl2zWord sl2z_word(const SL2ZMatrix& U) {
    if (!U.unimodular()) throw std::invalid_argument("sl2z_word: det != 1");
    Sl2zWord word;
    SL2ZMatrix W = U;

    auto push_T = [&](long long count) {  // append T^count
        for (long long i = 0; i < std::llabs(count); ++i)
            word.letters.push_back(count > 0 ? Sl2zLetter::T : Sl2zLetter::Tinv);
    };

    // peel generators off the left: W = g * W'  =>  record g, W <- g⁻¹ W
    while (W.c != 0) {
        if (std::llabs(W.a) < std::llabs(W.c) || W.a == 0) {
            // S⁻¹ W = [[c, d], [-a, -b]]
            word.letters.push_back(Sl2zLetter::S);
            W = SL2ZMatrix{W.c, W.d, -W.a, -W.b};
        } else {
            // nearest-integer quotient keeps the remainder at most |c|/2
            long long q = (2 * W.a + W.c) / (2 * W.c);
            if ((2 * W.a + W.c) % (2 * W.c) != 0 && ((2 * W.a + W.c) < 0) != (W.c < 0)) --q;
            push_T(q);
            W = SL2ZMatrix{W.a - q * W.c, W.b - q * W.d, W.c, W.d};
        }
    }
    // W = ±[[1, m], [0, 1]]
    if (W.a == 1) {
        push_T(W.b);
    } else {
        word.negated = true;
        push_T(-W.b);
    }
    if (word.product() != U) {
        word.negated = !word.negated;
        if (word.product() != U) throw std::logic_error("sl2z_word: decomposition failed");
    }
    return word;
}

}  // namespace torusq
