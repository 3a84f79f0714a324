#pragma once

#include <string>
#include <vector>

namespace torusq {

struct SL2ZMatrix {
    long long a = 1, b = 0, c = 0, d = 1;

    long long trace() const { return a + d; }
    long long det() const { return a * d - b * c; }
    bool unimodular() const { return det() == 1; }

    friend SL2ZMatrix operator*(const SL2ZMatrix& x, const SL2ZMatrix& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    SL2ZMatrix inverse() const { return {d, -b, -c, a}; }
    SL2ZMatrix neg() const { return {-a, -b, -c, -d}; }

    friend bool operator==(const SL2ZMatrix& x, const SL2ZMatrix& y) = default;
};

inline SL2ZMatrix sl2z_identity() { return {1, 0, 0, 1}; }
inline SL2ZMatrix sl2z_S() { return {0, -1, 1, 0}; }
inline SL2ZMatrix sl2z_T() { return {1, 1, 0, 1}; }

// Representatives of the finite-order conjugacy classes, indexed by order
// and rotation sense: f3 = [[0,-1],[1,-1]], f4 = [[0,-1],[1,0]],
// f6 = [[0,1],[-1,1]], plus their inverses, the identity and -id.
enum class FiniteOrderTag { identity, involution, f3, f3_inv, f4, f4_inv, f6, f6_inv };

std::string finite_order_tag_name(FiniteOrderTag t);
FiniteOrderTag finite_order_tag_from_name(const std::string& s);
SL2ZMatrix finite_order_representative(FiniteOrderTag t);

// Conjugacy-class descriptor of a monodromy: trace ±2 classes carry the
// shear b of the canonical form ±[[1,-b],[0,1]].
struct BundleClass {
    enum class Kind { trace2, trace_minus2, hyperbolic, finite_order };
    Kind kind = Kind::trace2;
    long long shear = 0;           // trace2 / trace_minus2
    SL2ZMatrix monodromy;          // hyperbolic
    FiniteOrderTag tag = FiniteOrderTag::identity;  // finite_order

    static BundleClass Trace2(long long b) { BundleClass c; c.kind = Kind::trace2; c.shear = b; return c; }
    static BundleClass TraceMinus2(long long b) { BundleClass c; c.kind = Kind::trace_minus2; c.shear = b; return c; }
    static BundleClass Hyperbolic(const SL2ZMatrix& U) { BundleClass c; c.kind = Kind::hyperbolic; c.monodromy = U; return c; }
    static BundleClass FiniteOrder(FiniteOrderTag t) { BundleClass c; c.kind = Kind::finite_order; c.tag = t; return c; }
};

// Trace ±2 and U != ±id: conjugates U to ±[[1,-b],[0,1]] by completing a
// primitive eigenvector to a determinant-1 basis and reads off the shear.
// |trace| > 2: hyperbolic. Otherwise finite order by trace and rotation
// sense. Throws on non-unimodular input.
BundleClass classify(const SL2ZMatrix& U);

enum class Sl2zLetter { S, T, Tinv };

// Word over {S, T, T⁻¹} whose product is ±U; `negated` records the sign.
struct Sl2zWord {
    std::vector<Sl2zLetter> letters;
    bool negated = false;

    SL2ZMatrix product() const;
};

// Continued-fraction style decomposition; word length is bounded by
// 4(|a|+|b|+|c|+|d|) + 8.
Sl2zWord sl2z_word(const SL2ZMatrix& U);

}  // namespace torusq
