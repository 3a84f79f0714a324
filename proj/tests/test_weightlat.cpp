#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "torusq/weightlat.hpp"

using namespace torusq;

namespace {

long long binomial(long long n, long long k) {
    __int128 acc = 1;
    for (long long i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
    return (long long)acc;
}

}  // namespace

TEST_CASE("enumeration: counts and order") {
    auto d23 = enumerate_diagrams(2, 3);
    REQUIRE(d23.size() == 4);
    CHECK(d23[0] == YoungDiagram{});
    CHECK(d23[1] == YoungDiagram({1}));
    CHECK(d23[2] == YoungDiagram({2}));
    CHECK(d23[3] == YoungDiagram({3}));

    CHECK(enumerate_diagrams(5, 0).size() == 1);
    CHECK(enumerate_diagrams(5, 0)[0] == YoungDiagram{});

    auto d31 = enumerate_diagrams(3, 1);
    REQUIRE(d31.size() == 3);
    CHECK(d31[0] == YoungDiagram{});
    CHECK(d31[1] == YoungDiagram({1}));
    CHECK(d31[2] == YoungDiagram({1, 1}));

    for (int N = 2; N <= 6; ++N)
        for (int k = 0; k <= 9; ++k)
            CHECK((long long)enumerate_diagrams(N, k).size() == binomial(k + N - 1, N - 1));
}

TEST_CASE("enumeration is graded lexicographic") {
    auto d = enumerate_diagrams(3, 2);
    for (size_t i = 1; i < d.size(); ++i) {
        bool graded = d[i - 1].cells() < d[i].cells() ||
                      (d[i - 1].cells() == d[i].cells() && d[i - 1].rows < d[i].rows);
        CHECK(graded);
    }
    // same-grade pair: (1,1) before (2)
    auto it11 = std::find(d.begin(), d.end(), YoungDiagram({1, 1}));
    auto it2 = std::find(d.begin(), d.end(), YoungDiagram({2}));
    CHECK(it11 < it2);
}

TEST_CASE("diagram/weight correspondence") {
    CHECK(diagram_to_weight(YoungDiagram{}, 4).coeffs == std::vector<long long>{0, 0, 0});
    CHECK(diagram_to_weight(YoungDiagram({2, 1}), 3).coeffs == std::vector<long long>{1, 1});
    CHECK(diagram_to_weight(YoungDiagram({3}), 2).coeffs == std::vector<long long>{3});
    CHECK_THROWS_AS(diagram_to_weight(YoungDiagram({1, 1}), 2), std::invalid_argument);

    // bijection onto the level-k dominant weights
    for (int N : {2, 3, 4}) {
        int k = 5;
        std::set<std::vector<long long>> images;
        for (const auto& lambda : enumerate_diagrams(N, k)) {
            WeightVector w = diagram_to_weight(lambda, N);
            CHECK(w.in_level(k));
            CHECK(weight_to_diagram(w) == lambda);
            images.insert(w.coeffs);
        }
        CHECK(images.size() == enumerate_diagrams(N, k).size());
    }
}

TEST_CASE("inner products over the inverse Cartan matrix") {
    WeightVector l1{{1}, 2};
    CHECK(inner_product(l1, l1) == Rational(1, 2));

    WeightVector rho3 = rho_weight(3);
    CHECK(inner_product(rho3, rho3) == Rational(2));
    for (long long n = 1; n <= 6; ++n) {
        WeightVector nrho{{n, n}, 3};
        CHECK(inner_product(nrho, nrho) == Rational(2 * n * n));
    }

    WeightVector shifted{{2, 1}, 3};  // Λ1 + ρ
    CHECK(inner_product(shifted, shifted) == Rational(14, 3));

    WeightVector w2{{1, 0}, 3};
    CHECK_THROWS_AS(inner_product(l1, w2), std::invalid_argument);

    InnerProductTable table(4);
    CHECK(table.at(1, 1) == Rational(3, 4));
    CHECK(table.at(1, 3) == Rational(1, 4));
    CHECK(table.at(2, 2) == Rational(1));
}

TEST_CASE("twist exponent") {
    CHECK(casimir_exponent(YoungDiagram{}, 5) == 0);
    for (long long j = 0; j <= 8; ++j) {
        YoungDiagram d(j > 0 ? std::vector<int>{(int)j} : std::vector<int>{});
        CHECK(casimir_exponent(d, 2) == j * j + 2 * j);
    }
    CHECK(casimir_exponent(YoungDiagram({3}), 2) == 15);
    CHECK(casimir_exponent(YoungDiagram({1}), 3) == 8);
}

TEST_CASE("exponent identity against the shifted inner product") {
    for (int N = 2; N <= 6; ++N) {
        Rational shift((long long)N * (N * N - 1), 12);
        for (int k = 0; k <= 12; ++k) {
            for (const auto& lambda : enumerate_diagrams(N, k)) {
                WeightVector w = diagram_to_weight(lambda, N);
                for (auto& c : w.coeffs) c += 1;
                CHECK(inner_product(w, w) - shift == Rational(casimir_exponent(lambda, N), N));
            }
        }
    }
}

TEST_CASE("label duality") {
    // identity for N = 2
    for (int j = 0; j <= 6; ++j) {
        YoungDiagram d(j > 0 ? std::vector<int>{j} : std::vector<int>{});
        CHECK(involution_star(d, 2) == d);
    }
    CHECK(involution_star(YoungDiagram({1}), 3) == YoungDiagram({1, 1}));
    CHECK(involution_star(YoungDiagram({2, 1}), 3) == YoungDiagram({2, 1}));

    for (int N = 2; N <= 6; ++N)
        for (int k = 0; k <= 12; ++k)
            for (const auto& lambda : enumerate_diagrams(N, k)) {
                YoungDiagram star = involution_star(lambda, N);
                CHECK(star.in_gamma(N, k));
                CHECK(involution_star(star, N) == lambda);
            }

    // the self-dual labels of SU(3) are exactly the multiples of ρ
    for (int k = 0; k <= 10; ++k)
        for (const auto& lambda : enumerate_diagrams(3, k)) {
            WeightVector w = diagram_to_weight(lambda, 3);
            bool multiple_of_rho = w.coeffs[0] == w.coeffs[1];
            CHECK(is_self_dual(lambda, 3) == multiple_of_rho);
        }
}
