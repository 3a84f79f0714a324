#include "torusq/weightlat.hpp"

#include <algorithm>
#include <stdexcept>

namespace torusq {

YoungDiagram::YoungDiagram(std::vector<int> r) : rows(std::move(r)) {
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] <= 0) throw std::invalid_argument("YoungDiagram: rows must be positive");
        if (i > 0 && rows[i] > rows[i - 1])
            throw std::invalid_argument("YoungDiagram: rows must be weakly decreasing");
    }
}

long long YoungDiagram::cells() const {
    long long s = 0;
    for (int r : rows) s += r;
    return s;
}

bool YoungDiagram::in_gamma(int N, int k) const {
    if ((int)rows.size() >= N) return false;
    return rows.empty() || rows[0] <= k;
}

bool WeightVector::dominant() const {
    for (long long c : coeffs)
        if (c < 0) return false;
    return true;
}

bool WeightVector::in_level(int k) const {
    if (!dominant()) return false;
    // ⟨λ,θ⟩ = Σ ε_i = λ_1 under the diagram correspondence
    long long s = 0;
    for (long long c : coeffs) s += c;
    return s <= k;
}

InnerProductTable::InnerProductTable(int N_) : N(N_) {
    if (N < 2) throw std::invalid_argument("InnerProductTable: N >= 2 required");
}

Rational InnerProductTable::at(int i, int j) const {
    if (i < 1 || i >= N || j < 1 || j >= N) throw std::out_of_range("InnerProductTable: index");
    return Rational(std::min(i, j)) - Rational((long long)i * j, N);
}

WeightVector rho_weight(int N) {
    return WeightVector{std::vector<long long>(N - 1, 1), N};
}

void for_each_diagram(int N, int k, const std::function<void(const YoungDiagram&)>& fn) {
    for (const auto& d : enumerate_diagrams(N, k)) fn(d);
}

std::vector<YoungDiagram> enumerate_diagrams(int N, int k) {
    if (N < 2) throw std::invalid_argument("enumerate_diagrams: N >= 2 required");
    if (k < 0) throw std::invalid_argument("enumerate_diagrams: k >= 0 required");
    std::vector<YoungDiagram> out;
    std::vector<int> rows;
    std::function<void(int, int)> rec = [&](int depth, int maxlen) {
        YoungDiagram d;
        d.rows = rows;
        out.push_back(std::move(d));
        if (depth == N - 1) return;
        for (int len = maxlen; len >= 1; --len) {
            rows.push_back(len);
            rec(depth + 1, len);
            rows.pop_back();
        }
    };
    rec(0, k);
    std::sort(out.begin(), out.end(), [](const YoungDiagram& a, const YoungDiagram& b) {
        long long ca = a.cells(), cb = b.cells();
        if (ca != cb) return ca < cb;
        return a.rows < b.rows;
    });
    return out;
}

WeightVector diagram_to_weight(const YoungDiagram& lambda, int N) {
    if ((int)lambda.rows.size() >= N)
        throw std::invalid_argument("diagram_to_weight: diagram has >= N rows");
    WeightVector w;
    w.N = N;
    w.coeffs.resize(N - 1);
    for (int i = 1; i <= N - 1; ++i) w.coeffs[i - 1] = lambda.row(i - 1) - lambda.row(i);
    return w;
}

YoungDiagram weight_to_diagram(const WeightVector& w) {
    if (!w.dominant()) throw std::invalid_argument("weight_to_diagram: weight not dominant");
    std::vector<int> rows(w.coeffs.size());
    long long acc = 0;
    for (int i = (int)w.coeffs.size() - 1; i >= 0; --i) {
        acc += w.coeffs[i];
        rows[i] = (int)acc;
    }
    return YoungDiagram(std::move(rows));
}

Rational inner_product(const WeightVector& mu, const WeightVector& nu) {
    if (mu.N != nu.N || mu.coeffs.size() != nu.coeffs.size())
        throw std::invalid_argument("inner_product: rank mismatch");
    const int N = mu.N;
    long long min_part = 0, i_sum = 0, j_sum = 0;
    for (int i = 1; i <= N - 1; ++i) {
        for (int j = 1; j <= N - 1; ++j)
            min_part += mu.coeffs[i - 1] * nu.coeffs[j - 1] * std::min(i, j);
        i_sum += i * mu.coeffs[i - 1];
        j_sum += i * nu.coeffs[i - 1];
    }
    // Σ μ_i ν_j (min(i,j) - ij/N)
    return Rational(min_part) - Rational(i_sum) * Rational(j_sum, N);
}

long long casimir_exponent(const YoungDiagram& lambda, int N) {
    long long cells = lambda.cells();
    long long content = 0;  // Σ_{(i,j)∈λ} (j-i), row i contributing λ_i(λ_i+1)/2 - iλ_i
    for (size_t i = 0; i < lambda.rows.size(); ++i) {
        long long li = lambda.rows[i];
        content += li * (li + 1) / 2 - (long long)(i + 1) * li;
    }
    return -cells * cells + (long long)N * N * cells + 2LL * N * content;
}

YoungDiagram involution_star(const YoungDiagram& lambda, int N) {
    int l1 = lambda.row(0);
    std::vector<int> rows(N - 1);
    for (int i = 1; i <= N - 1; ++i) rows[i - 1] = l1 - lambda.row(N - i);
    return YoungDiagram(std::move(rows));
}

}  // namespace torusq
