#include "mg/quiver.hpp"

#include <numeric>
#include <stdexcept>

namespace mg {

Quiver Quiver::validate(const std::vector<std::vector<std::int64_t>>& adjacency) {
    const int n = static_cast<int>(adjacency.size());
    if (n == 0) throw std::invalid_argument("quiver: empty adjacency matrix");
    for (const auto& row : adjacency)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("quiver: adjacency matrix must be square");
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (adjacency[i][j] < 0) throw std::invalid_argument("quiver: negative arrow count");
            if (i == j && adjacency[i][j] != 0)
                throw std::invalid_argument("quiver: loops are not allowed (nonzero diagonal)");
        }
    }

    // Kahn's algorithm; failure to exhaust the vertices means a cycle.
    std::vector<int> indegree(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (adjacency[i][j] > 0) ++indegree[j];
    std::vector<int> topo;
    std::vector<int> ready;
    for (int v = 0; v < n; ++v)
        if (indegree[v] == 0) ready.push_back(v);
    while (!ready.empty()) {
        const int v = ready.front();
        ready.erase(ready.begin());
        topo.push_back(v);
        for (int w = 0; w < n; ++w)
            if (adjacency[v][w] > 0 && --indegree[w] == 0) ready.push_back(w);
    }
    if (static_cast<int>(topo.size()) != n)
        throw std::invalid_argument("quiver: cycle detected, the quiver must be acyclic");

    Quiver q;
    q.n_ = n;
    q.q_ = adjacency;
    q.topo_ = std::move(topo);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (std::int64_t c = 0; c < adjacency[i][j]; ++c) q.arrows_.push_back({i, j});
    return q;
}

bool Quiver::connected() const {
    std::vector<bool> seen(n_, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < n_; ++w) {
            if (seen[w] || (q_[v][w] == 0 && q_[w][v] == 0)) continue;
            seen[w] = true;
            ++count;
            stack.push_back(w);
        }
    }
    return count == n_;
}

Quiver quiver_a2() { return Quiver::validate({{0, 1}, {0, 0}}); }

Quiver quiver_a3() { return Quiver::validate({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}); }

Quiver quiver_kronecker(int arrow_count) {
    return Quiver::validate({{0, arrow_count}, {0, 0}});
}

std::int64_t total_dim(const DimVector& d) {
    return std::accumulate(d.begin(), d.end(), std::int64_t{0});
}

void require_cy_dimension(int cy_n) {
    if (cy_n < 3)
        throw std::invalid_argument("Calabi-Yau dimension must be at least 3 (N = 2 is unsupported)");
}

GradedHomTable::GradedHomTable(const Quiver& quiver, int cy_n) : quiver_(quiver), cy_n_(cy_n) {
    require_cy_dimension(cy_n);
}

std::int64_t GradedHomTable::hom(int i, int j, int m) const {
    if (i == j) return (m == 0 || m == cy_n_) ? 1 : 0;
    if (m == 1 && quiver_.arrows_between(i, j) > 0) return quiver_.arrows_between(i, j);
    if (m == cy_n_ - 1 && quiver_.arrows_between(j, i) > 0) return quiver_.arrows_between(j, i);
    return 0;
}

LaurentPoly GradedHomTable::hom_poly(int i, int j) const {
    LaurentPoly p;
    if (i == j) {
        p = LaurentPoly::constant(1) + LaurentPoly::monomial(1, cy_n_);
        return p;
    }
    if (quiver_.arrows_between(i, j) > 0)
        p = p + LaurentPoly::monomial(quiver_.arrows_between(i, j), 1);
    if (quiver_.arrows_between(j, i) > 0)
        p = p + LaurentPoly::monomial(quiver_.arrows_between(j, i), cy_n_ - 1);
    return p;
}

std::vector<std::vector<std::int64_t>> cyn_euler_matrix(const Quiver& quiver, int cy_n) {
    require_cy_dimension(cy_n);
    const int n = quiver.vertex_count();
    const std::int64_t diag = 1 + ((cy_n % 2 == 0) ? 1 : -1);
    const std::int64_t dual_sign = (cy_n % 2 == 0) ? -1 : 1;  // (-1)^{N-1}
    std::vector<std::vector<std::int64_t>> chi(n, std::vector<std::int64_t>(n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                chi[i][j] = diag;
            } else {
                chi[i][j] = -quiver.arrows_between(i, j) + dual_sign * quiver.arrows_between(j, i);
            }
        }
    }
    return chi;
}

std::int64_t euler_form_hereditary(const Quiver& quiver, const DimVector& d, const DimVector& e) {
    const int n = quiver.vertex_count();
    if (static_cast<int>(d.size()) != n || static_cast<int>(e.size()) != n)
        throw std::invalid_argument("euler_form: dimension vector length mismatch");
    std::int64_t v = 0;
    for (int i = 0; i < n; ++i) v += d[i] * e[i];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) v -= quiver.arrows_between(i, j) * d[i] * e[j];
    return v;
}

}  // namespace mg
