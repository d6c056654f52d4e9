#include "coxfactor/matrix_tree.hpp"

#include <stdexcept>
#include <utility>

namespace coxfactor {

IntegerMatrix laplacian(const DirectedMultigraph& g) {
    if (g.vertex_count < 1)
        throw std::invalid_argument("graph needs at least one vertex");
    IntegerMatrix m(g.vertex_count);
    for (const auto& e : g.edges) {
        if (e.from < 1 || e.from > g.vertex_count || e.to < 1 ||
            e.to > g.vertex_count)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.weight < 0) throw std::invalid_argument("negative edge weight");
        if (e.from == e.to) continue;
        m.at(e.from, e.from) += e.weight;
        m.at(e.from, e.to) -= e.weight;
    }
    return m;
}

BigInt determinant(IntegerMatrix m) {
    const int n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    BigInt prev = 1;
    for (int k = 1; k < n; ++k) {
        if (m.at(k, k) == 0) {
            int pivot = 0;
            for (int i = k + 1; i <= n && pivot == 0; ++i)
                if (m.at(i, k) != 0) pivot = i;
            if (pivot == 0) return 0;
            for (int j = 1; j <= n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i <= n; ++i) {
            for (int j = k + 1; j <= n; ++j)
                // Bareiss step: every division here is exact.
                m.at(i, j) =
                    (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign * m.at(n, n);
}

BigInt minor_det(const IntegerMatrix& m, int i) {
    const int n = m.size();
    if (i < 1 || i > n) throw std::invalid_argument("minor index out of range");
    IntegerMatrix sub(n - 1);
    for (int r = 1, sr = 1; r <= n; ++r) {
        if (r == i) continue;
        for (int c = 1, sc = 1; c <= n; ++c) {
            if (c == i) continue;
            sub.at(sr, sc) = m.at(r, c);
            ++sc;
        }
        ++sr;
    }
    return determinant(std::move(sub));
}

DirectedMultigraph build_G_An(int n, bool weighted) {
    if (n < 1) throw std::invalid_argument("rank must be at least 1");
    DirectedMultigraph g;
    g.vertex_count = n + 1;
    for (int i = 1; i <= n; ++i)
        g.edges.push_back({i, n + 1, weighted ? 2 : 1});
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            g.edges.push_back({i, j, weighted && i < j ? 2 : 1});
        }
    return g;
}

std::vector<bool> descent_classify(const RootedLabeledTree& t) {
    const int n = static_cast<int>(t.parent.size());
    if (t.root != n + 1)
        throw std::invalid_argument("tree must be rooted at its largest label");
    std::vector<bool> flags(n);
    for (int i = 1; i <= n; ++i) {
        auto it = t.parent.find(i);
        if (it == t.parent.end())
            throw std::invalid_argument("vertex missing from the parent map");
        flags[i - 1] = it->second == n + 1 || i < it->second;
    }
    return flags;
}

BigInt catalan(int k) {
    if (k < 0) throw std::invalid_argument("negative index");
    BigInt c = 1;
    // c_{j+1} = c_j * 2(2j+1) / (j+2), exact at every step.
    for (int j = 0; j < k; ++j) c = c * 2 * (2 * j + 1) / (j + 2);
    return c;
}

BigInt factorial(int k) {
    if (k < 0) throw std::invalid_argument("negative index");
    BigInt f = 1;
    for (int j = 2; j <= k; ++j) f *= j;
    return f;
}

}  // namespace coxfactor
