#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coxfactor/factorization.hpp"
#include "coxfactor/goulden_yong.hpp"
#include "coxfactor/matrix_tree.hpp"
#include "oracles.hpp"

#include <random>
#include <vector>

using namespace coxfactor;

namespace {

IntegerMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    IntegerMatrix m(static_cast<int>(rows.size()));
    for (int i = 1; i <= m.size(); ++i)
        for (int j = 1; j <= m.size(); ++j) m.at(i, j) = rows[i - 1][j - 1];
    return m;
}

RootedLabeledTree tree(int root, const std::vector<std::pair<int, int>>& pc) {
    RootedLabeledTree t;
    t.root = root;
    for (auto [child, par] : pc) t.parent[child] = par;
    return t;
}

BigInt power(BigInt base, int exp) {
    BigInt r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace

TEST_CASE("counting graph laplacians at rank 3") {
    CHECK(laplacian(build_G_An(3)) == from_rows({{3, -1, -1, -1},
                                                 {-1, 3, -1, -1},
                                                 {-1, -1, 3, -1},
                                                 {0, 0, 0, 0}}));
    CHECK(laplacian(build_G_An(3, true)) == from_rows({{6, -2, -2, -2},
                                                       {-1, 5, -2, -2},
                                                       {-1, -1, 4, -2},
                                                       {0, 0, 0, 0}}));
    CHECK(minor_det(laplacian(build_G_An(3)), 4) == 16);
    CHECK(minor_det(laplacian(build_G_An(3, true)), 4) == 84);
}

TEST_CASE("laplacian ignores loops and its rows sum to zero") {
    DirectedMultigraph g{3, {{1, 2, 2}, {1, 2, 1}, {2, 1, 1}, {3, 1, 5}}};
    DirectedMultigraph with_loop = g;
    with_loop.edges.push_back({2, 2, 7});
    CHECK(laplacian(g) == laplacian(with_loop));
    auto m = laplacian(g);
    CHECK(m == from_rows({{3, -3, 0}, {-1, 1, 0}, {-5, 0, 5}}));
    for (int i = 1; i <= m.size(); ++i) {
        BigInt row = 0;
        for (int j = 1; j <= m.size(); ++j) row += m.at(i, j);
        CHECK(row == 0);
    }
}

TEST_CASE("determinant on hand checked matrices") {
    CHECK(determinant(IntegerMatrix()) == 1);
    CHECK(determinant(from_rows({{-7}})) == -7);
    CHECK(determinant(from_rows({{2, 3}, {4, 5}})) == -2);
    CHECK(determinant(from_rows({{0, 2, 1}, {1, 0, 3}, {4, 1, 0}})) == 25);
    // Row swaps: zero pivot at the start.
    CHECK(determinant(from_rows({{0, 1}, {1, 0}})) == -1);
    CHECK(determinant(from_rows({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}})) == -1);
    // Singular: one column zero after elimination.
    CHECK(determinant(from_rows({{1, 2, 3}, {2, 4, 6}, {1, 1, 1}})) == 0);
    CHECK(determinant(from_rows({{0, 0}, {1, 2}})) == 0);
}

TEST_CASE("minor det drops one row and column") {
    auto m = from_rows({{11, 12}, {21, 22}});
    CHECK(minor_det(m, 1) == 22);
    CHECK(minor_det(m, 2) == 11);
    CHECK(minor_det(from_rows({{9}}), 1) == 1);
    CHECK(minor_det(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}), 2) == -11);
}

TEST_CASE("tree counts from the unweighted counting graph") {
    for (int n = 1; n <= 6; ++n) {
        auto L = laplacian(build_G_An(n));
        CHECK(minor_det(L, n + 1) == power(n + 1, n - 1));
    }
    for (int n = 1; n <= 4; ++n) {
        auto R = RootSystem::make(Family::A, n);
        auto all = enumerate_minimal_factorizations(R, standard_coxeter_element(R));
        CHECK(minor_det(laplacian(build_G_An(n)), n + 1) == BigInt(all.size()));
    }
}

TEST_CASE("weighted determinant equals the signed count") {
    for (int n = 1; n <= 4; ++n) {
        auto det = minor_det(laplacian(build_G_An(n, true)), n + 1);
        CHECK(det == factorial(n) * catalan(n + 1));
        auto R = RootSystem::make(Family::A, n);
        CHECK(det == signed_count(R, standard_coxeter_element(R)));
    }
}

TEST_CASE("random multigraphs agree with direct arborescence enumeration") {
    std::mt19937 rng(20260814);
    std::uniform_int_distribution<int> vertex_count(1, 5);
    std::uniform_int_distribution<int> edge_count(0, 8);
    std::uniform_int_distribution<int> weight(1, 3);
    for (int trial = 0; trial < 200; ++trial) {
        DirectedMultigraph g;
        g.vertex_count = vertex_count(rng);
        std::uniform_int_distribution<int> vertex(1, g.vertex_count);
        int m = edge_count(rng);
        for (int e = 0; e < m; ++e)
            g.edges.push_back({vertex(rng), vertex(rng), weight(rng)});
        auto L = laplacian(g);
        for (int sink = 1; sink <= g.vertex_count; ++sink)
            CHECK(minor_det(L, sink) == oracle::count_arborescences(g, sink));
    }
}

TEST_CASE("descent flags on small trees") {
    CHECK(descent_classify(tree(3, {{1, 3}, {2, 1}})) ==
          std::vector<bool>{true, false});
    CHECK(descent_classify(tree(4, {{1, 4}, {2, 4}, {3, 4}})) ==
          std::vector<bool>{true, true, true});
    CHECK(descent_classify(tree(4, {{1, 4}, {2, 1}, {3, 2}})) ==
          std::vector<bool>{true, false, false});
    CHECK(descent_classify(tree(4, {{1, 2}, {2, 4}, {3, 1}})) ==
          std::vector<bool>{true, true, false});
}

TEST_CASE("descent flags match the one way positions of the factorization") {
    for (int n = 2; n <= 4; ++n) {
        auto R = RootSystem::make(Family::A, n);
        auto c = standard_coxeter_element(R);
        for (const auto& f : enumerate_minimal_factorizations(R, c))
            CHECK(descent_classify(gy_dual_A(R, f)) == one_way_flags(R, f));
    }
}

TEST_CASE("catalan numbers and factorials") {
    // Convolution recurrence as an independent check.
    std::vector<BigInt> conv{1};
    for (int k = 1; k <= 8; ++k) {
        BigInt c = 0;
        for (int i = 0; i < k; ++i) c += conv[i] * conv[k - 1 - i];
        conv.push_back(c);
    }
    for (int k = 0; k <= 8; ++k) CHECK(catalan(k) == conv[k]);
    CHECK(catalan(4) == 14);
    CHECK(catalan(5) == 42);
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(5) == 120);
}

TEST_CASE("matrix tree input validation") {
    CHECK_THROWS(laplacian(DirectedMultigraph{0, {}}));
    CHECK_THROWS(laplacian(DirectedMultigraph{2, {{1, 3, 1}}}));
    CHECK_THROWS(laplacian(DirectedMultigraph{2, {{0, 1, 1}}}));
    CHECK_THROWS(laplacian(DirectedMultigraph{2, {{1, 2, -1}}}));
    CHECK_THROWS(minor_det(from_rows({{1}}), 0));
    CHECK_THROWS(minor_det(from_rows({{1}}), 2));
    CHECK_THROWS(build_G_An(0));
    CHECK_THROWS(descent_classify(tree(2, {{1, 2}, {3, 1}})));
    CHECK_THROWS(descent_classify(tree(3, {{1, 3}})));
    CHECK_THROWS(catalan(-1));
    CHECK_THROWS(factorial(-1));
}
