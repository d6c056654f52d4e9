#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "coxfactor/goulden_yong.hpp"
#include "oracles.hpp"

using namespace coxfactor;

namespace {

MinimalFactorization from_roots(const RootSystem& R,
                                const std::vector<std::vector<int>>& roots) {
    MinimalFactorization f;
    for (const auto& r : roots) f.factors.push_back(R.reflection_from_root(r));
    f.coxeter = identity_element(R.family(), R.rank());
    f.coxeter = product(f);
    return f;
}

RootedLabeledTree tree(int root, std::map<int, int> parent) {
    RootedLabeledTree t;
    t.root = root;
    t.parent = std::move(parent);
    return t;
}

// Every parent map on [n] whose chains all reach the root: the rooted
// labeled trees, generated without any library help.
std::vector<RootedLabeledTree> all_rooted_trees(int n, int root) {
    std::vector<int> others;
    for (int v = 1; v <= n; ++v)
        if (v != root) others.push_back(v);
    std::vector<RootedLabeledTree> out;
    std::vector<int> choice(others.size(), 1);
    while (true) {
        RootedLabeledTree t;
        t.root = root;
        for (size_t i = 0; i < others.size(); ++i)
            t.parent[others[i]] = choice[i];
        bool ok = true;
        for (int v : others) {
            std::set<int> seen;
            int x = v;
            while (x != root && ok) {
                if (!seen.insert(x).second) ok = false;
                x = t.parent[x];
            }
        }
        if (ok) out.push_back(t);
        size_t i = 0;
        for (; i < choice.size(); ++i) {
            if (choice[i] < n) {
                ++choice[i];
                break;
            }
            choice[i] = 1;
        }
        if (i == choice.size()) break;
    }
    return out;
}

}  // namespace

TEST_CASE("type A dual of the worked three-factor example") {
    RootSystem R = RootSystem::make(Family::A, 3);
    auto f = from_roots(R, {{-1, 1, 0, 0}, {0, -1, 0, 1}, {0, -1, 1, 0}});
    RootedLabeledTree t = gy_dual_A(R, f);
    CHECK(t == tree(4, {{1, 4}, {2, 4}, {3, 2}}));
}

TEST_CASE("type A dual in rank one") {
    RootSystem R = RootSystem::make(Family::A, 1);
    auto f = from_roots(R, {{-1, 1}});
    CHECK(gy_dual_A(R, f) == tree(2, {{1, 2}}));
}

TEST_CASE("type A dual round trips through its inverse") {
    for (int rank = 1; rank <= 4; ++rank) {
        RootSystem R = RootSystem::make(Family::A, rank);
        auto c = standard_coxeter_element(R);
        for (const auto& f : enumerate_minimal_factorizations(R, c)) {
            RootedLabeledTree t = gy_dual_A(R, f);
            CHECK(gy_inverse_A(R, t) == f);
        }
    }
}

TEST_CASE("type A duals hit every labeled tree exactly once") {
    RootSystem R = RootSystem::make(Family::A, 3);
    auto c = standard_coxeter_element(R);
    std::set<RootedLabeledTree> images;
    for (const auto& f : enumerate_minimal_factorizations(R, c))
        images.insert(gy_dual_A(R, f));
    CHECK(images.size() == 16);
    auto trees = all_rooted_trees(4, 4);
    CHECK(trees.size() == 16);
    for (const auto& t : trees) CHECK(images.count(t) == 1);
}

TEST_CASE("the star tree pulls back to a factorization pinned at region 1") {
    RootSystem R = RootSystem::make(Family::A, 4);
    RootedLabeledTree star = tree(5, {{1, 5}, {2, 5}, {3, 5}, {4, 5}});
    MinimalFactorization f = gy_inverse_A(R, star);
    CHECK(gy_dual_A(R, f) == star);
    MinimalFactorization fp = reverse_garside(R, f);
    for (const auto& r : fp.factors) CHECK(r.root[0] != 0);
}

TEST_CASE("a vertex is one-way exactly when its parent label is larger") {
    for (int rank = 2; rank <= 4; ++rank) {
        RootSystem R = RootSystem::make(Family::A, rank);
        auto c = standard_coxeter_element(R);
        for (const auto& f : enumerate_minimal_factorizations(R, c)) {
            auto flags = one_way_flags(R, f);
            RootedLabeledTree t = gy_dual_A(R, f);
            for (int k = 1; k <= rank; ++k)
                CHECK(flags[k - 1] == (t.parent.at(k) > k));
        }
    }
}

TEST_CASE("type B dual of the worked rank three example") {
    RootSystem R = RootSystem::make(Family::B, 3);
    auto f = from_roots(R, {{1, 0, 1}, {1, 0, 0}, {1, -1, 0}});
    LoopedTree t = gy_dual_B(R, f);
    CHECK(t.tree == tree(1, {{2, 1}, {3, 2}}));
    CHECK(t.loop_vertex == 2);
}

TEST_CASE("type B dual in rank one") {
    RootSystem R = RootSystem::make(Family::B, 1);
    auto f = from_roots(R, {{1}});
    LoopedTree t = gy_dual_B(R, f);
    CHECK(t.tree == tree(1, {}));
    CHECK(t.loop_vertex == 1);
}

TEST_CASE("type B inverse of the worked example") {
    RootSystem R = RootSystem::make(Family::B, 3);
    LoopedTree t;
    t.tree = tree(1, {{2, 1}, {3, 2}});
    t.loop_vertex = 2;
    MinimalFactorization f = gy_inverse_B(R, t);
    // factors e1+e3, e1, e1-e2; the last is stored as the positive root e2-e1
    CHECK(f == from_roots(R, {{1, 0, 1}, {1, 0, 0}, {-1, 1, 0}}));
}

TEST_CASE("type B duals are a bijection onto looped trees") {
    for (int rank = 1; rank <= 3; ++rank) {
        RootSystem R = RootSystem::make(Family::B, rank);
        auto c = standard_coxeter_element(R);
        auto fs = enumerate_minimal_factorizations(R, c);
        std::set<LoopedTree> images;
        for (const auto& f : fs) {
            LoopedTree t = gy_dual_B(R, f);
            CHECK(t.loop_vertex >= 1);
            CHECK(t.loop_vertex <= rank);
            CHECK(t.tree.parent.size() + 1 == static_cast<size_t>(rank));
            images.insert(t);
            CHECK(gy_inverse_B(R, t) == f);
        }
        // |BT_n| = n^n looped trees, all reached
        size_t expected = 1;
        for (int i = 0; i < rank; ++i) expected *= rank;
        CHECK(images.size() == fs.size());
        CHECK(images.size() == expected);
    }
}

TEST_CASE("a loop on the root pulls back to a short dual factor there") {
    RootSystem R = RootSystem::make(Family::B, 2);
    LoopedTree t;
    t.tree = tree(1, {{2, 1}});
    t.loop_vertex = 1;
    MinimalFactorization f = gy_inverse_B(R, t);
    MinimalFactorization fp = reverse_garside(R, f);
    auto support = [](const std::vector<int>& r) {
        int s = 0;
        for (int x : r) s += x != 0;
        return s;
    };
    CHECK(support(fp.factors[0].root) == 1);  // loop label 1 = factor index 1
    CHECK(support(fp.factors[1].root) == 2);
}

TEST_CASE("type D dual of the worked rank four example and its partner") {
    RootSystem R = RootSystem::make(Family::D, 4);
    auto f1 = from_roots(
        R, {{1, 1, 0, 0}, {0, 1, -1, 0}, {1, 0, -1, 0}, {0, 0, 1, -1}});
    auto f2 = from_roots(
        R, {{-1, 1, 0, 0}, {0, 1, -1, 0}, {1, 0, 1, 0}, {0, 0, 1, -1}});
    UnicyclicRootedGraph g = gy_dual_D(R, f1);
    CHECK(g.root == 3);
    CHECK(g.edges == std::vector<std::pair<int, int>>{
                         {1, 2}, {1, 3}, {1, 3}, {3, 4}});
    CHECK(gy_dual_D(R, f2) == g);
}

TEST_CASE("type D duals are two to one onto their image") {
    for (int rank = 3; rank <= 4; ++rank) {
        RootSystem R = RootSystem::make(Family::D, rank);
        auto c = standard_coxeter_element(R);
        std::map<UnicyclicRootedGraph, int> hits;
        for (const auto& f : enumerate_minimal_factorizations(R, c)) {
            UnicyclicRootedGraph g = gy_dual_D(R, f);
            CHECK(g.n == rank);
            CHECK(g.edges.size() == static_cast<size_t>(rank));
            ++hits[g];
        }
        size_t expected = 1;
        for (int i = 0; i < rank; ++i) expected *= rank - 1;
        CHECK(hits.size() == expected);
        for (const auto& [g, count] : hits) CHECK(count == 2);
    }
}

TEST_CASE("every type D dual is unicyclic with the root off the cycle minimum") {
    RootSystem R = RootSystem::make(Family::D, 4);
    auto c = standard_coxeter_element(R);
    for (const auto& f : enumerate_minimal_factorizations(R, c)) {
        UnicyclicRootedGraph g = gy_dual_D(R, f);
        std::set<int> labels;
        for (const auto& [a, b] : g.edges) {
            labels.insert(a);
            labels.insert(b);
        }
        CHECK(labels.size() == 4);
        // leaf-prune an independent copy to find the cycle
        std::set<int> alive = labels;
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v : std::vector<int>(alive.begin(), alive.end())) {
                int deg = 0;
                for (const auto& [a, b] : g.edges) {
                    if (!alive.count(a) || !alive.count(b)) continue;
                    deg += (a == v) + (b == v);
                }
                if (deg <= 1) {
                    alive.erase(v);
                    changed = true;
                }
            }
        }
        CHECK(alive.size() >= 2);
        CHECK(g.root != *alive.begin());
    }
}

TEST_CASE("folded fibers pair factorizations that differ along vertex one") {
    for (int rank = 3; rank <= 4; ++rank) {
        RootSystem R = RootSystem::make(Family::D, rank);
        auto fibers = fold_fibers(R, standard_coxeter_element(R));
        CHECK(fibers.size() == (rank == 3 ? 8u : 81u));
        for (const auto& [key, fs] : fibers) {
            REQUIRE(fs.size() == 2);
            for (int k = 0; k < rank; ++k) {
                const auto& r1 = fs[0].factors[k].root;
                const auto& r2 = fs[1].factors[k].root;
                const bool touches_one = key[k].first == 1 || key[k].second == 1;
                if (!touches_one) {
                    CHECK(r1 == r2);
                    continue;
                }
                // partners flip the sign on the e_1 coordinate
                CHECK(r1 != r2);
                std::vector<int> flipped = r2;
                flipped[0] = -flipped[0];
                bool same = flipped == r1;
                for (auto& x : flipped) x = -x;
                CHECK((same || flipped == r1));
            }
        }
    }
}

TEST_CASE("unrooting a unicyclic dual gives a root-minimal tree") {
    UnicyclicRootedGraph worked_example;
    worked_example.n = 4;
    worked_example.root = 3;
    worked_example.edges = {{1, 3}, {2, 3}, {2, 4}, {3, 4}};
    CHECK(dt_to_s(worked_example) == tree(2, {{3, 2}, {4, 2}, {1, 3}}));

    UnicyclicRootedGraph double_edge;
    double_edge.n = 4;
    double_edge.root = 3;
    double_edge.edges = {{1, 2}, {1, 3}, {1, 3}, {3, 4}};
    CHECK(dt_to_s(double_edge) == tree(1, {{2, 1}, {3, 1}, {4, 3}}));
}

TEST_CASE("dt_to_s is root-minimal but collapses distinct cycles") {
    // The star collapse forgets which children of the root lay on the
    // cycle, so distinct unrooted duals can produce the same tree. The
    // smallest collision is at rank 3: the triangle and the doubled
    // {1,3} edge both become the star at 1.
    UnicyclicRootedGraph triangle;
    triangle.n = 3;
    triangle.root = 3;
    triangle.edges = {{1, 2}, {1, 3}, {2, 3}};
    UnicyclicRootedGraph doubled;
    doubled.n = 3;
    doubled.root = 3;
    doubled.edges = {{1, 2}, {1, 3}, {1, 3}};
    CHECK(dt_to_s(triangle) == tree(1, {{2, 1}, {3, 1}}));
    CHECK(dt_to_s(doubled) == tree(1, {{2, 1}, {3, 1}}));

    const size_t expected_images[] = {3, 19};  // of 4 and 27 unrooted duals
    for (int rank = 3; rank <= 4; ++rank) {
        RootSystem R = RootSystem::make(Family::D, rank);
        auto c = standard_coxeter_element(R);
        std::map<std::vector<std::pair<int, int>>, RootedLabeledTree> unrooted;
        std::set<RootedLabeledTree> images;
        for (const auto& f : enumerate_minimal_factorizations(R, c)) {
            UnicyclicRootedGraph g = gy_dual_D(R, f);
            RootedLabeledTree s = dt_to_s(g);
            for (const auto& [v, p] : s.parent)
                if (p == s.root) CHECK(s.root < v);
            auto it = unrooted.find(g.edges);
            if (it != unrooted.end())
                CHECK(it->second == s);
            else
                unrooted[g.edges] = s;
            images.insert(s);
        }
        CHECK(images.size() == expected_images[rank - 3]);
    }
}

TEST_CASE("duals reject factorizations of nonstandard Coxeter elements") {
    RootSystem R = RootSystem::make(Family::A, 2);
    auto c = inverse(standard_coxeter_element(R));
    auto fs = enumerate_minimal_factorizations(R, c);
    CHECK_THROWS_AS((void)gy_dual_A(R, fs.front()), std::invalid_argument);
}
