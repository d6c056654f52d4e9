#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "coxfactor/diagrams.hpp"
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

std::set<std::tuple<int, int, int>> chord_set(const ChordDiagram& d) {
    std::set<std::tuple<int, int, int>> s;
    for (const auto& ch : d.chords) s.insert({ch.a, ch.b, ch.factor_index});
    return s;
}

std::multiset<std::tuple<int, int, int>> edge_set(
    const std::vector<LabeledEdge>& edges) {
    std::multiset<std::tuple<int, int, int>> s;
    for (const auto& e : edges) s.insert({e.a, e.b, e.factor_index});
    return s;
}

// Independent spanning-tree test: |E| = |V|-1, no loops, connected.
bool is_spanning_tree(const std::vector<int>& vertices,
                      const std::vector<LabeledEdge>& edges) {
    if (edges.size() + 1 != vertices.size()) return false;
    std::map<int, std::vector<int>> adj;
    for (const auto& e : edges) {
        if (e.a == e.b) return false;
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    std::set<int> seen{vertices.front()};
    std::vector<int> stack{vertices.front()};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (seen.insert(w).second) stack.push_back(w);
    }
    return seen.size() == vertices.size();
}

// Vertices left after repeatedly deleting degree-1 vertices; for a connected
// graph with one cycle this is exactly the cycle.
std::set<int> leaf_pruned(int n, const std::vector<LabeledEdge>& edges) {
    std::set<int> alive;
    for (int v = 1; v <= n; ++v) alive.insert(v);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v : std::vector<int>(alive.begin(), alive.end())) {
            int deg = 0;
            for (const auto& e : edges) {
                if (!alive.count(e.a) || !alive.count(e.b)) continue;
                if (e.a == v) ++deg;
                if (e.b == v) ++deg;
            }
            if (deg == 1) {
                alive.erase(v);
                changed = true;
            }
        }
    }
    return alive;
}

bool multigraph_connected(int n, const std::vector<LabeledEdge>& edges) {
    std::map<int, std::vector<int>> adj;
    for (const auto& e : edges) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    std::set<int> seen{1};
    std::vector<int> stack{1};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (seen.insert(w).second) stack.push_back(w);
    }
    return static_cast<int>(seen.size()) == n;
}

}  // namespace

TEST_CASE("chord diagram of the three-factor type A example") {
    RootSystem R = RootSystem::make(Family::A, 3);
    auto f = from_roots(R, {{-1, 1, 0, 0}, {0, -1, 0, 1}, {0, -1, 1, 0}});
    ChordDiagram d = chord_diagram(R, f);
    CHECK(d.outer_points == std::vector<int>{1, 2, 3, 4});
    CHECK(d.inner_points.empty());
    CHECK(chord_set(d) ==
          std::set<std::tuple<int, int, int>>{{1, 2, 1}, {2, 4, 2}, {2, 3, 3}});
    for (const auto& ch : d.chords) CHECK(ch.circle == 0);
}

TEST_CASE("chord diagram of a rank two type B example") {
    RootSystem R = RootSystem::make(Family::B, 2);
    auto f = from_roots(R, {{0, 1}, {-1, 1}});
    ChordDiagram d = chord_diagram(R, f);
    CHECK(d.outer_points == std::vector<int>{1, -2, -1, 2});
    CHECK(chord_set(d) == std::set<std::tuple<int, int, int>>{
                              {-2, 2, 1}, {1, 2, 2}, {-2, -1, 2}});
}

TEST_CASE("chord diagram of a rank four type D example") {
    RootSystem R = RootSystem::make(Family::D, 4);
    auto f = from_roots(
        R, {{1, 1, 0, 0}, {-1, 1, 0, 0}, {0, -1, 1, 0}, {0, 0, -1, 1}});
    REQUIRE(f.coxeter == standard_coxeter_element(R));
    ChordDiagram d = chord_diagram(R, f);
    CHECK(d.outer_points == std::vector<int>{2, 3, 4, -2, -3, -4});
    CHECK(d.inner_points == std::vector<int>{1, -1});
    CHECK(d.chords.size() == 8);
    auto s = chord_set(d);
    CHECK(s.count({-2, 1, 1}));   // joins the two circles
    CHECK(s.count({-1, 2, 1}));
    CHECK(s.count({1, 2, 2}));
    CHECK(s.count({3, 4, 4}));
    // chords with one endpoint on each circle are marked as spanning
    for (const auto& ch : d.chords) {
        const bool touches_inner = std::abs(ch.a) == 1 || std::abs(ch.b) == 1;
        CHECK(ch.circle == (touches_inner ? -1 : 0));
    }
}

TEST_CASE("folded diagrams of the rank three type B examples") {
    RootSystem R = RootSystem::make(Family::B, 3);
    auto f1 = from_roots(R, {{1, 0, 0}, {1, 0, -1}, {1, -1, 0}});
    REQUIRE(f1.coxeter == standard_coxeter_element(R));
    CHECK(edge_set(folded_diagram(R, f1).edges) ==
          std::multiset<std::tuple<int, int, int>>{
              {1, 1, 1}, {1, 3, 2}, {1, 2, 3}});

    auto f2 = from_roots(R, {{1, 0, 1}, {1, 0, 0}, {1, -1, 0}});
    REQUIRE(f2.coxeter == standard_coxeter_element(R));
    CHECK(edge_set(folded_diagram(R, f2).edges) ==
          std::multiset<std::tuple<int, int, int>>{
              {1, 3, 1}, {1, 1, 2}, {1, 2, 3}});
}

TEST_CASE("folded diagram of the rank four type D example") {
    RootSystem R = RootSystem::make(Family::D, 4);
    auto f = from_roots(
        R, {{1, 1, 0, 0}, {0, 1, -1, 0}, {1, 0, -1, 0}, {0, 0, 1, -1}});
    REQUIRE(f.coxeter == standard_coxeter_element(R));
    FoldedDiagram d = folded_diagram(R, f);
    CHECK(edge_set(d.edges) == std::multiset<std::tuple<int, int, int>>{
                                   {1, 2, 1}, {2, 3, 2}, {1, 3, 3}, {3, 4, 4}});
    CHECK(leaf_pruned(4, d.edges) == std::set<int>{1, 2, 3});
}

TEST_CASE("folded diagrams are rejected in type A") {
    RootSystem R = RootSystem::make(Family::A, 2);
    auto fs = enumerate_minimal_factorizations(
        R, standard_coxeter_element(R));
    CHECK_THROWS_AS((void)folded_diagram(R, fs.front()), std::invalid_argument);
}

TEST_CASE("dual graph of the three-factor type A example") {
    RootSystem R = RootSystem::make(Family::A, 3);
    auto f = from_roots(R, {{-1, 1, 0, 0}, {0, -1, 0, 1}, {0, -1, 1, 0}});
    DualGraph g = dual_graph(R, f);
    CHECK(g.vertices == std::vector<int>{1, 2, 3, 4});
    CHECK(edge_set(g.edges) == std::multiset<std::tuple<int, int, int>>{
                                   {1, 2, 1}, {1, 4, 2}, {3, 4, 3}});
}

TEST_CASE("dual graph of a rank three type B example") {
    RootSystem R = RootSystem::make(Family::B, 3);
    auto f = from_roots(R, {{1, 0, 1}, {1, 0, 0}, {1, -1, 0}});
    DualGraph g = dual_graph(R, f);
    CHECK(g.vertices == std::vector<int>{1, 2, 3});
    CHECK(edge_set(g.edges) == std::multiset<std::tuple<int, int, int>>{
                                   {1, 3, 1}, {3, 3, 2}, {2, 3, 3}});
}

TEST_CASE("dual graph of the rank four type D example has a double edge") {
    RootSystem R = RootSystem::make(Family::D, 4);
    auto f = from_roots(
        R, {{1, 1, 0, 0}, {0, 1, -1, 0}, {1, 0, -1, 0}, {0, 0, 1, -1}});
    DualGraph g = dual_graph(R, f);
    CHECK(edge_set(g.edges) == std::multiset<std::tuple<int, int, int>>{
                                   {1, 2, 1}, {1, 3, 2}, {1, 2, 3}, {2, 4, 4}});
}

TEST_CASE("crossing test on explicit chords") {
    ChordDiagram d;
    d.family = Family::A;
    d.rank = 3;
    d.outer_points = {1, 2, 3, 4};
    Chord c12{1, 2, 1, 0, 0}, c24{2, 4, 2, 0, 0}, c13{1, 3, 3, 0, 0};
    CHECK_FALSE(chords_cross(d, c12, c24));  // shared endpoint
    CHECK(chords_cross(d, c13, c24));
    CHECK(chords_cross(d, c24, c13));
    Chord split{1, 2, 1, -1, 0};
    CHECK_FALSE(chords_cross(d, split, c13));
}

TEST_CASE("type A chord diagrams are noncrossing") {
    for (int rank = 2; rank <= 4; ++rank) {
        RootSystem R = RootSystem::make(Family::A, rank);
        auto c = standard_coxeter_element(R);
        for (const auto& f : enumerate_minimal_factorizations(R, c)) {
            ChordDiagram d = chord_diagram(R, f);
            for (size_t i = 0; i < d.chords.size(); ++i)
                for (size_t j = i + 1; j < d.chords.size(); ++j)
                    CHECK_FALSE(chords_cross(d, d.chords[i], d.chords[j]));
        }
    }
}

TEST_CASE("type A dual graphs are spanning trees on the region labels") {
    for (int rank = 1; rank <= 4; ++rank) {
        RootSystem R = RootSystem::make(Family::A, rank);
        auto c = standard_coxeter_element(R);
        for (const auto& f : enumerate_minimal_factorizations(R, c)) {
            DualGraph g = dual_graph(R, f);
            CHECK(is_spanning_tree(g.vertices, g.edges));
        }
    }
}

TEST_CASE("type B folded diagrams and folded duals are trees with one loop") {
    for (int rank = 1; rank <= 3; ++rank) {
        RootSystem R = RootSystem::make(Family::B, rank);
        auto c = standard_coxeter_element(R);
        for (const auto& f : enumerate_minimal_factorizations(R, c)) {
            for (const auto& edges :
                 {folded_diagram(R, f).edges, dual_graph(R, f).edges}) {
                std::vector<LabeledEdge> loops, rest;
                for (const auto& e : edges)
                    (e.a == e.b ? loops : rest).push_back(e);
                CHECK(loops.size() == 1);
                std::vector<int> verts;
                for (int v = 1; v <= rank; ++v) verts.push_back(v);
                CHECK(is_spanning_tree(verts, rest));
            }
        }
    }
}

TEST_CASE("type D folded diagrams are unicyclic through the inner vertex") {
    for (int rank = 2; rank <= 4; ++rank) {
        RootSystem R = RootSystem::make(Family::D, rank);
        auto c = standard_coxeter_element(R);
        for (const auto& f : enumerate_minimal_factorizations(R, c)) {
            FoldedDiagram d = folded_diagram(R, f);
            CHECK(d.edges.size() == static_cast<size_t>(rank));
            for (const auto& e : d.edges) CHECK(e.a != e.b);
            CHECK(multigraph_connected(rank, d.edges));
            auto cyc = leaf_pruned(rank, d.edges);
            CHECK(cyc.size() >= 2);
            CHECK(cyc.count(1) == 1);
        }
    }
}

TEST_CASE("applying the dual twice recovers the original edge multiset") {
    auto run = [](Family fam, int rank) {
        RootSystem R = RootSystem::make(fam, rank);
        auto c = standard_coxeter_element(R);
        for (const auto& f : enumerate_minimal_factorizations(R, c)) {
            std::vector<LabeledEdge> own;
            for (int k = 1; k <= rank; ++k)
                own.push_back(folded_edge(f.factors[k - 1].root, k));
            DualGraph twice = dual_graph(R, reverse_garside(R, f));
            CHECK(edge_set(twice.edges) == edge_set(own));
        }
    };
    run(Family::A, 3);
    run(Family::B, 3);
    run(Family::D, 3);
}

TEST_CASE("coloring marks one-way factors with color 2") {
    RootSystem R = RootSystem::make(Family::A, 3);
    auto f = from_roots(R, {{-1, 1, 0, 0}, {0, -1, 0, 1}, {0, -1, 1, 0}});
    auto flags = one_way_flags(R, f);
    REQUIRE(flags == std::vector<bool>{true, true, false});
    OneWayProfile profile = one_way_profile(R, f);
    ChordDiagram d = color_diagram(chord_diagram(R, f), profile);
    std::map<int, int> color_by_factor;
    for (const auto& ch : d.chords) color_by_factor[ch.factor_index] = ch.color;
    CHECK(color_by_factor == std::map<int, int>{{1, 2}, {2, 2}, {3, 1}});

    OneWayProfile none;
    none.flags = {false, false, false};
    for (const auto& ch : color_diagram(chord_diagram(R, f), none).chords)
        CHECK(ch.color == 1);
}

TEST_CASE("chord colors agree with dual edge colors factor by factor") {
    RootSystem R = RootSystem::make(Family::A, 3);
    auto c = standard_coxeter_element(R);
    for (const auto& f : enumerate_minimal_factorizations(R, c)) {
        OneWayProfile profile = one_way_profile(R, f);
        ChordDiagram d = color_diagram(chord_diagram(R, f), profile);
        DualGraph g = color_diagram(dual_graph(R, f), profile);
        std::map<int, int> chord_color, edge_color;
        for (const auto& ch : d.chords) chord_color[ch.factor_index] = ch.color;
        for (const auto& e : g.edges) edge_color[e.factor_index] = e.color;
        CHECK(chord_color == edge_color);
    }
}

TEST_CASE("rank two type D splits its two short cycles across the circles") {
    RootSystem R = RootSystem::make(Family::D, 2);
    auto c = standard_coxeter_element(R);
    auto fs = enumerate_minimal_factorizations(R, c);
    REQUIRE(fs.size() == 2);
    ChordDiagram d = chord_diagram(R, fs.front());
    CHECK(d.inner_points == std::vector<int>{1, -1});
    CHECK(d.outer_points == std::vector<int>{2, -2});
}
