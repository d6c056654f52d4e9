#include "coxfactor/verify.hpp"

#include "coxfactor/diagrams.hpp"
#include "coxfactor/factorization.hpp"
#include "coxfactor/goulden_yong.hpp"
#include "coxfactor/matrix_tree.hpp"
#include "coxfactor/prufer.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace coxfactor {

namespace {

// Drops ranks above the cap but always keeps the smallest one, so a low cap
// still exercises every family.
std::vector<int> sched(std::vector<int> full, int cap) {
    if (cap <= 0) return full;
    std::vector<int> out;
    for (int r : full)
        if (r <= cap) out.push_back(r);
    if (out.empty()) out.push_back(full.front());
    return out;
}

struct Failures {
    std::vector<std::string> items;
    void add(std::string s) { items.push_back(std::move(s)); }
    bool empty() const { return items.empty(); }
};

CheckResult finish(int number, std::string name, const Failures& f,
                   std::string ok_detail) {
    CheckResult r;
    r.number = number;
    r.name = std::move(name);
    r.passed = f.empty();
    if (r.passed) {
        r.detail = std::move(ok_detail);
    } else {
        r.detail = f.items.front();
        for (size_t i = 1; i < std::min<size_t>(f.items.size(), 3); ++i)
            r.detail += "; " + f.items[i];
        if (f.items.size() > 3)
            r.detail += "; and " + std::to_string(f.items.size() - 3) + " more";
    }
    return r;
}

std::string tag(Family fam, int rank) {
    return std::string(1, family_letter(fam)) + std::to_string(rank);
}

MinimalFactorization fact(const RootSystem& R,
                          const std::vector<std::vector<int>>& roots) {
    MinimalFactorization f;
    f.coxeter = identity_element(R.family(), R.rank());
    for (const auto& r : roots) f.factors.push_back(R.reflection_from_root(r));
    f.coxeter = product(f);
    return f;
}

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
        if (i == choice.size() || others.empty()) break;
    }
    return out;
}

std::vector<std::vector<int>> all_words(int length, int alphabet) {
    std::vector<std::vector<int>> words;
    std::vector<int> w(length, 1);
    while (true) {
        words.push_back(w);
        int i = 0;
        for (; i < length; ++i) {
            if (w[i] < alphabet) {
                ++w[i];
                break;
            }
            w[i] = 1;
        }
        if (i == length) break;
    }
    return words;
}

size_t power_sz(size_t base, int exp) {
    size_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

// Union-find spanning-tree test over explicit vertex labels.
bool is_spanning_tree(const std::vector<int>& vertices,
                      const std::vector<std::pair<int, int>>& edges) {
    if (edges.size() + 1 != vertices.size()) return false;
    std::map<int, int> rep;
    for (int v : vertices) rep[v] = v;
    auto find = [&](int v) {
        while (rep[v] != v) v = rep[v] = rep[rep[v]];
        return v;
    };
    for (auto [a, b] : edges) {
        if (!rep.count(a) || !rep.count(b)) return false;
        int ra = find(a), rb = find(b);
        if (ra == rb) return false;
        rep[ra] = rb;
    }
    return true;
}

// Vertices of [n] surviving repeated degree-one deletion; in a connected
// multigraph with n edges this is the unique cycle.
std::set<int> prune_survivors(int n, const std::vector<std::pair<int, int>>& edges) {
    std::set<int> alive;
    for (int v = 1; v <= n; ++v) alive.insert(v);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v : std::vector<int>(alive.begin(), alive.end())) {
            int degree = 0;
            for (auto [a, b] : edges) {
                if (!alive.count(a) || !alive.count(b)) continue;
                if (a == v) ++degree;
                if (b == v) ++degree;
            }
            if (degree <= 1) {
                alive.erase(v);
                changed = true;
            }
        }
    }
    return alive;
}

bool connected_on(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n == 0) return false;
    std::set<int> seen{1};
    bool grew = true;
    while (grew) {
        grew = false;
        for (auto [a, b] : edges) {
            if (seen.count(a) && !seen.count(b)) seen.insert(b), grew = true;
            if (seen.count(b) && !seen.count(a)) seen.insert(a), grew = true;
        }
    }
    return static_cast<int>(seen.size()) == n;
}

// Direct arborescence total: each non-sink vertex picks an out-edge; a pick
// counts (with multiplied weights) when every vertex reaches the sink.
BigInt brute_arborescences(const DirectedMultigraph& g, int sink) {
    std::vector<std::vector<const DirectedEdge*>> out(g.vertex_count + 1);
    for (const auto& e : g.edges)
        if (e.from != e.to && e.from != sink) out[e.from].push_back(&e);
    std::vector<int> choosers;
    for (int v = 1; v <= g.vertex_count; ++v)
        if (v != sink) {
            if (out[v].empty()) return 0;
            choosers.push_back(v);
        }
    BigInt total = 0;
    std::vector<size_t> pick(choosers.size(), 0);
    while (true) {
        std::vector<int> next(g.vertex_count + 1, 0);
        BigInt w = 1;
        for (size_t i = 0; i < choosers.size(); ++i) {
            const DirectedEdge* e = out[choosers[i]][pick[i]];
            next[e->from] = e->to;
            w *= e->weight;
        }
        bool reaches = true;
        for (int v : choosers) {
            int x = v;
            for (int s = 0; x != sink && s <= g.vertex_count; ++s) x = next[x];
            if (x != sink) {
                reaches = false;
                break;
            }
        }
        if (reaches) total += w;
        size_t pos = pick.size();
        while (pos > 0 && pick[pos - 1] + 1 == out[choosers[pos - 1]].size())
            pick[--pos] = 0;
        if (pos == 0) break;
        ++pick[pos - 1];
    }
    return total;
}

CheckResult check_counts(const VerifyOptions& o) {
    Failures fail;
    std::ostringstream ok;
    struct Row {
        Family fam;
        int rank;
        size_t expect;
    };
    const std::vector<Row> rows = {
        {Family::A, 2, 3},  {Family::A, 3, 16},  {Family::A, 4, 125},
        {Family::A, 5, 1296}, {Family::B, 2, 4}, {Family::B, 3, 27},
        {Family::B, 4, 256},  {Family::D, 3, 16}, {Family::D, 4, 162},
    };
    std::map<Family, int> smallest;
    for (const auto& row : rows)
        if (!smallest.count(row.fam)) smallest[row.fam] = row.rank;
    bool first = true;
    for (const auto& row : rows) {
        if (o.max_rank > 0 && row.rank > o.max_rank &&
            row.rank != smallest[row.fam])
            continue;
        auto R = RootSystem::make(row.fam, row.rank);
        size_t got = enumerate_minimal_factorizations(
                         R, standard_coxeter_element(R), o.threads)
                         .size();
        if (!first) ok << " ";
        first = false;
        ok << tag(row.fam, row.rank) << "=" << got;
        if (got != row.expect)
            fail.add(tag(row.fam, row.rank) + " enumerates to " +
                     std::to_string(got) + ", expected " +
                     std::to_string(row.expect));
    }
    return finish(1, "counts", fail, ok.str());
}

CheckResult check_matrix_tree(const VerifyOptions&) {
    Failures fail;
    const int plain[4][4] = {
        {3, -1, -1, -1}, {-1, 3, -1, -1}, {-1, -1, 3, -1}, {0, 0, 0, 0}};
    const int weighted[4][4] = {
        {6, -2, -2, -2}, {-1, 5, -2, -2}, {-1, -1, 4, -2}, {0, 0, 0, 0}};
    auto matches = [&](const IntegerMatrix& m, const int (&rows)[4][4]) {
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j)
                if (m.at(i, j) != rows[i - 1][j - 1]) return false;
        return true;
    };
    auto L = laplacian(build_G_An(3));
    auto Lw = laplacian(build_G_An(3, true));
    if (!matches(L, plain)) fail.add("unweighted rank-3 Laplacian differs");
    if (!matches(Lw, weighted)) fail.add("weighted rank-3 Laplacian differs");
    if (minor_det(L, 4) != 16)
        fail.add("unweighted minor determinant is " + minor_det(L, 4).str() +
                 ", expected 16");
    if (minor_det(Lw, 4) != 84)
        fail.add("weighted minor determinant is " + minor_det(Lw, 4).str() +
                 ", expected 84");
    return finish(2, "matrix-tree", fail,
                  "rank-3 Laplacians match entrywise, minors 16 and 84");
}

CheckResult check_signed_counts(const VerifyOptions& o) {
    Failures fail;
    std::ostringstream ok;
    const std::map<int, BigInt> frozen = {{2, 10}, {3, 84}, {4, 1008}};
    for (int n : sched({2, 3, 4}, o.max_rank)) {
        auto R = RootSystem::make(Family::A, n);
        BigInt got = signed_count(R, standard_coxeter_element(R), o.threads);
        BigInt formula = factorial(n) * catalan(n + 1);
        ok << "A" << n << "=" << got << " ";
        if (got != formula)
            fail.add("A" + std::to_string(n) + " signed count " + got.str() +
                     " differs from n!*catalan " + formula.str());
        if (got != frozen.at(n))
            fail.add("A" + std::to_string(n) + " signed count " + got.str() +
                     ", expected " + frozen.at(n).str());
    }
    const std::vector<std::pair<Family, int>> pairs = {{Family::A, 2},
                                                       {Family::A, 3},
                                                       {Family::B, 2},
                                                       {Family::B, 3},
                                                       {Family::D, 4}};
    int compared = 0;
    for (auto [fam, rank] : pairs) {
        int floor_rank = fam == Family::D ? 4 : 2;
        if (o.max_rank > 0 && rank > std::max(o.max_rank, floor_rank)) continue;
        auto R = RootSystem::make(fam, rank);
        BigInt got = signed_count(R, standard_coxeter_element(R), o.threads);
        if (got != ordered_w_catalan(R))
            fail.add(tag(fam, rank) + " signed count " + got.str() +
                     " differs from the ordered Catalan number " +
                     ordered_w_catalan(R).str());
        ++compared;
    }
    ok << "(" << compared << " ordered-Catalan comparisons)";
    return finish(3, "signed-counts", fail, ok.str());
}

// Rank schedule shared by the involution, flag, and structural checks.
std::vector<std::pair<Family, int>> involution_ranks(int cap) {
    std::vector<std::pair<Family, int>> out;
    for (int r : sched({2, 3, 4}, cap)) out.push_back({Family::A, r});
    for (int r : sched({2, 3}, cap)) out.push_back({Family::B, r});
    for (int r : sched({3, 4}, cap)) out.push_back({Family::D, r});
    return out;
}

CheckResult check_reverse_garside(const VerifyOptions& o) {
    Failures fail;
    auto R3 = RootSystem::make(Family::A, 3);
    auto f = fact(R3, {{-1, 1, 0, 0}, {0, -1, 0, 1}, {0, -1, 1, 0}});
    auto expected = fact(R3, {{-1, 1, 0, 0}, {-1, 0, 0, 1}, {0, 0, -1, 1}});
    if (reverse_garside(R3, f) != expected)
        fail.add("worked A3 example maps to the wrong factorization");
    size_t total = 0;
    for (auto [fam, rank] : involution_ranks(o.max_rank)) {
        auto R = RootSystem::make(fam, rank);
        auto c = standard_coxeter_element(R);
        auto c_inv = inverse(c);
        for (const auto& g : enumerate_minimal_factorizations(R, c, o.threads)) {
            ++total;
            auto h = reverse_garside(R, g);
            if (product(h) != c_inv) {
                fail.add(tag(fam, rank) + ": image product is not the inverse "
                         "Coxeter element");
                break;
            }
            if (reverse_garside(R, h) != g) {
                fail.add(tag(fam, rank) + ": applying the map twice does not "
                         "return the original");
                break;
            }
        }
    }
    return finish(4, "reverse-garside", fail,
                  "worked example and involution hold on " +
                      std::to_string(total) + " factorizations");
}

CheckResult check_one_way(const VerifyOptions& o) {
    Failures fail;
    size_t total = 0;
    for (auto [fam, rank] : involution_ranks(o.max_rank)) {
        auto R = RootSystem::make(fam, rank);
        auto c = standard_coxeter_element(R);
        for (const auto& f : enumerate_minimal_factorizations(R, c, o.threads)) {
            ++total;
            auto flags = one_way_flags(R, f);
            if (interval_refinement_flags(R, f) != flags) {
                fail.add(tag(fam, rank) +
                         ": length flags differ from interval flags");
                break;
            }
            if (one_way_flags(R, reverse_garside(R, f)) != flags) {
                fail.add(tag(fam, rank) +
                         ": flags change under the reversal map");
                break;
            }
            if (fam == Family::A &&
                descent_classify(gy_dual_A(R, f)) != flags) {
                fail.add(tag(fam, rank) +
                         ": tree descent flags differ from length flags");
                break;
            }
        }
    }
    return finish(5, "one-way", fail,
                  "flag equivalences hold on " + std::to_string(total) +
                      " factorizations");
}

CheckResult check_bijections(const VerifyOptions& o) {
    Failures fail;
    std::ostringstream ok;

    // Worked examples.
    {
        auto R = RootSystem::make(Family::A, 3);
        auto f = fact(R, {{-1, 1, 0, 0}, {0, -1, 0, 1}, {0, -1, 1, 0}});
        RootedLabeledTree expect;
        expect.root = 4;
        expect.parent = {{1, 4}, {2, 4}, {3, 2}};
        if (gy_dual_A(R, f) != expect) fail.add("worked A3 dual tree differs");
    }
    {
        auto R = RootSystem::make(Family::B, 3);
        auto f = fact(R, {{1, 0, 1}, {1, 0, 0}, {1, -1, 0}});
        LoopedTree expect;
        expect.tree.root = 1;
        expect.tree.parent = {{2, 1}, {3, 2}};
        expect.loop_vertex = 2;
        if (gy_dual_B(R, f) != expect) fail.add("worked B3 looped tree differs");
    }
    {
        auto R = RootSystem::make(Family::D, 4);
        auto f1 = fact(
            R, {{1, 1, 0, 0}, {0, 1, -1, 0}, {1, 0, -1, 0}, {0, 0, 1, -1}});
        auto f2 = fact(
            R, {{-1, 1, 0, 0}, {0, 1, -1, 0}, {1, 0, 1, 0}, {0, 0, 1, -1}});
        UnicyclicRootedGraph expect;
        expect.n = 4;
        expect.root = 3;
        expect.edges = {{1, 2}, {1, 3}, {1, 3}, {3, 4}};
        if (gy_dual_D(R, f1) != expect || gy_dual_D(R, f2) != expect)
            fail.add("worked D4 unicyclic dual differs");
    }

    for (int rank : sched({1, 2, 3, 4}, o.max_rank)) {
        auto R = RootSystem::make(Family::A, rank);
        auto c = standard_coxeter_element(R);
        auto fs = enumerate_minimal_factorizations(R, c, o.threads);
        std::set<RootedLabeledTree> images;
        for (const auto& f : fs) {
            auto t = gy_dual_A(R, f);
            if (gy_inverse_A(R, t) != f) {
                fail.add("A" + std::to_string(rank) +
                         ": tree does not decode back to its factorization");
                break;
            }
            images.insert(t);
        }
        auto trees = all_rooted_trees(rank + 1, rank + 1);
        if (images.size() != fs.size() || trees.size() != fs.size())
            fail.add("A" + std::to_string(rank) + ": image misses trees");
        for (const auto& t : trees)
            if (!images.count(t)) {
                fail.add("A" + std::to_string(rank) +
                         ": some labeled tree is never reached");
                break;
            }
        ok << "A" << rank << "=" << images.size() << " ";
    }

    for (int rank : sched({1, 2, 3}, o.max_rank)) {
        auto R = RootSystem::make(Family::B, rank);
        auto c = standard_coxeter_element(R);
        auto fs = enumerate_minimal_factorizations(R, c, o.threads);
        std::set<LoopedTree> images;
        for (const auto& f : fs) {
            auto t = gy_dual_B(R, f);
            if (gy_inverse_B(R, t) != f) {
                fail.add("B" + std::to_string(rank) +
                         ": looped tree does not decode back");
                break;
            }
            images.insert(t);
        }
        size_t looped = 0;
        bool covered = true;
        for (int root = 1; root <= rank; ++root)
            for (const auto& t : all_rooted_trees(rank, root))
                for (int loop = 1; loop <= rank; ++loop) {
                    LoopedTree lt{t, loop};
                    ++looped;
                    covered = covered && images.count(lt) > 0;
                }
        if (!covered || images.size() != looped ||
            looped != power_sz(rank, rank))
            fail.add("B" + std::to_string(rank) +
                     ": looped trees are not hit exactly once");
        ok << "B" << rank << "=" << images.size() << " ";
    }

    for (int rank : sched({3, 4}, o.max_rank)) {
        auto R = RootSystem::make(Family::D, rank);
        auto c = standard_coxeter_element(R);
        auto fs = enumerate_minimal_factorizations(R, c, o.threads);
        std::map<UnicyclicRootedGraph, int> hits;
        for (const auto& f : fs) ++hits[gy_dual_D(R, f)];
        size_t expect = power_sz(rank - 1, rank);
        bool two_to_one = hits.size() == expect && 2 * expect == fs.size();
        for (const auto& [g, count] : hits) two_to_one = two_to_one && count == 2;
        if (!two_to_one)
            fail.add("D" + std::to_string(rank) +
                     ": duals are not exactly two to one onto " +
                     std::to_string(expect) + " graphs");
        ok << "D" << rank << "=" << hits.size();
        if (rank != 4) ok << " ";
    }

    return finish(6, "bijections", fail, ok.str());
}

CheckResult check_prufer(const VerifyOptions& o) {
    Failures fail;
    std::ostringstream ok;
    int cap = o.max_rank;

    {
        LabeledTree t;
        t.vertex_count = 4;
        t.edges = {{1, 4}, {2, 3}, {3, 4}};
        auto code = prufer_encode(t);
        if (code.entries != std::vector<int>{4, 3} || prufer_decode(code) != t)
            fail.add("classic worked example does not give (4,3)");
    }
    {
        LoopedTree g;
        g.tree.root = 3;
        g.tree.parent = {{1, 3}, {4, 3}, {2, 4}};
        g.loop_vertex = 4;
        auto code = typeB_encode(g);
        if (code.entries != std::vector<int>{3, 3, 4, 4} ||
            typeB_decode(code) != g)
            fail.add("type B worked example does not give (3,3,4,4)");
    }
    std::string d_log;
    {
        UnicyclicRootedGraph g;
        g.n = 4;
        g.root = 3;
        g.edges = {{1, 3}, {2, 3}, {2, 4}, {3, 4}};
        auto raw = typeD_entries_raw(g);
        auto normalized = typeD_encode(g).entries;
        std::ostringstream logged;
        logged << "type D worked example raw (";
        for (size_t i = 0; i < raw.size(); ++i)
            logged << (i ? "," : "") << raw[i];
        logged << ") normalized (";
        for (size_t i = 0; i < normalized.size(); ++i)
            logged << (i ? "," : "") << normalized[i];
        logged << ")";
        d_log = logged.str();
        ok << d_log << "; ";
        if (raw != std::vector<int>{3, 2, 3, 3})
            fail.add("type D worked example raw code is not (3,2,3,3)");
        if (normalized != std::vector<int>{2, 2, 3, 3})
            fail.add("type D worked example normalized code is not (2,2,3,3)");
    }

    for (int count : sched({3, 4, 5, 6}, cap > 0 ? cap + 2 : 0)) {
        std::set<LabeledTree> trees;
        for (const auto& w : all_words(count - 2, count)) {
            PruferCode code;
            code.variant = PruferVariant::classic;
            code.entries = w;
            code.n = count - 1;
            LabeledTree t = prufer_decode(code);
            if (prufer_encode(t) != code || !trees.insert(t).second) {
                fail.add("classic codes on " + std::to_string(count) +
                         " vertices fail to round-trip");
                break;
            }
        }
        if (trees.size() != power_sz(count, count - 2))
            fail.add("classic codes on " + std::to_string(count) +
                     " vertices miss some tree");
    }

    for (int n : sched({1, 2, 3, 4, 5}, cap > 0 ? cap + 1 : 0)) {
        std::set<RootedLabeledTree> trees;
        for (const auto& w : all_words(n - 1, n)) {
            PruferCode code;
            code.variant = PruferVariant::rooted;
            code.entries = w;
            code.n = n;
            auto t = rooted_decode(code);
            if (rooted_encode(t) != code || !trees.insert(t).second) {
                fail.add("rooted codes on " + std::to_string(n) +
                         " vertices fail to round-trip");
                break;
            }
        }
        if (trees.size() != power_sz(n, n - 1))
            fail.add("rooted codes on " + std::to_string(n) +
                     " vertices miss some tree");
    }

    for (int n : sched({1, 2, 3, 4}, cap)) {
        std::set<LoopedTree> trees;
        for (const auto& w : all_words(n, n)) {
            PruferCode code;
            code.variant = PruferVariant::typeB;
            code.entries = w;
            code.n = n;
            auto t = typeB_decode(code);
            if (typeB_encode(t) != code || !trees.insert(t).second) {
                fail.add("type B codes on " + std::to_string(n) +
                         " vertices fail to round-trip");
                break;
            }
        }
        if (trees.size() != power_sz(n, n))
            fail.add("type B codes on " + std::to_string(n) +
                     " vertices miss some looped tree");
    }

    // Type D: the encoding pipeline replaces the cycle by a star before the
    // tail is recorded, and distinct cycles can collapse to the same star, so
    // the code map is not injective and no decoder can undo it.
    bool d_failed = false;
    for (int n : sched({3, 4}, cap)) {
        const auto& duals = unicyclic_duals(n);
        std::set<std::vector<int>> codes;
        size_t round_trips = 0;
        for (const auto& g : duals) {
            auto code = typeD_encode(g);
            codes.insert(code.entries);
            try {
                if (typeD_decode(code) == g) ++round_trips;
            } catch (const std::invalid_argument&) {
            }
        }
        if (round_trips != duals.size()) {
            fail.add("type D codes on " + std::to_string(n) + " vertices: " +
                     std::to_string(duals.size()) + " graphs give " +
                     std::to_string(codes.size()) + " distinct codes and only " +
                     std::to_string(round_trips) +
                     " round-trip, so the encoding is not injective and no "
                     "decode can invert it");
            d_failed = true;
        }
    }
    if (d_failed) fail.add(d_log + " (encoding itself is correct)");

    size_t bernardi_total = 0;
    for (int n : sched({2, 3, 4, 5, 6}, cap > 0 ? std::max(cap + 2, 2) : 0)) {
        std::set<RootedLabeledTree> source, target, image;
        for (int root = 1; root <= n; ++root)
            for (const auto& t : all_rooted_trees(n, root)) {
                bool root_minimal = true;
                for (const auto& [v, p] : t.parent)
                    if (p == t.root && v < t.root) root_minimal = false;
                bool leaf_n = t.root != n || n == 1;
                for (const auto& [v, p] : t.parent)
                    if (p == n) leaf_n = false;
                if (root_minimal) source.insert(t);
                if (leaf_n) target.insert(t);
            }
        bool good = source.size() == power_sz(n - 1, n - 1) &&
                    target.size() == source.size();
        for (const auto& s : source) {
            auto t = bernardi_g(s);
            image.insert(t);
            good = good && target.count(t) > 0 && bernardi_g_inv(t) == s;
        }
        good = good && image == target;
        bernardi_total += source.size();
        if (!good)
            fail.add("the root-moving bijection fails on " + std::to_string(n) +
                     " vertices");
    }
    ok << "bernardi bijection verified on " << bernardi_total << " trees";

    return finish(7, "prufer-codes", fail, ok.str());
}

CheckResult check_structural(const VerifyOptions& o) {
    Failures fail;
    size_t total = 0;
    for (auto [fam, rank] : involution_ranks(o.max_rank)) {
        auto R = RootSystem::make(fam, rank);
        auto c = standard_coxeter_element(R);
        for (const auto& f : enumerate_minimal_factorizations(R, c, o.threads)) {
            ++total;
            if (fam == Family::A) {
                auto g = dual_graph(R, f);
                std::vector<std::pair<int, int>> edges;
                for (const auto& e : g.edges) edges.push_back({e.a, e.b});
                if (!is_spanning_tree(g.vertices, edges)) {
                    fail.add("A" + std::to_string(rank) +
                             ": a dual graph is not a spanning tree");
                    break;
                }
            } else if (fam == Family::B) {
                auto d = folded_diagram(R, f);
                std::vector<std::pair<int, int>> plain;
                int loops = 0;
                for (const auto& e : d.edges) {
                    if (e.a == e.b)
                        ++loops;
                    else
                        plain.push_back({e.a, e.b});
                }
                std::vector<int> vertices;
                for (int v = 1; v <= rank; ++v) vertices.push_back(v);
                if (loops != 1 || !is_spanning_tree(vertices, plain)) {
                    fail.add("B" + std::to_string(rank) +
                             ": a folded diagram is not a tree with one loop");
                    break;
                }
            } else {
                auto d = folded_diagram(R, f);
                std::vector<std::pair<int, int>> plain;
                for (const auto& e : d.edges) plain.push_back({e.a, e.b});
                bool loops = false;
                for (const auto& e : d.edges) loops = loops || e.a == e.b;
                auto cycle = prune_survivors(rank, plain);
                if (loops || plain.size() != static_cast<size_t>(rank) ||
                    !connected_on(rank, plain) || cycle.size() < 2 ||
                    !cycle.count(1)) {
                    fail.add("D" + std::to_string(rank) +
                             ": a folded diagram is not unicyclic through "
                             "vertex 1");
                    break;
                }
            }
        }
    }
    return finish(8, "structural", fail,
                  "diagram shapes verified on " + std::to_string(total) +
                      " factorizations");
}

CheckResult check_determinant(const VerifyOptions& o) {
    Failures fail;
    std::mt19937 rng(o.rng_seed);
    std::uniform_int_distribution<int> vertex_count(1, 5);
    std::uniform_int_distribution<int> edge_count(0, 8);
    std::uniform_int_distribution<int> weight(1, 3);
    int compared = 0;
    for (int trial = 0; trial < o.random_graphs; ++trial) {
        DirectedMultigraph g;
        g.vertex_count = vertex_count(rng);
        std::uniform_int_distribution<int> vertex(1, g.vertex_count);
        int m = edge_count(rng);
        for (int e = 0; e < m; ++e)
            g.edges.push_back({vertex(rng), vertex(rng), weight(rng)});
        auto L = laplacian(g);
        for (int sink = 1; sink <= g.vertex_count; ++sink) {
            ++compared;
            if (minor_det(L, sink) != brute_arborescences(g, sink)) {
                fail.add("graph " + std::to_string(trial) + " sink " +
                         std::to_string(sink) +
                         ": determinant disagrees with direct enumeration");
            }
        }
    }
    return finish(9, "determinant-oracle", fail,
                  std::to_string(o.random_graphs) + " random graphs, " +
                      std::to_string(compared) + " sink comparisons agree");
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = {
        "counts",     "matrix-tree", "signed-counts",
        "reverse-garside", "one-way", "bijections",
        "prufer-codes",    "structural", "determinant-oracle"};
    return names;
}

std::vector<CheckResult> run_verify(const std::string& suite,
                                    const VerifyOptions& opt) {
    using Fn = CheckResult (*)(const VerifyOptions&);
    static const Fn checks[] = {
        check_counts,     check_matrix_tree, check_signed_counts,
        check_reverse_garside, check_one_way, check_bijections,
        check_prufer,     check_structural, check_determinant};
    const auto& names = verify_suite_names();
    std::vector<CheckResult> out;
    if (suite == "all") {
        for (const auto& check : checks) out.push_back(check(opt));
        return out;
    }
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == suite) {
            out.push_back(checks[i](opt));
            return out;
        }
    throw std::invalid_argument("unknown verify suite \"" + suite + "\"");
}

}  // namespace coxfactor
