#include "coxfactor/prufer.hpp"

#include "coxfactor/factorization.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>

namespace coxfactor {
namespace {

void check_rooted_tree(const RootedLabeledTree& t, int n) {
    if (n < 1 || t.parent.size() + 1 != static_cast<size_t>(n))
        throw std::invalid_argument("parent map does not span [n]");
    if (t.root < 1 || t.root > n || t.parent.count(t.root))
        throw std::invalid_argument("bad root label");
    for (const auto& [v, p] : t.parent) {
        if (v < 1 || v > n || p < 1 || p > n)
            throw std::invalid_argument("vertex label out of range");
        int cur = v;
        int steps = 0;
        while (cur != t.root) {
            auto it = t.parent.find(cur);
            if (it == t.parent.end() || ++steps > n)
                throw std::invalid_argument("parent map has a cycle");
            cur = it->second;
        }
    }
}

std::map<int, std::vector<int>> children_of(const RootedLabeledTree& t) {
    std::map<int, std::vector<int>> ch;
    for (const auto& [v, p] : t.parent) ch[p].push_back(v);
    return ch;
}

// Root-to-v chain, both endpoints included.
std::vector<int> path_from_root(const RootedLabeledTree& t, int v) {
    std::vector<int> path{v};
    while (v != t.root) {
        v = t.parent.at(v);
        path.push_back(v);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

RootedLabeledTree reroot(const RootedLabeledTree& t, int new_root) {
    std::map<int, std::set<int>> adj;
    for (const auto& [v, p] : t.parent) {
        adj[v].insert(p);
        adj[p].insert(v);
    }
    RootedLabeledTree out;
    out.root = new_root;
    std::vector<int> queue{new_root};
    std::set<int> seen{new_root};
    for (size_t i = 0; i < queue.size(); ++i)
        for (int w : adj[queue[i]])
            if (seen.insert(w).second) {
                out.parent[w] = queue[i];
                queue.push_back(w);
            }
    return out;
}

void check_entries(const PruferCode& code, PruferVariant variant,
                   size_t length, int alphabet) {
    if (code.variant != variant)
        throw std::invalid_argument("code has the wrong variant");
    if (code.entries.size() != length)
        throw std::invalid_argument("code has the wrong length");
    for (int a : code.entries)
        if (a < 1 || a > alphabet)
            throw std::invalid_argument("code entry out of range");
}

}  // namespace

PruferCode prufer_encode(const LabeledTree& t) {
    const int count = t.vertex_count;
    if (count < 2) throw std::invalid_argument("tree needs at least two vertices");
    if (t.edges.size() + 1 != static_cast<size_t>(count))
        throw std::invalid_argument("disconnected or cyclic input");
    std::vector<std::set<int>> adj(count + 1);
    for (const auto& [a, b] : t.edges) {
        if (a < 1 || a > count || b < 1 || b > count || a == b)
            throw std::invalid_argument("edge endpoint out of range");
        if (!adj[a].insert(b).second || !adj[b].insert(a).second)
            throw std::invalid_argument("disconnected or cyclic input");
    }
    std::vector<int> queue{1};
    std::set<int> seen{1};
    for (size_t i = 0; i < queue.size(); ++i)
        for (int w : adj[queue[i]])
            if (seen.insert(w).second) queue.push_back(w);
    if (static_cast<int>(seen.size()) != count)
        throw std::invalid_argument("disconnected or cyclic input");

    PruferCode code;
    code.variant = PruferVariant::classic;
    code.n = count - 1;
    std::set<int> leaves;
    for (int v = 1; v <= count; ++v)
        if (adj[v].size() == 1) leaves.insert(v);
    for (int remaining = count; remaining > 2; --remaining) {
        int v = *leaves.begin();
        leaves.erase(leaves.begin());
        int p = *adj[v].begin();
        code.entries.push_back(p);
        adj[p].erase(v);
        if (adj[p].size() == 1) leaves.insert(p);
    }
    return code;
}

LabeledTree prufer_decode(const PruferCode& code) {
    const int count = code.n + 1;
    if (count < 2) throw std::invalid_argument("code rank too small");
    check_entries(code, PruferVariant::classic, count - 2, count);
    std::vector<int> degree(count + 1, 1);
    for (int a : code.entries) ++degree[a];
    std::set<int> leaves;
    for (int v = 1; v <= count; ++v)
        if (degree[v] == 1) leaves.insert(v);
    LabeledTree t;
    t.vertex_count = count;
    for (int a : code.entries) {
        int v = *leaves.begin();
        leaves.erase(leaves.begin());
        t.edges.push_back({std::min(v, a), std::max(v, a)});
        degree[v] = 0;
        if (--degree[a] == 1) leaves.insert(a);
    }
    int u = *leaves.begin();
    int w = *std::next(leaves.begin());
    t.edges.push_back({std::min(u, w), std::max(u, w)});
    std::sort(t.edges.begin(), t.edges.end());
    return t;
}

PruferCode rooted_encode(const RootedLabeledTree& t) {
    const int n = static_cast<int>(t.parent.size()) + 1;
    check_rooted_tree(t, n);
    PruferCode code;
    code.variant = PruferVariant::rooted;
    code.n = n;
    std::map<int, int> nchildren;
    for (const auto& [v, p] : t.parent) ++nchildren[p];
    std::set<int> leaves;
    for (int v = 1; v <= n; ++v)
        if (v != t.root && nchildren[v] == 0) leaves.insert(v);
    while (!leaves.empty()) {
        int v = *leaves.begin();
        leaves.erase(leaves.begin());
        int p = t.parent.at(v);
        code.entries.push_back(p);
        if (--nchildren[p] == 0 && p != t.root) leaves.insert(p);
    }
    return code;
}

RootedLabeledTree rooted_decode(const PruferCode& code) {
    const int n = code.n;
    if (n < 1) throw std::invalid_argument("code rank too small");
    check_entries(code, PruferVariant::rooted, n - 1, n);
    RootedLabeledTree t;
    if (n == 1) {
        t.root = 1;
        return t;
    }
    std::vector<int> pending(n + 1, 0);
    for (int a : code.entries) ++pending[a];
    std::set<int> available;
    for (int v = 1; v <= n; ++v)
        if (pending[v] == 0) available.insert(v);
    std::vector<char> deleted(n + 1, 0);
    for (int a : code.entries) {
        int v = *available.begin();
        available.erase(available.begin());
        deleted[v] = 1;
        t.parent[v] = a;
        if (--pending[a] == 0 && !deleted[a]) available.insert(a);
    }
    t.root = code.entries.back();
    return t;
}

PruferCode typeB_encode(const LoopedTree& g) {
    const int n = static_cast<int>(g.tree.parent.size()) + 1;
    check_rooted_tree(g.tree, n);
    if (g.loop_vertex < 1 || g.loop_vertex > n)
        throw std::invalid_argument("loop vertex out of range");
    PruferCode code;
    code.variant = PruferVariant::typeB;
    code.n = n;
    code.entries.push_back(g.tree.root);
    auto tail = rooted_encode(reroot(g.tree, g.loop_vertex));
    code.entries.insert(code.entries.end(), tail.entries.begin(),
                        tail.entries.end());
    return code;
}

LoopedTree typeB_decode(const PruferCode& code) {
    const int n = code.n;
    if (n < 1) throw std::invalid_argument("code rank too small");
    check_entries(code, PruferVariant::typeB, n, n);
    PruferCode tail;
    tail.variant = PruferVariant::rooted;
    tail.entries.assign(code.entries.begin() + 1, code.entries.end());
    tail.n = n;
    RootedLabeledTree at_loop = rooted_decode(tail);
    LoopedTree g;
    g.loop_vertex = at_loop.root;
    g.tree = reroot(at_loop, code.entries.front());
    return g;
}

RootedLabeledTree bernardi_g(const RootedLabeledTree& s) {
    const int n = static_cast<int>(s.parent.size()) + 1;
    check_rooted_tree(s, n);
    auto ch = children_of(s);
    for (int c : ch[s.root])
        if (c < s.root)
            throw std::invalid_argument("root must be smaller than its children");
    if (n == 1) return s;

    auto path = path_from_root(s, n);
    std::set<int> on_path(path.begin(), path.end());
    std::vector<int> chain;
    for (int c : ch[s.root])
        if (!on_path.count(c)) chain.push_back(c);
    std::sort(chain.begin(), chain.end(), std::greater<int>());

    RootedLabeledTree t = s;
    for (int c : ch[n]) t.parent[c] = s.root;
    if (!chain.empty()) {
        t.root = chain.front();
        t.parent.erase(chain.front());
        for (size_t i = 0; i + 1 < chain.size(); ++i)
            t.parent[chain[i + 1]] = chain[i];
        t.parent[s.root] = chain.back();
    }
    return t;
}

RootedLabeledTree bernardi_g_inv(const RootedLabeledTree& t) {
    const int n = static_cast<int>(t.parent.size()) + 1;
    check_rooted_tree(t, n);
    auto ch = children_of(t);
    if (!ch[n].empty())
        throw std::invalid_argument("largest vertex must be a leaf");
    if (n == 1) return t;

    auto path = path_from_root(t, n);
    size_t l = 0;
    while (l + 1 < path.size() && path[l] > path[l + 1]) ++l;
    const int pivot = path[l];

    RootedLabeledTree s = t;
    for (int c : ch[pivot])
        if (c != path[l + 1]) s.parent[c] = n;
    for (size_t i = 0; i < l; ++i) s.parent[path[i]] = pivot;
    s.root = pivot;
    s.parent.erase(pivot);
    return s;
}

namespace {

std::vector<int> typeD_entries(const UnicyclicRootedGraph& g, bool normalize) {
    const int n = g.n;
    if (n < 3) throw std::invalid_argument("rank must be at least 3");
    const int m = *cycle_of(g).begin();
    if (g.root < 1 || g.root > n || g.root == m)
        throw std::invalid_argument("root must avoid the smallest cycle vertex");
    std::vector<int> entries;
    entries.push_back(normalize && g.root > m ? g.root - 1 : g.root);
    RootedLabeledTree t = bernardi_g(dt_to_s(g));
    entries.push_back(t.parent.at(n));
    t.parent.erase(n);
    for (int a : rooted_encode(t).entries) entries.push_back(a);
    return entries;
}

// Collapsed star tree -> unrooted edge multisets realizing it.
using StarTable = std::map<RootedLabeledTree,
                           std::set<std::vector<std::pair<int, int>>>>;

const StarTable& star_preimages(int n) {
    static std::mutex mu;
    static std::map<int, StarTable> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    StarTable table;
    for (const auto& g : unicyclic_duals(n)) table[dt_to_s(g)].insert(g.edges);
    return cache.emplace(n, std::move(table)).first->second;
}

}  // namespace

PruferCode typeD_encode(const UnicyclicRootedGraph& g) {
    PruferCode code;
    code.variant = PruferVariant::typeD;
    code.n = g.n;
    code.entries = typeD_entries(g, true);
    return code;
}

std::vector<int> typeD_entries_raw(const UnicyclicRootedGraph& g) {
    return typeD_entries(g, false);
}

UnicyclicRootedGraph typeD_decode(const PruferCode& code) {
    const int n = code.n;
    if (n < 3) throw std::invalid_argument("code rank too small");
    check_entries(code, PruferVariant::typeD, n, n - 1);
    PruferCode tail;
    tail.variant = PruferVariant::rooted;
    tail.entries.assign(code.entries.begin() + 2, code.entries.end());
    tail.n = n - 1;
    RootedLabeledTree t = rooted_decode(tail);
    t.parent[n] = code.entries[1];
    RootedLabeledTree s = bernardi_g_inv(t);
    const auto& table = star_preimages(n);
    auto hit = table.find(s);
    if (hit == table.end() || hit->second.size() != 1)
        throw std::invalid_argument("code outside the verified decode table");
    UnicyclicRootedGraph g;
    g.n = n;
    g.edges = *hit->second.begin();
    const int m = *cycle_of(g).begin();
    g.root = code.entries[0] < m ? code.entries[0] : code.entries[0] + 1;
    return g;
}

const std::vector<UnicyclicRootedGraph>& unicyclic_duals(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<UnicyclicRootedGraph>> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n < 3 || n > 5)
        throw std::invalid_argument("duals are enumerated for ranks 3 to 5");
    RootSystem R = RootSystem::make(Family::D, n);
    auto c = standard_coxeter_element(R);
    std::set<UnicyclicRootedGraph> images;
    for (const auto& f : enumerate_minimal_factorizations(R, c))
        images.insert(gy_dual_D(R, f));
    return cache
        .emplace(n, std::vector<UnicyclicRootedGraph>(images.begin(), images.end()))
        .first->second;
}

}  // namespace coxfactor
