#include "coxfactor/goulden_yong.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace coxfactor {
namespace {

void require_standard(const RootSystem& R, const MinimalFactorization& f) {
    validate_factorization(R, f);
    if (f.coxeter != standard_coxeter_element(R))
        throw std::invalid_argument("dual is defined for the standard Coxeter element");
}

std::map<int, std::vector<std::pair<int, int>>> adjacency(
    const std::vector<LabeledEdge>& edges) {
    std::map<int, std::vector<std::pair<int, int>>> adj;  // v -> (other, index)
    for (const auto& e : edges) {
        if (e.a == e.b) continue;
        adj[e.a].push_back({e.b, e.factor_index});
        adj[e.b].push_back({e.a, e.factor_index});
    }
    return adj;
}

// For every vertex reachable from base over non-loop edges: the BFS parent
// and the index of the first edge on the path back to base.
struct Slide {
    std::map<int, int> parent;
    std::map<int, int> toward;  // vertex -> factor index of edge to parent
};

Slide slide_from(int base, const std::vector<LabeledEdge>& edges) {
    auto adj = adjacency(edges);
    Slide s;
    std::vector<int> queue{base};
    std::set<int> seen{base};
    for (size_t i = 0; i < queue.size(); ++i) {
        int v = queue[i];
        for (auto [w, k] : adj[v]) {
            if (!seen.insert(w).second) continue;
            s.parent[w] = v;
            s.toward[w] = k;
            queue.push_back(w);
        }
    }
    return s;
}

// Vertices surviving repeated removal of degree-1 vertices; on a connected
// graph with one cycle this is the cycle.
std::set<int> cycle_vertices(const std::vector<std::pair<int, int>>& edges) {
    std::set<int> alive;
    for (const auto& [a, b] : edges) {
        alive.insert(a);
        alive.insert(b);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v : std::vector<int>(alive.begin(), alive.end())) {
            int deg = 0;
            for (const auto& [a, b] : edges) {
                if (!alive.count(a) || !alive.count(b)) continue;
                if (a == v) ++deg;
                if (b == v) ++deg;
            }
            if (deg <= 1) {
                alive.erase(v);
                changed = true;
            }
        }
    }
    return alive;
}

void check_tree_labels(const RootedLabeledTree& t, const std::set<int>& labels) {
    if (!labels.count(t.root)) throw std::invalid_argument("bad tree root");
    std::set<int> seen{t.root};
    for (const auto& [v, p] : t.parent) {
        if (!labels.count(v) || !labels.count(p))
            throw std::invalid_argument("tree label out of range");
        seen.insert(v);
    }
    if (seen != labels) throw std::invalid_argument("tree labels not spanning");
    for (const auto& [v, p] : t.parent) {
        int x = v, steps = 0;
        while (x != t.root) {
            auto it = t.parent.find(x);
            if (it == t.parent.end() || ++steps > static_cast<int>(labels.size()))
                throw std::invalid_argument("parent map has a cycle");
            x = it->second;
        }
    }
}

// Parent map of the same tree rooted at new_root.
std::map<int, int> reroot(const RootedLabeledTree& t, int new_root) {
    std::vector<LabeledEdge> edges;
    for (const auto& [v, p] : t.parent) {
        LabeledEdge e;
        e.a = std::min(v, p);
        e.b = std::max(v, p);
        edges.push_back(e);
    }
    return slide_from(new_root, edges).parent;
}

// Composition t_1 ... t_n of the edge transpositions (rightmost first), the
// abstract shadow of the product of the dual's reflections.
std::map<int, int> edge_transposition_product(
    const std::set<int>& vertices, const std::map<int, std::pair<int, int>>& edge_by_index) {
    std::map<int, int> P;
    for (int v : vertices) P[v] = v;
    for (auto it = edge_by_index.rbegin(); it != edge_by_index.rend(); ++it) {
        const auto [a, b] = it->second;
        for (auto& [v, img] : P) {
            if (img == a)
                img = b;
            else if (img == b)
                img = a;
        }
    }
    return P;
}

// Region labels from the walk: the root region is 1 and the product shifts
// regions along the inverse of the (folded) standard Coxeter cycle.
std::map<int, int> region_labels(const std::set<int>& vertices,
                                 const std::map<int, std::pair<int, int>>& edge_by_index,
                                 int root, int cycle_len) {
    auto P = edge_transposition_product(vertices, edge_by_index);
    std::map<int, int> region;
    int v = root, label = 1;
    for (size_t i = 0; i < vertices.size(); ++i) {
        region[v] = label;
        v = P.at(v);
        label = label == 1 ? cycle_len : label - 1;
    }
    if (static_cast<int>(region.size()) != static_cast<int>(vertices.size()))
        throw std::invalid_argument("edge product is not a full cycle");
    return region;
}

std::vector<int> long_root(int dim, int a, int b, bool plus) {
    std::vector<int> r(dim, 0);
    r[b - 1] = 1;
    r[a - 1] = plus ? 1 : -1;
    return r;
}

MinimalFactorization finish_from_dual(const RootSystem& R,
                                      std::vector<Reflection> factors) {
    MinimalFactorization fp;
    fp.coxeter = inverse(standard_coxeter_element(R));
    fp.factors = std::move(factors);
    validate_factorization(R, fp);
    return reverse_garside(R, fp);
}

}  // namespace

RootedLabeledTree gy_dual_A(const RootSystem& R, const MinimalFactorization& f) {
    if (R.family() != Family::A)
        throw std::invalid_argument("gy_dual_A expects family A");
    require_standard(R, f);
    const int n = R.rank();
    DualGraph g = dual_graph(R, f);
    Slide s = slide_from(1, g.edges);
    auto relabel = [&](int region) {
        return region == 1 ? n + 1 : s.toward.at(region);
    };
    RootedLabeledTree t;
    t.root = n + 1;
    for (const auto& [v, p] : s.parent) t.parent[relabel(v)] = relabel(p);
    return t;
}

MinimalFactorization gy_inverse_A(const RootSystem& R,
                                  const RootedLabeledTree& t) {
    if (R.family() != Family::A)
        throw std::invalid_argument("gy_inverse_A expects family A");
    const int n = R.rank();
    std::set<int> labels;
    for (int v = 1; v <= n + 1; ++v) labels.insert(v);
    check_tree_labels(t, labels);

    // vertex labels slide to parent edges (canonical root n+1)
    std::map<int, std::pair<int, int>> edge_by_index;
    for (const auto& [v, p] : reroot(t, n + 1)) edge_by_index[v] = {v, p};
    auto region = region_labels(labels, edge_by_index, n + 1, n + 1);

    std::vector<Reflection> factors;
    for (int k = 1; k <= n; ++k) {
        const auto [u, v] = edge_by_index.at(k);
        const int a = std::min(region.at(u), region.at(v));
        const int b = std::max(region.at(u), region.at(v));
        factors.push_back(R.reflection_from_root(long_root(n + 1, a, b, false)));
    }
    return finish_from_dual(R, std::move(factors));
}

LoopedTree gy_dual_B(const RootSystem& R, const MinimalFactorization& f) {
    if (R.family() != Family::B)
        throw std::invalid_argument("gy_dual_B expects family B");
    require_standard(R, f);
    DualGraph g = dual_graph(R, f);
    int loop_vertex = 0, loop_index = 0;
    for (const auto& e : g.edges)
        if (e.a == e.b) {
            loop_vertex = e.a;
            loop_index = e.factor_index;
        }
    if (loop_vertex == 0) throw std::logic_error("folded dual has no loop");
    Slide s = slide_from(loop_vertex, g.edges);
    auto relabel = [&](int v) {
        return v == loop_vertex ? loop_index : s.toward.at(v);
    };
    LoopedTree out;
    out.loop_vertex = loop_index;
    out.tree.root = relabel(1);
    for (const auto& [v, p] : slide_from(1, g.edges).parent)
        out.tree.parent[relabel(v)] = relabel(p);
    return out;
}

MinimalFactorization gy_inverse_B(const RootSystem& R, const LoopedTree& t) {
    if (R.family() != Family::B)
        throw std::invalid_argument("gy_inverse_B expects family B");
    const int n = R.rank();
    std::set<int> labels;
    for (int v = 1; v <= n; ++v) labels.insert(v);
    check_tree_labels(t.tree, labels);
    if (!labels.count(t.loop_vertex))
        throw std::invalid_argument("loop vertex out of range");

    // labels slide toward the loop vertex; the loop takes its vertex label
    std::map<int, std::pair<int, int>> edge_by_index;
    for (const auto& [v, p] : reroot(t.tree, t.loop_vertex))
        edge_by_index[v] = {v, p};
    const int loop_index = t.loop_vertex;
    auto region = region_labels(labels, edge_by_index, t.tree.root, n);

    // supports are fixed; the sign of each long root is forced by the
    // climbing-prefix rule and the final product
    const GroupElement target = inverse(standard_coxeter_element(R));
    std::vector<MinimalFactorization> found;
    std::vector<Reflection> acc;
    auto rec = [&](auto&& self, int k, const GroupElement& prefix) -> void {
        if (static_cast<int>(found.size()) > 1) return;
        if (k > n) {
            if (prefix == target) {
                MinimalFactorization fp;
                fp.coxeter = target;
                fp.factors = acc;
                found.push_back(fp);
            }
            return;
        }
        std::vector<std::vector<int>> candidates;
        if (k == loop_index) {
            std::vector<int> r(n, 0);
            r[region.at(t.loop_vertex) - 1] = 1;
            candidates.push_back(r);
        } else {
            const auto [u, v] = edge_by_index.at(k);
            const int a = std::min(region.at(u), region.at(v));
            const int b = std::max(region.at(u), region.at(v));
            candidates.push_back(long_root(n, a, b, false));
            candidates.push_back(long_root(n, a, b, true));
        }
        for (const auto& r : candidates) {
            const Reflection& t_k = R.reflection_from_root(r);
            GroupElement next = compose(prefix, t_k.action);
            if (absolute_length(R, next) != k) continue;
            acc.push_back(t_k);
            self(self, k + 1, next);
            acc.pop_back();
        }
    };
    rec(rec, 1, identity_element(Family::B, n));
    if (found.size() != 1)
        throw std::invalid_argument("input does not come from a looped tree dual");
    return reverse_garside(R, found.front());
}

UnicyclicRootedGraph gy_dual_D(const RootSystem& R,
                               const MinimalFactorization& f) {
    if (R.family() != Family::D)
        throw std::invalid_argument("gy_dual_D expects family D");
    require_standard(R, f);
    DualGraph g = dual_graph(R, f);
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : g.edges) pairs.push_back({e.a, e.b});
    auto cyc = cycle_vertices(pairs);
    if (cyc.size() < 2 || !cyc.count(1))
        throw std::logic_error("folded dual cycle must pass through vertex 1");

    std::map<int, int> relabel;
    for (int v : cyc) {
        std::vector<int> incident;
        for (const auto& e : g.edges)
            if (cyc.count(e.a) && cyc.count(e.b) && (e.a == v || e.b == v))
                incident.push_back(e.factor_index);
        if (incident.size() != 2) throw std::logic_error("broken dual cycle");
        relabel[v] = v == 1 ? std::min(incident[0], incident[1])
                            : std::max(incident[0], incident[1]);
    }
    std::vector<LabeledEdge> off_cycle;
    for (const auto& e : g.edges)
        if (!cyc.count(e.a) || !cyc.count(e.b)) off_cycle.push_back(e);
    // BFS away from the cycle: each outside vertex takes the label of its
    // first edge back toward the cycle
    {
        auto adj = adjacency(off_cycle);
        std::set<int> seen(cyc.begin(), cyc.end());
        std::vector<int> queue(cyc.begin(), cyc.end());
        for (size_t i = 0; i < queue.size(); ++i)
            for (auto [w, k] : adj[queue[i]])
                if (seen.insert(w).second) {
                    relabel[w] = k;
                    queue.push_back(w);
                }
    }
    std::set<int> used;
    for (const auto& [v, lab] : relabel) used.insert(lab);
    if (static_cast<int>(relabel.size()) != R.rank() ||
        static_cast<int>(used.size()) != R.rank())
        throw std::logic_error("dual relabeling is not a permutation");

    UnicyclicRootedGraph out;
    out.n = R.rank();
    out.root = relabel.at(2);
    for (const auto& e : g.edges) {
        int a = relabel.at(e.a), b = relabel.at(e.b);
        out.edges.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

std::map<std::vector<std::pair<int, int>>, std::vector<MinimalFactorization>>
fold_fibers(const RootSystem& R, const GroupElement& c) {
    if (R.family() != Family::D)
        throw std::invalid_argument("fold_fibers expects family D");
    std::map<std::vector<std::pair<int, int>>, std::vector<MinimalFactorization>>
        fibers;
    for (const auto& f : enumerate_minimal_factorizations(R, c)) {
        std::vector<std::pair<int, int>> key;
        for (size_t k = 0; k < f.factors.size(); ++k) {
            LabeledEdge e = folded_edge(f.factors[k].root, static_cast<int>(k) + 1);
            key.push_back({e.a, e.b});
        }
        fibers[key].push_back(f);
    }
    return fibers;
}

RootedLabeledTree dt_to_s(const UnicyclicRootedGraph& g) {
    auto cyc = cycle_vertices(g.edges);
    if (cyc.size() < 2) throw std::invalid_argument("graph has no cycle");
    const int m = *cyc.begin();
    std::vector<LabeledEdge> edges;
    for (const auto& [a, b] : g.edges) {
        if (cyc.count(a) && cyc.count(b)) continue;
        LabeledEdge e;
        e.a = std::min(a, b);
        e.b = std::max(a, b);
        edges.push_back(e);
    }
    for (int v : cyc)
        if (v != m) {
            LabeledEdge e;
            e.a = m;
            e.b = v;
            edges.push_back(e);
        }
    RootedLabeledTree t;
    t.root = m;
    t.parent = slide_from(m, edges).parent;
    if (t.parent.size() + 1 != static_cast<size_t>(g.n))
        throw std::invalid_argument("graph is not spanning");
    return t;
}

std::set<int> cycle_of(const UnicyclicRootedGraph& g) {
    auto cyc = cycle_vertices(g.edges);
    if (cyc.size() < 2) throw std::invalid_argument("graph has no cycle");
    return cyc;
}

}  // namespace coxfactor
