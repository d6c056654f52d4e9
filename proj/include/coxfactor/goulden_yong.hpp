#pragma once

#include "coxfactor/diagrams.hpp"

#include <map>
#include <set>
#include <utility>
#include <vector>

namespace coxfactor {

// Labeled tree stored as a parent map; the root label has no entry.
struct RootedLabeledTree {
    int root = 0;
    std::map<int, int> parent;

    friend bool operator==(const RootedLabeledTree&,
                           const RootedLabeledTree&) = default;
    friend auto operator<=>(const RootedLabeledTree&,
                            const RootedLabeledTree&) = default;
};

// Rooted tree on [n] with a loop attached to one vertex (the set BT_n).
struct LoopedTree {
    RootedLabeledTree tree;
    int loop_vertex = 0;

    friend bool operator==(const LoopedTree&, const LoopedTree&) = default;
    friend auto operator<=>(const LoopedTree&, const LoopedTree&) = default;
};

// Spanning multigraph on [n] with n edges and a single cycle (length >= 2,
// double edges allowed), rooted anywhere except the smallest cycle vertex
// (the set DT_n). Edges are kept sorted with a <= b.
struct UnicyclicRootedGraph {
    int n = 0;
    int root = 0;
    std::vector<std::pair<int, int>> edges;

    friend bool operator==(const UnicyclicRootedGraph&,
                           const UnicyclicRootedGraph&) = default;
    friend auto operator<=>(const UnicyclicRootedGraph&,
                            const UnicyclicRootedGraph&) = default;
};

// Tree dual of a type A factorization of the standard Coxeter element: the
// dual graph rooted at region 1, the root relabeled n+1, every other vertex
// relabeled by the factor index of its edge toward the root. Vertex i then
// stands for the i-th factor.
RootedLabeledTree gy_dual_A(const RootSystem& R, const MinimalFactorization& f);

// Inverse of gy_dual_A: slides vertex labels back onto parent edges,
// recovers the region labels by walking the edge-transposition product, and
// finishes with the reverse Garside involution.
MinimalFactorization gy_inverse_A(const RootSystem& R,
                                  const RootedLabeledTree& t);

// Looped-tree dual of a type B factorization of the standard Coxeter
// element. The loop vertex takes the loop's factor index, other vertices the
// index of their edge toward it; the root marker stays on old vertex 1.
LoopedTree gy_dual_B(const RootSystem& R, const MinimalFactorization& f);

MinimalFactorization gy_inverse_B(const RootSystem& R, const LoopedTree& t);

// Unicyclic dual of a type D factorization of the standard Coxeter element;
// exactly two factorizations share each output.
UnicyclicRootedGraph gy_dual_D(const RootSystem& R,
                               const MinimalFactorization& f);

// Groups all minimal factorizations of c by their folded diagram, keyed by
// the per-factor folded edge. Type D only; every fiber has size 2.
std::map<std::vector<std::pair<int, int>>, std::vector<MinimalFactorization>>
fold_fibers(const RootSystem& R, const GroupElement& c);

// Unrooted part of a DT_n graph to a rooted tree whose root is smaller than
// all its children: cycle edges are replaced by a star from the smallest
// cycle vertex, which becomes the root.
RootedLabeledTree dt_to_s(const UnicyclicRootedGraph& g);

// Vertices surviving repeated leaf deletion, i.e. the unique cycle.
std::set<int> cycle_of(const UnicyclicRootedGraph& g);

}  // namespace coxfactor
