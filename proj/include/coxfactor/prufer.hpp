#pragma once

#include "coxfactor/goulden_yong.hpp"

#include <utility>
#include <vector>

namespace coxfactor {

enum class PruferVariant { classic, rooted, typeB, typeD };

// Integer code word plus the rank n fixing its length and alphabet:
// classic has n-1 entries over [n+1] (trees on n+1 vertices), rooted has
// n-1 over [n], type B has n over [n], type D has n over [n-1].
struct PruferCode {
    PruferVariant variant = PruferVariant::classic;
    std::vector<int> entries;
    int n = 0;

    friend bool operator==(const PruferCode&, const PruferCode&) = default;
};

// Unrooted tree on vertices 1..vertex_count given by its edge list.
// Decoders emit edges sorted with a < b.
struct LabeledTree {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;

    friend bool operator==(const LabeledTree&, const LabeledTree&) = default;
    friend auto operator<=>(const LabeledTree&, const LabeledTree&) = default;
};

// Record the neighbor of the smallest leaf and delete the leaf, until two
// vertices remain.
PruferCode prufer_encode(const LabeledTree& t);
LabeledTree prufer_decode(const PruferCode& code);

// Rooted variant on [n]: deletion runs until only the root is left, so the
// code has n-1 entries and its last entry is the root.
PruferCode rooted_encode(const RootedLabeledTree& t);
RootedLabeledTree rooted_decode(const PruferCode& code);

// b_1 is the root label; b_2..b_n is the rooted code of the tree re-rooted
// at the loop vertex, which therefore lands in b_n.
PruferCode typeB_encode(const LoopedTree& g);
LoopedTree typeB_decode(const PruferCode& code);

// Bijection from trees whose root is smaller than all its children onto
// trees where the largest vertex n is a leaf: the descendants of n move
// under the root, the root's other children are chained in descending
// order, and the largest of them becomes the new root.
RootedLabeledTree bernardi_g(const RootedLabeledTree& s);
RootedLabeledTree bernardi_g_inv(const RootedLabeledTree& t);

// d_1 is the root with the smallest cycle vertex's label skipped, d_2..d_n
// the rooted code of the collapsed star tree pushed through bernardi_g.
// The star collapse identifies some cycles, so distinct graphs can share a
// code; see typeD_decode.
PruferCode typeD_encode(const UnicyclicRootedGraph& g);

// The same entries with d_1 left as the raw root label, which can exceed
// the nominal alphabet [n-1].
std::vector<int> typeD_entries_raw(const UnicyclicRootedGraph& g);

// Inverts typeD_encode stage by stage. The star collapse has no pointwise
// inverse, so the final stage looks the tree up in the enumerated image
// table; codes hit by zero or by several graphs are rejected.
UnicyclicRootedGraph typeD_decode(const PruferCode& code);

// Every unicyclic dual of a rank n factorization, enumerated once per rank
// and cached (ranks 3 to 5).
const std::vector<UnicyclicRootedGraph>& unicyclic_duals(int n);

}  // namespace coxfactor
