#pragma once

#include "coxfactor/factorization.hpp"

#include <vector>

namespace coxfactor {

// Chord between two circle points; color 0 = uncolored, 1 = two-way,
// 2 = one-way.
struct Chord {
    int a = 0, b = 0;      // endpoint labels, a < b numerically
    int factor_index = 0;  // 1-based position of the factor
    int circle = 0;        // 0 outer, 1 inner, -1 spanning both circles
    int color = 0;

    friend bool operator==(const Chord&, const Chord&) = default;
};

// Circle points are the entries of the Coxeter element's cycles, clockwise;
// type D splits them over an outer (long cycle) and inner (short cycle)
// circle. Each reflection contributes one chord per moved point pair.
struct ChordDiagram {
    Family family = Family::A;
    int rank = 0;
    std::vector<int> outer_points;
    std::vector<int> inner_points;  // type D only
    std::vector<Chord> chords;
};

struct LabeledEdge {
    int a = 0, b = 0;  // a <= b; a == b encodes a loop
    int factor_index = 0;
    int color = 0;

    friend bool operator==(const LabeledEdge&, const LabeledEdge&) = default;
    friend auto operator<=>(const LabeledEdge&, const LabeledEdge&) = default;
};

// Type B/D diagram on the absolute values [n]: long reflections become edges
// {a,b}, short reflections loops. Forgets chord signs (2-to-1 in type D).
struct FoldedDiagram {
    Family family = Family::B;
    int rank = 0;
    std::vector<LabeledEdge> edges;
};

// Planar dual of the chord diagram, defined algebraically: edge k joins the
// regions moved by the k-th factor of reverse_garside(f). Type A duals live
// on the n+1 region labels; B/D duals are kept in folded form on [n].
struct DualGraph {
    Family family = Family::A;
    int rank = 0;
    std::vector<int> vertices;
    std::vector<LabeledEdge> edges;
};

ChordDiagram chord_diagram(const RootSystem& R, const MinimalFactorization& f);

// Family B or D only.
FoldedDiagram folded_diagram(const RootSystem& R, const MinimalFactorization& f);

DualGraph dual_graph(const RootSystem& R, const MinimalFactorization& f);

// True when the endpoints interleave in the cyclic order of a common circle.
// Chords touching different circles never cross; shared endpoints do not
// count as crossings.
bool chords_cross(const ChordDiagram& d, const Chord& x, const Chord& y);

ChordDiagram color_diagram(ChordDiagram d, const OneWayProfile& profile);
FoldedDiagram color_diagram(FoldedDiagram d, const OneWayProfile& profile);
DualGraph color_diagram(DualGraph d, const OneWayProfile& profile);

// Folded edge (or loop) of a reflection root with |support| coordinates.
LabeledEdge folded_edge(const std::vector<int>& root, int factor_index);

}  // namespace coxfactor
