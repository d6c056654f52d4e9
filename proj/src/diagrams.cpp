#include "coxfactor/diagrams.hpp"

#include <algorithm>
#include <stdexcept>

namespace coxfactor {
namespace {

// Orbits of c on signed symbols (positives only in type A), each starting at
// its smallest positive element and following c.
std::vector<std::vector<int>> signed_orbits(const GroupElement& c) {
    const int m = domain_size(c.family, c.rank);
    std::vector<int> symbols;
    for (int i = 1; i <= m; ++i) {
        symbols.push_back(i);
        if (c.family != Family::A) symbols.push_back(-i);
    }
    std::vector<std::vector<int>> orbits;
    std::vector<int> seen;
    for (int start = 1; start <= m; ++start) {
        if (std::find(seen.begin(), seen.end(), start) != seen.end()) continue;
        std::vector<int> orbit;
        int x = start;
        do {
            orbit.push_back(x);
            seen.push_back(x);
            x = c.apply(x);
        } while (x != start);
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

Chord make_chord(int a, int b, int k) {
    Chord ch;
    ch.a = std::min(a, b);
    ch.b = std::max(a, b);
    ch.factor_index = k;
    return ch;
}

// Moved point pairs of the reflection with the given root. Type A sees only
// the positive pair; B/D long roots contribute the two sign-symmetric pairs.
std::vector<Chord> chords_of_root(Family family, const std::vector<int>& root,
                                  int k) {
    std::vector<int> support;
    for (int i = 0; i < static_cast<int>(root.size()); ++i)
        if (root[i] != 0) support.push_back(i + 1);
    if (support.size() == 1) return {make_chord(support[0], -support[0], k)};
    const int a = support[0], b = support[1];
    const bool same_sign = root[a - 1] * root[b - 1] > 0;
    if (family == Family::A) return {make_chord(a, b, k)};
    if (same_sign) return {make_chord(a, -b, k), make_chord(-a, b, k)};
    return {make_chord(a, b, k), make_chord(-a, -b, k)};
}

int circle_of(const ChordDiagram& d, int point) {
    const bool outer = std::find(d.outer_points.begin(), d.outer_points.end(),
                                 point) != d.outer_points.end();
    return outer ? 0 : 1;
}

void apply_colors(std::vector<Chord>& chords, const std::vector<bool>& flags) {
    for (auto& ch : chords) ch.color = flags.at(ch.factor_index - 1) ? 2 : 1;
}

void apply_colors(std::vector<LabeledEdge>& edges,
                  const std::vector<bool>& flags) {
    for (auto& e : edges) e.color = flags.at(e.factor_index - 1) ? 2 : 1;
}

}  // namespace

LabeledEdge folded_edge(const std::vector<int>& root, int factor_index) {
    std::vector<int> support;
    for (int i = 0; i < static_cast<int>(root.size()); ++i)
        if (root[i] != 0) support.push_back(i + 1);
    LabeledEdge e;
    e.factor_index = factor_index;
    if (support.size() == 1) {
        e.a = e.b = support[0];
    } else {
        e.a = support[0];
        e.b = support[1];
    }
    return e;
}

ChordDiagram chord_diagram(const RootSystem& R, const MinimalFactorization& f) {
    validate_factorization(R, f);
    ChordDiagram d;
    d.family = R.family();
    d.rank = R.rank();
    auto orbits = signed_orbits(f.coxeter);
    if (R.family() == Family::D) {
        // Outer circle carries the long cycle, inner the 2-element one. The
        // D_2 tie keeps the orbit of 1 inside, matching the standard picture.
        if (orbits.size() != 2) throw std::logic_error("expected two cycles");
        if (orbits[0].size() < orbits[1].size() ||
            (orbits[0].size() == orbits[1].size() && orbits[0][0] == 1))
            std::swap(orbits[0], orbits[1]);
        d.outer_points = orbits[0];
        d.inner_points = orbits[1];
    } else {
        if (orbits.size() != 1) throw std::logic_error("expected one cycle");
        d.outer_points = orbits[0];
    }
    for (int k = 1; k <= static_cast<int>(f.factors.size()); ++k) {
        for (auto ch : chords_of_root(R.family(), f.factors[k - 1].root, k)) {
            const int ca = circle_of(d, ch.a), cb = circle_of(d, ch.b);
            ch.circle = (ca == cb) ? ca : -1;
            d.chords.push_back(ch);
        }
    }
    return d;
}

FoldedDiagram folded_diagram(const RootSystem& R,
                             const MinimalFactorization& f) {
    if (R.family() == Family::A)
        throw std::invalid_argument("folded diagrams exist in types B and D only");
    validate_factorization(R, f);
    FoldedDiagram d;
    d.family = R.family();
    d.rank = R.rank();
    for (int k = 1; k <= static_cast<int>(f.factors.size()); ++k)
        d.edges.push_back(folded_edge(f.factors[k - 1].root, k));
    return d;
}

DualGraph dual_graph(const RootSystem& R, const MinimalFactorization& f) {
    const MinimalFactorization fp = reverse_garside(R, f);
    DualGraph g;
    g.family = R.family();
    g.rank = R.rank();
    const int m = domain_size(R.family(), R.rank());
    for (int v = 1; v <= m; ++v) g.vertices.push_back(v);
    for (int k = 1; k <= static_cast<int>(fp.factors.size()); ++k)
        g.edges.push_back(folded_edge(fp.factors[k - 1].root, k));
    return g;
}

bool chords_cross(const ChordDiagram& d, const Chord& x, const Chord& y) {
    if (x.circle != y.circle || x.circle == -1) return false;
    const auto& pts = x.circle == 0 ? d.outer_points : d.inner_points;
    const int n = static_cast<int>(pts.size());
    auto pos = [&](int v) {
        auto it = std::find(pts.begin(), pts.end(), v);
        if (it == pts.end()) throw std::invalid_argument("point not on circle");
        return static_cast<int>(it - pts.begin());
    };
    const int xa = pos(x.a), xb = pos(x.b), ya = pos(y.a), yb = pos(y.b);
    if (xa == ya || xa == yb || xb == ya || xb == yb) return false;
    auto inside = [&](int p) {
        for (int i = (xa + 1) % n; i != xb; i = (i + 1) % n)
            if (i == p) return true;
        return false;
    };
    return inside(ya) != inside(yb);
}

ChordDiagram color_diagram(ChordDiagram d, const OneWayProfile& profile) {
    apply_colors(d.chords, profile.flags);
    return d;
}

FoldedDiagram color_diagram(FoldedDiagram d, const OneWayProfile& profile) {
    apply_colors(d.edges, profile.flags);
    return d;
}

DualGraph color_diagram(DualGraph d, const OneWayProfile& profile) {
    apply_colors(d.edges, profile.flags);
    return d;
}

}  // namespace coxfactor
