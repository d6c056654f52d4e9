#include "coxfactor/serialize.hpp"

#include "coxfactor/factorization.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace coxfactor {

using nlohmann::json;

namespace {

json base(const char* kind) {
    json j;
    j["schema"] = 1;
    j["kind"] = kind;
    return j;
}

void expect(const json& j, const char* kind) {
    if (!j.is_object()) throw std::invalid_argument("expected a JSON object");
    if (j.value("schema", 0) != 1)
        throw std::invalid_argument("unsupported schema version");
    if (j.value("kind", std::string()) != kind)
        throw std::invalid_argument(std::string("expected kind \"") + kind +
                                    "\"");
}

int get_int(const json& j, const char* field) {
    auto it = j.find(field);
    if (it == j.end() || !it->is_number_integer())
        throw std::invalid_argument(std::string("missing integer field \"") +
                                    field + "\"");
    return it->get<int>();
}

// Pairs like [[1,4],[2,3]]; used for edge lists and parent maps.
std::vector<std::pair<int, int>> get_pairs(const json& j, const char* field) {
    auto it = j.find(field);
    if (it == j.end() || !it->is_array())
        throw std::invalid_argument(std::string("missing array field \"") +
                                    field + "\"");
    std::vector<std::pair<int, int>> out;
    for (const auto& e : *it) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw std::invalid_argument(std::string("entries of \"") + field +
                                        "\" must be integer pairs");
        out.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return out;
}

json pairs_json(const std::vector<std::pair<int, int>>& pairs) {
    json a = json::array();
    for (auto [x, y] : pairs) a.push_back({x, y});
    return a;
}

json parent_json(const std::map<int, int>& parent) {
    json a = json::array();
    for (auto [child, par] : parent) a.push_back({child, par});
    return a;
}

json edge_json(const LabeledEdge& e) {
    json j;
    j["a"] = e.a;
    j["b"] = e.b;
    j["factor"] = e.factor_index;
    if (e.color != 0) j["color"] = e.color;
    return j;
}

const char* variant_name(PruferVariant v) {
    switch (v) {
        case PruferVariant::classic: return "classic";
        case PruferVariant::rooted: return "rooted";
        case PruferVariant::typeB: return "b";
        case PruferVariant::typeD: return "d";
    }
    return "?";
}

PruferVariant variant_from_name(const std::string& s) {
    if (s == "classic") return PruferVariant::classic;
    if (s == "rooted") return PruferVariant::rooted;
    if (s == "b") return PruferVariant::typeB;
    if (s == "d") return PruferVariant::typeD;
    throw std::invalid_argument("unknown code variant \"" + s + "\"");
}

}  // namespace

json to_json(const GroupElement& w) {
    json j;
    j["family"] = std::string(1, family_letter(w.family));
    j["rank"] = w.rank;
    j["images"] = w.images;
    return j;
}

GroupElement group_element_from_json(const json& j) {
    if (!j.is_object())
        throw std::invalid_argument("group element must be an object");
    std::string fam = j.value("family", std::string());
    if (fam.size() != 1) throw std::invalid_argument("missing family letter");
    GroupElement w;
    w.family = family_from_letter(fam[0]);
    w.rank = get_int(j, "rank");
    auto it = j.find("images");
    if (it == j.end() || !it->is_array())
        throw std::invalid_argument("missing array field \"images\"");
    for (const auto& x : *it) {
        if (!x.is_number_integer())
            throw std::invalid_argument("images must be integers");
        w.images.push_back(x.get<int>());
    }
    validate_element(w);
    return w;
}

json to_json(const LabeledTree& t) {
    json j = base("tree");
    j["vertices"] = t.vertex_count;
    j["edges"] = pairs_json(t.edges);
    return j;
}

json to_json(const RootedLabeledTree& t) {
    json j = base("rooted-tree");
    j["root"] = t.root;
    j["edges"] = parent_json(t.parent);
    return j;
}

json to_json(const LoopedTree& t) {
    json j = base("looped-tree");
    j["root"] = t.tree.root;
    j["edges"] = parent_json(t.tree.parent);
    j["loop"] = t.loop_vertex;
    return j;
}

json to_json(const UnicyclicRootedGraph& g) {
    json j = base("unicyclic");
    j["n"] = g.n;
    j["root"] = g.root;
    j["edges"] = pairs_json(g.edges);
    return j;
}

json to_json(const DirectedMultigraph& g) {
    json j = base("multigraph");
    j["m"] = g.vertex_count;
    json edges = json::array();
    for (const auto& e : g.edges) {
        json w;
        if (e.weight >= std::numeric_limits<long long>::min() &&
            e.weight <= std::numeric_limits<long long>::max())
            w = e.weight.convert_to<long long>();
        else
            w = e.weight.str();
        edges.push_back({e.from, e.to, w});
    }
    j["edges"] = edges;
    return j;
}

json to_json(const PruferCode& c) {
    json j = base("prufer-code");
    j["variant"] = variant_name(c.variant);
    j["n"] = c.n;
    j["entries"] = c.entries;
    return j;
}

json to_json(const RootSystem& R, const MinimalFactorization& f) {
    json j = base("factorization");
    j["coxeter"] = to_json(f.coxeter);
    json factors = json::array();
    for (const auto& r : f.factors) factors.push_back(r.root);
    j["factors"] = factors;
    j["one_way"] = one_way_flags(R, f);
    return j;
}

json to_json(const ChordDiagram& d) {
    json j = base("chord-diagram");
    j["family"] = std::string(1, family_letter(d.family));
    j["rank"] = d.rank;
    j["outer"] = d.outer_points;
    if (!d.inner_points.empty()) j["inner"] = d.inner_points;
    json chords = json::array();
    for (const auto& c : d.chords) {
        json e;
        e["a"] = c.a;
        e["b"] = c.b;
        e["factor"] = c.factor_index;
        e["circle"] = c.circle;
        if (c.color != 0) e["color"] = c.color;
        chords.push_back(e);
    }
    j["chords"] = chords;
    return j;
}

json to_json(const FoldedDiagram& d) {
    json j = base("folded-diagram");
    j["family"] = std::string(1, family_letter(d.family));
    j["rank"] = d.rank;
    json edges = json::array();
    for (const auto& e : d.edges) edges.push_back(edge_json(e));
    j["edges"] = edges;
    return j;
}

json to_json(const DualGraph& g) {
    json j = base("dual-graph");
    j["family"] = std::string(1, family_letter(g.family));
    j["rank"] = g.rank;
    j["vertices"] = g.vertices;
    json edges = json::array();
    for (const auto& e : g.edges) edges.push_back(edge_json(e));
    j["edges"] = edges;
    return j;
}

LabeledTree labeled_tree_from_json(const json& j) {
    expect(j, "tree");
    LabeledTree t;
    t.vertex_count = get_int(j, "vertices");
    t.edges = get_pairs(j, "edges");
    return t;
}

RootedLabeledTree rooted_tree_from_json(const json& j) {
    expect(j, "rooted-tree");
    RootedLabeledTree t;
    t.root = get_int(j, "root");
    for (auto [child, par] : get_pairs(j, "edges")) {
        if (!t.parent.emplace(child, par).second)
            throw std::invalid_argument("vertex listed with two parents");
    }
    return t;
}

LoopedTree looped_tree_from_json(const json& j) {
    expect(j, "looped-tree");
    LoopedTree t;
    t.tree.root = get_int(j, "root");
    for (auto [child, par] : get_pairs(j, "edges")) {
        if (!t.tree.parent.emplace(child, par).second)
            throw std::invalid_argument("vertex listed with two parents");
    }
    t.loop_vertex = get_int(j, "loop");
    return t;
}

UnicyclicRootedGraph unicyclic_from_json(const json& j) {
    expect(j, "unicyclic");
    UnicyclicRootedGraph g;
    g.n = get_int(j, "n");
    g.root = get_int(j, "root");
    for (auto [a, b] : get_pairs(j, "edges"))
        g.edges.emplace_back(std::min(a, b), std::max(a, b));
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

DirectedMultigraph multigraph_from_json(const json& j) {
    expect(j, "multigraph");
    DirectedMultigraph g;
    g.vertex_count = get_int(j, "m");
    auto it = j.find("edges");
    if (it == j.end() || !it->is_array())
        throw std::invalid_argument("missing array field \"edges\"");
    for (const auto& e : *it) {
        if (!e.is_array() || e.size() < 2 || e.size() > 3 ||
            !e[0].is_number_integer() || !e[1].is_number_integer())
            throw std::invalid_argument(
                "edges must be [from, to] or [from, to, weight]");
        DirectedEdge edge;
        edge.from = e[0].get<int>();
        edge.to = e[1].get<int>();
        if (e.size() == 3) {
            if (e[2].is_number_integer())
                edge.weight = e[2].get<long long>();
            else if (e[2].is_string())
                edge.weight = BigInt(e[2].get<std::string>());
            else
                throw std::invalid_argument("weight must be integer or string");
        }
        g.edges.push_back(edge);
    }
    return g;
}

PruferCode prufer_code_from_json(const json& j) {
    expect(j, "prufer-code");
    PruferCode c;
    c.variant = variant_from_name(j.value("variant", std::string()));
    c.n = get_int(j, "n");
    auto it = j.find("entries");
    if (it == j.end() || !it->is_array())
        throw std::invalid_argument("missing array field \"entries\"");
    for (const auto& e : *it) {
        if (!e.is_number_integer())
            throw std::invalid_argument("entries must be integers");
        c.entries.push_back(e.get<int>());
    }
    return c;
}

std::pair<RootSystem, MinimalFactorization> factorization_from_json(
    const json& j) {
    expect(j, "factorization");
    MinimalFactorization f;
    bool explicit_coxeter = j.contains("coxeter");
    if (explicit_coxeter) {
        f.coxeter = group_element_from_json(j.at("coxeter"));
        std::string fam =
            j.value("family", std::string(1, family_letter(f.coxeter.family)));
        if (fam.size() != 1 ||
            family_from_letter(fam[0]) != f.coxeter.family ||
            j.value("rank", f.coxeter.rank) != f.coxeter.rank)
            throw std::invalid_argument(
                "family/rank disagree with the coxeter element");
    } else {
        std::string fam = j.value("family", std::string());
        if (fam.size() != 1)
            throw std::invalid_argument("missing family letter");
        f.coxeter = identity_element(family_from_letter(fam[0]),
                                     get_int(j, "rank"));
    }
    RootSystem R = RootSystem::make(f.coxeter.family, f.coxeter.rank);
    auto it = j.find("factors");
    if (it == j.end() || !it->is_array())
        throw std::invalid_argument("missing array field \"factors\"");
    for (const auto& entry : *it) {
        if (!entry.is_array())
            throw std::invalid_argument("factors must be root vectors");
        std::vector<int> root;
        for (const auto& x : entry) {
            if (!x.is_number_integer())
                throw std::invalid_argument("root coordinates must be integers");
            root.push_back(x.get<int>());
        }
        f.factors.push_back(R.reflection_from_root(root));
    }
    if (!explicit_coxeter) f.coxeter = product(f);
    validate_factorization(R, f);
    // one_way and signs are derivable or decorative; a document carrying
    // wrong values is malformed.
    if (auto ow = j.find("one_way"); ow != j.end()) {
        if (*ow != json(one_way_flags(R, f)))
            throw std::invalid_argument(
                "one_way flags disagree with the factorization");
    }
    if (auto sg = j.find("signs"); sg != j.end()) {
        if (!sg->is_array() || sg->size() != f.factors.size())
            throw std::invalid_argument("signs must list one entry per factor");
        for (const auto& s : *sg)
            if (!s.is_number_integer() ||
                (s.get<int>() != 1 && s.get<int>() != -1))
                throw std::invalid_argument("signs must be 1 or -1");
    }
    return {std::move(R), std::move(f)};
}

namespace {

void dot_edges(std::ostringstream& out, const std::vector<LabeledEdge>& edges) {
    for (const auto& e : edges) {
        out << "  " << e.a << " -- " << e.b << " [label=" << e.factor_index;
        if (e.color != 0) out << ", color=" << e.color;
        out << "];\n";
    }
}

}  // namespace

std::string to_dot(const DualGraph& g) {
    std::ostringstream out;
    out << "graph dual {\n  edge [colorscheme=accent3];\n";
    for (int v : g.vertices) out << "  " << v << ";\n";
    dot_edges(out, g.edges);
    out << "}\n";
    return out.str();
}

std::string to_dot(const FoldedDiagram& d) {
    std::ostringstream out;
    out << "graph folded {\n  edge [colorscheme=accent3];\n";
    for (int v = 1; v <= d.rank; ++v) out << "  " << v << ";\n";
    dot_edges(out, d.edges);
    out << "}\n";
    return out.str();
}

std::string to_tikz(const ChordDiagram& d) {
    std::ostringstream out;
    out << "\\begin{tikzpicture}\n";
    // Node names by circle and clockwise position; labels are point values.
    std::map<int, std::string> node_of;
    auto place = [&](const std::vector<int>& points, const char* prefix,
                     double radius) {
        if (points.empty()) return;
        char circle[48];
        std::snprintf(circle, sizeof(circle),
                      "  \\draw[gray] (0,0) circle (%.1f);\n", radius);
        out << circle;
        for (size_t i = 0; i < points.size(); ++i) {
            double angle = 90.0 - 360.0 * static_cast<double>(i) /
                                      static_cast<double>(points.size());
            char buf[96];
            std::snprintf(buf, sizeof(buf),
                          "  \\node (%s%zu) at (%.2f:%.1f) {$%d$};\n", prefix,
                          i + 1, angle, radius, points[i]);
            out << buf;
            node_of[points[i]] = std::string(prefix) + std::to_string(i + 1);
        }
    };
    place(d.outer_points, "o", 2.0);
    place(d.inner_points, "i", 1.0);
    for (const auto& c : d.chords) {
        out << (c.color == 2 ? "  \\draw[blue, thick] (" : "  \\draw (")
            << node_of.at(c.a) << ") -- (" << node_of.at(c.b) << ");\n";
    }
    out << "\\end{tikzpicture}\n";
    return out.str();
}

}  // namespace coxfactor
