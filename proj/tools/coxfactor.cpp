// Command-line front end: enumeration, counting, duals, codes, verification
// suites, and diagram export. Exit codes: 0 success, 1 failed verification or
// count mismatch, 2 usage error, 3 malformed input.

#include "coxfactor/diagrams.hpp"
#include "coxfactor/factorization.hpp"
#include "coxfactor/goulden_yong.hpp"
#include "coxfactor/matrix_tree.hpp"
#include "coxfactor/prufer.hpp"
#include "coxfactor/serialize.hpp"
#include "coxfactor/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace coxfactor;
using nlohmann::json;

namespace {

// Flag combinations and out-of-range requests; reported with exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FailedCheck : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open " + out_path + " for writing");
    f << text;
}

std::string dumped(const json& j) { return j.dump(2) + "\n"; }

json read_json(const std::string& in_path) {
    if (in_path.empty())
        throw UsageError("this subcommand needs --in FILE (use - for stdin)");
    if (in_path == "-") return json::parse(std::cin);
    std::ifstream f(in_path);
    if (!f) throw std::invalid_argument("cannot read " + in_path);
    return json::parse(f);
}

// Desk-scale enumeration caps; COXFACTOR_MAX_RANK or --force raise them.
void check_cap(Family fam, int rank, bool force) {
    if (force) return;
    int cap = fam == Family::A ? 6 : 5;
    if (const char* env = std::getenv("COXFACTOR_MAX_RANK")) {
        int v = std::atoi(env);
        if (v > 0) cap = v;
    }
    if (rank > cap)
        throw UsageError("rank " + std::to_string(rank) + " is above the " +
                         std::string(1, family_letter(fam)) + " cap " +
                         std::to_string(cap) +
                         "; pass --force or set COXFACTOR_MAX_RANK");
}

BigInt bigpow(BigInt base, int exp) {
    BigInt r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

BigInt closed_form_count(Family fam, int rank) {
    switch (fam) {
        case Family::A: return bigpow(rank + 1, rank - 1);
        case Family::B: return bigpow(rank, rank);
        case Family::D: return 2 * bigpow(rank - 1, rank);
    }
    return 0;
}

std::string roots_line(const MinimalFactorization& f) {
    std::ostringstream out;
    for (size_t k = 0; k < f.factors.size(); ++k) {
        if (k) out << " ";
        out << "(";
        const auto& root = f.factors[k].root;
        for (size_t i = 0; i < root.size(); ++i)
            out << (i ? "," : "") << root[i];
        out << ")";
    }
    return out.str();
}

int run_enumerate(Family fam, int rank, bool force, int threads,
                  const std::string& format, const std::string& out_path) {
    check_cap(fam, rank, force);
    auto R = RootSystem::make(fam, rank);
    auto fs =
        enumerate_minimal_factorizations(R, standard_coxeter_element(R), threads);
    std::ostringstream out;
    if (format == "json") {
        json j;
        j["schema"] = 1;
        j["kind"] = "factorization-list";
        j["family"] = std::string(1, family_letter(fam));
        j["rank"] = rank;
        j["coxeter"] = to_json(standard_coxeter_element(R));
        j["count"] = fs.size();
        json list = json::array();
        json flags = json::array();
        for (const auto& f : fs) {
            json roots = json::array();
            for (const auto& r : f.factors) roots.push_back(r.root);
            list.push_back(roots);
            flags.push_back(one_way_flags(R, f));
        }
        j["factorizations"] = list;
        j["one_way"] = flags;
        out << dumped(j);
    } else if (format == "csv") {
        out << "index,factors\n";
        for (size_t i = 0; i < fs.size(); ++i)
            out << i + 1 << "," << roots_line(fs[i]) << "\n";
    } else {
        for (const auto& f : fs) out << roots_line(f) << "\n";
    }
    emit(out.str(), out_path);
    return 0;
}

int run_count(Family fam, int rank, bool force, int threads,
              const std::string& method_list, const std::string& out_path) {
    std::vector<std::string> methods;
    std::stringstream split(method_list);
    for (std::string m; std::getline(split, m, ',');)
        if (!m.empty()) methods.push_back(m);
    if (methods.empty()) throw UsageError("--method needs at least one method");

    auto value_of = [&](const std::string& method) -> BigInt {
        if (method == "enumerate") {
            check_cap(fam, rank, force);
            auto R = RootSystem::make(fam, rank);
            return enumerate_minimal_factorizations(
                       R, standard_coxeter_element(R), threads)
                .size();
        }
        if (method == "signed") {
            check_cap(fam, rank, force);
            auto R = RootSystem::make(fam, rank);
            return signed_count(R, standard_coxeter_element(R), threads);
        }
        if (method == "formula") return closed_form_count(fam, rank);
        if (method == "det" || method == "weighted-det") {
            if (fam != Family::A)
                throw UsageError("determinant counts are defined for family A "
                                 "only");
            auto L = laplacian(build_G_An(rank, method == "weighted-det"));
            return minor_det(L, rank + 1);
        }
        throw UsageError("unknown count method \"" + method +
                         "\" (enumerate, det, weighted-det, signed, formula)");
    };

    std::ostringstream out;
    std::vector<BigInt> values;
    for (const auto& m : methods) values.push_back(value_of(m));
    if (methods.size() == 1) {
        out << values[0] << "\n";
        emit(out.str(), out_path);
        return 0;
    }
    bool agree = true;
    for (size_t i = 0; i < methods.size(); ++i) {
        out << methods[i] << " " << values[i] << "\n";
        agree = agree && values[i] == values[0];
    }
    emit(out.str(), out_path);
    if (!agree) throw FailedCheck("count methods disagree");
    return 0;
}

int run_dual(const std::string& in_path, const std::string& format, bool color,
             const std::string& out_path) {
    auto [R, f] = factorization_from_json(read_json(in_path));
    DualGraph g = dual_graph(R, f);
    if (color) g = color_diagram(std::move(g), one_way_profile(R, f));
    if (format == "dot")
        emit(to_dot(g), out_path);
    else
        emit(dumped(to_json(g)), out_path);
    return 0;
}

int run_gy(const std::string& in_path, bool inverse,
           const std::string& out_path) {
    json j = read_json(in_path);
    if (inverse) {
        std::string kind = j.value("kind", std::string());
        if (kind == "rooted-tree") {
            RootedLabeledTree t = rooted_tree_from_json(j);
            auto R = RootSystem::make(Family::A,
                                      static_cast<int>(t.parent.size()));
            auto f = gy_inverse_A(R, t);
            emit(dumped(to_json(R, f)), out_path);
            return 0;
        }
        if (kind == "looped-tree") {
            LoopedTree t = looped_tree_from_json(j);
            auto R = RootSystem::make(
                Family::B, static_cast<int>(t.tree.parent.size()) + 1);
            auto f = gy_inverse_B(R, t);
            emit(dumped(to_json(R, f)), out_path);
            return 0;
        }
        if (kind == "unicyclic")
            throw UsageError("the type D dual is two-to-one, so there is no "
                             "single-valued inverse");
        throw std::invalid_argument("expected a rooted-tree or looped-tree "
                                    "document");
    }
    auto [R, f] = factorization_from_json(j);
    switch (R.family()) {
        case Family::A: emit(dumped(to_json(gy_dual_A(R, f))), out_path); break;
        case Family::B: emit(dumped(to_json(gy_dual_B(R, f))), out_path); break;
        case Family::D: emit(dumped(to_json(gy_dual_D(R, f))), out_path); break;
    }
    return 0;
}

int run_prufer_encode(const std::string& variant, const std::string& in_path,
                      bool raw, bool full_json, const std::string& out_path) {
    json j = read_json(in_path);
    PruferCode code;
    if (variant == "classic") {
        code = prufer_encode(labeled_tree_from_json(j));
    } else if (variant == "rooted") {
        code = rooted_encode(rooted_tree_from_json(j));
    } else if (variant == "b") {
        code = typeB_encode(looped_tree_from_json(j));
    } else if (variant == "d") {
        auto g = unicyclic_from_json(j);
        if (raw) {
            emit(json(typeD_entries_raw(g)).dump() + "\n", out_path);
            return 0;
        }
        code = typeD_encode(g);
    } else {
        throw UsageError("unknown variant \"" + variant +
                         "\" (classic, rooted, b, d)");
    }
    if (raw)
        throw UsageError("--raw applies to the d variant only");
    if (full_json)
        emit(dumped(to_json(code)), out_path);
    else
        emit(json(code.entries).dump() + "\n", out_path);
    return 0;
}

PruferVariant variant_enum(const std::string& name) {
    if (name == "classic") return PruferVariant::classic;
    if (name == "rooted") return PruferVariant::rooted;
    if (name == "b") return PruferVariant::typeB;
    if (name == "d") return PruferVariant::typeD;
    throw UsageError("unknown variant \"" + name +
                     "\" (classic, rooted, b, d)");
}

int run_prufer_decode(const std::string& variant, const std::string& in_path,
                      const std::string& out_path) {
    json j = read_json(in_path);
    PruferCode code;
    if (j.is_array()) {
        // Bare entry arrays: the length fixes n for every variant.
        code.variant = variant_enum(variant);
        for (const auto& e : j) {
            if (!e.is_number_integer())
                throw std::invalid_argument("entries must be integers");
            code.entries.push_back(e.get<int>());
        }
        int len = static_cast<int>(code.entries.size());
        code.n = (code.variant == PruferVariant::typeB ||
                  code.variant == PruferVariant::typeD)
                     ? len
                     : len + 1;
    } else {
        code = prufer_code_from_json(j);
        if (!variant.empty() && variant_enum(variant) != code.variant)
            throw UsageError("--variant disagrees with the document");
    }
    switch (code.variant) {
        case PruferVariant::classic:
            emit(dumped(to_json(prufer_decode(code))), out_path);
            break;
        case PruferVariant::rooted:
            emit(dumped(to_json(rooted_decode(code))), out_path);
            break;
        case PruferVariant::typeB:
            emit(dumped(to_json(typeB_decode(code))), out_path);
            break;
        case PruferVariant::typeD:
            emit(dumped(to_json(typeD_decode(code))), out_path);
            break;
    }
    return 0;
}

int run_verify_cmd(const std::string& suite, const VerifyOptions& opt,
                   const std::string& format, const std::string& out_path) {
    const auto& names = verify_suite_names();
    if (suite != "all" &&
        std::find(names.begin(), names.end(), suite) == names.end()) {
        std::string all;
        for (const auto& n : names) all += " " + n;
        throw UsageError("unknown suite \"" + suite + "\"; choose all or" + all);
    }
    auto results = run_verify(suite, opt);
    bool all_ok = true;
    json failed = json::array();
    std::ostringstream out;
    for (const auto& r : results) {
        all_ok = all_ok && r.passed;
        if (!r.passed)
            failed.push_back(
                {{"number", r.number}, {"name", r.name}, {"detail", r.detail}});
        if (format != "json")
            out << "[" << (r.passed ? "PASS" : "FAIL") << "] " << r.number
                << ". " << r.name << ": " << r.detail << "\n";
    }
    if (format == "json") {
        json j;
        j["schema"] = 1;
        j["kind"] = "verify-report";
        j["suite"] = suite;
        j["passed"] = all_ok;
        json checks = json::array();
        for (const auto& r : results)
            checks.push_back({{"number", r.number},
                              {"name", r.name},
                              {"passed", r.passed},
                              {"detail", r.detail}});
        j["checks"] = checks;
        out << dumped(j);
    } else if (!all_ok) {
        // machine-readable failure report after the human lines
        out << json({{"schema", 1},
                     {"kind", "verify-report"},
                     {"passed", false},
                     {"failed", failed}})
                   .dump()
            << "\n";
    }
    emit(out.str(), out_path);
    if (!all_ok) throw FailedCheck("verification failed");
    return 0;
}

int run_render(const std::string& in_path, const std::string& diagram,
               const std::string& format, bool color,
               const std::string& out_path) {
    auto [R, f] = factorization_from_json(read_json(in_path));
    auto profile = one_way_profile(R, f);
    if (diagram == "chord") {
        ChordDiagram d = chord_diagram(R, f);
        if (color) d = color_diagram(std::move(d), profile);
        if (format == "tikz")
            emit(to_tikz(d), out_path);
        else if (format == "json")
            emit(dumped(to_json(d)), out_path);
        else
            throw UsageError("chord diagrams render as tikz or json");
    } else if (diagram == "folded") {
        if (R.family() == Family::A)
            throw UsageError("folded diagrams exist for families B and D");
        FoldedDiagram d = folded_diagram(R, f);
        if (color) d = color_diagram(std::move(d), profile);
        if (format == "dot")
            emit(to_dot(d), out_path);
        else if (format == "json")
            emit(dumped(to_json(d)), out_path);
        else
            throw UsageError("folded diagrams render as dot or json");
    } else if (diagram == "dual") {
        DualGraph d = dual_graph(R, f);
        if (color) d = color_diagram(std::move(d), profile);
        if (format == "dot")
            emit(to_dot(d), out_path);
        else if (format == "json")
            emit(dumped(to_json(d)), out_path);
        else
            throw UsageError("dual graphs render as dot or json");
    } else {
        throw UsageError("unknown diagram \"" + diagram +
                         "\" (chord, folded, dual)");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Minimal reflection factorizations of Coxeter elements in types A, "
        "B, D: enumeration, duals, codes, counting, verification"};
    app.require_subcommand(1);

    std::string type = "A";
    int rank = 2;
    int threads = 1;
    bool force = false;
    std::string fmt_enumerate = "plain";
    std::string fmt_dual = "json";
    std::string fmt_verify = "plain";
    std::string fmt_render = "json";
    std::string in_path;
    std::string out_path;
    std::string method = "enumerate";
    std::string variant;
    std::string diagram = "dual";
    std::string suite = "all";
    bool inverse = false;
    bool raw = false;
    bool color = false;
    VerifyOptions vopt;

    auto add_family_rank = [&](CLI::App* cmd) {
        cmd->add_option("--type", type, "family letter A, B, or D")
            ->check(CLI::IsMember({"A", "B", "D", "a", "b", "d"}));
        cmd->add_option("--rank", rank, "rank of the group")
            ->required()
            ->check(CLI::PositiveNumber);
        cmd->add_flag("--force", force, "ignore the desk-scale rank cap");
        cmd->add_option("--threads", threads, "worker threads")
            ->check(CLI::PositiveNumber);
    };
    auto add_out = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "write here instead of stdout");
    };
    auto add_in = [&](CLI::App* cmd) {
        cmd->add_option("--in", in_path, "input JSON file (- for stdin)");
    };

    auto* cmd_enumerate =
        app.add_subcommand("enumerate", "list all minimal factorizations of "
                                        "the standard Coxeter element");
    add_family_rank(cmd_enumerate);
    add_out(cmd_enumerate);
    cmd_enumerate->add_option("--format", fmt_enumerate, "plain, json, or csv")
        ->check(CLI::IsMember({"plain", "json", "csv"}));
    bool enum_json = false;
    bool enum_count = false;
    auto* opt_enum_json = cmd_enumerate->add_flag(
        "--json", enum_json, "shorthand for --format json");
    cmd_enumerate
        ->add_flag("--count", enum_count,
                   "print only the number of factorizations")
        ->excludes(opt_enum_json);

    auto* cmd_count = app.add_subcommand(
        "count", "count minimal factorizations; several comma-separated "
                 "methods are cross-checked");
    add_family_rank(cmd_count);
    add_out(cmd_count);
    cmd_count->add_option(
        "--method", method,
        "enumerate, det, weighted-det, signed, formula (comma-separated)");

    auto* cmd_dual = app.add_subcommand(
        "dual", "planar dual graph of a factorization (folded for B and D)");
    add_in(cmd_dual);
    add_out(cmd_dual);
    cmd_dual->add_option("--format", fmt_dual, "json or dot")
        ->check(CLI::IsMember({"json", "dot"}));
    cmd_dual->add_flag("--color", color, "annotate one-way colors");

    auto* cmd_gy = app.add_subcommand(
        "gy", "tree-like dual of a factorization (rooted tree, looped tree, "
              "or unicyclic graph by family)");
    add_in(cmd_gy);
    add_out(cmd_gy);
    cmd_gy->add_flag("--inverse", inverse,
                     "decode a rooted-tree or looped-tree document back to "
                     "its factorization");

    auto* cmd_prufer =
        app.add_subcommand("prufer", "sequence codes for trees and duals");
    cmd_prufer->require_subcommand(1);
    auto* cmd_encode = cmd_prufer->add_subcommand("encode", "structure to code");
    add_in(cmd_encode);
    add_out(cmd_encode);
    cmd_encode->add_option("--variant", variant, "classic, rooted, b, or d")
        ->required();
    cmd_encode->add_flag("--raw", raw,
                         "d variant: keep the raw root label in the first "
                         "entry");
    bool prufer_json = false;
    cmd_encode->add_flag("--json", prufer_json,
                         "emit the full code document instead of the bare "
                         "entry array");
    auto* cmd_decode = cmd_prufer->add_subcommand("decode", "code to structure");
    add_in(cmd_decode);
    add_out(cmd_decode);
    cmd_decode->add_option("--variant", variant,
                           "required for bare entry arrays");

    auto* cmd_verify = app.add_subcommand(
        "verify", "run an acceptance suite and exit 0 only if it passes");
    cmd_verify->add_option("suite", suite, "all or one suite name")
        ->default_val("all");
    cmd_verify->add_option("--max-rank", vopt.max_rank,
                           "cap the enumerated ranks");
    cmd_verify->add_option("--seed", vopt.rng_seed, "random graph seed");
    cmd_verify->add_option("--graphs", vopt.random_graphs,
                           "number of random graphs");
    cmd_verify->add_option("--threads", vopt.threads, "worker threads")
        ->check(CLI::PositiveNumber);
    cmd_verify->add_option("--format", fmt_verify, "plain or json")
        ->check(CLI::IsMember({"plain", "json"}));
    add_out(cmd_verify);

    auto* cmd_render = app.add_subcommand(
        "render", "chord, folded, or dual diagram of a factorization");
    add_in(cmd_render);
    add_out(cmd_render);
    cmd_render->add_option("--diagram", diagram, "chord, folded, or dual");
    cmd_render->add_option("--format", fmt_render, "json, dot, or tikz");
    cmd_render->add_flag("--color", color, "annotate one-way colors");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Family fam = family_from_letter(type[0]);
        if (cmd_enumerate->parsed()) {
            if (enum_count)
                return run_count(fam, rank, force, threads, "enumerate",
                                 out_path);
            return run_enumerate(fam, rank, force, threads,
                                 enum_json ? "json" : fmt_enumerate, out_path);
        }
        if (cmd_count->parsed())
            return run_count(fam, rank, force, threads, method, out_path);
        if (cmd_dual->parsed())
            return run_dual(in_path, fmt_dual, color, out_path);
        if (cmd_gy->parsed()) return run_gy(in_path, inverse, out_path);
        if (cmd_prufer->parsed()) {
            if (cmd_encode->parsed())
                return run_prufer_encode(variant, in_path, raw, prufer_json,
                                         out_path);
            return run_prufer_decode(variant, in_path, out_path);
        }
        if (cmd_verify->parsed())
            return run_verify_cmd(suite, vopt, fmt_verify, out_path);
        if (cmd_render->parsed())
            return run_render(in_path, diagram, fmt_render, color, out_path);
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const FailedCheck& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
