#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tdc/domination.hpp"
#include "tdc/enumerate.hpp"
#include "tdc/family.hpp"
#include "tdc/formulas.hpp"
#include "tdc/io.hpp"
#include "tdc/reduction.hpp"
#include "tdc/serialize.hpp"
#include "tdc/solver.hpp"
#include "tdc/tree.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitBudgetExceeded = 3;

struct InputOptions {
    std::string file;
    std::string family;
    std::optional<long long> seed;
};

void add_input_flags(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("--in", in.file, "input graph file (.col DIMACS or .json)");
    cmd->add_option("--family", in.family,
                    "family shorthand name:params, e.g. cycle:10, multipartite:2,3,4, "
                    "random_graph:8,1,2,42");
    cmd->add_option("--seed", in.seed, "seed for random families (overrides the spec's seed)");
}

tdc::Graph resolve_input(const InputOptions& in) {
    if (in.file.empty() == in.family.empty())
        throw std::invalid_argument("exactly one of --in and --family is required");
    if (!in.file.empty()) return tdc::load_graph_file(in.file);
    tdc::FamilySpec spec = tdc::parse_family_spec(in.family);
    if (in.seed) {
        std::size_t seedless = spec.kind == tdc::Family::RandomTree    ? 1
                               : spec.kind == tdc::Family::RandomGraph ? 3
                                                                       : 0;
        if (seedless == 0)
            throw std::invalid_argument("--seed only applies to random families");
        if (spec.params.size() == seedless)
            spec.params.push_back(*in.seed);
        else if (spec.params.size() == seedless + 1)
            spec.params.back() = *in.seed;
    }
    return tdc::generate(spec);
}

std::uint64_t default_budget() {
    if (const char* env = std::getenv("TDC_NODE_BUDGET")) {
        char* end = nullptr;
        auto v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
        throw std::invalid_argument("TDC_NODE_BUDGET is not an integer: '" + std::string(env) +
                                    "'");
    }
    return 0;
}

void print_witness_classes(std::ostream& out, const tdc::Coloring& c) {
    for (int i = 1; i <= c.k(); ++i) {
        out << "  class " << i << ":";
        for (int v : c.class_of(i).to_vector()) out << ' ' << v;
        out << '\n';
    }
}

int run_solve_report(const tdc::Graph& g, const std::string& invariant,
                     const tdc::SolveOptions& opts, const std::string& format) {
    tdc::SolveReport rep =
        invariant == "chi_dt" ? tdc::tdc_exact(g, opts) : tdc::dc_exact(g, opts);
    if (format == "json") {
        std::cout << tdc::to_json(rep, invariant) << '\n';
    } else {
        std::cout << "invariant: " << invariant << '\n';
        if (rep.value) {
            std::cout << "value: " << *rep.value << '\n';
            std::cout << "witness:\n";
            print_witness_classes(std::cout, *rep.witness);
        } else {
            std::cout << "value: unknown (node budget exceeded)\n";
        }
        std::cout << "bounds: " << rep.lower_bound_used << ".." << rep.upper_bound_used << '\n';
        std::cout << "nodes: " << rep.nodes_explored << '\n';
    }
    return rep.budget_exhausted ? kExitBudgetExceeded : kExitOk;
}

int run_solve(const tdc::Graph& g, const std::string& invariant, const tdc::SolveOptions& opts,
              const std::string& format) {
    if (invariant == "chi_dt" || invariant == "chi_d")
        return run_solve_report(g, invariant, opts, format);
    if (invariant == "chi") {
        auto res = tdc::chromatic_number_exact(g);
        if (format == "json") {
            nlohmann::json j;
            j["invariant"] = "chi";
            j["value"] = res.value;
            j["witness"] = nlohmann::json::parse(tdc::to_json(res.witness));
            std::cout << j.dump() << '\n';
        } else {
            std::cout << "invariant: chi\nvalue: " << res.value << '\n' << "witness:\n";
            print_witness_classes(std::cout, res.witness);
        }
        return kExitOk;
    }
    if (invariant == "gamma" || invariant == "gamma_t") {
        auto res = invariant == "gamma" ? tdc::gamma_exact(g) : tdc::gamma_t_exact(g);
        if (format == "json") {
            std::cout << tdc::to_json(res) << '\n';
        } else {
            std::cout << "invariant: " << invariant << "\nvalue: " << res.value << '\n';
            std::cout << "minimum sets (" << res.witnesses.size() << "):\n";
            for (const auto& w : res.witnesses) {
                std::cout << "  {";
                for (std::size_t i = 0; i < w.size(); ++i) std::cout << (i ? " " : "") << w[i];
                std::cout << "}\n";
            }
        }
        return kExitOk;
    }
    throw std::invalid_argument("unknown invariant: '" + invariant + "'");
}

int run_bounds(const tdc::Graph& g, bool exact, const tdc::SolveOptions& opts,
               const std::string& format) {
    auto rec = tdc::bounds_report(g, opts, exact);
    std::optional<tdc::TreeProfile> profile;
    if (g.order() >= 2 && tdc::is_tree(g)) profile = tdc::analyze_tree(g);
    if (format == "json") {
        nlohmann::json j = nlohmann::json::parse(tdc::to_json(rec));
        if (profile) j["tree_profile"] = nlohmann::json::parse(tdc::to_json(*profile));
        std::cout << j.dump() << '\n';
        return kExitOk;
    }
    auto line = [&](const char* name, const std::optional<int>& v) {
        if (v) std::cout << name << ": " << *v << '\n';
    };
    line("obs_lb", rec.obs_lb);
    line("components_lb", rec.components_lb);
    line("components_ub", rec.components_ub);
    line("alpha0_ub", rec.alpha0_ub);
    line("gamma_t_chi_ub", rec.gamma_t_chi_ub);
    line("partite_ub", rec.partite_ub);
    line("partite_corollary_ub", rec.partite_corollary_ub);
    line("universal_value", rec.universal_value);
    line("exact_value", rec.exact_value);
    std::cout << "gamma_t: " << rec.gamma_t << '\n';
    if (profile) {
        std::cout << "tree: diameter " << profile->diameter << ", radius " << profile->radius
                  << ", " << profile->leaf_count << " leaves, " << profile->support_count
                  << " supports, center ";
        if (profile->center_is_edge)
            std::cout << "edge (" << profile->center[0] << "," << profile->center[1] << ")\n";
        else
            std::cout << "vertex " << profile->center[0] << '\n';
    }
    return kExitOk;
}

tdc::FormulaFamily formula_family_from_name(const std::string& name) {
    if (name == "cycle") return tdc::FormulaFamily::Cycle;
    if (name == "path") return tdc::FormulaFamily::Path;
    if (name == "wheel") return tdc::FormulaFamily::Wheel;
    if (name == "complete") return tdc::FormulaFamily::CompleteGraph;
    if (name == "multipartite") return tdc::FormulaFamily::CompleteMultipartite;
    if (name == "complement_cycle") return tdc::FormulaFamily::ComplementCycle;
    if (name == "complement_path") return tdc::FormulaFamily::ComplementPath;
    if (name == "tree") return tdc::FormulaFamily::Tree;
    throw std::invalid_argument("unknown verification family: '" + name + "'");
}

std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            int v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed range: '" + text + "' (expected A..B)");
    }
}

int run_verify(const std::string& family, const std::string& range,
               const tdc::SolveOptions& opts, const std::string& format) {
    auto [lo, hi] = parse_range(range);
    auto report = tdc::verify_family(formula_family_from_name(family), lo, hi, opts);
    if (format == "json") {
        std::cout << tdc::to_json(report) << '\n';
    } else {
        std::cout << "instance          formula  exact  match\n";
        for (const auto& row : report.rows) {
            std::cout << row.instance;
            for (std::size_t i = row.instance.size(); i < 18; ++i) std::cout << ' ';
            std::cout << row.formula_value << "        " << row.exact_value << "      "
                      << (row.match ? "yes" : "NO") << '\n';
        }
        auto errata = report.errata();
        std::cout << report.rows.size() << " instances, " << errata.size() << " mismatches\n";
    }
    return kExitOk;
}

int run_table(const std::string& range, const std::string& format) {
    auto [lo, hi] = parse_range(range);
    if (lo < 3) throw std::invalid_argument("table: range starts at n = 3");
    auto rows = tdc::comparison_report(lo, hi);
    if (format == "json") {
        std::cout << tdc::to_json(rows) << '\n';
        return kExitOk;
    }
    std::cout << "   n  path cycle wheel  co-cycle co-path  complete  P-vs-C  W-vs-C\n";
    for (const auto& r : rows) {
        auto fmt = [](std::optional<int> v) {
            return v ? std::to_string(*v) : std::string("-");
        };
        std::optional<int> cc, cp;
        if (r.n >= 4) {
            cc = tdc::formula_value({tdc::FormulaFamily::ComplementCycle, {r.n}, {}});
            cp = tdc::formula_value({tdc::FormulaFamily::ComplementPath, {r.n}, {}});
        }
        auto rel = [](int s) { return s < 0 ? "<" : s > 0 ? ">" : "="; };
        std::printf("%4d  %4d  %4d  %4d  %8s %7s  %8d  %6s  %6s%s\n", r.n, r.path_value,
                    r.cycle_value, r.wheel_value, fmt(cc).c_str(), fmt(cp).c_str(), r.n,
                    rel(r.path_vs_cycle), rel(r.wheel_vs_cycle),
                    r.erratum ? "  (corrected value, relation differs from the uncorrected split)"
                              : "");
    }
    return kExitOk;
}

int run_gen(const InputOptions& in, const std::string& out_path, const std::string& format) {
    tdc::Graph g = resolve_input(in);
    std::string payload =
        format == "json" ? tdc::write_graph_json(g) + "\n" : tdc::write_dimacs_string(g);
    if (out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write file: " + out_path);
        out << payload;
    }
    return kExitOk;
}

int run_reduce(const std::string& in_path, std::string out_path) {
    tdc::Graph g = tdc::load_graph_file(in_path);
    auto inst = tdc::reduce(g, 1);
    if (out_path.empty()) {
        std::string stem = in_path;
        auto dot = stem.rfind('.');
        if (dot != std::string::npos) stem = stem.substr(0, dot);
        out_path = stem + "-reduced.col";
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write file: " + out_path);
    tdc::write_dimacs(inst.reduced, out);
    std::cout << "wrote " << out_path << "\nk -> k+1\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"total dominator coloring workbench"};
    app.require_subcommand(1);

    InputOptions gen_in, solve_in, bounds_in;
    std::string gen_out, gen_format = "dimacs";
    auto* gen = app.add_subcommand("gen", "generate a family graph and write it out");
    add_input_flags(gen, gen_in);
    gen->add_option("--out", gen_out, "output path (stdout when absent)");
    gen->add_option("--format", gen_format, "dimacs or json")
        ->check(CLI::IsMember({"dimacs", "json"}));

    std::string solve_invariant = "chi_dt", solve_format = "text";
    std::optional<std::uint64_t> solve_budget;
    auto* solve = app.add_subcommand("solve", "compute an invariant exactly, with witness");
    add_input_flags(solve, solve_in);
    solve->add_option("--invariant", solve_invariant, "chi | chi_d | chi_dt | gamma | gamma_t")
        ->check(CLI::IsMember({"chi", "chi_d", "chi_dt", "gamma", "gamma_t"}));
    solve->add_option("--format", solve_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    solve->add_option("--budget", solve_budget, "node budget (default: TDC_NODE_BUDGET or unlimited)");

    bool bounds_exact = false;
    std::string bounds_format = "text";
    std::optional<std::uint64_t> bounds_budget;
    auto* bounds = app.add_subcommand("bounds", "constructive bounds with certificates");
    add_input_flags(bounds, bounds_in);
    bounds->add_flag("--exact", bounds_exact, "also compute the exact value");
    bounds->add_option("--format", bounds_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    bounds->add_option("--budget", bounds_budget, "node budget");

    std::string verify_family_name, verify_range, verify_format = "text";
    std::optional<std::uint64_t> verify_budget;
    auto* verify = app.add_subcommand("verify", "closed forms vs the exact solver over a range");
    verify->add_option("--family", verify_family_name,
                       "path | cycle | wheel | complete | multipartite | complement_cycle | "
                       "complement_path | tree")
        ->required();
    verify->add_option("--range", verify_range, "parameter range A..B")->required();
    verify->add_option("--format", verify_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--budget", verify_budget, "node budget");

    std::string reduce_in, reduce_out;
    auto* reduce = app.add_subcommand("reduce", "add a universal vertex (k -> k+1 gadget)");
    reduce->add_option("--in", reduce_in, "input graph file")->required();
    reduce->add_option("--out", reduce_out, "output path (default: <stem>-reduced.col)");

    std::string table_range = "3..13", table_format = "text";
    auto* table = app.add_subcommand("table", "family values and comparisons over a range");
    table->add_option("--range", table_range, "n range A..B");
    table->add_option("--format", table_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInputError;
    }

    try {
        auto budget_opts = [&](const std::optional<std::uint64_t>& b) {
            tdc::SolveOptions o;
            o.node_budget = b ? *b : default_budget();
            return o;
        };
        if (gen->parsed()) return run_gen(gen_in, gen_out, gen_format);
        if (solve->parsed())
            return run_solve(resolve_input(solve_in), solve_invariant, budget_opts(solve_budget),
                             solve_format);
        if (bounds->parsed())
            return run_bounds(resolve_input(bounds_in), bounds_exact, budget_opts(bounds_budget),
                              bounds_format);
        if (verify->parsed())
            return run_verify(verify_family_name, verify_range, budget_opts(verify_budget),
                              verify_format);
        if (reduce->parsed()) return run_reduce(reduce_in, reduce_out);
        if (table->parsed()) return run_table(table_range, table_format);
    } catch (const tdc::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitOk;
}
