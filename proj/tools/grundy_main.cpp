// Command-line front end. Subcommands map one-to-one onto the library entry
// points; all output lands on stdout, diagnostics on stderr. Exit codes are a
// contract: 0 ok, 2 input parse failure, 3 girth gate, 4 realization got stuck,
// 5 oracle size guard, 1 anything else.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "grundy/grundy.hpp"

namespace {

using namespace grundy;

struct io_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw io_failure("cannot open " + path);
        ss << in.rdbuf();
    }
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw io_failure("cannot open " + path + " for writing");
    out << text;
}

GraphFormat to_format(const std::string& name) {
    return name == "dimacs" ? GraphFormat::dimacs : GraphFormat::edge_list;
}

Graph load_graph(const std::string& path, const std::string& format) {
    return parse_graph(read_input(path), to_format(format));
}

nlohmann::json load_json(const std::string& path) { return nlohmann::json::parse(read_input(path)); }

std::string join(const std::vector<int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(xs[i]);
    }
    return out;
}

int run_stair(const std::string& input, const std::string& format, bool json) {
    Graph g = load_graph(input, format);
    auto d = vertex_decomposition(g);
    int gamma = stair_factor(d);
    auto s = extract_feasible_sequence(g, d);
    if (json) {
        std::cout << stair_report_to_json(d, gamma, s).dump() << "\n";
    } else {
        std::cout << "gamma: " << gamma << "\n"
                  << "order: " << join(d.order) << "\n"
                  << "residues: " << join(d.residues) << "\n"
                  << "sequence: " << join(s.vertices) << "\n";
    }
    return 0;
}

int run_color(const std::string& input, const std::string& format, bool force, bool json) {
    Graph g = load_graph(input, format);
    auto result = grundy_number_large_girth(g, force);
    if (json) {
        std::cout << coloring_report_to_json(result.coloring, result.k, result.sequence).dump()
                  << "\n";
    } else {
        std::cout << "k: " << result.k << "\n"
                  << "l: " << result.coloring.l << "\n"
                  << "colors: " << join(result.coloring.colors) << "\n";
    }
    return 0;
}

int run_verify(const std::string& graph_path, const std::string& coloring_path,
               const std::string& format, bool json) {
    Graph g = load_graph(graph_path, format);
    Coloring c = coloring_from_json(load_json(coloring_path));
    Verdict v = verify_partial_grundy(g, c);
    if (json) {
        std::cout << verdict_to_json(v).dump() << "\n";
    } else if (v.valid) {
        std::cout << "valid\n";
    } else {
        for (const auto& viol : v.violations) {
            if (viol.kind == Violation::Kind::improper_edge)
                std::cout << "improper edge " << viol.u << " " << viol.v << "\n";
            else
                std::cout << "class " << viol.color_class << " has no vertex seeing all smaller colors\n";
        }
    }
    return v.valid ? 0 : 1;
}

int run_exact(const std::string& input, const std::string& format, const std::string& only,
              bool witness, bool json) {
    Graph g = load_graph(input, format);
    nlohmann::json out;
    std::string text;
    if (only == "all" || only == "stair") {
        out["stair"] = brute_stair(g);
        text += "stair: " + std::to_string(out["stair"].get<int>()) + "\n";
    }
    if (only == "all" || only == "partial-grundy") {
        if (witness) {
            auto w = brute_partial_grundy_witness(g);
            out["partial_grundy"] = w.k;
            out["coloring"] = coloring_to_json(w.coloring);
            text += "partial_grundy: " + std::to_string(w.k) + "\n";
            text += "colors: " + join(w.coloring.colors) + "\n";
        } else {
            out["partial_grundy"] = brute_partial_grundy(g);
            text += "partial_grundy: " + std::to_string(out["partial_grundy"].get<int>()) + "\n";
        }
    }
    if (only == "all" || only == "3color") {
        auto c3 = brute_3color(g);
        out["three_colorable"] = c3.has_value();
        text += std::string("three_colorable: ") + (c3 ? "yes" : "no") + "\n";
        if (witness && c3) {
            out["three_coloring"] = coloring_to_json(*c3);
            text += "three_coloring: " + join(c3->colors) + "\n";
        }
    }
    if (json)
        std::cout << out.dump() << "\n";
    else
        std::cout << text;
    return 0;
}

int run_reduce(const std::string& input, const std::string& format, const std::string& out_path,
               std::string meta_path) {
    Graph g = load_graph(input, format);
    ReductionInstance inst = build_reduction(g);
    write_output(out_path, write_edge_list(inst.gprime));
    if (meta_path.empty() && out_path != "-") meta_path = out_path + ".meta.json";
    if (!meta_path.empty()) write_output(meta_path, instance_meta_to_json(inst).dump() + "\n");
    return 0;
}

int run_lift(const std::string& meta_path, const std::string& coloring_path) {
    ReductionInstance inst = instance_from_meta_json(load_json(meta_path));
    Coloring c3 = coloring_from_json(load_json(coloring_path));
    Coloring f = lift_coloring(inst, c3);
    std::cout << coloring_to_json(f).dump() << "\n";
    return 0;
}

int run_extract(const std::string& meta_path, const std::string& coloring_path) {
    ReductionInstance inst = instance_from_meta_json(load_json(meta_path));
    Coloring f = coloring_from_json(load_json(coloring_path));
    Coloring c3 = extract_3coloring(inst, f);
    std::cout << coloring_to_json(c3).dump() << "\n";
    return 0;
}

int run_gen(const std::string& family, int n, std::uint64_t seed, int t, const std::string& format) {
    Graph g = [&] {
        if (family == "tree") return gen_random_tree(n, seed);
        if (family == "path") return gen_path(n);
        if (family == "cycle") return gen_cycle(n);
        if (family == "star") return gen_star(n);
        if (family == "complete") return gen_complete(n);
        throw std::invalid_argument("unknown family " + family);
    }();
    if (t > 0) g = subdivide(g, t);
    std::cout << write_graph(g, to_format(format));
    return 0;
}

int run_bench_cmd(const std::vector<int>& sizes, std::uint64_t seed, int reps) {
    std::cout << bench_csv(run_bench(sizes, seed, reps));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"partial Grundy coloring toolkit"};
    app.require_subcommand(1);

    std::string input = "-", format = "edge-list";
    bool json = false, force = false, witness = false;

    auto add_graph_options = [&](CLI::App* cmd, bool with_json = true) {
        cmd->add_option("input", input, "graph file, - for stdin");
        cmd->add_option("--format", format, "edge-list or dimacs")
            ->check(CLI::IsMember({"edge-list", "dimacs"}));
        if (with_json) cmd->add_flag("--json", json, "machine-readable output");
    };

    auto* stair = app.add_subcommand("stair", "vertex decomposition, stair factor, feasible sequence");
    add_graph_options(stair);

    auto* color = app.add_subcommand("color", "Grundy coloring of a girth > 8 graph");
    add_graph_options(color);
    color->add_flag("--force", force, "attempt the construction despite small girth");

    std::string coloring_path, meta_path, out_path = "-";
    auto* verify = app.add_subcommand("verify", "check a coloring against a graph");
    add_graph_options(verify);
    verify->add_option("coloring", coloring_path, "coloring JSON file")->required();

    std::string only = "all";
    auto* exact = app.add_subcommand("exact", "brute-force reference values (small graphs)");
    add_graph_options(exact);
    exact->add_option("--only", only, "all, stair, partial-grundy or 3color")
        ->check(CLI::IsMember({"all", "stair", "partial-grundy", "3color"}));
    exact->add_flag("--witness", witness, "include witness colorings");

    auto* reduce = app.add_subcommand("reduce", "3-colorability to partial Grundy instance");
    add_graph_options(reduce, false);
    reduce->add_option("--out", out_path, "instance graph destination, - for stdout");
    reduce->add_option("--meta", meta_path, "sidecar destination (default <out>.meta.json)");

    auto* lift = app.add_subcommand("lift", "3-coloring of the source to a k-coloring of the instance");
    lift->add_option("--meta", meta_path, "instance sidecar JSON")->required();
    lift->add_option("--coloring", coloring_path, "proper 3-coloring JSON")->required();

    auto* extract = app.add_subcommand("extract", "3-coloring of the source from a k-coloring of the instance");
    extract->add_option("--meta", meta_path, "instance sidecar JSON")->required();
    extract->add_option("--coloring", coloring_path, "partial Grundy k-coloring JSON")->required();

    std::string family = "tree";
    int n = 10, t = 0, reps = 5;
    std::uint64_t seed = 0;
    auto* gen = app.add_subcommand("gen", "emit a generated graph");
    gen->add_option("--family", family, "tree, path, cycle, star or complete")
        ->check(CLI::IsMember({"tree", "path", "cycle", "star", "complete"}));
    gen->add_option("--n", n, "vertex count")->required();
    gen->add_option("--seed", seed, "random seed (tree family)");
    gen->add_option("--t", t, "subdivide each edge with t interior vertices");
    gen->add_option("--format", format, "edge-list or dimacs")
        ->check(CLI::IsMember({"edge-list", "dimacs"}));

    std::vector<int> sizes{100000, 200000, 400000, 800000};
    auto* bench = app.add_subcommand("bench", "timing CSV over random trees");
    bench->add_option("--sizes", sizes, "tree sizes")->delimiter(',');
    bench->add_option("--seed", seed, "random seed");
    bench->add_option("--reps", reps, "timed repetitions per size");

    CLI11_PARSE(app, argc, argv);

    try {
        if (stair->parsed()) return run_stair(input, format, json);
        if (color->parsed()) return run_color(input, format, force, json);
        if (verify->parsed()) return run_verify(input, coloring_path, format, json);
        if (exact->parsed()) return run_exact(input, format, only, witness, json);
        if (reduce->parsed()) return run_reduce(input, format, out_path, meta_path);
        if (lift->parsed()) return run_lift(meta_path, coloring_path);
        if (extract->parsed()) return run_extract(meta_path, coloring_path);
        if (gen->parsed()) return run_gen(family, n, seed, t, format);
        if (bench->parsed()) return run_bench_cmd(sizes, seed, reps);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const io_failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const girth_too_small& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const realization_stuck& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const oracle_too_large& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
