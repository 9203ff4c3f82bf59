// indgrid: predict and verify homotopy types of independence complexes.
//
// Exit status: 0 success/match, 1 mismatch, 2 usage error, 3 resource exhaustion.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "indgrid/indgrid.hpp"

namespace {

using namespace indgrid;

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct LoadedGraph {
    Graph graph;
    std::string name;
};

// A family spec, or a path to a graph file when one exists.
LoadedGraph load_graph(const std::string& arg) {
    if (std::filesystem::is_regular_file(arg)) return {read_graph_file(arg), arg};
    auto spec = FamilySpec::parse(arg);
    return {build(spec), spec.to_string()};
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << text;
}

void print_profile(const HomologyProfile& p) {
    if (p.is_zero()) {
        std::cout << "all reduced homology vanishes\n";
        return;
    }
    std::map<int, std::string> rows;
    const char* field = p.coeff == Coefficients::Mod2 ? "F2" : p.coeff == Coefficients::Rationals ? "Q" : "Z";
    for (const auto& [d, b] : p.betti) rows[d] = std::string(field) + (b > 1 ? "^" + std::to_string(b) : "");
    for (const auto& [d, t] : p.torsion)
        for (const auto& x : t) rows[d] += (rows[d].empty() ? "" : " + ") + std::string("Z/") + x.str();
    for (const auto& [d, s] : rows) std::cout << "  H~_" << d << " = " << s << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Independence complexes of grid graphs: predicted vs computed homotopy types"};
    app.require_subcommand(1);

    std::string spec_arg;
    bool json = false;

    auto* predict_cmd = app.add_subcommand("predict", "Closed-form wedge of spheres for a family spec");
    predict_cmd->add_option("spec", spec_arg, "Family spec, e.g. grid:9x5")->required();
    predict_cmd->add_flag("--json", json, "Print JSON");

    std::string coeff = "z";
    bool no_reduce = false;
    std::uint64_t budget = kDefaultFaceBudget;
    std::string method = "auto";
    int depth = 1;
    auto* hom_cmd = app.add_subcommand("homology", "Reduced homology of I(G)");
    hom_cmd->add_option("graph", spec_arg, "Family spec or graph file")->required();
    hom_cmd->add_option("--coeff", coeff, "Coefficients")->check(CLI::IsMember({"z", "z2", "q"}));
    hom_cmd->add_flag("--no-reduce", no_reduce, "Enumerate the full complex without graph reductions");
    hom_cmd->add_option("--budget", budget, "Face budget");
    hom_cmd->add_option("--method", method, "Integer method")->check(CLI::IsMember({"auto", "snf", "two-field"}));
    hom_cmd->add_option("--depth", depth, "Nesting depth of certified cofiber steps (0 = folds only)");
    hom_cmd->add_flag("--json", json, "Print JSON");

    std::string trace_out;
    auto* red_cmd = app.add_subcommand("reduce", "Fold/suspension reduction with a replayable trace");
    red_cmd->add_option("graph", spec_arg, "Family spec or graph file")->required();
    red_cmd->add_option("--trace", trace_out, "Write the trace to this file");
    red_cmd->add_option("--depth", depth, "Nesting depth of certified cofiber steps (0 = folds only)");
    red_cmd->add_flag("--json", json, "Print JSON");

    bool reduced = false;
    auto* euler_cmd = app.add_subcommand("euler", "Euler characteristic of I(G) by face counting");
    euler_cmd->add_option("graph", spec_arg, "Family spec or graph file")->required();
    euler_cmd->add_flag("--reduced", reduced, "Reduced Euler characteristic");
    euler_cmd->add_flag("--json", json, "Print JSON");

    std::string suite, range_arg, json_out, csv_out;
    unsigned jobs = 1;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("--suite", suite, "Suite id (see `indgrid suites`)")->required();
    verify_cmd->add_option("--range", range_arg, "Parameter range a..b");
    verify_cmd->add_option("--json", json_out, "Write records as JSON to this file");
    verify_cmd->add_option("--csv", csv_out, "Write records as CSV to this file");
    verify_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--budget", budget, "Face budget per instance");

    app.add_subcommand("suites", "List verification suites");

    int grid_n = 0, grid_k = 0;
    std::string grid_out;
    auto* grid_cmd = app.add_subcommand("grid", "Write the grid graph n x k in the graph text format");
    grid_cmd->add_option("n", grid_n, "Columns")->required()->check(CLI::PositiveNumber);
    grid_cmd->add_option("k", grid_k, "Rows")->required()->check(CLI::PositiveNumber);
    grid_cmd->add_option("--out", grid_out, "Output file (default stdout)");

    std::string faces_out;
    auto* faces_cmd = app.add_subcommand("faces", "Dump the faces of I(G)");
    faces_cmd->add_option("graph", spec_arg, "Family spec or graph file")->required();
    faces_cmd->add_option("--out", faces_out, "Output file (default stdout)");
    faces_cmd->add_option("--budget", budget, "Face budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (predict_cmd->parsed()) {
            const auto spec = FamilySpec::parse(spec_arg);
            const auto d = predict(spec);
            if (json)
                std::cout << to_json(d).dump() << '\n';
            else
                std::cout << spec.to_string() << "  " << d.to_string() << '\n';
            return 0;
        }
        if (hom_cmd->parsed()) {
            auto g = load_graph(spec_arg);
            HomologyOptions o;
            o.reduce_first = !no_reduce;
            o.coeff = parse_coefficients(coeff);
            o.budget = budget;
            o.cofiber_depth = depth;
            o.method = method == "snf" ? HomologyMethod::FullSnf
                       : method == "two-field" ? HomologyMethod::TwoField
                                               : HomologyMethod::Auto;
            const auto r = compute_homology(g.graph, o);
            if (json) {
                std::cout << to_json(r.profile).dump() << '\n';
            } else {
                std::cout << g.name << " (" << g.graph.order() << " vertices)\n"
                          << "method: " << r.method << ", faces enumerated: " << r.faces
                          << (r.method.find("two-field") != std::string::npos
                                  ? (r.free_certified ? ", free homology certified" : ", freeness NOT certified")
                                  : "")
                          << '\n';
                print_profile(r.profile);
            }
            return 0;
        }
        if (red_cmd->parsed()) {
            auto g = load_graph(spec_arg);
            const auto t = reduce(g.graph, ReduceOptions{depth});
            if (!trace_out.empty()) write_text(trace_out, serialize_trace(t));
            if (json) {
                std::cout << Json{{"shift", t.shift},
                                  {"contractible", t.contractible},
                                  {"kernel_order", t.kernel.order()},
                                  {"events", t.events.size()}}
                                 .dump()
                          << '\n';
            } else if (t.contractible) {
                std::cout << g.name << ": contractible (" << t.events.size() << " events)\n";
            } else {
                std::cout << g.name << ": I(G) ~ Sigma^" << t.shift << " I(kernel), kernel has "
                          << t.kernel.order() << " vertices and " << t.kernel.edge_count() << " edges ("
                          << t.events.size() << " events)\n";
            }
            return 0;
        }
        if (euler_cmd->parsed()) {
            auto g = load_graph(spec_arg);
            const auto chi = euler_characteristic(g.graph, reduced);
            if (json)
                std::cout << Json{{"euler", chi}, {"reduced", reduced}}.dump() << '\n';
            else
                std::cout << chi << '\n';
            return 0;
        }
        if (verify_cmd->parsed()) {
            std::optional<IntRange> range;
            if (!range_arg.empty()) range = parse_range(range_arg);
            VerifyOptions vo;
            vo.budget = budget;
            const auto records = run_suite(suite, range, jobs, vo);
            for (const auto& r : records) {
                std::cout << r.spec.to_string() << "  predicted " << r.predicted.to_string() << "  computed "
                          << (r.computed ? profile_summary(*r.computed) : std::string("-")) << "  ["
                          << r.method << "]  " << verdict_name(r.verdict);
                if (!r.reason.empty()) std::cout << " (" << r.reason << ")";
                std::cout << '\n';
            }
            std::size_t m = 0, x = 0, s = 0;
            for (const auto& r : records) (r.verdict == Verdict::Match ? m : r.verdict == Verdict::Mismatch ? x : s)++;
            std::cout << suite << ": " << m << " match, " << x << " mismatch, " << s << " skipped\n";
            if (!json_out.empty()) write_text(json_out, to_json(records).dump(2) + "\n");
            if (!csv_out.empty()) {
                std::ofstream out(csv_out);
                if (!out) throw ParseError("cannot write '" + csv_out + "'");
                write_csv(out, records);
            }
            if (x) return kExitMismatch;
            const bool resource = std::any_of(records.begin(), records.end(), [](const auto& r) {
                return r.verdict == Verdict::Skipped && r.reason.rfind("budget", 0) == 0;
            });
            return resource ? kExitResource : 0;
        }
        if (app.got_subcommand("suites")) {
            for (const auto& d : suite_definitions())
                std::cout << d.id << "  " << d.description << "  (default " << d.default_range.lo << ".."
                          << d.default_range.hi << ")\n";
            return 0;
        }
        if (grid_cmd->parsed()) {
            const auto text = write_graph_text(make_grid(grid_n, grid_k));
            if (grid_out.empty())
                std::cout << text;
            else
                write_text(grid_out, text);
            return 0;
        }
        if (faces_cmd->parsed()) {
            auto g = load_graph(spec_arg);
            const auto fs = enumerate_faces(g.graph, EnumerationOptions{std::nullopt, budget});
            if (faces_out.empty()) {
                write_face_dump(std::cout, g.graph, fs);
            } else {
                std::ofstream out(faces_out);
                if (!out) throw ParseError("cannot write '" + faces_out + "'");
                write_face_dump(out, g.graph, fs);
            }
            return 0;
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kExitResource;
    } catch (const std::bad_alloc&) {
        std::cerr << "resource limit: out of memory\n";
        return kExitResource;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UnsupportedSpec& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
