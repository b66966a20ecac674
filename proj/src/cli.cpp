#include "dgc/cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <ostream>

#include "dgc/io.hpp"

namespace dgc {

namespace {

struct Options {
    std::string graph;
    std::string cluster_edges;
    std::string kind = "in";
    std::string mode = "undirected";
    std::string out;
    std::string dot;
    std::string report;
    std::vector<double> betas{1e1, 1e2, 1e3, 1e4};
    double z_re = -1.0;
    double z_im = 0.0;
    double t = 1.0;
    double beta = 1e3;
};

std::string join(const Graph& g, const NodeSet& nodes) {
    std::string out;
    for (Index v : nodes) out += (out.empty() ? "" : ",") + g.id(v);
    return out.empty() ? "-" : out;
}

ClusterSet load_clusters(const Graph& g, const Options& o, ClusterMode mode) {
    std::vector<EdgeMask> masks = cluster_masks(g, parse_cluster_edges(read_file(o.cluster_edges)));
    // an undirected edge is one cluster edge whichever orientation the file names
    if (mode == ClusterMode::Undirected)
        for (EdgeMask& m : masks) m = symmetrized(m);
    return build_cluster_set(g, masks, mode);
}

void analyze(const Options& o, std::ostream& out) {
    const Graph g = parse_graph(read_file(o.graph));
    const ReachDecomposition dec = reaches(g);
    out << "nodes " << g.size() << ", edges " << g.edge_count() << ", "
        << (g.is_undirected() ? "undirected" : "directed") << ", bound C = " << format_number(validate_boundedness(g))
        << "\n\n";
    out << std::left << std::setw(6) << "reach" << std::setw(24) << "nodes" << std::setw(16) << "cabal"
        << std::setw(24) << "exclusive" << "common\n";
    for (std::size_t r = 0; r < dec.reaches.size(); ++r) {
        const Reach& reach = dec.reaches[r];
        out << std::setw(6) << r << std::setw(24) << join(g, reach.nodes) << std::setw(16) << join(g, reach.cabal)
            << std::setw(24) << join(g, reach.exclusive) << join(g, reach.common) << "\n";
    }
    if (g.is_undirected()) {
        out << "\ncomponents\n";
        for (const NodeSet& c : connected_components(g)) out << "  " << join(g, c) << "\n";
    }
}

void emit(const std::string& path, const std::string& data, std::ostream& out) {
    if (path.empty())
        out << data;
    else
        write_file(path, data);
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Coarse-grained Laplacians for graphs with strongly connected clusters", "dgcoarse"};
    app.require_subcommand(1);
    Options o;

    auto* analyze_cmd = app.add_subcommand("analyze", "Reaches, cabals and components of a graph");
    analyze_cmd->add_option("graph", o.graph, "graph document")->required();

    auto with_clusters = [&](CLI::App* cmd) {
        cmd->add_option("graph", o.graph, "graph document")->required();
        cmd->add_option("--cluster-edges", o.cluster_edges, "JSON list of {src,dst} cluster edges")->required();
    };
    auto with_mode = [&](CLI::App* cmd) {
        cmd->add_option("--mode", o.mode, "undirected, in or out")
            ->check(CLI::IsMember({"undirected", "in", "out"}))
            ->required();
    };

    auto* kernels_cmd = app.add_subcommand("kernels", "Right and left kernel bases of the cluster Laplacian");
    with_clusters(kernels_cmd);
    kernels_cmd->add_option("--kind", o.kind, "in or out")->check(CLI::IsMember({"in", "out"}))->required();

    auto* coarsen_cmd = app.add_subcommand("coarsen", "Reduced graph");
    with_clusters(coarsen_cmd);
    with_mode(coarsen_cmd);
    coarsen_cmd->add_option("--out", o.out, "write the reduced graph here instead of stdout");
    coarsen_cmd->add_option("--dot", o.dot, "also write a DOT rendering");

    auto* verify_cmd = app.add_subcommand("verify", "Resolvent difference sweep over beta");
    with_clusters(verify_cmd);
    with_mode(verify_cmd);
    verify_cmd->add_option("--betas", o.betas, "comma separated, increasing")->delimiter(',');
    verify_cmd->add_option("--z", o.z_re, "real part of z");
    verify_cmd->add_option("--z-im", o.z_im, "imaginary part of z");
    verify_cmd->add_option("--report", o.report, "write the report here (.csv for CSV)");

    auto* heat_cmd = app.add_subcommand("heat", "Heat semigroup difference");
    with_clusters(heat_cmd);
    with_mode(heat_cmd);
    heat_cmd->add_option("--t", o.t, "time");
    heat_cmd->add_option("--beta", o.beta, "cluster scaling");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 1;
    }

    try {
        if (analyze_cmd->parsed()) {
            analyze(o, out);
        } else if (kernels_cmd->parsed()) {
            const Graph g = parse_graph(read_file(o.graph));
            const ClusterSet cs = load_clusters(g, o, ClusterMode::Directed);
            const KernelBasis basis = kernels(g, cs, o.kind == "in" ? Kind::InDegree : Kind::OutDegree);
            out << kernel_json(g, basis).dump(2) << "\n";
        } else if (coarsen_cmd->parsed()) {
            const Mode mode = parse_mode(o.mode);
            const Graph g = parse_graph(read_file(o.graph));
            const ClusterSet cs = load_clusters(g, o, cluster_mode(mode));
            const CoarseningResult res = coarsen(g, cs, mode);
            const StructureReport check = check_structure(g, cs, res);
            if (!check.ok()) throw Error(ErrorCode::InvariantViolation, "reduction fails its structural identities");
            emit(o.out, coarsening_json(g, res).dump(2) + "\n", out);
            if (!o.dot.empty()) write_file(o.dot, export_dot(g, res));
        } else if (verify_cmd->parsed()) {
            const Mode mode = parse_mode(o.mode);
            const Graph g = parse_graph(read_file(o.graph));
            const ClusterSet cs = load_clusters(g, o, cluster_mode(mode));
            const SweepReport rep = sweep(g, cs, mode, o.betas, complex(o.z_re, o.z_im));
            const std::string text = report_json(rep).dump(2) + "\n";
            out << text;
            if (!o.report.empty()) {
                const bool csv = o.report.size() >= 4 && o.report.substr(o.report.size() - 4) == ".csv";
                write_file(o.report, csv ? report_csv(rep) : text);
            }
        } else if (heat_cmd->parsed()) {
            const Mode mode = parse_mode(o.mode);
            const Graph g = parse_graph(read_file(o.graph));
            const ClusterSet cs = load_clusters(g, o, cluster_mode(mode));
            const double diff = heat_diff(g, cs, mode, o.beta, o.t);
            const nlohmann::json doc = {{"mode", mode_name(mode)}, {"beta", o.beta}, {"t", o.t}, {"heatDiff", diff}};
            out << doc.dump(2) << "\n";
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.numerical() ? 2 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

} // namespace dgc
