#include "dgc/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace dgc {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& what) {
    throw Error(ErrorCode::MalformedDocument, what);
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        malformed(e.what());
    }
}

const json& field(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) malformed(std::string("missing field '") + key + "'");
    return *it;
}

std::string string_field(const json& obj, const char* key) {
    const json& v = field(obj, key);
    if (!v.is_string()) malformed(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

double number_field(const json& obj, const char* key) {
    const json& v = field(obj, key);
    if (!v.is_number()) malformed(std::string("field '") + key + "' must be a number");
    return v.get<double>();
}

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

json id_list(const Graph& g, const NodeSet& nodes) {
    json out = json::array();
    for (Index v : nodes) out.push_back(g.id(v));
    return out;
}

} // namespace

Graph parse_graph(std::string_view text) {
    const json doc = parse_json(text);
    if (!doc.is_object()) malformed("graph document must be an object");
    const json& version = field(doc, "format_version");
    if (!version.is_string()) malformed("format_version must be a string");
    if (version.get<std::string>() != "1") throw Error(ErrorCode::UnknownVersion, version.get<std::string>());

    const json& nodes = field(doc, "nodes");
    if (!nodes.is_array() || nodes.empty()) malformed("nodes must be a nonempty list");
    std::vector<NodeSpec> specs;
    for (const json& n : nodes) {
        if (!n.is_object()) malformed("node entries must be objects");
        specs.push_back({string_field(n, "id"), number_field(n, "mass")});
    }
    std::vector<EdgeSpec> edges;
    if (auto it = doc.find("edges"); it != doc.end()) {
        if (!it->is_array()) malformed("edges must be a list");
        for (const json& e : *it) {
            if (!e.is_object()) malformed("edge entries must be objects");
            edges.push_back({string_field(e, "src"), string_field(e, "dst"), number_field(e, "weight")});
        }
    }
    Graph g = build_graph(std::move(specs), edges);
    if (auto it = doc.find("directed"); it != doc.end()) {
        if (!it->is_boolean()) malformed("directed must be a boolean");
        if (!it->get<bool>() && !g.is_undirected())
            throw Error(ErrorCode::NotUndirected, "document says undirected but the edges are not symmetric");
    }
    return g;
}

json graph_json(const Graph& g) {
    json nodes = json::array();
    for (Index i = 0; i < g.size(); ++i) nodes.push_back({{"id", g.id(i)}, {"mass", g.mass()(i)}});
    json edges = json::array();
    for (const Arc& e : g.arcs()) edges.push_back({{"src", g.id(e.tail)}, {"dst", g.id(e.head)}, {"weight", e.weight}});
    return {{"format_version", "1"}, {"directed", !g.is_undirected()}, {"nodes", nodes}, {"edges", edges}};
}

std::string serialize_graph(const Graph& g) {
    return graph_json(g).dump(2) + "\n";
}

std::vector<DrawnEdges> parse_cluster_edges(std::string_view text) {
    const json doc = parse_json(text);
    if (!doc.is_array()) malformed("cluster edges must be a list");
    auto group = [](const json& list) {
        DrawnEdges out;
        for (const json& e : list) {
            if (!e.is_object()) malformed("cluster edge entries must be objects");
            out.emplace_back(string_field(e, "src"), string_field(e, "dst"));
        }
        return out;
    };
    std::vector<DrawnEdges> groups;
    if (!doc.empty() && doc.front().is_array()) {
        for (const json& g : doc) {
            if (!g.is_array()) malformed("mixing cluster groups and single edges");
            groups.push_back(group(g));
        }
    } else {
        groups.push_back(group(doc));
    }
    return groups;
}

std::vector<EdgeMask> cluster_masks(const Graph& g, const std::vector<DrawnEdges>& groups) {
    std::vector<EdgeMask> out;
    for (const DrawnEdges& d : groups) out.push_back(edge_mask(g, d));
    return out;
}

json coarsening_json(const Graph& g, const CoarseningResult& res) {
    json doc = graph_json(res.reduced);
    doc["mode"] = mode_name(res.mode);
    json map = json::object();
    for (Index i = 0; i < res.reduced.size(); ++i)
        map[res.reduced.id(i)] = id_list(g, res.members[static_cast<std::size_t>(i)]);
    doc["node_map"] = map;
    return doc;
}

json kernel_json(const Graph& g, const KernelBasis& basis) {
    json reaches = json::array();
    for (Index r = 0; r < basis.count(); ++r) {
        const Reach& reach = basis.decomposition.reaches[static_cast<std::size_t>(r)];
        json right = json::object(), left = json::object();
        for (Index v = 0; v < g.size(); ++v) {
            right[g.id(v)] = basis.right(v, r);
            left[g.id(v)] = basis.left(v, r);
        }
        reaches.push_back({{"nodes", id_list(g, reach.nodes)},
                           {"cabal", id_list(g, reach.cabal)},
                           {"exclusive", id_list(g, reach.exclusive)},
                           {"common", id_list(g, reach.common)},
                           {"right", right},
                           {"left", left}});
    }
    return {{"kind", basis.kind == Kind::InDegree ? "in" : "out"}, {"reaches", reaches}};
}

json report_json(const SweepReport& rep) {
    json doc = {{"mode", mode_name(rep.mode)},
                {"z", {{"re", rep.z.real()}, {"im", rep.z.imag()}}},
                {"betas", rep.betas},
                {"diffs", rep.diffs},
                {"fittedSlope", rep.fitted_slope},
                {"notes", rep.notes}};
    if (rep.gap_values) doc["gapValues"] = *rep.gap_values;
    return doc;
}

std::string report_csv(const SweepReport& rep) {
    std::ostringstream out;
    out << "mode,z_re,z_im,beta,diff,gap,fitted_slope\n";
    for (std::size_t i = 0; i < rep.betas.size(); ++i) {
        out << mode_name(rep.mode) << ',' << format_number(rep.z.real()) << ',' << format_number(rep.z.imag()) << ','
            << format_number(rep.betas[i]) << ',' << format_number(rep.diffs[i]) << ','
            << (rep.gap_values ? format_number((*rep.gap_values)[i]) : std::string()) << ','
            << format_number(rep.fitted_slope) << '\n';
    }
    return out.str();
}

std::string format_number(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    if (ec != std::errc()) return "nan";
    return std::string(buf, end);
}

namespace {

std::string dot_body(const Graph& g, const std::vector<std::string>& tooltips) {
    const bool undirected = g.is_undirected();
    std::ostringstream out;
    out << (undirected ? "graph G {\n" : "digraph G {\n");
    for (Index i = 0; i < g.size(); ++i)
        out << "  " << quoted(g.id(i)) << " [tooltip=" << quoted(tooltips[static_cast<std::size_t>(i)]) << "];\n";
    for (const Arc& e : g.arcs()) {
        if (undirected && e.tail > e.head) continue;
        out << "  " << quoted(g.id(e.tail)) << (undirected ? " -- " : " -> ") << quoted(g.id(e.head))
            << " [label=" << quoted(format_number(e.weight)) << "];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace

std::string export_dot(const Graph& g) {
    std::vector<std::string> tips;
    for (Index i = 0; i < g.size(); ++i) tips.push_back("mass " + format_number(g.mass()(i)));
    return dot_body(g, tips);
}

std::string export_dot(const Graph& original, const CoarseningResult& res) {
    std::vector<std::string> tips;
    for (Index i = 0; i < res.reduced.size(); ++i) {
        std::string tip = "members:";
        for (Index v : res.members[static_cast<std::size_t>(i)]) tip += " " + original.id(v);
        tips.push_back(tip + "; mass " + format_number(res.reduced.mass()(i)));
    }
    return dot_body(res.reduced, tips);
}

std::string mode_name(Mode mode) {
    switch (mode) {
    case Mode::Undirected: return "undirected";
    case Mode::InDegree: return "in";
    case Mode::OutDegree: return "out";
    }
    return "?";
}

Mode parse_mode(std::string_view text) {
    if (text == "undirected") return Mode::Undirected;
    if (text == "in") return Mode::InDegree;
    if (text == "out") return Mode::OutDegree;
    malformed("unknown mode '" + std::string(text) + "'");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) malformed("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) malformed("cannot write '" + path + "'");
    out << data;
}

} // namespace dgc
