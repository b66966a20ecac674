#pragma once

#include <random>
#include <string>

#include "dgc/dgc.hpp"

namespace testing_support {

using namespace dgc;

inline std::string fixture_path(const std::string& name) {
    return std::string(DGC_FIXTURES) + "/" + name;
}

inline Graph load_graph(const std::string& name) {
    return parse_graph(read_file(fixture_path(name)));
}

inline ClusterSet load_clusters(const Graph& g, const std::string& name, ClusterMode mode) {
    std::vector<EdgeMask> masks = cluster_masks(g, parse_cluster_edges(read_file(fixture_path(name))));
    if (mode == ClusterMode::Undirected)
        for (EdgeMask& m : masks) m = symmetrized(m);
    return build_cluster_set(g, masks, mode);
}

inline std::string node_name(int i) {
    return "n" + std::string(i < 10 ? "0" : "") + std::to_string(i);
}

// Weights in [0.1, 10], masses in [0.5, 2].
inline Graph random_graph(std::mt19937_64& rng, int n, double density, bool undirected) {
    std::uniform_real_distribution<double> weight(0.1, 10.0), mass(0.5, 2.0), coin(0.0, 1.0);
    std::vector<NodeSpec> nodes;
    for (int i = 0; i < n; ++i) nodes.push_back({node_name(i), mass(rng)});
    std::vector<EdgeSpec> edges;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || (undirected && j < i)) continue;
            if (coin(rng) >= density) continue;
            const double w = weight(rng);
            edges.push_back({node_name(i), node_name(j), w});
            if (undirected) edges.push_back({node_name(j), node_name(i), w});
        }
    return build_graph(nodes, edges);
}

// Random nonempty subset of the edges; symmetric subsets for undirected graphs.
inline EdgeMask random_edge_subset(std::mt19937_64& rng, const Graph& g, double p, bool symmetric) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    const EdgeMask present = g.edge_mask();
    EdgeMask m = EdgeMask::Constant(g.size(), g.size(), false);
    for (Index i = 0; i < g.size(); ++i)
        for (Index j = 0; j < g.size(); ++j) {
            if (!present(i, j) || (symmetric && j < i)) continue;
            if (coin(rng) < p) {
                m(i, j) = true;
                if (symmetric) m(j, i) = true;
            }
        }
    if (!m.any()) {
        for (const Arc& e : g.arcs()) {
            m(e.head, e.tail) = true;
            if (symmetric) m(e.tail, e.head) = true;
            break;
        }
    }
    return m;
}

// Random graph with at least one edge.
inline Graph random_nonempty_graph(std::mt19937_64& rng, int n, double density, bool undirected) {
    for (;;) {
        Graph g = random_graph(rng, n, density, undirected);
        if (g.edge_count() > 0) return g;
    }
}

// Clique K_N on nu nodes (mass 1/N) attached to mu (mass 1) by one undirected edge.
inline Graph clique_fixture(int n, double clique_mass) {
    std::vector<NodeSpec> nodes{{"mu", 1.0}};
    std::vector<EdgeSpec> edges{{"mu", "nu01", 1.0}, {"nu01", "mu", 1.0}};
    auto name = [](int i) { return "nu" + std::string(i < 10 ? "0" : "") + std::to_string(i); };
    for (int i = 1; i <= n; ++i) nodes.push_back({name(i), clique_mass});
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) edges.push_back({name(i), name(j), 1.0});
    return build_graph(nodes, edges);
}

inline EdgeMask clique_mask(const Graph& g) {
    EdgeMask m = g.edge_mask();
    const Index mu = g.index_of("mu");
    m.row(mu).setConstant(false);
    m.col(mu).setConstant(false);
    return m;
}

// Path graph on 2k+1 nodes with unit weights and masses; the pairs {2i, 2i+1} are clusters.
inline Graph path_fixture(int k) {
    std::vector<NodeSpec> nodes;
    std::vector<EdgeSpec> edges;
    for (int i = 1; i <= 2 * k + 1; ++i) nodes.push_back({node_name(i), 1.0});
    for (int i = 1; i < 2 * k + 1; ++i) {
        edges.push_back({node_name(i), node_name(i + 1), 1.0});
        edges.push_back({node_name(i + 1), node_name(i), 1.0});
    }
    return build_graph(nodes, edges);
}

inline EdgeMask path_pairs(const Graph& g, int k) {
    DrawnEdges pairs;
    for (int i = 1; i <= k; ++i) {
        pairs.emplace_back(node_name(2 * i), node_name(2 * i + 1));
        pairs.emplace_back(node_name(2 * i + 1), node_name(2 * i));
    }
    return edge_mask(g, pairs);
}

inline Vector random_distribution(std::mt19937_64& rng, const Vector& mass) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Vector f(mass.size());
    for (Index i = 0; i < f.size(); ++i) f(i) = u(rng);
    return f / f.dot(mass);
}

inline double max_abs(const Matrix& a) {
    return a.size() ? a.cwiseAbs().maxCoeff() : 0.0;
}

} // namespace testing_support
