#include "dgc/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace dgc {

namespace {

using Adjacency = std::vector<std::vector<Index>>;

// out[j] lists every i with a(i, j) > 0, i.e. the heads of arrows leaving j.
Adjacency out_neighbours(const Matrix& a) {
    Adjacency out(static_cast<std::size_t>(a.cols()));
    for (Index j = 0; j < a.cols(); ++j)
        for (Index i = 0; i < a.rows(); ++i)
            if (a(i, j) > 0.0) out[static_cast<std::size_t>(j)].push_back(i);
    return out;
}

NodeSet bfs(const Adjacency& out, Index start, std::vector<char>& seen) {
    NodeSet found;
    std::deque<Index> queue{start};
    seen[static_cast<std::size_t>(start)] = 1;
    while (!queue.empty()) {
        const Index v = queue.front();
        queue.pop_front();
        found.push_back(v);
        for (Index w : out[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                queue.push_back(w);
            }
        }
    }
    std::sort(found.begin(), found.end());
    return found;
}

// Tarjan; returns the component label of every node.
std::vector<Index> strong_components(const Adjacency& out) {
    const std::size_t n = out.size();
    std::vector<Index> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<char> on_stack(n, 0);
    std::vector<Index> stack;
    Index counter = 0, label = 0;

    std::function<void(Index)> visit = [&](Index v) {
        const auto sv = static_cast<std::size_t>(v);
        index[sv] = low[sv] = counter++;
        stack.push_back(v);
        on_stack[sv] = 1;
        for (Index w : out[sv]) {
            const auto sw = static_cast<std::size_t>(w);
            if (index[sw] < 0) {
                visit(w);
                low[sv] = std::min(low[sv], low[sw]);
            } else if (on_stack[sw]) {
                low[sv] = std::min(low[sv], index[sw]);
            }
        }
        if (low[sv] == index[sv]) {
            Index w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[static_cast<std::size_t>(w)] = 0;
                comp[static_cast<std::size_t>(w)] = label;
            } while (w != v);
            ++label;
        }
    };
    for (std::size_t v = 0; v < n; ++v)
        if (index[v] < 0) visit(static_cast<Index>(v));
    return comp;
}

bool pattern_symmetric(const EdgeMask& m) {
    return (m == m.transpose()).all();
}

} // namespace

bool contains(const NodeSet& set, Index i) {
    return std::binary_search(set.begin(), set.end(), i);
}

NodeSet reachable_set(const Matrix& weights, Index i) {
    if (i < 0 || i >= weights.cols()) throw Error(ErrorCode::UnknownNode, "index " + std::to_string(i));
    std::vector<char> seen(static_cast<std::size_t>(weights.cols()), 0);
    return bfs(out_neighbours(weights), i, seen);
}

NodeSet reachable_set(const Graph& g, Index i) { return reachable_set(g.weights(), i); }

NodeSet reachable_set(const Graph& g, const std::string& id) { return reachable_set(g.weights(), g.index_of(id)); }

ReachDecomposition reaches(const Matrix& weights) {
    const Index n = weights.cols();
    const Adjacency out = out_neighbours(weights);
    const std::vector<Index> comp = strong_components(out);
    const Index labels = n ? *std::max_element(comp.begin(), comp.end()) + 1 : 0;

    std::vector<char> entered(static_cast<std::size_t>(labels), 0);
    for (Index j = 0; j < n; ++j)
        for (Index i : out[static_cast<std::size_t>(j)])
            if (comp[static_cast<std::size_t>(i)] != comp[static_cast<std::size_t>(j)])
                entered[static_cast<std::size_t>(comp[static_cast<std::size_t>(i)])] = 1;

    ReachDecomposition out_dec;
    out_dec.multiplicity.assign(static_cast<std::size_t>(n), 0);
    std::vector<char> done(static_cast<std::size_t>(labels), 0);
    for (Index v = 0; v < n; ++v) {
        const auto c = static_cast<std::size_t>(comp[static_cast<std::size_t>(v)]);
        if (entered[c] || done[c]) continue;
        done[c] = 1;
        Reach r;
        for (Index u = 0; u < n; ++u)
            if (comp[static_cast<std::size_t>(u)] == comp[static_cast<std::size_t>(v)]) r.cabal.push_back(u);
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        r.nodes = bfs(out, v, seen);
        for (Index u : r.nodes) ++out_dec.multiplicity[static_cast<std::size_t>(u)];
        out_dec.reaches.push_back(std::move(r));
    }
    for (Reach& r : out_dec.reaches)
        for (Index u : r.nodes)
            (out_dec.multiplicity[static_cast<std::size_t>(u)] == 1 ? r.exclusive : r.common).push_back(u);
    std::sort(out_dec.reaches.begin(), out_dec.reaches.end(),
              [](const Reach& a, const Reach& b) { return a.nodes < b.nodes; });
    return out_dec;
}

ReachDecomposition reaches(const Graph& g) { return reaches(g.weights()); }

std::vector<NodeSet> connected_components(const Matrix& weights) {
    const EdgeMask m = weights.array() > 0.0;
    if (!pattern_symmetric(m)) throw Error(ErrorCode::NotSymmetricEdgeSet, "components need a symmetric edge set");
    const Adjacency out = out_neighbours(weights);
    std::vector<char> seen(static_cast<std::size_t>(weights.cols()), 0);
    std::vector<NodeSet> parts;
    for (Index v = 0; v < weights.cols(); ++v)
        if (!seen[static_cast<std::size_t>(v)]) parts.push_back(bfs(out, v, seen));
    return parts;
}

std::vector<NodeSet> connected_components(const Graph& g) { return connected_components(g.weights()); }

NodeSet ClusterSet::covered() const {
    NodeSet out;
    for (Index v = 0; v < edges.rows(); ++v)
        if (edges.row(v).any() || edges.col(v).any()) out.push_back(v);
    return out;
}

EdgeMask edge_mask(const Graph& g, const std::vector<std::pair<std::string, std::string>>& drawn) {
    EdgeMask m = EdgeMask::Constant(g.size(), g.size(), false);
    for (const auto& [src, dst] : drawn) {
        if (!g.contains(src)) throw Error(ErrorCode::UnknownEndpoint, "'" + src + "'");
        if (!g.contains(dst)) throw Error(ErrorCode::UnknownEndpoint, "'" + dst + "'");
        const Index head = g.index_of(dst), tail = g.index_of(src);
        if (!g.has_edge(head, tail)) throw Error(ErrorCode::UnknownEdge, src + " -> " + dst + " is not an edge");
        m(head, tail) = true;
    }
    return m;
}

EdgeMask symmetrized(const EdgeMask& mask) {
    return mask || mask.transpose();
}

ClusterSet build_cluster_set(const Graph& g, const EdgeMask& edges, ClusterMode mode) {
    return build_cluster_set(g, std::vector<EdgeMask>{edges}, mode);
}

ClusterSet build_cluster_set(const Graph& g, const std::vector<EdgeMask>& groups, ClusterMode mode) {
    const Index n = g.size();
    const EdgeMask present = g.edge_mask();
    ClusterSet cs;
    cs.mode = mode;
    cs.edges = EdgeMask::Constant(n, n, false);
    for (const EdgeMask& m : groups) {
        if (m.rows() != n || m.cols() != n) throw Error(ErrorCode::MalformedDocument, "edge mask has the wrong shape");
        if ((m && !present).any()) throw Error(ErrorCode::UnknownEdge, "cluster edge missing from the graph");
        cs.edges = cs.edges || m;
    }
    if (!cs.edges.any()) throw Error(ErrorCode::EmptyClusterSet, "no cluster edges given");

    if (mode == ClusterMode::Undirected) {
        std::vector<int> owner(static_cast<std::size_t>(n), -1);
        for (const EdgeMask& m : groups) {
            if (!pattern_symmetric(m)) throw Error(ErrorCode::NotSymmetricEdgeSet, "undirected clusters need both orientations");
            const Matrix w = m.select(g.weights().array(), 0.0).matrix();
            for (NodeSet& part : connected_components(w)) {
                if (part.size() < 2) continue;
                const int id = static_cast<int>(cs.clusters.size());
                for (Index v : part) {
                    int& o = owner[static_cast<std::size_t>(v)];
                    if (o >= 0) throw Error(ErrorCode::ClustersShareNodes, "node '" + g.id(v) + "' lies in two clusters");
                    o = id;
                }
                EdgeMask own = EdgeMask::Constant(n, n, false);
                for (Index i : part)
                    for (Index j : part) own(i, j) = m(i, j);
                cs.clusters.push_back({std::move(part), std::move(own)});
            }
        }
        return cs;
    }

    const Matrix w = cs.edges.select(g.weights().array(), 0.0).matrix();
    for (const Reach& r : reaches(w).reaches) {
        if (r.nodes.size() < 2) continue;
        EdgeMask own = EdgeMask::Constant(n, n, false);
        for (Index tail : r.nodes) own.col(tail) = cs.edges.col(tail);
        cs.clusters.push_back({r.nodes, std::move(own)});
    }
    return cs;
}

ClusterSet empty_cluster_set(const Graph& g, ClusterMode mode) {
    ClusterSet cs;
    cs.mode = mode;
    cs.edges = EdgeMask::Constant(g.size(), g.size(), false);
    return cs;
}

ClusterSet transpose(const Graph& g, const ClusterSet& clusters) {
    const Graph gt = transpose(g);
    if (!clusters.edges.any()) return empty_cluster_set(gt, clusters.mode);
    return build_cluster_set(gt, EdgeMask(clusters.edges.transpose()), clusters.mode);
}

} // namespace dgc
