#include "dgc/graph.hpp"

#include <algorithm>
#include <map>

namespace dgc {

Index Graph::index_of(const std::string& id) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) throw Error(ErrorCode::UnknownNode, "no node '" + id + "'");
    return static_cast<Index>(it - ids_.begin());
}

bool Graph::contains(const std::string& id) const {
    return std::binary_search(ids_.begin(), ids_.end(), id);
}

std::vector<Arc> Graph::arcs() const {
    std::vector<Arc> out;
    for (Index tail = 0; tail < size(); ++tail)
        for (Index head = 0; head < size(); ++head)
            if (weights_(head, tail) > 0.0) out.push_back({head, tail, weights_(head, tail)});
    return out;
}

Index Graph::edge_count() const {
    return (weights_.array() > 0.0).count();
}

Graph Graph::from_dense(std::vector<std::string> ids, Vector mass, Matrix weights) {
    const Index n = static_cast<Index>(ids.size());
    if (static_cast<std::size_t>(n) > tol::dense_limit)
        throw Error(ErrorCode::SizeLimitExceeded, "graph has more than 2000 nodes");
    if (mass.size() != n || weights.rows() != n || weights.cols() != n)
        throw Error(ErrorCode::MalformedDocument, "inconsistent graph dimensions");
    for (Index i = 1; i < n; ++i)
        if (!(ids[i - 1] < ids[i])) throw Error(ErrorCode::MalformedDocument, "node ids not sorted and unique: " + ids[i]);
    for (Index i = 0; i < n; ++i)
        if (!(mass(i) > 0.0) || !std::isfinite(mass(i)))
            throw Error(ErrorCode::NonPositiveMass, "node '" + ids[i] + "'");
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            const double w = weights(i, j);
            if (w < 0.0 || !std::isfinite(w))
                throw Error(ErrorCode::NonPositiveWeight, ids[j] + " -> " + ids[i]);
        }
        weights(i, i) = 0.0;
    }
    Graph g;
    g.ids_ = std::move(ids);
    g.mass_ = std::move(mass);
    g.weights_ = std::move(weights);
    return g;
}

Graph build_graph(std::vector<NodeSpec> nodes, const std::vector<EdgeSpec>& edges) {
    std::sort(nodes.begin(), nodes.end(), [](const NodeSpec& a, const NodeSpec& b) { return a.id < b.id; });
    std::vector<std::string> ids;
    ids.reserve(nodes.size());
    std::map<std::string, Index> where;
    const Index n = static_cast<Index>(nodes.size());
    if (static_cast<std::size_t>(n) > tol::dense_limit)
        throw Error(ErrorCode::SizeLimitExceeded, "graph has more than 2000 nodes");
    Vector mass(n);
    for (Index i = 0; i < n; ++i) {
        const NodeSpec& node = nodes[static_cast<std::size_t>(i)];
        if (!where.emplace(node.id, i).second) throw Error(ErrorCode::MalformedDocument, "duplicate node id '" + node.id + "'");
        if (!(node.mass > 0.0) || !std::isfinite(node.mass)) throw Error(ErrorCode::NonPositiveMass, "node '" + node.id + "'");
        ids.push_back(node.id);
        mass(i) = node.mass;
    }
    Matrix a = Matrix::Zero(n, n);
    for (const EdgeSpec& e : edges) {
        auto s = where.find(e.src);
        auto d = where.find(e.dst);
        if (s == where.end()) throw Error(ErrorCode::UnknownEndpoint, "'" + e.src + "'");
        if (d == where.end()) throw Error(ErrorCode::UnknownEndpoint, "'" + e.dst + "'");
        if (!(e.weight > 0.0) || !std::isfinite(e.weight))
            throw Error(ErrorCode::NonPositiveWeight, e.src + " -> " + e.dst);
        if (s->second == d->second) throw Error(ErrorCode::MalformedDocument, "self-loop at '" + e.src + "'");
        double& slot = a(d->second, s->second);
        if (slot > 0.0) throw Error(ErrorCode::DuplicateEdge, e.src + " -> " + e.dst);
        slot = e.weight;
    }
    return Graph::from_dense(std::move(ids), std::move(mass), std::move(a));
}

Graph transpose(const Graph& g) {
    return Graph::from_dense(g.ids(), g.mass(), g.weights().transpose());
}

Graph restrict_edges(const Graph& g, const EdgeMask& mask) {
    return Graph::from_dense(g.ids(), g.mass(), Matrix(mask.select(g.weights().array(), 0.0)));
}

Graph remove_edges(const Graph& g, const EdgeMask& mask) {
    return Graph::from_dense(g.ids(), g.mass(), Matrix(mask.select(0.0, g.weights().array())));
}

LaplacianMatrix laplacian(const Graph& g, Kind kind) {
    return {kind, assemble_laplacian(g.weights(), g.mass(), kind), g.mass()};
}

double validate_boundedness(const Graph& g) {
    if (g.size() == 0) return 0.0;
    const Vector in = g.weights().rowwise().sum();
    const Vector out = g.weights().colwise().sum().transpose();
    return (in.cwiseMax(out).array() / g.mass().array()).maxCoeff();
}

double dirichlet_form(const Graph& g, const Vector& f) {
    if (!g.is_undirected()) throw Error(ErrorCode::NotUndirected, "Dirichlet form needs a symmetric graph");
    if (f.size() != g.size()) throw Error(ErrorCode::MalformedDocument, "function length differs from node count");
    double sum = 0.0;
    for (const Arc& e : g.arcs()) {
        const double d = f(e.head) - f(e.tail);
        sum += e.weight * d * d;
    }
    return 0.5 * sum;
}

} // namespace dgc
