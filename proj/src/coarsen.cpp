#include "dgc/coarsen.hpp"

#include <algorithm>
#include <numeric>

namespace dgc {

Kind laplacian_kind(Mode mode) {
    return mode == Mode::OutDegree ? Kind::OutDegree : Kind::InDegree;
}

ClusterMode cluster_mode(Mode mode) {
    return mode == Mode::Undirected ? ClusterMode::Undirected : ClusterMode::Directed;
}

std::string reduced_id(const Graph& g, const NodeSet& members) {
    if (members.size() == 1) return g.id(members.front());
    std::string out = "{";
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) out += ",";
        out += g.id(members[i]);
    }
    return out + "}";
}

namespace {

Matrix rest_weights(const Graph& g, const ClusterSet& clusters) {
    return clusters.edges.select(0.0, g.weights().array()).matrix();
}

// Orders reduced nodes by id and turns the aggregates into a validated graph.
CoarseningResult assemble(const Graph& g, Mode mode, std::vector<NodeSet> members, const Vector& mass,
                          Matrix aggregate, const Matrix& up, const Matrix& down) {
    const auto k = static_cast<Index>(members.size());
    std::vector<std::string> ids(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) ids[i] = reduced_id(g, members[i]);
    std::vector<Index> order(members.size());
    std::iota(order.begin(), order.end(), Index{0});
    std::sort(order.begin(), order.end(), [&](Index a, Index b) {
        return ids[static_cast<std::size_t>(a)] < ids[static_cast<std::size_t>(b)];
    });

    aggregate.diagonal().setZero();
    const double scale = std::max(1.0, aggregate.cwiseAbs().maxCoeff());
    for (Index i = 0; i < k; ++i)
        for (Index j = 0; j < k; ++j) {
            double& a = aggregate(i, j);
            if (a < -tol::negative_aggregate * scale)
                throw Error(ErrorCode::NegativeAggregateWeight,
                            ids[static_cast<std::size_t>(j)] + " -> " + ids[static_cast<std::size_t>(i)]);
            if (a <= tol::negative_aggregate * scale) a = 0.0;
        }

    CoarseningResult res;
    res.mode = mode;
    std::vector<std::string> sorted_ids;
    Vector sorted_mass(k);
    Matrix sorted_agg(k, k);
    res.up.resize(up.rows(), k);
    res.down.resize(k, down.cols());
    for (Index i = 0; i < k; ++i) {
        const Index oi = order[static_cast<std::size_t>(i)];
        sorted_ids.push_back(ids[static_cast<std::size_t>(oi)]);
        res.members.push_back(members[static_cast<std::size_t>(oi)]);
        sorted_mass(i) = mass(oi);
        res.up.col(i) = up.col(oi);
        res.down.row(i) = down.row(oi);
        for (Index j = 0; j < k; ++j) sorted_agg(i, j) = aggregate(oi, order[static_cast<std::size_t>(j)]);
    }
    res.reduced = Graph::from_dense(std::move(sorted_ids), std::move(sorted_mass), std::move(sorted_agg));
    res.reduced_laplacian = laplacian(res.reduced, laplacian_kind(mode));
    return res;
}

void require_basis(const KernelBasis& basis, const Graph& g, Kind kind) {
    if (basis.kind != kind) throw Error(ErrorCode::ClusterViolation, "kernel basis of the wrong kind");
    if (basis.mass.size() != g.size()) throw Error(ErrorCode::ClusterViolation, "kernel basis for another graph");
}

} // namespace

CoarseningResult coarsen_undirected(const Graph& g, const ClusterSet& clusters) {
    if (!g.is_undirected()) throw Error(ErrorCode::NotUndirected, "undirected coarsening needs a symmetric graph");
    if (clusters.mode != ClusterMode::Undirected || clusters.edges.rows() != g.size())
        throw Error(ErrorCode::ClusterViolation, "cluster set is not an undirected cluster set of this graph");
    if (!(clusters.edges == clusters.edges.transpose()).all())
        throw Error(ErrorCode::ClusterViolation, "undirected cluster edges must be symmetric");

    const Matrix inner = clusters.edges.select(g.weights().array(), 0.0).matrix();
    std::vector<NodeSet> parts = connected_components(inner);
    const auto k = static_cast<Index>(parts.size());
    const Index n = g.size();
    Vector mass(k);
    Matrix up = Matrix::Zero(n, k), down = Matrix::Zero(k, n), agg = Matrix::Zero(k, k);
    std::vector<Index> part_of(static_cast<std::size_t>(n));
    for (Index c = 0; c < k; ++c) {
        double total = 0.0;
        for (Index v : parts[static_cast<std::size_t>(c)]) {
            total += g.mass()(v);
            part_of[static_cast<std::size_t>(v)] = c;
        }
        mass(c) = total;
        for (Index v : parts[static_cast<std::size_t>(c)]) {
            up(v, c) = 1.0;
            down(c, v) = g.mass()(v) / total;
        }
    }
    for (const Arc& e : g.arcs()) {
        const Index c = part_of[static_cast<std::size_t>(e.head)], d = part_of[static_cast<std::size_t>(e.tail)];
        if (c != d) agg(c, d) += e.weight;
    }
    return assemble(g, Mode::Undirected, std::move(parts), mass, std::move(agg), up, down);
}

CoarseningResult coarsen_in(const Graph& g, const ClusterSet& clusters, const KernelBasis& basis) {
    require_basis(basis, g, Kind::InDegree);
    const Index k = basis.count();
    const Matrix p = riesz_from_kernels(basis, clusters).matrix;
    std::vector<NodeSet> members;
    Vector mass(k);
    for (Index r = 0; r < k; ++r) {
        const NodeSet& nodes = basis.decomposition.reaches[static_cast<std::size_t>(r)].nodes;
        Vector chi = Vector::Zero(g.size());
        for (Index v : nodes) chi(v) = 1.0;
        mass(r) = chi.cwiseProduct(g.mass()).dot(p * chi);
        members.push_back(nodes);
    }
    const Matrix flow = basis.left.transpose() * rest_weights(g, clusters) * basis.right;
    const Matrix agg = mass.asDiagonal() * flow;
    const Matrix down = basis.left.transpose() * g.mass().asDiagonal();
    return assemble(g, Mode::InDegree, std::move(members), mass, agg, basis.right, down);
}

CoarseningResult coarsen_out(const Graph& g, const ClusterSet& clusters, const KernelBasis& basis) {
    require_basis(basis, g, Kind::OutDegree);
    const Index k = basis.count();
    const Matrix p = riesz_from_kernels(basis, clusters).matrix;
    std::vector<NodeSet> members;
    Vector mass(k);
    for (Index r = 0; r < k; ++r) {
        const NodeSet& nodes = basis.decomposition.reaches[static_cast<std::size_t>(r)].nodes;
        Vector chi = Vector::Zero(g.size());
        for (Index v : nodes) chi(v) = 1.0;
        mass(r) = chi.cwiseProduct(g.mass()).dot(p * chi);
        members.push_back(nodes);
    }
    const Matrix flow = basis.left.transpose() * rest_weights(g, clusters) * basis.right;
    const Matrix agg = flow * mass.asDiagonal();
    const Matrix up = basis.right * mass.asDiagonal();
    const Matrix down = mass.cwiseInverse().asDiagonal() * basis.left.transpose() * g.mass().asDiagonal();
    return assemble(g, Mode::OutDegree, std::move(members), mass, agg, up, down);
}

CoarseningResult coarsen(const Graph& g, const ClusterSet& clusters, Mode mode) {
    switch (mode) {
    case Mode::Undirected: return coarsen_undirected(g, clusters);
    case Mode::InDegree: return coarsen_in(g, clusters, kernels_in(g, clusters));
    case Mode::OutDegree: return coarsen_out(g, clusters, kernels_out(g, clusters));
    }
    throw Error(ErrorCode::InvariantViolation, "unknown mode");
}

bool StructureReport::ok() const {
    return projector <= tol::structural && identity <= tol::structural && laplacian <= tol::structural &&
           mass <= tol::mass_conservation;
}

StructureReport check_structure(const Graph& g, const ClusterSet& clusters, const CoarseningResult& res) {
    StructureReport rep;
    const Kind kind = laplacian_kind(res.mode);
    const Matrix p = riesz_from_kernels(kernels(g, clusters, kind), clusters).matrix;
    const Index k = res.reduced.size();
    rep.projector = (res.up * res.down - p).cwiseAbs().maxCoeff();
    rep.identity = k ? (res.down * res.up - Matrix::Identity(k, k)).cwiseAbs().maxCoeff() : 0.0;
    const Matrix rest = assemble_laplacian(rest_weights(g, clusters), g.mass(), kind);
    const Matrix product = res.down * rest * res.up;
    const double scale = std::max(1.0, rest.cwiseAbs().maxCoeff());
    rep.laplacian = k ? (product - res.reduced_laplacian.matrix).cwiseAbs().maxCoeff() / scale : 0.0;
    const double total = g.mass().sum();
    rep.mass = std::abs(res.reduced.mass().sum() - total) / total;
    return rep;
}

double TransportReport::deviation() const {
    return std::max(std::abs(down_total - total), std::abs(up_total - total));
}

TransportReport probability_transport_check(const CoarseningResult& res, const Vector& mass, const Vector& f) {
    if (f.size() != mass.size() || f.size() != res.up.rows())
        throw Error(ErrorCode::NotADistribution, "distribution length differs from node count");
    if (!f.allFinite() || f.minCoeff() < 0.0) throw Error(ErrorCode::NotADistribution, "negative or non-finite entries");
    TransportReport rep;
    rep.total = f.dot(mass);
    if (std::abs(rep.total - 1.0) > tol::distribution)
        throw Error(ErrorCode::NotADistribution, "total probability differs from 1");
    const Vector& reduced_mass = res.reduced.mass();
    if (res.mode == Mode::InDegree) {
        // paired through the adjoints of up and down
        const Vector coarse = reduced_mass.cwiseInverse().asDiagonal() * (res.up.transpose() * mass.cwiseProduct(f));
        rep.down_total = coarse.dot(reduced_mass);
        const Vector back = mass.cwiseInverse().asDiagonal() * (res.down.transpose() * reduced_mass.cwiseProduct(coarse));
        rep.up_total = back.dot(mass);
    } else {
        const Vector coarse = res.down * f;
        rep.down_total = coarse.dot(reduced_mass);
        rep.up_total = (res.up * coarse).dot(mass);
    }
    return rep;
}

} // namespace dgc
