#pragma once

#include <string>
#include <vector>

#include "dgc/numerics.hpp"

namespace dgc {

// mask(i, j) marks the stored edge a(i, j), drawn j -> i.
using EdgeMask = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

struct NodeSpec {
    std::string id;
    double mass = 1.0;
};

// Drawn arrow src -> dst, stored as a(dst, src).
struct EdgeSpec {
    std::string src;
    std::string dst;
    double weight = 1.0;
};

struct Arc {
    Index head;
    Index tail;
    double weight;
};

// Immutable weighted digraph with positive node masses.
// Nodes are kept in lexicographic order of their ids.
class Graph {
public:
    Graph() = default;

    Index size() const { return static_cast<Index>(ids_.size()); }
    const std::vector<std::string>& ids() const { return ids_; }
    const std::string& id(Index i) const { return ids_.at(static_cast<std::size_t>(i)); }
    const Vector& mass() const { return mass_; }
    const Matrix& weights() const { return weights_; }
    double weight(Index head, Index tail) const { return weights_(head, tail); }
    bool has_edge(Index head, Index tail) const { return weights_(head, tail) > 0.0; }

    Index index_of(const std::string& id) const;
    bool contains(const std::string& id) const;

    std::vector<Arc> arcs() const;
    Index edge_count() const;
    EdgeMask edge_mask() const { return weights_.array() > 0.0; }
    bool is_undirected() const { return weights_ == weights_.transpose(); }

    // Validating constructor; ids must already be sorted and unique.
    static Graph from_dense(std::vector<std::string> ids, Vector mass, Matrix weights);

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.ids_ == b.ids_ && a.mass_ == b.mass_ && a.weights_ == b.weights_;
    }

private:
    std::vector<std::string> ids_;
    Vector mass_;
    Matrix weights_;
};

Graph build_graph(std::vector<NodeSpec> nodes, const std::vector<EdgeSpec>& edges);

Graph transpose(const Graph& g);

// Same nodes and masses, only the edges selected by the mask (or its complement).
Graph restrict_edges(const Graph& g, const EdgeMask& mask);
Graph remove_edges(const Graph& g, const EdgeMask& mask);

enum class Kind { InDegree, OutDegree };

struct LaplacianMatrix {
    Kind kind = Kind::InDegree;
    Matrix matrix;
    Vector mass;
};

// L- = M^{-1}(diag(row sums) - A), L+ = M^{-1}(diag(column sums) - A).
template <typename WDerived, typename MDerived>
Matrix assemble_laplacian(const Eigen::MatrixBase<WDerived>& a, const Eigen::MatrixBase<MDerived>& mass, Kind kind) {
    Vector degree = kind == Kind::InDegree ? Vector(a.rowwise().sum()) : Vector(a.colwise().sum().transpose());
    Matrix l = -a;
    l.diagonal() += degree;
    return mass.cwiseInverse().asDiagonal() * l;
}

LaplacianMatrix laplacian(const Graph& g, Kind kind);

// max over nodes of max(d-, d+)/m; both Laplacians have weighted norm <= 2C.
double validate_boundedness(const Graph& g);

// 1/2 * sum over stored edges of a(i,j)|f(i)-f(j)|^2, which equals <f, L f>.
double dirichlet_form(const Graph& g, const Vector& f);

// <f,g> = sum conj(f) g m
struct InnerProductSpace {
    Vector mass;

    template <typename A, typename B>
    auto dot(const Eigen::MatrixBase<A>& f, const Eigen::MatrixBase<B>& g) const {
        return (f.conjugate().cwiseProduct(g).cwiseProduct(mass.template cast<typename B::Scalar>())).sum();
    }

    template <typename A>
    double norm(const Eigen::MatrixBase<A>& f) const {
        return std::sqrt((f.cwiseAbs2().cwiseProduct(mass)).sum());
    }
};

} // namespace dgc
