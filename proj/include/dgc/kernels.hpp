#pragma once

#include "dgc/connectivity.hpp"

namespace dgc {

// Weighted count of out-trees of the reach rooted at each node,
// edges taken from `weights`. Zero outside the reach.
Vector weight_vector_bruteforce(const Matrix& weights, const NodeSet& reach);
Vector weight_vector_matrix(const Matrix& weights, const NodeSet& reach);

// Column r of `right`/`left` belongs to reach r of `decomposition`.
struct KernelBasis {
    Kind kind = Kind::InDegree;
    ReachDecomposition decomposition; // reaches of (V, E~) or of (V, E~^T) for OutDegree
    Matrix right;
    Matrix left;
    Vector mass;

    Index count() const { return decomposition.count(); }
    bool nontrivial(Index r) const { return decomposition.reaches[static_cast<std::size_t>(r)].nodes.size() > 1; }
};

KernelBasis right_kernel_in(const Graph& g, const ClusterSet& clusters);
KernelBasis left_kernel_in(const Graph& g, const ClusterSet& clusters);
KernelBasis kernels_in(const Graph& g, const ClusterSet& clusters);
KernelBasis kernels_out(const Graph& g, const ClusterSet& clusters);
KernelBasis kernels(const Graph& g, const ClusterSet& clusters, Kind kind);

struct KernelReport {
    double right_residual = 0; // ||L gamma_right||, max over reaches
    double left_residual = 0;  // ||gamma_left^T M L||
    double biorthogonality = 0;
    double partition = 0;      // sum of the unit-valued family minus one
    double support = 0;        // weight-vector family mass outside its cabal
    bool ok(double tolerance = tol::kernel_residual) const;
};

KernelReport check_kernels(const KernelBasis& basis, const Matrix& cluster_laplacian);

} // namespace dgc
