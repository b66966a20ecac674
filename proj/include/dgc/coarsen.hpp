#pragma once

#include <string>
#include <vector>

#include "dgc/riesz.hpp"

namespace dgc {

enum class Mode { Undirected, InDegree, OutDegree };

Kind laplacian_kind(Mode mode);
ClusterMode cluster_mode(Mode mode);

struct CoarseningResult {
    Mode mode = Mode::Undirected;
    Graph reduced;
    Matrix up;   // n x k, reduced -> full
    Matrix down; // k x n, full -> reduced
    LaplacianMatrix reduced_laplacian;
    std::vector<NodeSet> members; // per reduced node, in reduced order
};

CoarseningResult coarsen_undirected(const Graph& g, const ClusterSet& clusters);
CoarseningResult coarsen_in(const Graph& g, const ClusterSet& clusters, const KernelBasis& basis);
CoarseningResult coarsen_out(const Graph& g, const ClusterSet& clusters, const KernelBasis& basis);
CoarseningResult coarsen(const Graph& g, const ClusterSet& clusters, Mode mode);

// Id of a reduced node: the member id itself, or "{a,b,...}".
std::string reduced_id(const Graph& g, const NodeSet& members);

struct StructureReport {
    double projector = 0;  // ||up*down - P||
    double identity = 0;   // ||down*up - I||
    double laplacian = 0;  // ||down*L_rest*up - reduced Laplacian||
    double mass = 0;       // |sum of reduced masses - sum of masses|
    bool ok() const;
};

StructureReport check_structure(const Graph& g, const ClusterSet& clusters, const CoarseningResult& result);

struct TransportReport {
    double total = 0;       // sum f m of the input
    double down_total = 0;  // total after the full -> reduced pairing
    double up_total = 0;    // total after mapping a reduced distribution back
    double deviation() const;
};

// f must be nonnegative with sum f m = 1; throws NotADistribution.
TransportReport probability_transport_check(const CoarseningResult& result, const Vector& mass, const Vector& f);

} // namespace dgc
