#pragma once

#include <vector>

#include "dgc/graph.hpp"

namespace dgc {

using NodeSet = std::vector<Index>; // sorted node indices

struct Reach {
    NodeSet nodes;
    NodeSet cabal;     // nodes from which the whole reach is reachable
    NodeSet exclusive; // nodes in no other reach
    NodeSet common;    // nodes shared with another reach
};

struct ReachDecomposition {
    std::vector<Reach> reaches; // ordered by smallest member
    std::vector<int> multiplicity; // per node, number of reaches containing it

    Index count() const { return static_cast<Index>(reaches.size()); }
};

// Nodes reachable from i following drawn arrows.
NodeSet reachable_set(const Matrix& weights, Index i);
NodeSet reachable_set(const Graph& g, Index i);
NodeSet reachable_set(const Graph& g, const std::string& id);

ReachDecomposition reaches(const Matrix& weights);
ReachDecomposition reaches(const Graph& g);

// Components of a symmetric edge set; singletons included.
std::vector<NodeSet> connected_components(const Matrix& weights);
std::vector<NodeSet> connected_components(const Graph& g);

enum class ClusterMode { Undirected, Directed };

struct Cluster {
    NodeSet nodes;
    EdgeMask edges;
};

struct ClusterSet {
    ClusterMode mode = ClusterMode::Undirected;
    EdgeMask edges;                // union of all cluster edges
    std::vector<Cluster> clusters; // components (undirected) or nontrivial reaches (directed)

    Index node_count() const { return edges.rows(); }
    // Nodes touched by some cluster edge.
    NodeSet covered() const;
};

// Mask of stored edges for drawn src -> dst pairs; throws UnknownEdge.
EdgeMask edge_mask(const Graph& g, const std::vector<std::pair<std::string, std::string>>& drawn);

// Adds the reverse of every selected edge.
EdgeMask symmetrized(const EdgeMask& mask);

ClusterSet build_cluster_set(const Graph& g, const EdgeMask& edges, ClusterMode mode);
// Several edge groups; in undirected mode their components must be node-disjoint.
ClusterSet build_cluster_set(const Graph& g, const std::vector<EdgeMask>& groups, ClusterMode mode);

// Cluster set with no edges, for the no-coarsening baseline.
ClusterSet empty_cluster_set(const Graph& g, ClusterMode mode);

// The same clusters viewed on the transposed graph.
ClusterSet transpose(const Graph& g, const ClusterSet& clusters);

bool contains(const NodeSet& set, Index i);

} // namespace dgc
