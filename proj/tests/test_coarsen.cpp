#include <doctest.h>

#include "support.hpp"

using namespace dgc;
using namespace testing_support;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::InvariantViolation;
}

struct Fixture {
    Graph g;
    ClusterSet cs;
};

// Undirected graphs get a symmetric cluster set so every mode applies.
Fixture random_fixture(std::mt19937_64& rng, int trial, Mode mode) {
    const bool undirected = mode == Mode::Undirected || trial % 4 == 0;
    const Graph g = random_nonempty_graph(rng, 2 + trial % 8, 0.45, undirected);
    const EdgeMask mask = random_edge_subset(rng, g, 0.5, undirected);
    return {g, build_cluster_set(g, mask, cluster_mode(mode))};
}

} // namespace

TEST_CASE("triangle reduction") {
    const Graph g = load_graph("triangle.json");
    const ClusterSet cs = load_clusters(g, "triangle_bc.json", ClusterMode::Undirected);
    const CoarseningResult res = coarsen(g, cs, Mode::Undirected);
    CHECK(res.reduced.ids() == std::vector<std::string>{"a", "{b,c}"});
    CHECK(res.reduced.mass() == Vector(Eigen::Vector2d(1, 2)));
    CHECK(res.reduced.weight(0, 1) == 2.0);
    CHECK(res.reduced.weight(1, 0) == 2.0);
    Matrix expected(2, 2);
    expected << 2, -2, -1, 1;
    CHECK(max_abs(res.reduced_laplacian.matrix - expected) == 0.0);
    CHECK(check_structure(g, cs, res).ok());
}

TEST_CASE("disconnection example reduces to two isolated nodes") {
    const Graph g = load_graph("fig6.json");
    const ClusterSet cs = load_clusters(g, "fig6_cluster.json", ClusterMode::Directed);
    const CoarseningResult res = coarsen(g, cs, Mode::InDegree);
    CHECK(res.reduced.ids() == std::vector<std::string>{"1", "{2,3}"});
    CHECK(res.reduced.edge_count() == 0);
    CHECK(res.reduced.mass() == Vector(Eigen::Vector2d(1, 2)));
    CHECK(check_structure(g, cs, res).ok());
}

TEST_CASE("reduced ids") {
    const Graph g = load_graph("g1.json");
    CHECK(reduced_id(g, {1}) == "b");
    CHECK(reduced_id(g, {0, 2, 3}) == "{a,c,d}");
}

TEST_CASE("property: structural identities in every mode") {
    std::mt19937_64 rng(2718);
    for (Mode mode : {Mode::Undirected, Mode::InDegree, Mode::OutDegree}) {
        for (int trial = 0; trial < 200; ++trial) {
            const Fixture f = random_fixture(rng, trial, mode);
            const CoarseningResult res = coarsen(f.g, f.cs, mode);
            const StructureReport rep = check_structure(f.g, f.cs, res);
            CHECK(rep.projector <= 1e-10);
            CHECK(rep.identity <= 1e-10);
            CHECK(rep.laplacian <= 1e-10);
            CHECK(rep.mass <= 1e-12);
            CHECK(std::abs(res.reduced.mass().sum() - f.g.mass().sum()) <= 1e-12 * f.g.mass().sum());

            const Matrix& l = res.reduced_laplacian.matrix;
            const Index k = l.rows();
            const double scale = std::max(1.0, max_abs(l));
            if (mode == Mode::OutDegree)
                CHECK(max_abs(res.reduced.mass().transpose() * l) <= 1e-12 * scale * res.reduced.mass().maxCoeff());
            else
                CHECK(max_abs(l * Vector::Ones(k)) <= 1e-12 * scale);
            for (Index i = 0; i < k; ++i)
                for (Index j = 0; j < k; ++j)
                    if (i != j) CHECK(l(i, j) <= 0.0);
            CHECK(res.reduced.mass().minCoeff() > 0.0);
        }
    }
}

TEST_CASE("property: all modes agree on undirected input") {
    std::mt19937_64 rng(1618);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = random_nonempty_graph(rng, 2 + trial % 8, 0.5, true);
        const EdgeMask mask = random_edge_subset(rng, g, 0.5, true);
        const CoarseningResult u = coarsen(g, build_cluster_set(g, mask, ClusterMode::Undirected), Mode::Undirected);
        const ClusterSet directed = build_cluster_set(g, mask, ClusterMode::Directed);
        for (Mode mode : {Mode::InDegree, Mode::OutDegree}) {
            const CoarseningResult d = coarsen(g, directed, mode);
            CHECK(d.reduced.ids() == u.reduced.ids());
            CHECK(max_abs(d.reduced.mass() - u.reduced.mass()) <= 1e-12 * g.mass().sum());
            CHECK(max_abs(d.reduced.weights() - u.reduced.weights()) <= 1e-10 * std::max(1.0, max_abs(g.weights())));
        }
    }
}

TEST_CASE("probability transport") {
    std::mt19937_64 rng(57);
    for (Mode mode : {Mode::Undirected, Mode::InDegree, Mode::OutDegree}) {
        const Fixture f = random_fixture(rng, 5, mode);
        const CoarseningResult res = coarsen(f.g, f.cs, mode);
        for (int trial = 0; trial < 100; ++trial) {
            const Vector p = random_distribution(rng, f.g.mass());
            CHECK(probability_transport_check(res, f.g.mass(), p).deviation() <= 1e-12);
        }
        const Index n = f.g.size();
        Vector bad = Vector::Ones(n);
        CHECK(code_of([&] { probability_transport_check(res, f.g.mass(), bad); }) == ErrorCode::NotADistribution);
        bad = random_distribution(rng, f.g.mass());
        bad(0) = -bad(0);
        CHECK(code_of([&] { probability_transport_check(res, f.g.mass(), bad); }) == ErrorCode::NotADistribution);
        CHECK(code_of([&] { probability_transport_check(res, f.g.mass(), Vector::Ones(n + 1)); }) ==
              ErrorCode::NotADistribution);
    }
}

TEST_CASE("coarsening preconditions") {
    const Graph g = load_graph("g1.json");
    const ClusterSet cs = build_cluster_set(g, g.edge_mask(), ClusterMode::Directed);
    CHECK(code_of([&] { coarsen(g, cs, Mode::Undirected); }) == ErrorCode::NotUndirected);
    CHECK(code_of([&] { coarsen_in(g, cs, kernels_out(g, cs)); }) == ErrorCode::ClusterViolation);
    CHECK(code_of([&] { coarsen_out(g, cs, kernels_in(g, cs)); }) == ErrorCode::ClusterViolation);

    const Graph t = load_graph("triangle.json");
    const ClusterSet directed = build_cluster_set(t, t.edge_mask(), ClusterMode::Directed);
    CHECK(code_of([&] { coarsen_undirected(t, directed); }) == ErrorCode::ClusterViolation);
}

TEST_CASE("a corrupted kernel basis is caught as a negative aggregate") {
    // clusters {a,b} and {c,d}, one leftover edge b -> c
    const Graph g = build_graph({{"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}},
                                {{"a", "b", 1}, {"b", "a", 1}, {"c", "d", 1}, {"d", "c", 1}, {"b", "c", 1}});
    const ClusterSet cs = build_cluster_set(g, symmetrized(edge_mask(g, {{"a", "b"}, {"c", "d"}})), ClusterMode::Directed);
    KernelBasis basis = kernels_in(g, cs);
    CHECK(coarsen_in(g, cs, basis).reduced.edge_count() == 1);
    basis.right(g.index_of("b"), 0) = -1.0;
    CHECK(code_of([&] { coarsen_in(g, cs, basis); }) == ErrorCode::NegativeAggregateWeight);
}
