#include <doctest.h>

#include "support.hpp"

using namespace dgc;
using namespace testing_support;

namespace {

Matrix cluster_laplacian(const Graph& g, const ClusterSet& cs, Kind kind) {
    return assemble_laplacian(Matrix(cs.edges.select(g.weights().array(), 0.0).matrix()), g.mass(), kind);
}

ClusterSet random_directed_clusters(std::mt19937_64& rng, const Graph& g) {
    return build_cluster_set(g, random_edge_subset(rng, g, 0.6, false), ClusterMode::Directed);
}

double cosine(const Vector& a, const Vector& b) {
    return a.dot(b) / (a.norm() * b.norm());
}

NodeSet all_nodes(const Graph& g) {
    NodeSet s;
    for (Index i = 0; i < g.size(); ++i) s.push_back(i);
    return s;
}

} // namespace

TEST_CASE("weight vector of G1 at the root") {
    const Graph g = load_graph("g1.json");
    const Vector w = weight_vector_bruteforce(g.weights(), all_nodes(g));
    CHECK(w(g.index_of("a")) == 30.0);
    CHECK(w(g.index_of("b")) == 0.0);
    CHECK(w(g.index_of("c")) == 0.0);
    CHECK(w(g.index_of("d")) == 0.0);
    CHECK(max_abs(weight_vector_matrix(g.weights(), all_nodes(g)) - w) <= 1e-10 * 30.0);
}

TEST_CASE("weight vector of a weighted 3-cycle with a chord") {
    // 1 -> 2 (p), 2 -> 3 (q), 3 -> 1 (r), 1 -> 3 (s)
    const double p = 2, q = 3, r = 5, s = 7;
    const Graph g = build_graph({{"1", 1}, {"2", 1}, {"3", 1}}, {{"1", "2", p}, {"2", "3", q}, {"3", "1", r}, {"1", "3", s}});
    const Vector w = weight_vector_bruteforce(g.weights(), all_nodes(g));
    // root 1: {1->2,2->3}, {1->2,1->3}; root 2: {2->3,3->1}; root 3: {3->1,1->2}
    CHECK(w(0) == p * q + p * s);
    CHECK(w(1) == q * r);
    CHECK(w(2) == r * p);
    CHECK(max_abs(weight_vector_matrix(g.weights(), all_nodes(g)) - w) <= 1e-12 * w.maxCoeff());
}

TEST_CASE("single node weight vector is one") {
    const Graph g = load_graph("g1.json");
    CHECK(weight_vector_bruteforce(g.weights(), {2})(2) == 1.0);
    CHECK(weight_vector_matrix(g.weights(), {2})(2) == 1.0);
}

TEST_CASE("weight_vector_matrix rejects a set that is not one reach") {
    const Graph g = load_graph("g2.json"); // two components a->b, c->d
    try {
        weight_vector_matrix(g.weights(), all_nodes(g));
        FAIL("expected SingularRestriction");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SingularRestriction);
    }
}

TEST_CASE("enumeration guard") {
    Matrix w = Matrix::Zero(13, 13);
    for (Index i = 1; i < 13; ++i) w(i, i - 1) = 1.0;
    NodeSet all;
    for (Index i = 0; i < 13; ++i) all.push_back(i);
    try {
        weight_vector_bruteforce(w, all);
        FAIL("expected ReachTooLargeForEnumeration");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ReachTooLargeForEnumeration);
    }
    all.pop_back();
    const Vector ok = weight_vector_bruteforce(w, all);
    CHECK(ok(0) == 1.0);
    CHECK(ok.tail(12).sum() == 0.0);
}

TEST_CASE("property: matrix-tree and enumeration are parallel on random reaches") {
    std::mt19937_64 rng(31337);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = random_graph(rng, 2 + trial % 8, 0.45, false);
        for (const Reach& r : reaches(g).reaches) {
            const Vector a = weight_vector_bruteforce(g.weights(), r.nodes);
            const Vector b = weight_vector_matrix(g.weights(), r.nodes);
            CHECK(cosine(a, b) >= 1.0 - 1e-10);
            CHECK(max_abs(a - b) <= 1e-10 * a.maxCoeff());
            for (Index v = 0; v < g.size(); ++v)
                if (!contains(r.cabal, v)) CHECK(a(v) == 0.0);
            ++checked;
        }
    }
    CHECK(checked >= 200);
}

TEST_CASE("property: in- and out-degree kernel bases on random cluster sets") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = random_nonempty_graph(rng, 2 + trial % 9, 0.4, false);
        const ClusterSet cs = random_directed_clusters(rng, g);
        for (Kind kind : {Kind::InDegree, Kind::OutDegree}) {
            const KernelBasis basis = kernels(g, cs, kind);
            const Matrix l = cluster_laplacian(g, cs, kind);
            const KernelReport rep = check_kernels(basis, l);
            CHECK(rep.ok());
            CHECK(rep.partition <= 1e-10);
            CHECK(rep.biorthogonality <= 1e-10);
            CHECK(rep.support <= 1e-10);

            // kernel dimension is the reach count, and the basis spans the numerical null space
            const Matrix ker = null_space(l);
            CHECK(ker.cols() == basis.count());
            CHECK(max_principal_angle(ker, basis.right) <= 1e-8);

            const Matrix& unit = kind == Kind::InDegree ? basis.right : basis.left;
            CHECK(unit.minCoeff() >= -1e-12);
            for (Index r = 0; r < basis.count(); ++r) {
                const Reach& reach = basis.decomposition.reaches[static_cast<std::size_t>(r)];
                for (Index v : reach.exclusive) CHECK(std::abs(unit(v, r) - 1.0) <= 1e-12);
                for (Index v = 0; v < g.size(); ++v)
                    if (!contains(reach.nodes, v)) CHECK(unit(v, r) == 0.0);
            }
        }
    }
}

TEST_CASE("G1 transpose: in-degree kernel splits the shared node") {
    const Graph g = transpose(load_graph("g1.json"));
    EdgeMask all = g.edge_mask();
    const ClusterSet cs = build_cluster_set(g, all, ClusterMode::Directed);
    const KernelBasis basis = kernels_in(g, cs);
    REQUIRE(basis.count() == 2);
    const Index a = g.index_of("a");
    // a is pulled by b (weight 2) and c (weight 3)
    CHECK(basis.right(a, 0) == doctest::Approx(0.4));
    CHECK(basis.right(a, 1) == doctest::Approx(0.6));
    CHECK(basis.left(g.index_of("b"), 0) == doctest::Approx(1.0));
    CHECK(basis.left(g.index_of("d"), 1) == doctest::Approx(1.0));
}

TEST_CASE("directed cycle: left kernel is the normalized tree weight") {
    const Graph g = load_graph("fig5.json");
    const ClusterSet cs = build_cluster_set(g, g.edge_mask(), ClusterMode::Directed);
    const KernelBasis basis = kernels_in(g, cs);
    REQUIRE(basis.count() == 1);
    CHECK(max_abs(basis.right - Matrix::Ones(3, 1)) <= 1e-14);
    const Vector omega = weight_vector_bruteforce(g.weights(), {0, 1, 2});
    CHECK(max_abs(basis.left.col(0) - omega / omega.sum()) <= 1e-12);
}
