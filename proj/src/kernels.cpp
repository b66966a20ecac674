#include "dgc/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dgc {

namespace {

Matrix local_weights(const Matrix& weights, const NodeSet& reach) {
    const auto k = static_cast<Index>(reach.size());
    Matrix w(k, k);
    for (Index i = 0; i < k; ++i)
        for (Index j = 0; j < k; ++j)
            w(i, j) = i == j ? 0.0 : weights(reach[static_cast<std::size_t>(i)], reach[static_cast<std::size_t>(j)]);
    return w;
}

void require_reach(const Matrix& weights, const NodeSet& reach) {
    if (reach.empty()) throw Error(ErrorCode::InvariantViolation, "empty reach");
    for (Index v : reach)
        if (v < 0 || v >= weights.cols()) throw Error(ErrorCode::UnknownNode, "index " + std::to_string(v));
}

Matrix masked(const Graph& g, const EdgeMask& mask) {
    return mask.select(g.weights().array(), 0.0).matrix();
}

} // namespace

Vector weight_vector_bruteforce(const Matrix& weights, const NodeSet& reach) {
    require_reach(weights, reach);
    const std::size_t k = reach.size();
    if (k > tol::enumeration_limit)
        throw Error(ErrorCode::ReachTooLargeForEnumeration, std::to_string(k) + " nodes exceed the limit of 12");
    const Matrix w = local_weights(weights, reach);

    // trees(r, S): total weight of out-trees rooted at r spanning the node set S.
    // The subtree holding the lowest other member of S is peeled off, so every
    // tree is produced exactly once.
    std::vector<double> memo(k << k, std::numeric_limits<double>::quiet_NaN());
    auto trees = [&](auto&& self, std::size_t r, unsigned s) -> double {
        const unsigned rest = s & ~(1u << r);
        if (rest == 0) return 1.0;
        double& slot = memo[(r << k) | s];
        if (!std::isnan(slot)) return slot;
        const unsigned low = rest & (~rest + 1u);
        double total = 0.0;
        for (unsigned sub = rest; sub; sub = (sub - 1) & rest) {
            if (!(sub & low)) continue;
            double hang = 0.0;
            for (std::size_t c = 0; c < k; ++c)
                if ((sub >> c) & 1u) {
                    const double a = w(static_cast<Index>(c), static_cast<Index>(r));
                    if (a > 0.0) hang += a * self(self, c, sub);
                }
            if (hang != 0.0) total += hang * self(self, r, s & ~sub);
        }
        return slot = total;
    };

    Vector out = Vector::Zero(weights.cols());
    const unsigned all = (1u << k) - 1u;
    for (std::size_t r = 0; r < k; ++r) out(reach[r]) = trees(trees, r, all);
    return out;
}

Vector weight_vector_matrix(const Matrix& weights, const NodeSet& reach) {
    require_reach(weights, reach);
    const auto k = static_cast<Index>(reach.size());
    Vector out = Vector::Zero(weights.cols());
    if (k == 1) {
        out(reach[0]) = 1.0;
        return out;
    }
    const Matrix w = local_weights(weights, reach);
    Matrix q = -w;
    q.diagonal() += w.rowwise().sum();

    // Tutte: the out-trees rooted at r are counted by the principal minor without r.
    Vector local(k);
    for (Index r = 0; r < k; ++r) {
        Matrix minor(k - 1, k - 1);
        for (Index i = 0, ii = 0; i < k; ++i) {
            if (i == r) continue;
            for (Index j = 0, jj = 0; j < k; ++j) {
                if (j == r) continue;
                minor(ii, jj++) = q(i, j);
            }
            ++ii;
        }
        local(r) = Eigen::FullPivLU<Matrix>(minor).determinant();
    }
    const double top = local.maxCoeff();
    if (!(top > 0.0) || !std::isfinite(top))
        throw Error(ErrorCode::SingularRestriction, "no positive tree weight on the reach");

    const ReachDecomposition dec = reaches(w);
    if (dec.count() != 1) throw Error(ErrorCode::SingularRestriction, "node set is not a single reach");
    const NodeSet& cabal = dec.reaches.front().cabal;
    for (Index r = 0; r < k; ++r) {
        if (contains(cabal, r)) {
            if (!(local(r) > 0.0)) throw Error(ErrorCode::SingularRestriction, "cabal node with zero tree weight");
            out(reach[static_cast<std::size_t>(r)]) = local(r);
        } else if (std::abs(local(r)) > tol::off_cabal_rel * top) {
            throw Error(ErrorCode::SingularRestriction, "tree weight outside the cabal");
        }
    }
    return out;
}

KernelBasis right_kernel_in(const Graph& g, const ClusterSet& clusters) {
    const Matrix w = masked(g, clusters.edges);
    const Matrix l = assemble_laplacian(w, g.mass(), Kind::InDegree);
    KernelBasis basis;
    basis.kind = Kind::InDegree;
    basis.decomposition = reaches(w);
    basis.mass = g.mass();
    const Index n = g.size();
    basis.right = Matrix::Zero(n, basis.count());
    const double scale = std::max(1.0, l.cwiseAbs().maxCoeff());

    for (Index r = 0; r < basis.count(); ++r) {
        const Reach& reach = basis.decomposition.reaches[static_cast<std::size_t>(r)];
        auto col = basis.right.col(r);
        for (Index v : reach.exclusive) col(v) = 1.0;
        if (!reach.common.empty()) {
            const auto c = static_cast<Index>(reach.common.size());
            Matrix block(c, c);
            Matrix rhs = Matrix::Zero(c, 1);
            for (Index i = 0; i < c; ++i) {
                const Index row = reach.common[static_cast<std::size_t>(i)];
                for (Index j = 0; j < c; ++j) block(i, j) = l(row, reach.common[static_cast<std::size_t>(j)]);
                for (Index h : reach.exclusive) rhs(i, 0) -= l(row, h);
            }
            Matrix x;
            try {
                x = solve(block, rhs);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::SingularMatrix) throw;
                throw Error(ErrorCode::SingularCommonBlock, "common part block of a reach is singular");
            }
            for (Index i = 0; i < c; ++i) col(reach.common[static_cast<std::size_t>(i)]) = x(i, 0);
        }
        if ((l * col).cwiseAbs().maxCoeff() > tol::kernel_residual * scale)
            throw Error(ErrorCode::InvariantViolation, "right kernel residual too large");
    }
    return basis;
}

KernelBasis left_kernel_in(const Graph& g, const ClusterSet& clusters) {
    const Matrix w = masked(g, clusters.edges);
    KernelBasis basis;
    basis.kind = Kind::InDegree;
    basis.decomposition = reaches(w);
    basis.mass = g.mass();
    basis.left = Matrix::Zero(g.size(), basis.count());
    for (Index r = 0; r < basis.count(); ++r) {
        const Vector omega = weight_vector_matrix(w, basis.decomposition.reaches[static_cast<std::size_t>(r)].nodes);
        basis.left.col(r) = omega / omega.dot(g.mass());
    }
    return basis;
}

KernelBasis kernels_in(const Graph& g, const ClusterSet& clusters) {
    KernelBasis basis = right_kernel_in(g, clusters);
    basis.left = left_kernel_in(g, clusters).left;
    const Matrix l = assemble_laplacian(masked(g, clusters.edges), g.mass(), Kind::InDegree);
    const KernelReport report = check_kernels(basis, l);
    if (!report.ok()) throw Error(ErrorCode::InvariantViolation, "in-degree kernel basis fails its checks");
    return basis;
}

KernelBasis kernels_out(const Graph& g, const ClusterSet& clusters) {
    const KernelBasis dual = kernels_in(transpose(g), transpose(g, clusters));
    KernelBasis basis;
    basis.kind = Kind::OutDegree;
    basis.decomposition = dual.decomposition;
    basis.mass = g.mass();
    basis.right = dual.left;
    basis.left = dual.right;
    const Matrix l = assemble_laplacian(masked(g, clusters.edges), g.mass(), Kind::OutDegree);
    const KernelReport report = check_kernels(basis, l);
    if (!report.ok()) throw Error(ErrorCode::InvariantViolation, "out-degree kernel basis fails its checks");
    return basis;
}

KernelBasis kernels(const Graph& g, const ClusterSet& clusters, Kind kind) {
    return kind == Kind::InDegree ? kernels_in(g, clusters) : kernels_out(g, clusters);
}

bool KernelReport::ok(double tolerance) const {
    return right_residual <= tolerance && left_residual <= tolerance && biorthogonality <= tolerance &&
           partition <= tolerance && support <= tolerance;
}

KernelReport check_kernels(const KernelBasis& basis, const Matrix& l) {
    KernelReport rep;
    const Index k = basis.count();
    const Index n = basis.mass.size();
    if (k == 0) return rep;
    // residuals are measured relative to the largest Laplacian entry
    const double scale = std::max(1.0, l.cwiseAbs().maxCoeff());
    rep.right_residual = (l * basis.right).cwiseAbs().maxCoeff() / scale;
    rep.left_residual = (basis.left.transpose() * basis.mass.asDiagonal() * l).cwiseAbs().maxCoeff() / scale;
    rep.biorthogonality =
        (basis.left.transpose() * basis.mass.asDiagonal() * basis.right - Matrix::Identity(k, k)).cwiseAbs().maxCoeff();
    const Matrix& unit = basis.kind == Kind::InDegree ? basis.right : basis.left;
    const Matrix& weighted = basis.kind == Kind::InDegree ? basis.left : basis.right;
    rep.partition = (unit.rowwise().sum() - Vector::Ones(n)).cwiseAbs().maxCoeff();
    for (Index r = 0; r < k; ++r) {
        const NodeSet& cabal = basis.decomposition.reaches[static_cast<std::size_t>(r)].cabal;
        for (Index v = 0; v < n; ++v) {
            const double x = weighted(v, r);
            if (contains(cabal, v)) {
                if (!(x > 0.0)) rep.support = std::numeric_limits<double>::infinity();
            } else {
                rep.support = std::max(rep.support, std::abs(x));
            }
        }
    }
    return rep;
}

} // namespace dgc
