#include "dgc/riesz.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace dgc {

RieszProjector riesz_from_kernels(const KernelBasis& basis, const ClusterSet& clusters) {
    const Index n = basis.mass.size();
    RieszProjector p;
    p.kind = basis.kind;
    p.matrix = Matrix::Zero(n, n);
    const NodeSet inside = clusters.covered();
    for (Index v = 0; v < n; ++v)
        if (!contains(inside, v)) p.matrix(v, v) = 1.0;
    for (Index r = 0; r < basis.count(); ++r) {
        if (!basis.nontrivial(r)) continue;
        p.matrix += basis.right.col(r) * basis.left.col(r).cwiseProduct(basis.mass).transpose();
    }
    return p;
}

RieszProjector riesz_contour_oracle(const LaplacianMatrix& restricted, int points) {
    const Matrix& l = restricted.matrix;
    const Index n = l.rows();
    if (points < 4) throw Error(ErrorCode::InvariantViolation, "contour needs at least 4 points");
    RieszProjector p;
    p.kind = restricted.kind;

    const CVector ev = eigvals(l);
    const double rho = ev.size() ? ev.cwiseAbs().maxCoeff() : 0.0;
    const double zero = 1e3 * static_cast<double>(n) * tol::machine * std::max(1.0, rho);
    double smallest = std::numeric_limits<double>::infinity();
    for (Index i = 0; i < ev.size(); ++i) {
        const double a = std::abs(ev(i));
        if (a > zero) smallest = std::min(smallest, a);
    }
    if (!std::isfinite(smallest)) {
        // no nonzero spectrum: L vanishes and the projector is the identity
        p.matrix = Matrix::Identity(n, n);
        return p;
    }
    if (smallest < tol::gap_collapse)
        throw Error(ErrorCode::SpectralGapCollapse, "smallest nonzero eigenvalue below 1e-12");

    const double radius = 0.5 * smallest;
    const CMatrix lc = l.cast<complex>();
    const CMatrix id = CMatrix::Identity(n, n);
    CMatrix sum = CMatrix::Zero(n, n);
    for (int k = 0; k < points; ++k) {
        const double theta = 2.0 * std::numbers::pi * (k + 0.5) / points;
        const complex z = std::polar(radius, theta);
        sum += z * solve(CMatrix(z * id - lc), id);
    }
    sum /= static_cast<double>(points);
    if (sum.imag().cwiseAbs().maxCoeff() > tol::contour_imag_residue)
        throw Error(ErrorCode::InvariantViolation, "contour integral left an imaginary residue");
    p.matrix = sum.real();
    return p;
}

} // namespace dgc
