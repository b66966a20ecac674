#include "dgc/numerics.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <limits>
#include <numbers>

namespace dgc {

std::string_view error_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::NonPositiveMass: return "NonPositiveMass";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::UnknownEndpoint: return "UnknownEndpoint";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::NotUndirected: return "NotUndirected";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::NotSymmetricEdgeSet: return "NotSymmetricEdgeSet";
    case ErrorCode::ClustersShareNodes: return "ClustersShareNodes";
    case ErrorCode::EmptyClusterSet: return "EmptyClusterSet";
    case ErrorCode::ReachTooLargeForEnumeration: return "ReachTooLargeForEnumeration";
    case ErrorCode::NotADistribution: return "NotADistribution";
    case ErrorCode::ZOnSpectrumAxis: return "ZOnSpectrumAxis";
    case ErrorCode::NonPositiveTime: return "NonPositiveTime";
    case ErrorCode::MalformedDocument: return "MalformedDocument";
    case ErrorCode::UnknownVersion: return "UnknownVersion";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::SingularRestriction: return "SingularRestriction";
    case ErrorCode::SingularCommonBlock: return "SingularCommonBlock";
    case ErrorCode::SpectralGapCollapse: return "SpectralGapCollapse";
    case ErrorCode::NegativeAggregateWeight: return "NegativeAggregateWeight";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotSymmetrizable: return "NotSymmetrizable";
    case ErrorCode::ClusterViolation: return "ClusterViolation";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    }
    return "Unknown";
}

Matrix null_space(const Matrix& a) {
    require_size(a);
    const Index n = a.cols();
    if (n == 0) return Matrix(0, 0);
    Eigen::BDCSVD<Matrix> svd(a, Eigen::ComputeFullV);
    const Vector& s = svd.singularValues();
    const double smax = s.size() ? s(0) : 0.0;
    const double cutoff = static_cast<double>(std::max(a.rows(), n)) * tol::machine * smax;
    Index rank = 0;
    for (Index i = 0; i < s.size(); ++i)
        if (s(i) > cutoff) ++rank;
    return svd.matrixV().rightCols(n - rank);
}

double max_principal_angle(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) return std::numbers::pi / 2;
    if (a.cols() == 0) return 0.0;
    Matrix qa = Eigen::HouseholderQR<Matrix>(a).householderQ() * Matrix::Identity(a.rows(), a.cols());
    Matrix qb = Eigen::HouseholderQR<Matrix>(b).householderQ() * Matrix::Identity(b.rows(), b.cols());
    Eigen::JacobiSVD<Matrix> svd(qa.transpose() * qb);
    const double c = std::clamp(svd.singularValues().minCoeff(), 0.0, 1.0);
    // acos is ill-conditioned near 1, use the sine of the gap instead
    const Matrix residual = qb - qa * (qa.transpose() * qb);
    const double s = residual.size() ? opnorm(residual) : 0.0;
    return std::atan2(s, c);
}

CVector eigvals(const Matrix& a) {
    require_size(a);
    require_finite(a, "eigvals");
    if (a.size() == 0) return CVector(0);
    Eigen::EigenSolver<Matrix> es(a, false);
    if (es.info() != Eigen::Success) throw Error(ErrorCode::InvariantViolation, "eigvals: QR did not converge");
    return es.eigenvalues();
}

CVector eigvals(const CMatrix& a) {
    require_size(a);
    require_finite(a, "eigvals");
    if (a.size() == 0) return CVector(0);
    Eigen::ComplexEigenSolver<CMatrix> es(a, false);
    if (es.info() != Eigen::Success) throw Error(ErrorCode::InvariantViolation, "eigvals: QR did not converge");
    return es.eigenvalues();
}

bool nonnegative_real_spectrum(const Matrix& a, double slack) {
    const CVector ev = eigvals(a);
    return ev.size() == 0 || ev.real().minCoeff() >= -slack;
}

Matrix expm(const Matrix& a, double t) {
    require_size(a);
    require_finite(a, "expm");
    if (a.size() == 0) return a;
    Matrix ta = t * a;
    Matrix out = ta.exp();
    require_finite(out, "expm result");
    return out;
}

Vector symmetrized_eigenvalues(const Matrix& l, const Vector& mass) {
    require_size(l);
    const Vector s = mass.cwiseSqrt();
    Matrix sym = s.asDiagonal() * l * s.cwiseInverse().asDiagonal();
    const double scale = std::max(1.0, sym.cwiseAbs().maxCoeff());
    if ((sym - sym.transpose()).cwiseAbs().maxCoeff() > tol::symmetrizable * scale)
        throw Error(ErrorCode::NotSymmetrizable, "mass-symmetrized operator is not symmetric");
    sym = 0.5 * (sym + sym.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Matrix> es(sym, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

double spectral_gap(const Matrix& l, const Vector& mass) {
    const Vector ev = symmetrized_eigenvalues(l, mass);
    if (ev.size() == 0) return std::numeric_limits<double>::infinity();
    const double top = ev.cwiseAbs().maxCoeff();
    const double zero = static_cast<double>(ev.size()) * tol::machine * top;
    double gap = std::numeric_limits<double>::infinity();
    for (Index i = 0; i < ev.size(); ++i)
        if (ev(i) > zero) gap = std::min(gap, ev(i));
    return gap;
}

double loglog_slope(const Vector& x, const Vector& y) {
    const Index n = x.size();
    if (n < 2 || y.size() != n) throw Error(ErrorCode::InvariantViolation, "slope fit needs two or more points");
    Matrix design(n, 2);
    design.col(0) = x.array().log().matrix();
    design.col(1).setOnes();
    const Vector rhs = y.array().log().matrix();
    const Vector coef = design.colPivHouseholderQr().solve(rhs);
    return coef(0);
}

} // namespace dgc
