#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <string>

#include "dgc/errors.hpp"
#include "dgc/tolerances.hpp"

namespace dgc {

using Index = Eigen::Index;
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using complex = std::complex<double>;

template <typename Derived>
void require_finite(const Eigen::MatrixBase<Derived>& a, const char* what) {
    if (!a.allFinite())
        throw Error(ErrorCode::InvariantViolation, std::string(what) + " has non-finite entries");
}

template <typename Derived>
void require_size(const Eigen::MatrixBase<Derived>& a) {
    if (static_cast<std::size_t>(a.rows()) > tol::dense_limit ||
        static_cast<std::size_t>(a.cols()) > tol::dense_limit)
        throw Error(ErrorCode::SizeLimitExceeded, "dense routines are limited to n <= 2000");
}

// LU with partial pivoting. Rejects pivots below n*eps*||A||_inf.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>
solve(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a,
      const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& b) {
    require_size(a);
    require_finite(a, "solve: A");
    require_finite(b, "solve: B");
    if (a.rows() != a.cols() || a.rows() != b.rows())
        throw Error(ErrorCode::InvariantViolation, "solve: shape mismatch");
    const Index n = a.rows();
    if (n == 0) return b;
    Eigen::PartialPivLU<Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>> lu(a);
    const double norm_inf = a.cwiseAbs().rowwise().sum().maxCoeff();
    const double floor = static_cast<double>(n) * tol::machine * norm_inf;
    const double pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
    if (!(pivot >= floor) || pivot == 0.0)
        throw Error(ErrorCode::SingularMatrix,
                    "pivot " + std::to_string(pivot) + " below " + std::to_string(floor));
    return lu.solve(b);
}

inline Matrix solve(const Matrix& a, const Matrix& b) { return solve<double>(a, b); }
inline CMatrix solve(const CMatrix& a, const CMatrix& b) { return solve<complex>(a, b); }

template <typename Derived>
auto inverse(const Eigen::MatrixBase<Derived>& a) {
    using Plain = typename Derived::PlainObject;
    return solve<typename Derived::Scalar>(Plain(a), Plain::Identity(a.rows(), a.cols()));
}

// Largest singular value of M^{1/2} A M^{-1/2}, i.e. the operator norm on l2(m).
template <typename Derived, typename MassDerived>
double weighted_opnorm(const Eigen::MatrixBase<Derived>& a, const Eigen::MatrixBase<MassDerived>& mass) {
    using Plain = typename Derived::PlainObject;
    require_size(a);
    if (a.size() == 0) return 0.0;
    const Vector s = mass.cwiseSqrt();
    const Vector si = s.cwiseInverse();
    Plain sym = s.asDiagonal() * a * si.asDiagonal();
    Eigen::BDCSVD<Plain> svd(sym);
    return svd.singularValues()(0);
}

inline double opnorm(const Matrix& a) { return a.size() ? Eigen::BDCSVD<Matrix>(a).singularValues()(0) : 0.0; }

// Orthonormal basis of ker A from the SVD, zero threshold sigma <= n*eps*sigma_max.
Matrix null_space(const Matrix& a);

// Largest principal angle (radians) between the column spaces of a and b.
double max_principal_angle(const Matrix& a, const Matrix& b);

// Eigenvalues via Hessenberg reduction and shifted QR.
CVector eigvals(const Matrix& a);
CVector eigvals(const CMatrix& a);

// True when every eigenvalue has real part >= -slack.
bool nonnegative_real_spectrum(const Matrix& a, double slack = 1e-10);

// exp(t*A), Pade(13) with scaling and squaring.
Matrix expm(const Matrix& a, double t);

// Symmetric eigenvalues of M^{1/2} L M^{-1/2}; throws NotSymmetrizable.
Vector symmetrized_eigenvalues(const Matrix& l, const Vector& mass);

// Smallest nonzero eigenvalue; +inf when L vanishes. Zero threshold n*eps*lambda_max.
double spectral_gap(const Matrix& l, const Vector& mass);

// Least squares slope of log(y) against log(x).
double loglog_slope(const Vector& x, const Vector& y);

} // namespace dgc
