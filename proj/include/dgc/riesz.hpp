#pragma once

#include "dgc/kernels.hpp"

namespace dgc {

struct RieszProjector {
    Kind kind = Kind::InDegree;
    Matrix matrix;
};

// Identity off the clusters plus sum over cluster reaches of right <left, .>.
RieszProjector riesz_from_kernels(const KernelBasis& basis, const ClusterSet& clusters);

// Trapezoid rule for (1/2 pi i) \oint (z - L)^{-1} dz on the circle of radius
// half the smallest nonzero |eigenvalue|.
RieszProjector riesz_contour_oracle(const LaplacianMatrix& restricted, int points = tol::contour_points);

} // namespace dgc
