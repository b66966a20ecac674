#pragma once

#include <cstddef>

// All numerical thresholds in one place. Tests refer to these by name.
namespace dgc::tol {

inline constexpr double machine = 0x1p-52;

inline constexpr double kernel_residual = 1e-10;
inline constexpr double biorthogonality = 1e-10;
inline constexpr double structural = 1e-10;
inline constexpr double weight_vector_rel = 1e-10;
inline constexpr double off_cabal_rel = 1e-8;
inline constexpr double principal_angle = 1e-8;

inline constexpr double contour_agreement = 1e-8;
inline constexpr double contour_imag_residue = 1e-9;
inline constexpr double gap_collapse = 1e-12;
inline constexpr int contour_points = 256;

inline constexpr double symmetrizable = 1e-10;
inline constexpr double lemma_equality = 1e-9;
inline constexpr double mass_conservation = 1e-12;
inline constexpr double transport = 1e-12;
inline constexpr double distribution = 1e-12;
inline constexpr double negative_aggregate = 1e-12;
inline constexpr double monotone_uptick = 0.01;

inline constexpr std::size_t dense_limit = 2000;
inline constexpr std::size_t enumeration_limit = 12;

} // namespace dgc::tol
