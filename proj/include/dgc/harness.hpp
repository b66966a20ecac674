#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dgc/coarsen.hpp"

namespace dgc {

// L_{E \ E~} + beta * L_{E~} in the Laplacian kind of the mode.
Matrix scaled_laplacian(const Graph& g, const ClusterSet& clusters, Mode mode, double beta);

void require_off_axis(complex z);

double resolvent_diff(const Graph& g, const ClusterSet& clusters, const CoarseningResult& coarse, double beta, complex z);
double resolvent_diff(const Graph& g, const ClusterSet& clusters, Mode mode, double beta, complex z);

double heat_diff(const Graph& g, const ClusterSet& clusters, const CoarseningResult& coarse, double beta, double t);
double heat_diff(const Graph& g, const ClusterSet& clusters, Mode mode, double beta, double t);

struct GapReport {
    double gap = 0;          // spectral gap of beta * L_{E^}
    double lemma_norm = 0;   // ||(L_{E^,beta} - z)^{-1} - P/(-z)||
    double lemma_bound = 0;  // 1/|gap - z|
    double full_diff = 0;    // full resolvent difference
    double constant = 0;     // full_diff * gap
    double lemma_error() const;
};

GapReport gap_bound_check(const Graph& g, const ClusterSet& clusters, double beta, complex z);

struct SweepReport {
    Mode mode = Mode::Undirected;
    complex z{-1.0, 0.0};
    std::vector<double> betas;
    std::vector<double> diffs;
    double fitted_slope = 0;
    std::optional<std::vector<double>> gap_values;
    std::vector<std::string> notes;
};

// Least squares fit on log-log, dropping the smallest beta.
double fit_rate(const std::vector<double>& betas, const std::vector<double>& diffs);

SweepReport sweep(const Graph& g, const ClusterSet& clusters, Mode mode, const std::vector<double>& betas, complex z);
// Cluster weights scaled by scaling(beta) instead of beta; the report carries a "no rate guarantee" note.
SweepReport sweep(const Graph& g, const ClusterSet& clusters, Mode mode, const std::vector<double>& betas, complex z,
                  const std::function<double(double)>& scaling);

} // namespace dgc
