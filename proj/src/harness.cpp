#include "dgc/harness.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace dgc {

namespace {

Matrix cluster_weights(const Graph& g, const ClusterSet& clusters) {
    return clusters.edges.select(g.weights().array(), 0.0).matrix();
}

Matrix rest_weights(const Graph& g, const ClusterSet& clusters) {
    return clusters.edges.select(0.0, g.weights().array()).matrix();
}

void require_beta(double beta) {
    if (!(beta > 0.0) || !std::isfinite(beta)) throw Error(ErrorCode::NonPositiveWeight, "beta must be positive");
}

CMatrix resolvent(const Matrix& l, complex z) {
    const Index n = l.rows();
    const CMatrix id = CMatrix::Identity(n, n);
    return solve(CMatrix(l.cast<complex>() - z * id), id);
}

} // namespace

Matrix scaled_laplacian(const Graph& g, const ClusterSet& clusters, Mode mode, double beta) {
    require_beta(beta);
    const Kind kind = laplacian_kind(mode);
    return assemble_laplacian(rest_weights(g, clusters), g.mass(), kind) +
           beta * assemble_laplacian(cluster_weights(g, clusters), g.mass(), kind);
}

void require_off_axis(complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || (z.imag() == 0.0 && z.real() >= 0.0))
        throw Error(ErrorCode::ZOnSpectrumAxis, "z must lie off the nonnegative real axis");
}

double resolvent_diff(const Graph& g, const ClusterSet& clusters, const CoarseningResult& coarse, double beta, complex z) {
    require_off_axis(z);
    const Matrix l = scaled_laplacian(g, clusters, coarse.mode, beta);
    const CMatrix full = resolvent(l, z);
    const CMatrix reduced = resolvent(coarse.reduced_laplacian.matrix, z);
    const CMatrix diff = full - coarse.up.cast<complex>() * reduced * coarse.down.cast<complex>();
    return weighted_opnorm(diff, g.mass());
}

double resolvent_diff(const Graph& g, const ClusterSet& clusters, Mode mode, double beta, complex z) {
    return resolvent_diff(g, clusters, coarsen(g, clusters, mode), beta, z);
}

double heat_diff(const Graph& g, const ClusterSet& clusters, const CoarseningResult& coarse, double beta, double t) {
    if (!(t > 0.0) || !std::isfinite(t)) throw Error(ErrorCode::NonPositiveTime, "t must be positive");
    const Matrix l = scaled_laplacian(g, clusters, coarse.mode, beta);
    const Matrix full = expm(-l, t);
    const Matrix reduced = expm(-coarse.reduced_laplacian.matrix, t);
    return weighted_opnorm(Matrix(full - coarse.up * reduced * coarse.down), g.mass());
}

double heat_diff(const Graph& g, const ClusterSet& clusters, Mode mode, double beta, double t) {
    return heat_diff(g, clusters, coarsen(g, clusters, mode), beta, t);
}

double GapReport::lemma_error() const {
    return std::abs(lemma_norm - lemma_bound);
}

GapReport gap_bound_check(const Graph& g, const ClusterSet& clusters, double beta, complex z) {
    require_off_axis(z);
    require_beta(beta);
    GapReport rep;
    const Matrix lc = beta * assemble_laplacian(cluster_weights(g, clusters), g.mass(), Kind::InDegree);
    rep.gap = spectral_gap(lc, g.mass());
    const Matrix p = riesz_from_kernels(kernels_in(g, clusters), clusters).matrix;
    const CMatrix diff = resolvent(lc, z) - p.cast<complex>() / (-z);
    rep.lemma_norm = weighted_opnorm(diff, g.mass());
    rep.lemma_bound = std::isfinite(rep.gap) ? 1.0 / std::abs(rep.gap - z) : 0.0;
    rep.full_diff = resolvent_diff(g, clusters, coarsen_undirected(g, clusters), beta, z);
    rep.constant = rep.full_diff * rep.gap;
    return rep;
}

double fit_rate(const std::vector<double>& betas, const std::vector<double>& diffs) {
    if (betas.size() < 3 || diffs.size() != betas.size())
        throw Error(ErrorCode::InvariantViolation, "rate fit needs three or more betas");
    const auto m = static_cast<Index>(betas.size()) - 1;
    Vector x(m), y(m);
    for (Index i = 0; i < m; ++i) {
        x(i) = betas[static_cast<std::size_t>(i + 1)];
        y(i) = diffs[static_cast<std::size_t>(i + 1)];
    }
    if (!(y.minCoeff() > 0.0)) return std::numeric_limits<double>::quiet_NaN();
    return loglog_slope(x, y);
}

SweepReport sweep(const Graph& g, const ClusterSet& clusters, Mode mode, const std::vector<double>& betas, complex z,
                  const std::function<double(double)>& scaling) {
    require_off_axis(z);
    if (betas.size() < 3) throw Error(ErrorCode::MalformedDocument, "a sweep needs three or more betas");
    for (std::size_t i = 0; i < betas.size(); ++i) {
        require_beta(betas[i]);
        if (i && !(betas[i] > betas[i - 1])) throw Error(ErrorCode::MalformedDocument, "betas must increase strictly");
    }
    SweepReport rep;
    rep.mode = mode;
    rep.z = z;
    rep.betas = betas;
    const CoarseningResult coarse = coarsen(g, clusters, mode);
    std::vector<double> scaled;
    for (double beta : betas) scaled.push_back(scaling ? scaling(beta) : beta);
    for (double s : scaled) rep.diffs.push_back(resolvent_diff(g, clusters, coarse, s, z));
    rep.fitted_slope = fit_rate(rep.betas, rep.diffs);
    rep.notes.push_back("rate fit excludes the smallest beta");
    if (scaling) rep.notes.push_back("nonlinear cluster scaling: no rate guarantee");

    if (mode == Mode::Undirected) {
        const double base = spectral_gap(assemble_laplacian(cluster_weights(g, clusters), g.mass(), Kind::InDegree), g.mass());
        std::vector<double> gaps;
        for (double s : scaled) gaps.push_back(s * base);
        rep.gap_values = std::move(gaps);
    }
    for (std::size_t i = 1; i < rep.diffs.size(); ++i) {
        if (rep.diffs[i] > rep.diffs[i - 1] * (1.0 + tol::monotone_uptick)) {
            std::ostringstream note;
            note << "difference grows between beta=" << betas[i - 1] << " and beta=" << betas[i];
            rep.notes.push_back(note.str());
        }
    }
    if (std::isnan(rep.fitted_slope))
        rep.notes.push_back("differences vanish, slope undefined");
    else if (rep.fitted_slope > -0.9)
        rep.notes.push_back("decay slower than 1/beta over this range");
    return rep;
}

SweepReport sweep(const Graph& g, const ClusterSet& clusters, Mode mode, const std::vector<double>& betas, complex z) {
    return sweep(g, clusters, mode, betas, z, nullptr);
}

} // namespace dgc
