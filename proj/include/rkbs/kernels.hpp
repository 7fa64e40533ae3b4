#pragma once

#include <Eigen/Core>
#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <variant>

#include "rkbs/centers.hpp"

namespace rkbs {

// ---------------------------------------------------------------------------
// Bivariate functions H(x, c) and the matrices built from them.
// ---------------------------------------------------------------------------

// H(x, c) = exp(-||x - c||^2 / sigma2). Symmetric in (x, c).
struct GaussianKernel {
    double sigma2 = 1.0;
};

// Locally adaptive bandwidths: H(x, c_i) = exp(-||theta_i .* (x - c_i)||^2 / 2)
// with one positive bandwidth vector theta_i per center. Generally asymmetric
// because theta is indexed by the center argument.
struct LabRbfKernel {
    Eigen::MatrixXd theta; // k x d, strictly positive
};

// Explicit lookup table so tests can inject exact H values. Row r of
// `inputs` is the point whose kernel row is `values.row(r)`; points are
// matched by exact equality.
struct TableKernel {
    Eigen::MatrixXd inputs; // m x d
    Eigen::MatrixXd values; // m x k
};

using KernelSpec = std::variant<GaussianKernel, LabRbfKernel, TableKernel>;

namespace detail {

inline Eigen::Index table_row(const TableKernel& table, const Eigen::VectorXd& x) {
    for (Eigen::Index r = 0; r < table.inputs.rows(); ++r)
        if (table.inputs.row(r).transpose() == x) return r;
    throw std::invalid_argument("point not present in table-backed kernel");
}

} // namespace detail

// H(x, c_j) for center j.
inline double eval_kernel(const KernelSpec& spec, const Eigen::VectorXd& x,
                          const CenterSet& centers, Eigen::Index j) {
    if (x.size() != centers.dim())
        throw std::invalid_argument("point dimension does not match centers");
    if (j < 0 || j >= centers.count())
        throw std::invalid_argument("center index out of range");
    if (const auto* g = std::get_if<GaussianKernel>(&spec)) {
        const double d2 = (x.transpose() - centers.points.row(j)).squaredNorm();
        return std::exp(-d2 / g->sigma2);
    }
    if (const auto* lab = std::get_if<LabRbfKernel>(&spec)) {
        if (lab->theta.rows() != centers.count() || lab->theta.cols() != centers.dim())
            throw std::invalid_argument("bandwidth matrix must be k x d");
        const Eigen::ArrayXd diff = (x.transpose() - centers.points.row(j)).array();
        const double s = (lab->theta.row(j).array() * diff).matrix().squaredNorm();
        return std::exp(-0.5 * s);
    }
    const auto& table = std::get<TableKernel>(spec);
    return table.values(detail::table_row(table, x), j);
}

// H(x, y) for arbitrary points. For the bandwidth-indexed kernel, y must be
// one of the centers (exact match) since theta is attached to the second
// argument.
inline double adjoint_kernel_eval(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                                  const CenterSet& centers, const KernelSpec& spec) {
    if (const auto* g = std::get_if<GaussianKernel>(&spec))
        return std::exp(-(x - y).squaredNorm() / g->sigma2);
    for (Eigen::Index j = 0; j < centers.count(); ++j)
        if (centers.points.row(j).transpose() == y) return eval_kernel(spec, x, centers, j);
    throw std::invalid_argument("second argument must be a center for this kernel");
}

// Entry-wise kernel matrix over (rows of X) x (centers).
struct SimilarityMatrix {
    Eigen::MatrixXd entries; // n x k

    Eigen::Index rows() const { return entries.rows(); }
    Eigen::Index cols() const { return entries.cols(); }
};

inline SimilarityMatrix assemble_similarity(const KernelSpec& spec, const Eigen::MatrixXd& X,
                                            const CenterSet& centers) {
    if (X.cols() != centers.dim())
        throw std::invalid_argument("input dimension does not match centers");
    Eigen::MatrixXd H(X.rows(), centers.count());
    for (Eigen::Index i = 0; i < X.rows(); ++i) {
        const Eigen::VectorXd xi = X.row(i).transpose();
        for (Eigen::Index j = 0; j < centers.count(); ++j) H(i, j) = eval_kernel(spec, xi, centers, j);
    }
    if (!H.allFinite())
        throw std::invalid_argument("non-finite kernel value while assembling similarity matrix");
    return SimilarityMatrix{std::move(H)};
}

// Coefficients of K(x,.) in the dual basis {H(c_i,.)}: beta_i = H(x, c_i).
// Pairing a primal coefficient vector against these realizes point evaluation.
inline Eigen::VectorXd canonical_kernel_dual_coeffs(const Eigen::VectorXd& x,
                                                    const CenterSet& centers,
                                                    const KernelSpec& spec) {
    Eigen::VectorXd beta(centers.count());
    for (Eigen::Index j = 0; j < centers.count(); ++j) beta(j) = eval_kernel(spec, x, centers, j);
    return beta;
}

// sigma_min / sigma_max of the k x k matrix [H(c_i, c_j)]. Values near zero
// mean the basis functions are close to linearly dependent; callers are
// expected to warn below ~1e-10 rather than abort.
inline double rank_diagnostic(const CenterSet& centers, const KernelSpec& spec) {
    const Eigen::MatrixXd gram = assemble_similarity(spec, centers.points, centers).entries;
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(gram);
    const double smax = svd.singularValues()(0);
    if (smax == 0.0) return 0.0;
    return svd.singularValues()(svd.singularValues().size() - 1) / smax;
}

// ---------------------------------------------------------------------------
// Bandwidth fitting for the adaptive kernel.
// ---------------------------------------------------------------------------

// d/dtheta of L(alpha, theta) = sum_i (sum_j alpha_j H(x_i, c_j; theta) - y_i)^2
// in closed form:
//   dL/dtheta_{jd} = -2 theta_{jd} alpha_j sum_i r_i H_ij (x_{id} - c_{jd})^2
// with residual r = H alpha - y.
inline Eigen::MatrixXd lab_bandwidth_gradient(const Eigen::MatrixXd& theta,
                                              const Eigen::MatrixXd& X, const Eigen::VectorXd& Y,
                                              const Eigen::VectorXd& alpha,
                                              const CenterSet& centers) {
    const KernelSpec spec = LabRbfKernel{theta};
    const Eigen::MatrixXd H = assemble_similarity(spec, X, centers).entries;
    const Eigen::VectorXd r = H * alpha - Y;
    Eigen::MatrixXd grad = Eigen::MatrixXd::Zero(theta.rows(), theta.cols());
    for (Eigen::Index j = 0; j < centers.count(); ++j) {
        for (Eigen::Index d = 0; d < centers.dim(); ++d) {
            double s = 0.0;
            for (Eigen::Index i = 0; i < X.rows(); ++i) {
                const double diff = X(i, d) - centers.points(j, d);
                s += r(i) * H(i, j) * diff * diff;
            }
            grad(j, d) = -2.0 * theta(j, d) * alpha(j) * s;
        }
    }
    return grad;
}

struct BandwidthFit {
    LabRbfKernel kernel;
    int clamp_events = 0; // entries that were driven non-positive and floored
};

inline constexpr double kBandwidthFloor = 1e-8;

// `steps` plain gradient-descent updates theta <- theta - lr * dL/dtheta with
// alpha held fixed. Entries pushed to or below zero are clamped at a small
// positive floor and counted.
inline BandwidthFit fit_lab_bandwidths(const LabRbfKernel& kernel, const Eigen::MatrixXd& X,
                                       const Eigen::VectorXd& Y, const Eigen::VectorXd& alpha,
                                       const CenterSet& centers, int steps, double theta_lr) {
    if (steps < 0) throw std::invalid_argument("steps must be >= 0");
    if (!(theta_lr > 0.0)) throw std::invalid_argument("theta_lr must be positive");
    if ((kernel.theta.array() <= 0.0).any())
        throw std::invalid_argument("bandwidths must start strictly positive");
    BandwidthFit fit{kernel, 0};
    for (int s = 0; s < steps; ++s) {
        const Eigen::MatrixXd grad = lab_bandwidth_gradient(fit.kernel.theta, X, Y, alpha, centers);
        Eigen::MatrixXd next = fit.kernel.theta - theta_lr * grad;
        for (Eigen::Index j = 0; j < next.rows(); ++j)
            for (Eigen::Index d = 0; d < next.cols(); ++d)
                if (next(j, d) <= 0.0) {
                    next(j, d) = kBandwidthFloor;
                    ++fit.clamp_events;
                }
        fit.kernel.theta = std::move(next);
    }
    return fit;
}

} // namespace rkbs
