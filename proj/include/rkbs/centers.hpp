#pragma once

#include <Eigen/Core>
#include <stdexcept>

namespace rkbs {

// The fixed centers c_1..c_k that span the function space. Rows are points.
struct CenterSet {
    Eigen::MatrixXd points; // k x d

    Eigen::Index count() const { return points.rows(); }
    Eigen::Index dim() const { return points.cols(); }
    Eigen::VectorXd point(Eigen::Index i) const { return points.row(i).transpose(); }
};

// Validates k >= 1, finite coordinates, and pairwise-distinct points
// (exact equality check; duplicate centers would make the basis dependent).
inline CenterSet make_center_set(Eigen::MatrixXd points) {
    if (points.rows() < 1 || points.cols() < 1)
        throw std::invalid_argument("center set needs k >= 1 points of dimension >= 1");
    if (!points.allFinite())
        throw std::invalid_argument("center coordinates must be finite");
    for (Eigen::Index i = 0; i < points.rows(); ++i)
        for (Eigen::Index j = i + 1; j < points.rows(); ++j)
            if (points.row(i) == points.row(j))
                throw std::invalid_argument("centers must be pairwise distinct");
    return CenterSet{std::move(points)};
}

} // namespace rkbs
