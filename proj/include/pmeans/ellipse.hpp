#pragma once

#include <array>
#include <vector>

#include "pmeans/transform.hpp"

namespace pmeans {

struct point2 {
    double x = 0;
    double y = 0;
};

// 2D scatter points. Fitting needs at least three non-collinear points;
// log/reciprocal fits additionally need strictly positive coordinates.
struct point_cloud {
    std::vector<point2> points;

    std::size_t size() const noexcept { return points.size(); }
};

using vec2 = std::array<double, 2>;

struct eig2 {
    std::array<double, 2> values;   // sorted descending
    std::array<vec2, 2> vectors;    // orthonormal, sign: first nonzero component > 0
};

// Closed-form eigendecomposition of the symmetric matrix
// [[cxx, cxy], [cxy, cyy]]. Repeated eigenvalues fall back to the
// coordinate axes.
eig2 eig2x2_sym(double cxx, double cxy, double cyy);

struct ellipse_fit {
    mean_kind kind = mean_kind::arithmetic;
    point2 center;                    // original space; the chosen mean per coordinate
    point2 center_transformed;        // coordinate-wise arithmetic mean in transform space
    std::array<vec2, 2> directions;   // covariance eigenvectors in transform space
    std::array<double, 2> spreads;    // covariance eigenvalues, descending
    std::vector<point2> boundary;     // closed polyline in original space (first == last)
};

// Transforms the coordinates per the mean's map, estimates center and
// covariance there, and transports the level curve at Mahalanobis radius
// `scale` back point by point. The transported curve is an exact ellipse
// only for the identity map.
//
// Throws invalid_argument for fewer than three points, scale <= 0, or
// boundary_points < 64; domain_error for coordinates outside the transform
// domain (or a boundary that leaves the reciprocal map's image);
// degenerate_cloud when the covariance is singular beyond 1e-12 relative.
ellipse_fit fit_ellipse(const point_cloud& cloud, mean_kind k, double scale = 2.0,
                        int boundary_points = 64);

}  // namespace pmeans
