#include "pmeans/ellipse.hpp"

#include <cmath>
#include <string>

#include "pmeans/errors.hpp"

namespace pmeans {

eig2 eig2x2_sym(double cxx, double cxy, double cyy) {
    eig2 e;
    const double tr = cxx + cyy;
    const double det = cxx * cyy - cxy * cxy;
    // Stable discriminant form: ((cxx - cyy)/2)^2 + cxy^2 stays non-negative
    // even when tr^2/4 - det underflows.
    const double half_gap = 0.5 * (cxx - cyy);
    const double disc = std::sqrt(half_gap * half_gap + cxy * cxy);
    e.values = {0.5 * tr + disc, 0.5 * tr - disc};
    // Guard the smaller root against cancellation when det is well-scaled.
    if (disc > 0 && std::fabs(e.values[0]) > 0) e.values[1] = det / e.values[0];

    if (cxy == 0.0 && half_gap == 0.0) {
        e.vectors = {vec2{1.0, 0.0}, vec2{0.0, 1.0}};
        return e;
    }
    for (int i = 0; i < 2; ++i) {
        // (A - lambda I) v = 0; pick the better-conditioned row.
        vec2 v;
        const double r0x = cxx - e.values[i];
        const double r1y = cyy - e.values[i];
        if (std::fabs(r0x) + std::fabs(cxy) >= std::fabs(cxy) + std::fabs(r1y))
            v = {-cxy, r0x};
        else
            v = {r1y, -cxy};
        double norm = std::hypot(v[0], v[1]);
        if (norm == 0.0) {
            // lambda matched a diagonal entry exactly; the axis itself works.
            v = i == 0 ? (cxx >= cyy ? vec2{1.0, 0.0} : vec2{0.0, 1.0})
                       : (cxx >= cyy ? vec2{0.0, 1.0} : vec2{1.0, 0.0});
            norm = 1.0;
        }
        v[0] /= norm;
        v[1] /= norm;
        if (v[0] < 0 || (v[0] == 0 && v[1] < 0)) {
            v[0] = -v[0];
            v[1] = -v[1];
        }
        e.vectors[i] = v;
    }
    return e;
}

namespace {

point2 transform_point(transform_kind t, const point2& p, std::size_t index) {
    if (t != transform_kind::identity && (p.x <= 0 || p.y <= 0))
        throw domain_error("point " + std::to_string(index) + " (" + std::to_string(p.x) + ", " +
                           std::to_string(p.y) + ") is outside the transform domain");
    return {forward(t, p.x), forward(t, p.y)};
}

}  // namespace

ellipse_fit fit_ellipse(const point_cloud& cloud, mean_kind k, double scale,
                        int boundary_points) {
    const std::size_t m = cloud.size();
    if (m < 3)
        throw invalid_argument("ellipse fit needs at least 3 points, got " + std::to_string(m));
    if (!std::isfinite(scale) || scale <= 0)
        throw invalid_argument("scale must be positive, got " + std::to_string(scale));
    if (boundary_points < 64)
        throw invalid_argument("boundary needs at least 64 points, got " +
                               std::to_string(boundary_points));
    for (std::size_t i = 0; i < m; ++i)
        if (!std::isfinite(cloud.points[i].x) || !std::isfinite(cloud.points[i].y))
            throw invalid_argument("point " + std::to_string(i) + " is not finite");

    const transform_kind t = transform_for(k);
    std::vector<point2> mapped;
    mapped.reserve(m);
    for (std::size_t i = 0; i < m; ++i) mapped.push_back(transform_point(t, cloud.points[i], i));

    point2 mu{0, 0};
    for (const auto& p : mapped) {
        mu.x += p.x;
        mu.y += p.y;
    }
    mu.x /= static_cast<double>(m);
    mu.y /= static_cast<double>(m);

    double cxx = 0, cxy = 0, cyy = 0;
    for (const auto& p : mapped) {
        const double dx = p.x - mu.x;
        const double dy = p.y - mu.y;
        cxx += dx * dx;
        cxy += dx * dy;
        cyy += dy * dy;
    }
    const double denom = static_cast<double>(m - 1);
    cxx /= denom;
    cxy /= denom;
    cyy /= denom;

    const eig2 e = eig2x2_sym(cxx, cxy, cyy);
    if (!(e.values[1] > 1e-12 * e.values[0]))
        throw degenerate_cloud("points are collinear in transform space (eigenvalues " +
                               std::to_string(e.values[0]) + ", " + std::to_string(e.values[1]) +
                               ")");

    ellipse_fit fit;
    fit.kind = k;
    fit.center_transformed = mu;
    fit.center = {inverse(t, mu.x), inverse(t, mu.y)};
    fit.directions = e.vectors;
    fit.spreads = e.values;

    const double a = scale * std::sqrt(e.values[0]);
    const double b = scale * std::sqrt(e.values[1]);
    fit.boundary.reserve(static_cast<std::size_t>(boundary_points) + 1);
    const double two_pi = 8.0 * std::atan(1.0);
    for (int i = 0; i < boundary_points; ++i) {
        const double theta = two_pi * i / boundary_points;
        const double u = a * std::cos(theta);
        const double v = b * std::sin(theta);
        const double px = mu.x + u * e.vectors[0][0] + v * e.vectors[1][0];
        const double py = mu.y + u * e.vectors[0][1] + v * e.vectors[1][1];
        if (t == transform_kind::reciprocal && (px <= 0 || py <= 0))
            throw domain_error("boundary leaves the reciprocal map's image; reduce scale");
        fit.boundary.push_back({inverse(t, px), inverse(t, py)});
    }
    fit.boundary.push_back(fit.boundary.front());
    return fit;
}

}  // namespace pmeans
