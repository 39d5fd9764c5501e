#pragma once

#include <string>
#include <vector>

#include "pmeans/ellipse.hpp"
#include "pmeans/geometry.hpp"
#include "pmeans/selection.hpp"

namespace pmeans {

// Self-contained SVG documents with deterministic two-decimal coordinates.
// Curves follow one line-style convention: arithmetic solid, geometric
// dash-dot, harmonic dotted.

// Two-value construction: circle of diameter x1 + x2 with the radius OH,
// chord HG, and segment HD marked and labeled.
std::string circle_construction_svg(const circle_construction& c);

// Attraction profiles as polylines over a shared axis box.
std::string attraction_svg(const std::vector<attraction_profile>& profiles);

// Velocity curves over w in (0, 1].
std::string velocity_svg(const std::vector<velocity_curve>& curves);

// Scatter cloud with the fitted boundary curves and their centers.
std::string ellipse_svg(const point_cloud& cloud, const std::vector<ellipse_fit>& fits);

}  // namespace pmeans
