#pragma once

#include "pmeans/sample.hpp"
#include "pmeans/transform.hpp"

namespace pmeans {

// Weighted arithmetic mean. Accepts any finite values.
double arithmetic_mean(const weighted_sample& s);

// Weighted geometric mean. Every value with positive weight must be > 0.
double geometric_mean(const weighted_sample& s);

// Weighted harmonic mean. Every value with positive weight must be > 0.
double harmonic_mean(const weighted_sample& s);

double mean_value(const weighted_sample& s, mean_kind k);

// Transform route to the same three means: pushes each value through t,
// averages arithmetically, and maps the result back. Agrees with the
// closed forms above to 1e-12 relative.
double quasi_arithmetic_mean(const weighted_sample& s, transform_kind t);

// Normalized weighted squared error in transform space,
// sum_i w_i (t(x_i) - a)^2 with the weights normalized to one.
double criterion_value(const weighted_sample& s, transform_kind t, double a);

// Minimizes criterion_value over a uniform grid of `a` spanning the
// transformed sample range, refines the bracket by golden section to 1e-10,
// and maps the minimizer back through the inverse transform. Serves as an
// independent cross-check of the closed forms. grid_points must be >= 3.
double brute_force_mean(const weighted_sample& s, transform_kind t, int grid_points);

}  // namespace pmeans
