#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "pmeans/sample.hpp"
#include "pmeans/transform.hpp"

namespace pmeans {

enum class attraction_kernel { cauchy, gaussian };

const char* name(attraction_kernel k);
attraction_kernel attraction_kernel_from_name(std::string_view name);

// Attraction of each measurement toward one mean of the sample.
struct attraction_profile {
    mean_kind kind = mean_kind::arithmetic;
    double mean = 0;
    std::vector<std::pair<double, double>> points;  // (x, attraction)
};

// Squared gap between a two-point weighted mean and the weighted point,
// sampled over the weight.
struct velocity_curve {
    mean_kind kind = mean_kind::arithmetic;
    double x = 0;
    std::vector<std::pair<double, double>> samples;  // (w, velocity)
};

// range^2 / (d^2(x, mean) + 1), where range is the spread of the sample's
// values and d^2 the squared distance. Decreasing in |x - mean|, maximal at
// the mean, always positive.
double cauchy_attraction(const weighted_sample& s, mean_kind k, double x);

// Per-measurement attraction with the measurement's own weight inside the
// kernel. Weights enter unnormalized so that unit weights reduce the Cauchy
// form to cauchy_attraction. The constant factor is the same squared range.
double weighted_attraction_cauchy(const weighted_sample& s, mean_kind k, std::size_t i);
double weighted_attraction_gaussian(const weighted_sample& s, mean_kind k, std::size_t i);

// (mean({1, x}, {1-w, w}) - x)^2 for 0 < x < 1 and 0 < w <= 1.
double mean_velocity(mean_kind k, double x, double w);

// Profile of cauchy_attraction evaluated at the sample's own values.
attraction_profile make_attraction_profile(const weighted_sample& s, mean_kind k);

// Profile of the weighted attraction at every sample index.
attraction_profile make_weighted_attraction_profile(const weighted_sample& s, mean_kind k,
                                                    attraction_kernel kernel);

// Velocity sampled at w = w_step, 2*w_step, ..., 1.
velocity_curve make_velocity_curve(mean_kind k, double x, double w_step);

// Equally weighted sample x = lo, lo + step, ..., hi.
weighted_sample uniform_grid_sample(double lo, double hi, double step);

}  // namespace pmeans
