#include "pmeans/selection.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pmeans/errors.hpp"
#include "pmeans/means.hpp"

namespace pmeans {

namespace {

// Squared spread of the measurements, the shared normalization constant of
// all attraction kernels.
double squared_range(const weighted_sample& s) {
    const auto [lo, hi] = std::minmax_element(s.values.begin(), s.values.end());
    const double range = *hi - *lo;
    return range * range;
}

double squared_distance(double a, double b) {
    const double d = a - b;
    return d * d;
}

}  // namespace

const char* name(attraction_kernel k) {
    return k == attraction_kernel::cauchy ? "cauchy" : "gaussian";
}

attraction_kernel attraction_kernel_from_name(std::string_view name) {
    if (name == "cauchy") return attraction_kernel::cauchy;
    if (name == "gaussian") return attraction_kernel::gaussian;
    throw invalid_argument("unknown attraction kernel '" + std::string(name) + "'");
}

double cauchy_attraction(const weighted_sample& s, mean_kind k, double x) {
    validate(s);
    const double mu = mean_value(s, k);
    return squared_range(s) / (squared_distance(x, mu) + 1.0);
}

double weighted_attraction_cauchy(const weighted_sample& s, mean_kind k, std::size_t i) {
    validate(s);
    if (i >= s.size())
        throw invalid_argument("sample index " + std::to_string(i) + " out of range (size " +
                               std::to_string(s.size()) + ")");
    const double mu = mean_value(s, k);
    return squared_range(s) / (s.weights[i] * squared_distance(s.values[i], mu) + 1.0);
}

double weighted_attraction_gaussian(const weighted_sample& s, mean_kind k, std::size_t i) {
    validate(s);
    if (i >= s.size())
        throw invalid_argument("sample index " + std::to_string(i) + " out of range (size " +
                               std::to_string(s.size()) + ")");
    const double mu = mean_value(s, k);
    return squared_range(s) * std::exp(-s.weights[i] * squared_distance(s.values[i], mu));
}

double mean_velocity(mean_kind k, double x, double w) {
    if (!std::isfinite(x) || !(x > 0.0) || !(x < 1.0))
        throw invalid_argument("velocity requires 0 < x < 1, got " + std::to_string(x));
    if (!std::isfinite(w) || !(w > 0.0) || !(w <= 1.0))
        throw invalid_argument("velocity requires 0 < w <= 1, got " + std::to_string(w));
    weighted_sample two_point;
    two_point.values = {1.0, x};
    two_point.weights = {1.0 - w, w};
    const double mu = mean_value(two_point, k);
    return squared_distance(mu, x);
}

attraction_profile make_attraction_profile(const weighted_sample& s, mean_kind k) {
    attraction_profile profile;
    profile.kind = k;
    profile.mean = mean_value(s, k);
    const double c = squared_range(s);
    profile.points.reserve(s.size());
    for (double x : s.values)
        profile.points.emplace_back(x, c / (squared_distance(x, profile.mean) + 1.0));
    return profile;
}

attraction_profile make_weighted_attraction_profile(const weighted_sample& s, mean_kind k,
                                                    attraction_kernel kernel) {
    attraction_profile profile;
    profile.kind = k;
    profile.mean = mean_value(s, k);
    const double c = squared_range(s);
    profile.points.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double d2 = squared_distance(s.values[i], profile.mean);
        const double value = kernel == attraction_kernel::cauchy
                                 ? c / (s.weights[i] * d2 + 1.0)
                                 : c * std::exp(-s.weights[i] * d2);
        profile.points.emplace_back(s.values[i], value);
    }
    return profile;
}

velocity_curve make_velocity_curve(mean_kind k, double x, double w_step) {
    if (!(w_step > 0.0) || !(w_step <= 1.0))
        throw invalid_argument("velocity weight step must be in (0, 1], got " +
                               std::to_string(w_step));
    velocity_curve curve;
    curve.kind = k;
    curve.x = x;
    const int count = static_cast<int>(std::floor(1.0 / w_step + 1e-9));
    curve.samples.reserve(count);
    for (int j = 1; j <= count; ++j) {
        const double w = std::min(j * w_step, 1.0);
        curve.samples.emplace_back(w, mean_velocity(k, x, w));
    }
    return curve;
}

weighted_sample uniform_grid_sample(double lo, double hi, double step) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(hi > lo))
        throw invalid_argument("grid requires finite bounds with hi > lo");
    if (!(step > 0.0)) throw invalid_argument("grid step must be > 0");
    const int count = static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> values;
    values.reserve(count);
    for (int i = 0; i < count; ++i) values.push_back(lo + i * step);
    // Snap the final point onto the bound when the step divides the span.
    if (std::fabs(values.back() - hi) < 0.5 * step) values.back() = hi;
    return weighted_sample::equal_weights(std::move(values));
}

}  // namespace pmeans
