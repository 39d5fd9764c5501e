#include "pmeans/means.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>
#include <tuple>
#include <vector>

#include "pmeans/errors.hpp"

namespace pmeans {

namespace {

// Accumulation happens in a canonical (value, weight) order so that any
// permutation of the input pairs produces bit-identical results.
std::vector<std::size_t> canonical_order(const weighted_sample& s) {
    std::vector<std::size_t> idx(s.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&s](std::size_t a, std::size_t b) {
        return std::tie(s.values[a], s.weights[a]) < std::tie(s.values[b], s.weights[b]);
    });
    return idx;
}

void require_positive_weighted(const weighted_sample& s, const char* what) {
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s.weights[i] > 0.0 && !(s.values[i] > 0.0))
            throw domain_error(std::string(what) + " requires positive values, value[" +
                               std::to_string(i) + "] = " + std::to_string(s.values[i]));
}

// Transformed values and normalized weights of the positively weighted
// entries, in canonical order.
struct transformed_sample {
    std::vector<double> y;
    std::vector<double> w;  // sums to 1
};

// Positive weights accumulated in canonical order, so that the total (and
// everything divided by it) is permutation independent bit for bit.
double canonical_total(const weighted_sample& s, const std::vector<std::size_t>& order) {
    double total = 0.0;
    for (std::size_t i : order)
        if (s.weights[i] > 0.0) total += s.weights[i];
    return total;
}

transformed_sample transform_entries(const weighted_sample& s, transform_kind t) {
    validate(s);
    if (t != transform_kind::identity) require_positive_weighted(s, "transformed mean");
    const std::vector<std::size_t> order = canonical_order(s);
    const double total = canonical_total(s, order);
    transformed_sample out;
    for (std::size_t i : order) {
        if (s.weights[i] <= 0.0) continue;
        out.y.push_back(forward(t, s.values[i]));
        out.w.push_back(s.weights[i] / total);
    }
    return out;
}

double golden_section_min(const std::function<double(double)>& f, double lo, double hi,
                          double tol) {
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - ratio * (hi - lo);
    double d = lo + ratio * (hi - lo);
    double fc = f(c);
    double fd = f(d);
    while (hi - lo > tol) {
        if (fc < fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - ratio * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + ratio * (hi - lo);
            fd = f(d);
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double arithmetic_mean(const weighted_sample& s) {
    validate(s);
    const std::vector<std::size_t> order = canonical_order(s);
    const double total = canonical_total(s, order);
    double acc = 0.0;
    for (std::size_t i : order) {
        if (s.weights[i] <= 0.0) continue;
        acc += s.weights[i] * s.values[i];
    }
    return acc / total;
}

double geometric_mean(const weighted_sample& s) {
    validate(s);
    require_positive_weighted(s, "geometric mean");
    const std::vector<std::size_t> order = canonical_order(s);
    const double total = canonical_total(s, order);
    double acc = 1.0;
    for (std::size_t i : order) {
        if (s.weights[i] <= 0.0) continue;
        acc *= std::pow(s.values[i], s.weights[i] / total);
    }
    return acc;
}

double harmonic_mean(const weighted_sample& s) {
    validate(s);
    require_positive_weighted(s, "harmonic mean");
    const std::vector<std::size_t> order = canonical_order(s);
    const double total = canonical_total(s, order);
    double acc = 0.0;
    for (std::size_t i : order) {
        if (s.weights[i] <= 0.0) continue;
        acc += s.weights[i] / s.values[i];
    }
    return total / acc;
}

double mean_value(const weighted_sample& s, mean_kind k) {
    switch (k) {
        case mean_kind::geometric: return geometric_mean(s);
        case mean_kind::harmonic: return harmonic_mean(s);
        case mean_kind::arithmetic: break;
    }
    return arithmetic_mean(s);
}

double quasi_arithmetic_mean(const weighted_sample& s, transform_kind t) {
    const transformed_sample ts = transform_entries(s, t);
    double acc = 0.0;
    for (std::size_t i = 0; i < ts.y.size(); ++i) acc += ts.w[i] * ts.y[i];
    return inverse(t, acc);
}

double criterion_value(const weighted_sample& s, transform_kind t, double a) {
    const transformed_sample ts = transform_entries(s, t);
    double acc = 0.0;
    for (std::size_t i = 0; i < ts.y.size(); ++i) {
        const double d = ts.y[i] - a;
        acc += ts.w[i] * d * d;
    }
    return acc;
}

double brute_force_mean(const weighted_sample& s, transform_kind t, int grid_points) {
    if (grid_points < 3)
        throw invalid_argument("brute_force_mean needs at least 3 grid points, got " +
                               std::to_string(grid_points));
    const transformed_sample ts = transform_entries(s, t);
    const auto [lo_it, hi_it] = std::minmax_element(ts.y.begin(), ts.y.end());
    const double lo = *lo_it;
    const double hi = *hi_it;
    if (lo == hi) return inverse(t, lo);

    const auto criterion = [&ts](double a) {
        double acc = 0.0;
        for (std::size_t i = 0; i < ts.y.size(); ++i) {
            const double d = ts.y[i] - a;
            acc += ts.w[i] * d * d;
        }
        return acc;
    };

    const double step = (hi - lo) / (grid_points - 1);
    int best = 0;
    double best_value = criterion(lo);
    for (int j = 1; j < grid_points; ++j) {
        const double value = criterion(lo + j * step);
        if (value < best_value) {
            best_value = value;
            best = j;
        }
    }
    const double bracket_lo = std::max(lo, lo + (best - 1) * step);
    const double bracket_hi = std::min(hi, lo + (best + 1) * step);
    return inverse(t, golden_section_min(criterion, bracket_lo, bracket_hi, 1e-10));
}

}  // namespace pmeans
