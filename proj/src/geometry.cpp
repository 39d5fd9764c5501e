#include "pmeans/geometry.hpp"

#include <cmath>
#include <string>

#include "pmeans/errors.hpp"

namespace pmeans {

void validate(const hyper_rect& r) {
    if (r.edges.size() < 2)
        throw invalid_argument("hyperrectangle needs at least 2 edges, got " +
                               std::to_string(r.edges.size()));
    for (std::size_t i = 0; i < r.edges.size(); ++i)
        if (!std::isfinite(r.edges[i]) || !(r.edges[i] > 0.0))
            throw invalid_argument("edge[" + std::to_string(i) + "] = " +
                                   std::to_string(r.edges[i]) + " must be finite and > 0");
}

double hyperperimeter(const hyper_rect& r) {
    validate(r);
    double sum = 0.0;
    for (double e : r.edges) sum += e;
    return std::ldexp(sum, static_cast<int>(r.dimensions()) - 1);
}

double am_from_perimeter(const hyper_rect& r) {
    const double n = static_cast<double>(r.dimensions());
    return hyperperimeter(r) / std::ldexp(n, static_cast<int>(r.dimensions()) - 1);
}

double hypervolume(const hyper_rect& r) {
    validate(r);
    double prod = 1.0;
    for (double e : r.edges) prod *= e;
    return prod;
}

double gm_from_volume(const hyper_rect& r) {
    return std::pow(hypervolume(r), 1.0 / static_cast<double>(r.dimensions()));
}

double facet_volume_mean(const hyper_rect& r) {
    validate(r);
    const std::size_t n = r.dimensions();
    const double volume = hypervolume(r);
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double facet = volume / r.edges[j];
        if (!std::isfinite(facet) || volume == 0.0) {
            // Extreme magnitudes: rebuild the facet volume directly.
            facet = 1.0;
            for (std::size_t i = 0; i < n; ++i)
                if (i != j) facet *= r.edges[i];
        }
        sum += facet;
    }
    return sum / static_cast<double>(n);
}

double hm_from_ratio(const hyper_rect& r) {
    return hypervolume(r) / facet_volume_mean(r);
}

circle_construction build_circle_construction(double x1, double x2) {
    if (!std::isfinite(x1) || !(x1 > 0.0) || !std::isfinite(x2) || !(x2 > 0.0))
        throw domain_error("circle construction requires positive lengths, got " +
                           std::to_string(x1) + " and " + std::to_string(x2));
    circle_construction c;
    c.x1 = x1;
    c.x2 = x2;
    c.radius_oh = 0.5 * (x1 + x2);
    c.chord_hg = std::sqrt(x1 * x2);
    c.segment_hd = 2.0 * x1 * x2 / (x1 + x2);
    return c;
}

agm_result arithmetic_geometric_mean_trace(double a, double b) {
    if (!std::isfinite(a) || !(a > 0.0) || !std::isfinite(b) || !(b > 0.0))
        throw domain_error("arithmetic-geometric mean requires positive inputs, got " +
                           std::to_string(a) + " and " + std::to_string(b));
    agm_result r;
    while (std::fabs(a - b) > 1e-12 * std::max(a, b)) {
        const double next_a = 0.5 * (a + b);
        const double next_b = std::sqrt(a * b);
        a = next_a;
        b = next_b;
        ++r.iterations;
        if (r.iterations >= 64) break;
    }
    r.value = 0.5 * (a + b);
    return r;
}

double arithmetic_geometric_mean(double a, double b) {
    return arithmetic_geometric_mean_trace(a, b).value;
}

}  // namespace pmeans
