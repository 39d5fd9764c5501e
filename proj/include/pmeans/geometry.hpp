#pragma once

#include <vector>

namespace pmeans {

// Hyperrectangle described by its edge lengths. Needs at least two strictly
// positive edges.
struct hyper_rect {
    std::vector<double> edges;

    std::size_t dimensions() const noexcept { return edges.size(); }
};

void validate(const hyper_rect& r);

// Total edge length: 2^(n-1) times the sum of the edges.
double hyperperimeter(const hyper_rect& r);

// Arithmetic mean of the edges recovered from the hyperperimeter.
double am_from_perimeter(const hyper_rect& r);

// Product of the edges.
double hypervolume(const hyper_rect& r);

// Geometric mean of the edges recovered as the n-th root of the hypervolume.
double gm_from_volume(const hyper_rect& r);

// Arithmetic mean of the n distinct facet volumes (each facet drops one
// edge; opposite facets are equal, so n values cover all 2n facets).
double facet_volume_mean(const hyper_rect& r);

// Harmonic mean of the edges recovered as hypervolume / facet_volume_mean.
double hm_from_ratio(const hyper_rect& r);

// Classical two-value picture: a circle of diameter x1 + x2 in which the
// radius, the half-chord through the diameter split, and the projection of
// that half-chord onto the radius realize the three means.
struct circle_construction {
    double x1 = 0;
    double x2 = 0;
    double radius_oh = 0;   // arithmetic mean
    double chord_hg = 0;    // geometric mean
    double segment_hd = 0;  // harmonic mean
};

// Throws domain_error unless x1, x2 > 0.
circle_construction build_circle_construction(double x1, double x2);

struct agm_result {
    double value = 0;
    int iterations = 0;
};

// Common limit of the coupled iteration (a, b) <- ((a+b)/2, sqrt(a*b)),
// stopped when |a - b| <= 1e-12 * max(a, b). Throws domain_error unless
// both inputs are > 0.
agm_result arithmetic_geometric_mean_trace(double a, double b);
double arithmetic_geometric_mean(double a, double b);

}  // namespace pmeans
