#pragma once

#include <vector>

#include "pmeans/transform.hpp"

namespace pmeans {

// Discrete outcome distribution: distinct positive outcomes with
// probabilities summing to one.
struct empirical_distribution {
    std::vector<double> outcomes;
    std::vector<double> probabilities;

    static empirical_distribution from_counts(std::vector<double> outcomes,
                                              std::vector<double> counts);

    std::size_t size() const noexcept { return outcomes.size(); }
};

void validate(const empirical_distribution& d);

// Quadratic gain in transform space: base - penalty * (T(x) - T(n))^2.
struct gain_spec {
    double base = 1000.0;
    double penalty = 30.0;
    transform_kind transform = transform_kind::identity;
};

// Payoff when `predicted` is announced and `outcome` happens.
double gain(const gain_spec& spec, double predicted, double outcome);

// Expectation of the gain over the outcome distribution, as a function of
// the prediction. Concave in T(x).
double expected_return(const gain_spec& spec, const empirical_distribution& dist,
                       double predicted);

struct prediction {
    double value = 0;            // maximizer of the expected return
    double expected_return = 0;  // return achieved there
};

// Closed-form maximizer: the inverse transform of the probability-weighted
// average of the transformed outcomes.
prediction best_prediction(const gain_spec& spec, const empirical_distribution& dist);

}  // namespace pmeans
