#pragma once

#include <cstddef>
#include <vector>

namespace pmeans {

// A list of measurements with one non-negative weight per measurement.
// Weights may be counts, probabilities, or relevance scores; every consumer
// normalizes them by their total, so only ratios matter.
struct weighted_sample {
    std::vector<double> values;
    std::vector<double> weights;

    static weighted_sample equal_weights(std::vector<double> values);

    std::size_t size() const noexcept { return values.size(); }
};

// Throws invalid_sample unless: at least one entry, values and weights the
// same length, everything finite, all weights >= 0 with a positive total.
void validate(const weighted_sample& s);

double total_weight(const weighted_sample& s) noexcept;

// Minimum/maximum over entries carrying positive weight. The sample must be
// valid.
double min_weighted_value(const weighted_sample& s);
double max_weighted_value(const weighted_sample& s);

}  // namespace pmeans
