#include "pmeans/predictor.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "pmeans/errors.hpp"

namespace pmeans {

empirical_distribution empirical_distribution::from_counts(std::vector<double> outcomes,
                                                           std::vector<double> counts) {
    if (outcomes.size() != counts.size())
        throw invalid_distribution("outcome and count lists differ in length");
    if (outcomes.empty()) throw invalid_distribution("empty distribution");
    double total = 0;
    for (double c : counts) {
        if (!std::isfinite(c) || c < 0)
            throw invalid_distribution("counts must be finite and non-negative");
        total += c;
    }
    if (!(total > 0)) throw invalid_distribution("counts sum to zero");
    empirical_distribution d;
    d.outcomes = std::move(outcomes);
    d.probabilities.reserve(counts.size());
    for (double c : counts) d.probabilities.push_back(c / total);
    validate(d);
    return d;
}

void validate(const empirical_distribution& d) {
    if (d.outcomes.empty()) throw invalid_distribution("empty distribution");
    if (d.outcomes.size() != d.probabilities.size())
        throw invalid_distribution("outcome and probability lists differ in length");
    double total = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (!std::isfinite(d.outcomes[i]) || d.outcomes[i] <= 0)
            throw invalid_distribution("outcome " + std::to_string(d.outcomes[i]) +
                                       " is not a positive finite number");
        if (!std::isfinite(d.probabilities[i]) || d.probabilities[i] < 0)
            throw invalid_distribution("probability " + std::to_string(d.probabilities[i]) +
                                       " is not a finite non-negative number");
        for (std::size_t j = i + 1; j < d.size(); ++j)
            if (d.outcomes[i] == d.outcomes[j])
                throw invalid_distribution("duplicate outcome " + std::to_string(d.outcomes[i]));
        total += d.probabilities[i];
    }
    if (std::fabs(total - 1.0) > 1e-6)
        throw invalid_distribution("probabilities sum to " + std::to_string(total) +
                                   ", expected 1");
}

double gain(const gain_spec& spec, double predicted, double outcome) {
    const double gap = forward(spec.transform, predicted) - forward(spec.transform, outcome);
    return spec.base - spec.penalty * gap * gap;
}

double expected_return(const gain_spec& spec, const empirical_distribution& dist,
                       double predicted) {
    validate(dist);
    double r = 0;
    for (std::size_t i = 0; i < dist.size(); ++i)
        r += dist.probabilities[i] * gain(spec, predicted, dist.outcomes[i]);
    return r;
}

prediction best_prediction(const gain_spec& spec, const empirical_distribution& dist) {
    validate(dist);
    double weighted = 0;
    for (std::size_t i = 0; i < dist.size(); ++i)
        weighted += dist.probabilities[i] * forward(spec.transform, dist.outcomes[i]);
    prediction best;
    best.value = inverse(spec.transform, weighted);
    best.expected_return = expected_return(spec, dist, best.value);
    return best;
}

}  // namespace pmeans
