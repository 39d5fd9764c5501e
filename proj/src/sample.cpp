#include "pmeans/sample.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "pmeans/errors.hpp"

namespace pmeans {

weighted_sample weighted_sample::equal_weights(std::vector<double> values) {
    weighted_sample s;
    s.weights.assign(values.size(), 1.0);
    s.values = std::move(values);
    return s;
}

void validate(const weighted_sample& s) {
    if (s.values.empty()) throw invalid_sample("sample is empty");
    if (s.values.size() != s.weights.size())
        throw invalid_sample("sample has " + std::to_string(s.values.size()) + " values but " +
                             std::to_string(s.weights.size()) + " weights");
    double total = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!std::isfinite(s.values[i]))
            throw invalid_sample("value[" + std::to_string(i) + "] is not finite");
        if (!std::isfinite(s.weights[i]) || s.weights[i] < 0.0)
            throw invalid_sample("weight[" + std::to_string(i) + "] = " +
                                 std::to_string(s.weights[i]) + " must be finite and >= 0");
        total += s.weights[i];
    }
    if (!(total > 0.0)) throw invalid_sample("sample weights sum to zero");
}

double total_weight(const weighted_sample& s) noexcept {
    double total = 0.0;
    for (double w : s.weights) total += w;
    return total;
}

double min_weighted_value(const weighted_sample& s) {
    validate(s);
    double lo = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s.weights[i] > 0.0 && s.values[i] < lo) lo = s.values[i];
    return lo;
}

double max_weighted_value(const weighted_sample& s) {
    validate(s);
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s.weights[i] > 0.0 && s.values[i] > hi) hi = s.values[i];
    return hi;
}

}  // namespace pmeans
