#include "pmeans/basket.hpp"

#include <cmath>
#include <string>

#include "pmeans/errors.hpp"
#include "pmeans/means.hpp"
#include "pmeans/sample.hpp"

namespace pmeans {

void validate(const index_basket& b) {
    if (b.entries.empty()) throw invalid_basket("empty basket");
    double total = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        const auto& e = b.entries[i];
        if (e.category.empty()) throw invalid_basket("entry " + std::to_string(i) + " has no category");
        if (!std::isfinite(e.weight) || e.weight <= 0 || e.weight > 1)
            throw invalid_basket("weight of '" + e.category + "' must be in (0, 1], got " +
                                 std::to_string(e.weight));
        if (!std::isfinite(e.sub_index) || e.sub_index <= 0)
            throw invalid_basket("sub-index of '" + e.category + "' must be positive, got " +
                                 std::to_string(e.sub_index));
        for (std::size_t j = i + 1; j < b.size(); ++j)
            if (e.category == b.entries[j].category)
                throw invalid_basket("duplicate category '" + e.category + "'");
        total += e.weight;
    }
    if (std::fabs(total - 1.0) > 1e-6)
        throw invalid_basket("weights sum to " + std::to_string(total) + ", expected 1");
}

namespace {

weighted_sample to_sample(const index_basket& b) {
    weighted_sample s;
    s.values.reserve(b.size());
    s.weights.reserve(b.size());
    for (const auto& e : b.entries) {
        s.values.push_back(e.sub_index);
        s.weights.push_back(e.weight);
    }
    return s;
}

}  // namespace

double aggregate_index(const index_basket& b, mean_kind k) {
    validate(b);
    return mean_value(to_sample(b), k);
}

index_report summarize(const index_basket& b) {
    validate(b);
    const weighted_sample s = to_sample(b);
    index_report r;
    r.arithmetic = mean_value(s, mean_kind::arithmetic);
    r.geometric = mean_value(s, mean_kind::geometric);
    r.harmonic = mean_value(s, mean_kind::harmonic);
    r.diff_arithmetic_geometric = r.arithmetic - r.geometric;
    r.diff_geometric_harmonic = r.geometric - r.harmonic;
    r.diff_arithmetic_harmonic = r.arithmetic - r.harmonic;
    r.spread_percent = 100.0 * r.diff_arithmetic_harmonic / r.arithmetic;
    return r;
}

}  // namespace pmeans
