#pragma once

#include <string>
#include <vector>

#include "pmeans/transform.hpp"

namespace pmeans {

struct basket_entry {
    std::string category;
    double weight = 0;     // share in (0, 1]
    double sub_index = 0;  // category price index, > 0
};

// Weighted basket of category sub-indices. Weights must sum to one within
// 1e-6 (published weights are rounded) and categories must be unique.
struct index_basket {
    std::vector<basket_entry> entries;

    std::size_t size() const noexcept { return entries.size(); }
};

void validate(const index_basket& b);

// All-items index under the chosen mean of the sub-indices.
double aggregate_index(const index_basket& b, mean_kind k);

struct index_report {
    double arithmetic = 0;
    double geometric = 0;
    double harmonic = 0;
    double diff_arithmetic_geometric = 0;
    double diff_geometric_harmonic = 0;
    double diff_arithmetic_harmonic = 0;
    double spread_percent = 0;  // 100 * (arithmetic - harmonic) / arithmetic
};

index_report summarize(const index_basket& b);

}  // namespace pmeans
