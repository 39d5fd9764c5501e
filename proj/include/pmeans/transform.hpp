#pragma once

#include <string_view>

namespace pmeans {

// Invertible monotone map applied to measurements before averaging.
// The identity, natural-log, and reciprocal maps yield the arithmetic,
// geometric, and harmonic means respectively.
enum class transform_kind { identity, log, reciprocal };

enum class mean_kind { arithmetic, geometric, harmonic };

inline constexpr mean_kind all_mean_kinds[] = {mean_kind::arithmetic, mean_kind::geometric,
                                               mean_kind::harmonic};
inline constexpr transform_kind all_transform_kinds[] = {
    transform_kind::identity, transform_kind::log, transform_kind::reciprocal};

// Throws domain_error when x is outside the transform's domain
// (log and reciprocal require x > 0).
double forward(transform_kind t, double x);

// Maps a transformed value back to the original space. Throws domain_error
// when y is outside the transform's image (reciprocal requires y > 0).
double inverse(transform_kind t, double y);

constexpr transform_kind transform_for(mean_kind k) noexcept {
    switch (k) {
        case mean_kind::geometric: return transform_kind::log;
        case mean_kind::harmonic: return transform_kind::reciprocal;
        case mean_kind::arithmetic: break;
    }
    return transform_kind::identity;
}

constexpr mean_kind mean_for(transform_kind t) noexcept {
    switch (t) {
        case transform_kind::log: return mean_kind::geometric;
        case transform_kind::reciprocal: return mean_kind::harmonic;
        case transform_kind::identity: break;
    }
    return mean_kind::arithmetic;
}

std::string_view name(mean_kind k) noexcept;
std::string_view name(transform_kind t) noexcept;

// Accepts the full name or the usual two-letter abbreviation ("am", "gm",
// "hm"). Throws invalid_argument for anything else.
mean_kind mean_kind_from_name(std::string_view text);
transform_kind transform_kind_from_name(std::string_view text);

}  // namespace pmeans
