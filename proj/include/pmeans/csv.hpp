#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "pmeans/basket.hpp"
#include "pmeans/ellipse.hpp"
#include "pmeans/predictor.hpp"
#include "pmeans/sample.hpp"

namespace pmeans {

// All parsers expect a UTF-8 header line and reject malformed input with a
// parse_error carrying the 1-based line number. Fields may be quoted with
// double quotes; embedded quotes are doubled.

// Header `value` (equal weights) or `value,weight`.
weighted_sample parse_weighted_csv(const std::filesystem::path& path);
weighted_sample parse_weighted_csv_text(std::string_view text, std::string_view origin);

// Header `value,probability` or `value,count`; counts are normalized.
// Duplicate outcome values are rejected.
empirical_distribution parse_distribution_csv(const std::filesystem::path& path);
empirical_distribution parse_distribution_csv_text(std::string_view text,
                                                   std::string_view origin);

// Header `category,weight,index`. Duplicate categories are rejected.
index_basket parse_basket_csv(const std::filesystem::path& path);
index_basket parse_basket_csv_text(std::string_view text, std::string_view origin);

// Header `x,y`.
point_cloud parse_points_csv(const std::filesystem::path& path);
point_cloud parse_points_csv_text(std::string_view text, std::string_view origin);

// Emitters produce files the parsers read back to identical typed values
// (numbers are written with shortest round-trip precision).
std::string emit_weighted_csv(const weighted_sample& s);
std::string emit_distribution_csv(const empirical_distribution& d);
std::string emit_basket_csv(const index_basket& b);
std::string emit_points_csv(const point_cloud& c);

}  // namespace pmeans
