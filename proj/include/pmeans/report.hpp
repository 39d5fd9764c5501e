#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

namespace pmeans {

enum class output_format { text, json, csv };

output_format output_format_from_name(std::string_view name);
const char* name(output_format f);

// Renders a report object built by the CLI. The "command" key selects the
// layout. JSON keeps full precision; text rounds real numbers to two
// decimals; csv keeps full precision in flat rows.
std::string render_report(const nlohmann::json& report, output_format f);

}  // namespace pmeans
