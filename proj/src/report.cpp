#include "pmeans/report.hpp"

#include <cstdio>

#include "pmeans/errors.hpp"

namespace pmeans {

output_format output_format_from_name(std::string_view name) {
    if (name == "text") return output_format::text;
    if (name == "json") return output_format::json;
    if (name == "csv") return output_format::csv;
    throw invalid_argument("unknown output format '" + std::string(name) + "'");
}

const char* name(output_format f) {
    switch (f) {
        case output_format::text: return "text";
        case output_format::json: return "json";
        case output_format::csv: return "csv";
    }
    return "?";
}

namespace {

using nlohmann::json;

// Two-decimal rendering for text mode.
std::string two(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string two(const json& v) { return two(v.get<double>()); }

// Full-precision rendering for csv mode; dump() of a double is the shortest
// string that reads back to the same value.
std::string raw(const json& v) { return v.dump(); }

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

void mean_lines(std::string& out, const json& means) {
    for (const char* k : {"arithmetic", "geometric", "harmonic"})
        if (means.contains(k)) out += pad(k, 12) + two(means.at(k)) + "\n";
}

std::string means_text(const json& r) {
    std::string out = "means of " + r.at("input").get<std::string>() + " (" +
                      std::to_string(r.at("count").get<long long>()) + " measurements)\n";
    mean_lines(out, r.at("means"));
    return out;
}

std::string means_csv(const json& r) {
    std::string out = "mean,value\n";
    for (const char* k : {"arithmetic", "geometric", "harmonic"})
        if (r.at("means").contains(k)) out += std::string(k) + "," + raw(r.at("means").at(k)) + "\n";
    return out;
}

std::string hyperrect_text(const json& r) {
    std::string out = "hyperrectangle of " + r.at("input").get<std::string>() + " (" +
                      std::to_string(r.at("dimensions").get<long long>()) + " dimensions)\n";
    out += pad("hyperperimeter", 19) + two(r.at("hyperperimeter")) + "\n";
    out += pad("hypervolume", 19) + two(r.at("hypervolume")) + "\n";
    out += pad("facet volume mean", 19) + two(r.at("facet_volume_mean")) + "\n";
    mean_lines(out, r.at("means"));
    if (r.contains("circle")) {
        const json& c = r.at("circle");
        out += "circle construction for (" + two(c.at("x1")) + ", " + two(c.at("x2")) + ")\n";
        out += pad("radius OH", 12) + two(c.at("radius_oh")) + "\n";
        out += pad("chord HG", 12) + two(c.at("chord_hg")) + "\n";
        out += pad("segment HD", 12) + two(c.at("segment_hd")) + "\n";
        out += pad("agm", 12) + two(c.at("agm").at("value")) + " (" +
               std::to_string(c.at("agm").at("iterations").get<long long>()) + " iterations)\n";
    }
    return out;
}

std::string hyperrect_csv(const json& r) {
    std::string out = "statistic,value\n";
    out += "dimensions," + raw(r.at("dimensions")) + "\n";
    out += "hyperperimeter," + raw(r.at("hyperperimeter")) + "\n";
    out += "hypervolume," + raw(r.at("hypervolume")) + "\n";
    out += "facet_volume_mean," + raw(r.at("facet_volume_mean")) + "\n";
    for (const char* k : {"arithmetic", "geometric", "harmonic"})
        if (r.at("means").contains(k)) out += std::string(k) + "," + raw(r.at("means").at(k)) + "\n";
    if (r.contains("circle")) {
        const json& c = r.at("circle");
        out += "circle_x1," + raw(c.at("x1")) + "\n";
        out += "circle_x2," + raw(c.at("x2")) + "\n";
        out += "radius_oh," + raw(c.at("radius_oh")) + "\n";
        out += "chord_hg," + raw(c.at("chord_hg")) + "\n";
        out += "segment_hd," + raw(c.at("segment_hd")) + "\n";
        out += "agm," + raw(c.at("agm").at("value")) + "\n";
        out += "agm_iterations," + raw(c.at("agm").at("iterations")) + "\n";
    }
    return out;
}

std::string attraction_text(const json& r) {
    std::string out = r.at("kernel").get<std::string>() + " attraction of " +
                      r.at("input").get<std::string>() +
                      (r.at("weighted").get<bool>() ? " (weighted)\n" : " (unweighted)\n");
    for (const json& p : r.at("profiles")) {
        out += "mean: " + p.at("mean").get<std::string>() + " (mu " + two(p.at("mu")) + ")";
        if (p.at("outside_range").get<bool>()) out += " [x outside sample range]";
        out += "\n" + pad("x", 12) + "attraction\n";
        for (const json& pt : p.at("points"))
            out += pad(two(pt.at(0)), 12) + two(pt.at(1)) + "\n";
    }
    return out;
}

std::string attraction_csv(const json& r) {
    std::string out = "mean,x,attraction\n";
    for (const json& p : r.at("profiles"))
        for (const json& pt : p.at("points"))
            out += p.at("mean").get<std::string>() + "," + raw(pt.at(0)) + "," + raw(pt.at(1)) +
                   "\n";
    return out;
}

std::string velocity_text(const json& r) {
    std::string out = "mean velocity at x " + two(r.at("x")) + " (w step " + two(r.at("w_step")) +
                      ")\n";
    for (const json& c : r.at("curves")) {
        out += "mean: " + c.at("mean").get<std::string>() + "\n";
        out += pad("w", 12) + "velocity\n";
        for (const json& s : c.at("samples"))
            out += pad(two(s.at(0)), 12) + two(s.at(1)) + "\n";
    }
    return out;
}

std::string velocity_csv(const json& r) {
    std::string out = "mean,w,velocity\n";
    for (const json& c : r.at("curves"))
        for (const json& s : c.at("samples"))
            out += c.at("mean").get<std::string>() + "," + raw(s.at(0)) + "," + raw(s.at(1)) +
                   "\n";
    return out;
}

std::string predict_text(const json& r) {
    std::string out = "best predictions for " + r.at("input").get<std::string>() + " (base " +
                      two(r.at("base")) + ", penalty " + two(r.at("penalty")) + ")\n";
    out += pad("transform", 12) + pad("mean", 12) + pad("prediction", 12) + "expected return\n";
    for (const json& p : r.at("predictions"))
        out += pad(p.at("transform").get<std::string>(), 12) +
               pad(p.at("mean").get<std::string>(), 12) + pad(two(p.at("value")), 12) +
               two(p.at("expected_return")) + "\n";
    return out;
}

std::string predict_csv(const json& r) {
    std::string out = "transform,mean,prediction,expected_return\n";
    for (const json& p : r.at("predictions"))
        out += p.at("transform").get<std::string>() + "," + p.at("mean").get<std::string>() + "," +
               raw(p.at("value")) + "," + raw(p.at("expected_return")) + "\n";
    return out;
}

std::string index_text(const json& r) {
    std::string out = "all-items index of " + r.at("input").get<std::string>() + " (" +
                      std::to_string(r.at("categories").get<long long>()) + " categories)\n";
    out += pad("arithmetic", 24) + two(r.at("arithmetic")) + "\n";
    out += pad("geometric", 24) + two(r.at("geometric")) + "\n";
    out += pad("harmonic", 24) + two(r.at("harmonic")) + "\n";
    out += pad("arithmetic - geometric", 24) + two(r.at("diff_arithmetic_geometric")) + "\n";
    out += pad("geometric - harmonic", 24) + two(r.at("diff_geometric_harmonic")) + "\n";
    out += pad("arithmetic - harmonic", 24) + two(r.at("diff_arithmetic_harmonic")) + "\n";
    out += pad("spread percent", 24) + two(r.at("spread_percent")) + "\n";
    return out;
}

std::string index_csv(const json& r) {
    std::string out = "statistic,value\n";
    out += "categories," + raw(r.at("categories")) + "\n";
    for (const char* k : {"arithmetic", "geometric", "harmonic", "diff_arithmetic_geometric",
                          "diff_geometric_harmonic", "diff_arithmetic_harmonic",
                          "spread_percent"})
        out += std::string(k) + "," + raw(r.at(k)) + "\n";
    return out;
}

std::string pair_text(const json& p) {
    return "(" + two(p.at(0)) + ", " + two(p.at(1)) + ")";
}

std::string ellipse_text(const json& r) {
    std::string out = "ellipse fits of " + r.at("input").get<std::string>() + " (scale " +
                      two(r.at("scale")) + ", " +
                      std::to_string(r.at("boundary_points").get<long long>()) +
                      " boundary points)\n";
    for (const json& f : r.at("fits")) {
        out += "mean: " + f.at("mean").get<std::string>() + "\n";
        out += pad("center", 22) + pair_text(f.at("center")) + "\n";
        out += pad("center (transformed)", 22) + pair_text(f.at("center_transformed")) + "\n";
        out += pad("major axis", 22) + pair_text(f.at("directions").at(0)) + "  spread " +
               two(f.at("spreads").at(0)) + "\n";
        out += pad("minor axis", 22) + pair_text(f.at("directions").at(1)) + "  spread " +
               two(f.at("spreads").at(1)) + "\n";
    }
    return out;
}

std::string ellipse_csv(const json& r) {
    std::string out = "mean,x,y\n";
    for (const json& f : r.at("fits"))
        for (const json& pt : f.at("boundary"))
            out += f.at("mean").get<std::string>() + "," + raw(pt.at(0)) + "," + raw(pt.at(1)) +
                   "\n";
    return out;
}

}  // namespace

std::string render_report(const nlohmann::json& report, output_format f) {
    if (f == output_format::json) return report.dump(2) + "\n";
    const std::string command = report.at("command").get<std::string>();
    if (f == output_format::text) {
        if (command == "means") return means_text(report);
        if (command == "hyperrect") return hyperrect_text(report);
        if (command == "attraction") return attraction_text(report);
        if (command == "velocity") return velocity_text(report);
        if (command == "predict") return predict_text(report);
        if (command == "index") return index_text(report);
        if (command == "ellipse") return ellipse_text(report);
    } else {
        if (command == "means") return means_csv(report);
        if (command == "hyperrect") return hyperrect_csv(report);
        if (command == "attraction") return attraction_csv(report);
        if (command == "velocity") return velocity_csv(report);
        if (command == "predict") return predict_csv(report);
        if (command == "index") return index_csv(report);
        if (command == "ellipse") return ellipse_csv(report);
    }
    throw invalid_argument("unknown report command '" + command + "'");
}

}  // namespace pmeans
