#include "pmeans/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "pmeans/basket.hpp"
#include "pmeans/csv.hpp"
#include "pmeans/ellipse.hpp"
#include "pmeans/errors.hpp"
#include "pmeans/geometry.hpp"
#include "pmeans/means.hpp"
#include "pmeans/predictor.hpp"
#include "pmeans/svg.hpp"

namespace pmeans {

namespace {

using nlohmann::json;

// Flag problems; mapped to exit 1 instead of the data/domain exit 2.
struct usage_error {
    std::string message;
};

std::vector<mean_kind> selected_means(const run_config& c) {
    std::vector<mean_kind> ks(c.means.begin(), c.means.end());
    if (ks.empty()) ks.assign(std::begin(all_mean_kinds), std::end(all_mean_kinds));
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    return ks;
}

std::vector<transform_kind> selected_transforms(const run_config& c) {
    std::vector<transform_kind> ts(c.transforms.begin(), c.transforms.end());
    if (ts.empty()) ts.assign(std::begin(all_transform_kinds), std::end(all_transform_kinds));
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    return ts;
}

std::string shortest(double v) { return json(v).dump(); }

// Input either comes from a file or is synthesized as a uniform grid.
struct loaded_sample {
    weighted_sample sample;
    std::string label;
};

loaded_sample load_sample(const run_config& c) {
    const int grid_flags = static_cast<int>(c.grid_min.has_value()) +
                           static_cast<int>(c.grid_max.has_value()) +
                           static_cast<int>(c.grid_step.has_value());
    if (grid_flags != 0 && grid_flags != 3)
        throw usage_error{"--grid-min, --grid-max, and --grid-step go together"};
    if (grid_flags == 3) {
        if (!c.input_path.empty())
            throw usage_error{"choose either --input or a grid, not both"};
        if (!(*c.grid_step > 0)) throw usage_error{"--grid-step must be positive"};
        if (!(*c.grid_max > *c.grid_min))
            throw usage_error{"--grid-max must exceed --grid-min"};
        return {uniform_grid_sample(*c.grid_min, *c.grid_max, *c.grid_step),
                "grid[" + shortest(*c.grid_min) + "," + shortest(*c.grid_max) + "," +
                    shortest(*c.grid_step) + "]"};
    }
    if (c.input_path.empty()) throw usage_error{"needs --input or a full grid specification"};
    return {parse_weighted_csv(c.input_path), c.input_path};
}

void write_plot(const std::string& svg, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    f << svg;
    f.close();
    if (!f) throw error("cannot write plot file '" + path + "'");
}

json point_json(const point2& p) { return json::array({p.x, p.y}); }
json vec_json(const vec2& v) { return json::array({v[0], v[1]}); }

int run_means(const run_config& c, std::ostream& out) {
    if (!c.plot_path.empty()) throw usage_error{"means has no plot output"};
    auto [s, label] = load_sample(c);
    json means = json::object();
    for (mean_kind k : selected_means(c)) means[name(k)] = mean_value(s, k);
    const json r = {{"command", "means"},
                    {"input", label},
                    {"count", s.size()},
                    {"means", means}};
    out << render_report(r, c.format);
    return 0;
}

int run_hyperrect(const run_config& c, std::ostream& out) {
    if (c.input_path.empty()) throw usage_error{"hyperrect needs --input"};
    const weighted_sample s = parse_weighted_csv(c.input_path);
    const bool equal = std::all_of(s.weights.begin(), s.weights.end(),
                                   [&](double w) { return w == s.weights.front(); });
    if (!equal)
        throw invalid_sample("the hyperrectangle interpretation needs equal weights");
    const hyper_rect rect{s.values};
    validate(rect);
    json r = {{"command", "hyperrect"},
              {"input", c.input_path},
              {"dimensions", rect.dimensions()},
              {"hyperperimeter", hyperperimeter(rect)},
              {"hypervolume", hypervolume(rect)},
              {"facet_volume_mean", facet_volume_mean(rect)},
              {"means",
               {{"arithmetic", am_from_perimeter(rect)},
                {"geometric", gm_from_volume(rect)},
                {"harmonic", hm_from_ratio(rect)}}}};
    std::string svg;
    if (rect.dimensions() == 2) {
        const circle_construction cc = build_circle_construction(s.values[0], s.values[1]);
        const agm_result ag = arithmetic_geometric_mean_trace(s.values[0], s.values[1]);
        r["circle"] = {{"x1", cc.x1},
                       {"x2", cc.x2},
                       {"radius_oh", cc.radius_oh},
                       {"chord_hg", cc.chord_hg},
                       {"segment_hd", cc.segment_hd},
                       {"agm", {{"value", ag.value}, {"iterations", ag.iterations}}}};
        if (!c.plot_path.empty()) svg = circle_construction_svg(cc);
    } else if (!c.plot_path.empty()) {
        throw usage_error{"the circle plot needs exactly two values"};
    }
    if (!svg.empty()) write_plot(svg, c.plot_path);
    out << render_report(r, c.format);
    return 0;
}

int run_attraction(const run_config& c, std::ostream& out) {
    if (c.weighted && c.x)
        throw usage_error{"--x probes the unweighted profile; drop --weighted"};
    if (!c.weighted && c.kernel == attraction_kernel::gaussian)
        throw usage_error{"the gaussian kernel applies to --weighted profiles only"};
    auto [s, label] = load_sample(c);
    validate(s);

    std::vector<attraction_profile> profiles;
    for (mean_kind k : selected_means(c)) {
        if (c.weighted) {
            profiles.push_back(make_weighted_attraction_profile(s, k, c.kernel));
        } else if (c.x) {
            attraction_profile p;
            p.kind = k;
            p.mean = mean_value(s, k);
            p.points.emplace_back(*c.x, cauchy_attraction(s, k, *c.x));
            profiles.push_back(std::move(p));
        } else {
            profiles.push_back(make_attraction_profile(s, k));
        }
    }

    bool outside = false;
    if (c.x) {
        const auto [lo, hi] = std::minmax_element(s.values.begin(), s.values.end());
        outside = *c.x < *lo || *c.x > *hi;
    }

    json profiles_j = json::array();
    for (const auto& p : profiles) {
        json points = json::array();
        for (const auto& [x, v] : p.points) points.push_back(json::array({x, v}));
        profiles_j.push_back({{"mean", name(p.kind)},
                              {"mu", p.mean},
                              {"outside_range", outside},
                              {"points", points}});
    }
    json r = {{"command", "attraction"},
              {"input", label},
              {"kernel", name(c.kernel)},
              {"weighted", c.weighted},
              {"profiles", profiles_j}};
    if (c.x) r["x"] = *c.x;
    if (!c.plot_path.empty()) write_plot(attraction_svg(profiles), c.plot_path);
    out << render_report(r, c.format);
    return 0;
}

int run_velocity(const run_config& c, std::ostream& out) {
    if (!c.x) throw usage_error{"velocity needs --x"};
    if (!(*c.x > 0) || !(*c.x < 1)) throw usage_error{"--x must lie strictly between 0 and 1"};
    if (!(c.w_step > 0) || !(c.w_step <= 1))
        throw usage_error{"--w-step must lie in (0, 1]"};

    std::vector<velocity_curve> curves;
    json curves_j = json::array();
    for (mean_kind k : selected_means(c)) {
        curves.push_back(make_velocity_curve(k, *c.x, c.w_step));
        json samples = json::array();
        for (const auto& [w, v] : curves.back().samples)
            samples.push_back(json::array({w, v}));
        curves_j.push_back({{"mean", name(k)}, {"samples", samples}});
    }
    const json r = {{"command", "velocity"},
                    {"x", *c.x},
                    {"w_step", c.w_step},
                    {"curves", curves_j}};
    if (!c.plot_path.empty()) write_plot(velocity_svg(curves), c.plot_path);
    out << render_report(r, c.format);
    return 0;
}

int run_predict(const run_config& c, std::ostream& out) {
    if (!c.plot_path.empty()) throw usage_error{"predict has no plot output"};
    if (c.input_path.empty()) throw usage_error{"predict needs --input"};
    if (!(c.penalty > 0)) throw usage_error{"--penalty must be positive"};
    const empirical_distribution dist = parse_distribution_csv(c.input_path);

    json predictions = json::array();
    for (transform_kind t : selected_transforms(c)) {
        const gain_spec spec{c.base, c.penalty, t};
        const prediction p = best_prediction(spec, dist);
        predictions.push_back({{"transform", name(t)},
                               {"mean", name(mean_for(t))},
                               {"value", p.value},
                               {"expected_return", p.expected_return}});
    }
    const json r = {{"command", "predict"},
                    {"input", c.input_path},
                    {"base", c.base},
                    {"penalty", c.penalty},
                    {"predictions", predictions}};
    out << render_report(r, c.format);
    return 0;
}

int run_index(const run_config& c, std::ostream& out) {
    if (!c.plot_path.empty()) throw usage_error{"index has no plot output"};
    if (c.input_path.empty()) throw usage_error{"index needs --input"};
    const index_basket basket = parse_basket_csv(c.input_path);
    const index_report rep = summarize(basket);
    const json r = {{"command", "index"},
                    {"input", c.input_path},
                    {"categories", basket.size()},
                    {"arithmetic", rep.arithmetic},
                    {"geometric", rep.geometric},
                    {"harmonic", rep.harmonic},
                    {"diff_arithmetic_geometric", rep.diff_arithmetic_geometric},
                    {"diff_geometric_harmonic", rep.diff_geometric_harmonic},
                    {"diff_arithmetic_harmonic", rep.diff_arithmetic_harmonic},
                    {"spread_percent", rep.spread_percent}};
    out << render_report(r, c.format);
    return 0;
}

int run_ellipse(const run_config& c, std::ostream& out) {
    if (c.input_path.empty()) throw usage_error{"ellipse needs --input"};
    if (!(c.scale > 0)) throw usage_error{"--scale must be positive"};
    if (c.boundary_points < 64) throw usage_error{"--boundary-points must be at least 64"};
    const point_cloud cloud = parse_points_csv(c.input_path);

    std::vector<ellipse_fit> fits;
    json fits_j = json::array();
    for (mean_kind k : selected_means(c)) {
        fits.push_back(fit_ellipse(cloud, k, c.scale, c.boundary_points));
        const ellipse_fit& f = fits.back();
        json boundary = json::array();
        for (const auto& p : f.boundary) boundary.push_back(point_json(p));
        fits_j.push_back({{"mean", name(k)},
                          {"center", point_json(f.center)},
                          {"center_transformed", point_json(f.center_transformed)},
                          {"directions", json::array({vec_json(f.directions[0]),
                                                      vec_json(f.directions[1])})},
                          {"spreads", json::array({f.spreads[0], f.spreads[1]})},
                          {"boundary", boundary}});
    }
    const json r = {{"command", "ellipse"},
                    {"input", c.input_path},
                    {"scale", c.scale},
                    {"boundary_points", c.boundary_points},
                    {"fits", fits_j}};
    if (!c.plot_path.empty()) write_plot(ellipse_svg(cloud, fits), c.plot_path);
    out << render_report(r, c.format);
    return 0;
}

}  // namespace

int run(const run_config& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.subcommand == "means") return run_means(config, out);
        if (config.subcommand == "hyperrect") return run_hyperrect(config, out);
        if (config.subcommand == "attraction") return run_attraction(config, out);
        if (config.subcommand == "velocity") return run_velocity(config, out);
        if (config.subcommand == "predict") return run_predict(config, out);
        if (config.subcommand == "index") return run_index(config, out);
        if (config.subcommand == "ellipse") return run_ellipse(config, out);
        err << "error: unknown subcommand '" << config.subcommand << "'\n";
        return 1;
    } catch (const usage_error& e) {
        err << "error: " << e.message << "\n";
        return 1;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    run_config config;
    std::string format = "text";
    std::vector<std::string> mean_names;
    std::vector<std::string> transform_names;
    std::string kernel = "cauchy";

    CLI::App app{"Pythagorean means as least-squares estimators: means, geometry, "
                 "selection diagnostics, prediction, index aggregation, ellipse fits"};
    app.require_subcommand(1);

    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "report format")
            ->check(CLI::IsMember({"text", "json", "csv"}))
            ->capture_default_str();
    };
    const auto add_means = [&](CLI::App* cmd) {
        cmd->add_option("--mean", mean_names, "restrict which means are reported")
            ->check(CLI::IsMember({"arithmetic", "geometric", "harmonic", "am", "gm", "hm"}));
    };
    const auto add_grid = [&](CLI::App* cmd) {
        cmd->add_option("--grid-min", config.grid_min, "synthesize a uniform grid: lower bound");
        cmd->add_option("--grid-max", config.grid_max, "synthesize a uniform grid: upper bound");
        cmd->add_option("--grid-step", config.grid_step, "synthesize a uniform grid: step");
    };
    const auto add_plot = [&](CLI::App* cmd) {
        cmd->add_option("--plot", config.plot_path, "write an SVG plot to this path");
    };

    CLI::App* means_cmd = app.add_subcommand("means", "Pythagorean means of a weighted sample");
    means_cmd->add_option("--input", config.input_path, "sample CSV: value[,weight]");
    add_grid(means_cmd);
    add_means(means_cmd);
    add_format(means_cmd);

    CLI::App* hyperrect_cmd = app.add_subcommand(
        "hyperrect", "hyperrectangle reading of the means; circle construction for two values");
    hyperrect_cmd->add_option("--input", config.input_path, "sample CSV: value[,weight]")
        ->required();
    add_format(hyperrect_cmd);
    add_plot(hyperrect_cmd);

    CLI::App* attraction_cmd =
        app.add_subcommand("attraction", "attraction of measurements toward each mean");
    attraction_cmd->add_option("--input", config.input_path, "sample CSV: value[,weight]");
    add_grid(attraction_cmd);
    add_means(attraction_cmd);
    attraction_cmd->add_option("--kernel", kernel, "weighted kernel")
        ->check(CLI::IsMember({"cauchy", "gaussian"}))
        ->capture_default_str();
    attraction_cmd->add_flag("--weighted", config.weighted,
                             "per-measurement kernel with the sample weights");
    attraction_cmd->add_option("--x", config.x, "probe the profile at one point");
    add_format(attraction_cmd);
    add_plot(attraction_cmd);

    CLI::App* velocity_cmd =
        app.add_subcommand("velocity", "how fast each mean of {1, x} moves toward x");
    velocity_cmd->add_option("--x", config.x, "target value in (0, 1)")->required();
    velocity_cmd->add_option("--w-step", config.w_step, "weight sampling step")
        ->capture_default_str();
    add_means(velocity_cmd);
    add_format(velocity_cmd);
    add_plot(velocity_cmd);

    CLI::App* predict_cmd =
        app.add_subcommand("predict", "best prediction under a transformed quadratic gain");
    predict_cmd->add_option("--input", config.input_path, "distribution CSV: value,probability or value,count")
        ->required();
    predict_cmd->add_option("--transform", transform_names, "restrict which transforms are used")
        ->check(CLI::IsMember({"identity", "log", "reciprocal"}));
    predict_cmd->add_option("--base", config.base, "gain at a perfect prediction")
        ->capture_default_str();
    predict_cmd->add_option("--penalty", config.penalty, "quadratic penalty factor")
        ->capture_default_str();
    add_format(predict_cmd);

    CLI::App* index_cmd =
        app.add_subcommand("index", "all-items index of a weighted category basket");
    index_cmd->add_option("--input", config.input_path, "basket CSV: category,weight,index")
        ->required();
    add_format(index_cmd);

    CLI::App* ellipse_cmd =
        app.add_subcommand("ellipse", "enclosing ellipse per mean for a 2D point cloud");
    ellipse_cmd->add_option("--input", config.input_path, "points CSV: x,y")->required();
    add_means(ellipse_cmd);
    ellipse_cmd->add_option("--scale", config.scale, "boundary at this Mahalanobis radius")
        ->capture_default_str();
    ellipse_cmd->add_option("--boundary-points", config.boundary_points,
                            "points on the boundary polyline")
        ->capture_default_str();
    add_format(ellipse_cmd);
    add_plot(ellipse_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    config.subcommand = app.get_subcommands().front()->get_name();
    config.format = output_format_from_name(format);
    config.kernel = attraction_kernel_from_name(kernel);
    for (const auto& n : mean_names) config.means.push_back(mean_kind_from_name(n));
    for (const auto& n : transform_names)
        config.transforms.push_back(transform_kind_from_name(n));
    return run(config, out, err);
}

}  // namespace pmeans
