#include "pmeans/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "pmeans/errors.hpp"
#include "pmeans/transform.hpp"

namespace pmeans {

namespace {

constexpr double canvas_w = 640;
constexpr double canvas_h = 420;
constexpr double margin = 48;

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

const char* dash_for(mean_kind k) {
    switch (k) {
        case mean_kind::arithmetic: return "";                            // solid
        case mean_kind::geometric: return " stroke-dasharray=\"10 4 2 4\"";  // dash-dot
        case mean_kind::harmonic: return " stroke-dasharray=\"2 4\"";     // dotted
    }
    return "";
}

const char* style_note(mean_kind k) {
    switch (k) {
        case mean_kind::arithmetic: return "solid";
        case mean_kind::geometric: return "dash-dot";
        case mean_kind::harmonic: return "dotted";
    }
    return "?";
}

std::string svg_open() {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(canvas_w) + "\" height=\"" +
           num(canvas_h) + "\" viewBox=\"0 0 " + num(canvas_w) + " " + num(canvas_h) +
           "\" font-family=\"monospace\" font-size=\"12\">\n"
           "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

// Affine map from a data window to the drawing area, y flipped.
struct frame {
    double x0, x1, y0, y1;

    frame(double xa, double xb, double ya, double yb) : x0(xa), x1(xb), y0(ya), y1(yb) {
        if (x1 <= x0) x1 = x0 + 1;
        if (y1 <= y0) y1 = y0 + 1;
    }

    double px(double x) const { return margin + (x - x0) / (x1 - x0) * (canvas_w - 2 * margin); }
    double py(double y) const {
        return canvas_h - margin - (y - y0) / (y1 - y0) * (canvas_h - 2 * margin);
    }
};

std::string axis_box(const frame& f) {
    std::string out;
    out += "<rect x=\"" + num(margin) + "\" y=\"" + num(margin) + "\" width=\"" +
           num(canvas_w - 2 * margin) + "\" height=\"" + num(canvas_h - 2 * margin) +
           "\" fill=\"none\" stroke=\"#888\"/>\n";
    out += "<text x=\"" + num(margin) + "\" y=\"" + num(canvas_h - margin + 16) + "\">" +
           num(f.x0) + "</text>\n";
    out += "<text x=\"" + num(canvas_w - margin) + "\" y=\"" + num(canvas_h - margin + 16) +
           "\" text-anchor=\"end\">" + num(f.x1) + "</text>\n";
    out += "<text x=\"" + num(margin - 4) + "\" y=\"" + num(canvas_h - margin) +
           "\" text-anchor=\"end\">" + num(f.y0) + "</text>\n";
    out += "<text x=\"" + num(margin - 4) + "\" y=\"" + num(margin + 4) +
           "\" text-anchor=\"end\">" + num(f.y1) + "</text>\n";
    return out;
}

std::string polyline(const frame& f, const std::vector<std::pair<double, double>>& pts,
                     mean_kind k, bool close = false) {
    std::string d;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        d += i == 0 ? "M" : " L";
        d += num(f.px(pts[i].first)) + " " + num(f.py(pts[i].second));
    }
    if (close) d += " Z";
    return "<path d=\"" + d + "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"" +
           dash_for(k) + "/>\n";
}

std::string legend(const std::vector<mean_kind>& kinds) {
    std::string out;
    double y = margin + 16;
    for (mean_kind k : kinds) {
        out += "<text x=\"" + num(canvas_w - margin - 8) + "\" y=\"" + num(y) +
               "\" text-anchor=\"end\">" + std::string(name(k)) + " (" + style_note(k) +
               ")</text>\n";
        y += 16;
    }
    return out;
}

std::string labeled_point(double x, double y, const std::string& label, double dx, double dy) {
    return "<circle cx=\"" + num(x) + "\" cy=\"" + num(y) + "\" r=\"3\" fill=\"black\"/>\n" +
           "<text x=\"" + num(x + dx) + "\" y=\"" + num(y + dy) + "\">" + label + "</text>\n";
}

}  // namespace

std::string circle_construction_svg(const circle_construction& c) {
    const double span = c.x1 + c.x2;
    const double r = c.radius_oh;
    // One scale for both axes so the circle stays round.
    const double scale = std::min((canvas_w - 2 * margin) / span, (canvas_h - 2 * margin) / span);
    const double cx = canvas_w / 2;
    const double cy = canvas_h / 2;
    auto px = [&](double x) { return cx + (x - r) * scale; };
    auto py = [&](double y) { return cy - y * scale; };

    // B and C end the diameter, G splits it into x1 and x2, H sits on the
    // circle above G, D is the foot of G's perpendicular onto the radius OH.
    const double gx = c.x1;
    const double hy = c.chord_hg;
    const double t = (hy * hy) / (r * r);
    const double dx = gx + t * (r - gx);
    const double dy = hy - t * hy;

    std::string out = svg_open();
    out += "<circle cx=\"" + num(px(r)) + "\" cy=\"" + num(py(0)) + "\" r=\"" + num(r * scale) +
           "\" fill=\"none\" stroke=\"#888\"/>\n";
    out += "<path d=\"M" + num(px(0)) + " " + num(py(0)) + " L" + num(px(span)) + " " +
           num(py(0)) + "\" stroke=\"#888\"/>\n";

    auto segment = [&](double ax, double ay, double bx, double by, mean_kind k) {
        return "<path d=\"M" + num(px(ax)) + " " + num(py(ay)) + " L" + num(px(bx)) + " " +
               num(py(by)) + "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"" +
               dash_for(k) + "/>\n";
    };
    out += segment(r, 0, gx, hy, mean_kind::arithmetic);  // OH
    out += segment(gx, 0, gx, hy, mean_kind::geometric);  // GH
    out += segment(gx, hy, dx, dy, mean_kind::harmonic);  // HD

    out += labeled_point(px(0), py(0), "B", -14, 16);
    out += labeled_point(px(gx), py(0), "G", -4, 16);
    out += labeled_point(px(span), py(0), "C", 6, 16);
    out += labeled_point(px(r), py(0), "O", -4, 16);
    out += labeled_point(px(gx), py(hy), "H", -4, -8);
    out += labeled_point(px(dx), py(dy), "D", 8, 0);

    out += "<text x=\"" + num(margin) + "\" y=\"" + num(margin - 16) + "\">radius OH " +
           num(c.radius_oh) + ", chord HG " + num(c.chord_hg) + ", segment HD " +
           num(c.segment_hd) + "</text>\n";
    out += "</svg>\n";
    return out;
}

std::string attraction_svg(const std::vector<attraction_profile>& profiles) {
    if (profiles.empty()) throw invalid_argument("nothing to plot");
    double xlo = std::numeric_limits<double>::infinity(), xhi = -xlo;
    double yhi = 0;
    for (const auto& p : profiles)
        for (const auto& [x, v] : p.points) {
            xlo = std::min(xlo, x);
            xhi = std::max(xhi, x);
            yhi = std::max(yhi, v);
        }
    frame f(xlo, xhi, 0, yhi);
    std::string out = svg_open() + axis_box(f);
    std::vector<mean_kind> kinds;
    for (const auto& p : profiles) {
        out += polyline(f, p.points, p.kind);
        kinds.push_back(p.kind);
    }
    out += legend(kinds);
    out += "</svg>\n";
    return out;
}

std::string velocity_svg(const std::vector<velocity_curve>& curves) {
    if (curves.empty()) throw invalid_argument("nothing to plot");
    double yhi = 0;
    for (const auto& c : curves)
        for (const auto& [w, v] : c.samples) yhi = std::max(yhi, v);
    frame f(0, 1, 0, yhi);
    std::string out = svg_open() + axis_box(f);
    std::vector<mean_kind> kinds;
    for (const auto& c : curves) {
        out += polyline(f, c.samples, c.kind);
        kinds.push_back(c.kind);
    }
    out += legend(kinds);
    out += "</svg>\n";
    return out;
}

std::string ellipse_svg(const point_cloud& cloud, const std::vector<ellipse_fit>& fits) {
    if (cloud.points.empty()) throw invalid_argument("nothing to plot");
    double xlo = std::numeric_limits<double>::infinity(), xhi = -xlo;
    double ylo = xlo, yhi = xhi;
    auto grow = [&](const point2& p) {
        xlo = std::min(xlo, p.x);
        xhi = std::max(xhi, p.x);
        ylo = std::min(ylo, p.y);
        yhi = std::max(yhi, p.y);
    };
    for (const auto& p : cloud.points) grow(p);
    for (const auto& fit : fits)
        for (const auto& p : fit.boundary) grow(p);
    frame f(xlo, xhi, ylo, yhi);

    std::string out = svg_open() + axis_box(f);
    for (const auto& p : cloud.points)
        out += "<circle cx=\"" + num(f.px(p.x)) + "\" cy=\"" + num(f.py(p.y)) +
               "\" r=\"2\" fill=\"#999\"/>\n";
    std::vector<mean_kind> kinds;
    for (const auto& fit : fits) {
        std::vector<std::pair<double, double>> pts;
        pts.reserve(fit.boundary.size());
        for (const auto& p : fit.boundary) pts.emplace_back(p.x, p.y);
        out += polyline(f, pts, fit.kind, true);
        out += "<circle cx=\"" + num(f.px(fit.center.x)) + "\" cy=\"" + num(f.py(fit.center.y)) +
               "\" r=\"3.5\" fill=\"black\"/>\n";
        kinds.push_back(fit.kind);
    }
    out += legend(kinds);
    out += "</svg>\n";
    return out;
}

}  // namespace pmeans
