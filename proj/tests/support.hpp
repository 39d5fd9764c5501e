#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "pmeans/basket.hpp"
#include "pmeans/cli.hpp"
#include "pmeans/ellipse.hpp"
#include "pmeans/predictor.hpp"
#include "pmeans/sample.hpp"

namespace support {

inline std::string data_path(const std::string& file) {
    return std::string(PMEANS_DATA_DIR) + "/" + file;
}

inline std::string schema_path() { return PMEANS_SCHEMA_FILE; }

inline bool close_rel(double a, double b, double rel) {
    return std::fabs(a - b) <= rel * std::max(std::fabs(a), std::fabs(b));
}

// Relative with an absolute floor, for quantities that can legitimately be 0.
inline bool close(double a, double b, double rel, double abs_floor = 1e-300) {
    return std::fabs(a - b) <= std::max(rel * std::max(std::fabs(a), std::fabs(b)), abs_floor);
}

// Deterministic case generators. Values are log-uniform so the three means
// separate; weights stay strictly positive unless asked otherwise.
struct rng_stream {
    std::mt19937_64 gen;

    explicit rng_stream(std::uint64_t seed) : gen(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen);
    }

    double log_uniform(double lo, double hi) {
        return std::exp(uniform(std::log(lo), std::log(hi)));
    }

    int uniform_int(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(gen);
    }

    pmeans::weighted_sample positive_sample(int min_n, int max_n, bool unit_weights = false) {
        const int n = uniform_int(min_n, max_n);
        pmeans::weighted_sample s;
        s.values.reserve(n);
        s.weights.reserve(n);
        for (int i = 0; i < n; ++i) {
            s.values.push_back(log_uniform(1e-2, 1e3));
            s.weights.push_back(unit_weights ? 1.0 : uniform(0.1, 10.0));
        }
        return s;
    }

    pmeans::empirical_distribution distribution(int min_n, int max_n) {
        const int n = uniform_int(min_n, max_n);
        pmeans::empirical_distribution d;
        double total = 0;
        for (int i = 0; i < n; ++i) {
            d.outcomes.push_back((i + 1) * log_uniform(0.5, 2.0));  // distinct: strictly grows
            d.probabilities.push_back(uniform(0.05, 1.0));
            total += d.probabilities.back();
        }
        for (double& p : d.probabilities) p /= total;
        return d;
    }

    pmeans::index_basket basket(int min_n, int max_n) {
        const int n = uniform_int(min_n, max_n);
        pmeans::index_basket b;
        double total = 0;
        for (int i = 0; i < n; ++i) {
            pmeans::basket_entry e;
            e.category = "category " + std::to_string(i + 1);
            e.weight = uniform(0.05, 1.0);
            e.sub_index = log_uniform(50.0, 250.0);
            total += e.weight;
            b.entries.push_back(std::move(e));
        }
        for (auto& e : b.entries) e.weight /= total;
        return b;
    }

    pmeans::point_cloud cloud(int n, double cx, double cy, double angle, double sx, double sy) {
        pmeans::point_cloud c;
        std::normal_distribution<double> gauss;
        const double ca = std::cos(angle), sa = std::sin(angle);
        while (static_cast<int>(c.points.size()) < n) {
            const double u = sx * gauss(gen);
            const double v = sy * gauss(gen);
            const pmeans::point2 p{cx + u * ca - v * sa, cy + u * sa + v * ca};
            if (p.x > 0.05 && p.y > 0.05) c.points.push_back(p);
        }
        return c;
    }
};

// High-precision references computed straight from the definitions, in input
// order, sharing no code with the library.
inline long double am_oracle(const pmeans::weighted_sample& s) {
    long double num = 0, den = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!(s.weights[i] > 0)) continue;
        num += static_cast<long double>(s.weights[i]) * s.values[i];
        den += s.weights[i];
    }
    return num / den;
}

inline long double gm_oracle(const pmeans::weighted_sample& s) {
    long double num = 0, den = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!(s.weights[i] > 0)) continue;
        num += static_cast<long double>(s.weights[i]) * std::log(static_cast<long double>(s.values[i]));
        den += s.weights[i];
    }
    return std::exp(num / den);
}

inline long double hm_oracle(const pmeans::weighted_sample& s) {
    long double num = 0, den = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!(s.weights[i] > 0)) continue;
        num += s.weights[i];
        den += static_cast<long double>(s.weights[i]) / s.values[i];
    }
    return num / den;
}

inline long double mean_oracle(const pmeans::weighted_sample& s, pmeans::mean_kind k) {
    switch (k) {
        case pmeans::mean_kind::geometric: return gm_oracle(s);
        case pmeans::mean_kind::harmonic: return hm_oracle(s);
        case pmeans::mean_kind::arithmetic: break;
    }
    return am_oracle(s);
}

// Checks a value against the subset of JSON Schema the report schemas use:
// type, enum, required, properties, additionalProperties:false, items,
// minItems.
inline bool schema_match(const nlohmann::json& value, const nlohmann::json& schema,
                         std::string& why, const std::string& path = "$") {
    using nlohmann::json;
    if (schema.contains("enum")) {
        for (const json& candidate : schema.at("enum"))
            if (value == candidate) return true;
        why = path + ": not one of the allowed values";
        return false;
    }
    if (schema.contains("type")) {
        const std::string type = schema.at("type").get<std::string>();
        const bool ok = (type == "object" && value.is_object()) ||
                        (type == "array" && value.is_array()) ||
                        (type == "string" && value.is_string()) ||
                        (type == "number" && value.is_number()) ||
                        (type == "integer" && value.is_number_integer()) ||
                        (type == "boolean" && value.is_boolean());
        if (!ok) {
            why = path + ": expected " + type + ", got " + std::string(value.type_name());
            return false;
        }
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema.at("required")) {
                if (!value.contains(key.get<std::string>())) {
                    why = path + ": missing required key '" + key.get<std::string>() + "'";
                    return false;
                }
            }
        const nlohmann::json empty = nlohmann::json::object();
        const nlohmann::json& props = schema.contains("properties") ? schema.at("properties") : empty;
        if (schema.contains("additionalProperties") &&
            schema.at("additionalProperties") == false) {
            for (const auto& [key, sub] : value.items()) {
                (void)sub;
                if (!props.contains(key)) {
                    why = path + ": unexpected key '" + key + "'";
                    return false;
                }
            }
        }
        for (const auto& [key, sub_schema] : props.items())
            if (value.contains(key) &&
                !schema_match(value.at(key), sub_schema, why, path + "." + key))
                return false;
    }
    if (value.is_array()) {
        if (schema.contains("minItems") &&
            value.size() < schema.at("minItems").get<std::size_t>()) {
            why = path + ": fewer than " + schema.at("minItems").dump() + " items";
            return false;
        }
        if (schema.contains("items"))
            for (std::size_t i = 0; i < value.size(); ++i)
                if (!schema_match(value.at(i), schema.at("items"), why,
                                  path + "[" + std::to_string(i) + "]"))
                    return false;
    }
    return true;
}

struct cli_result {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline cli_result run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("pmeans");
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    cli_result r;
    r.exit_code = pmeans::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

}  // namespace support
