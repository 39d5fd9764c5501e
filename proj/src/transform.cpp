#include "pmeans/transform.hpp"

#include <cmath>
#include <string>

#include "pmeans/errors.hpp"

namespace pmeans {

double forward(transform_kind t, double x) {
    switch (t) {
        case transform_kind::identity:
            return x;
        case transform_kind::log:
            if (!(x > 0.0))
                throw domain_error("log transform requires x > 0, got " + std::to_string(x));
            return std::log(x);
        case transform_kind::reciprocal:
            if (!(x > 0.0))
                throw domain_error("reciprocal transform requires x > 0, got " +
                                   std::to_string(x));
            return 1.0 / x;
    }
    throw invalid_argument("unknown transform");
}

double inverse(transform_kind t, double y) {
    switch (t) {
        case transform_kind::identity:
            return y;
        case transform_kind::log:
            return std::exp(y);
        case transform_kind::reciprocal:
            if (!(y > 0.0))
                throw domain_error("reciprocal image requires y > 0, got " + std::to_string(y));
            return 1.0 / y;
    }
    throw invalid_argument("unknown transform");
}

std::string_view name(mean_kind k) noexcept {
    switch (k) {
        case mean_kind::geometric: return "geometric";
        case mean_kind::harmonic: return "harmonic";
        case mean_kind::arithmetic: break;
    }
    return "arithmetic";
}

std::string_view name(transform_kind t) noexcept {
    switch (t) {
        case transform_kind::log: return "log";
        case transform_kind::reciprocal: return "reciprocal";
        case transform_kind::identity: break;
    }
    return "identity";
}

mean_kind mean_kind_from_name(std::string_view text) {
    if (text == "arithmetic" || text == "am") return mean_kind::arithmetic;
    if (text == "geometric" || text == "gm") return mean_kind::geometric;
    if (text == "harmonic" || text == "hm") return mean_kind::harmonic;
    throw invalid_argument("unknown mean kind '" + std::string(text) + "'");
}

transform_kind transform_kind_from_name(std::string_view text) {
    if (text == "identity") return transform_kind::identity;
    if (text == "log") return transform_kind::log;
    if (text == "reciprocal") return transform_kind::reciprocal;
    throw invalid_argument("unknown transform '" + std::string(text) + "'");
}

}  // namespace pmeans
