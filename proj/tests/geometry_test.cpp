#include <cmath>

#include "doctest.h"

#include "pmeans/errors.hpp"
#include "pmeans/geometry.hpp"
#include "pmeans/means.hpp"
#include "support.hpp"

using namespace pmeans;
using support::close_rel;

TEST_CASE("temperature box") {
    const hyper_rect r{{8, 13, 14, 10, 1000}};
    CHECK(hyperperimeter(r) == 16720.0);  // 2^4 * 1045
    CHECK(am_from_perimeter(r) == 209.0);
    CHECK(hypervolume(r) == 14560000.0);
    CHECK(close_rel(gm_from_volume(r), 27.07897834780791, 1e-12));
    CHECK(facet_volume_mean(r) == 1090112.0);  // (1820000+1456000+1120000+1040000+14560)/5
    CHECK(close_rel(hm_from_ratio(r), 13.35642576175659, 1e-12));
}

TEST_CASE("two- and three-dimensional boxes") {
    const hyper_rect pair{{1, 4}};
    CHECK(hyperperimeter(pair) == 10.0);
    CHECK(hypervolume(pair) == 4.0);
    CHECK(facet_volume_mean(pair) == 2.5);
    CHECK(am_from_perimeter(pair) == 2.5);
    CHECK(close_rel(gm_from_volume(pair), 2.0, 1e-12));
    CHECK(close_rel(hm_from_ratio(pair), 1.6, 1e-12));

    const hyper_rect box{{3, 4, 5}};
    CHECK(hyperperimeter(box) == 48.0);
    CHECK(hypervolume(box) == 60.0);
    CHECK(close_rel(facet_volume_mean(box), 47.0 / 3.0, 1e-12));
    CHECK(am_from_perimeter(box) == 4.0);
    CHECK(close_rel(gm_from_volume(box), 3.9148676411688634, 1e-12));  // 60^(1/3)
    CHECK(close_rel(hm_from_ratio(box), 180.0 / 47.0, 1e-12));
}

TEST_CASE("box readings equal the sample means") {
    support::rng_stream rng(421);
    for (int i = 0; i < 300; ++i) {
        const int n = rng.uniform_int(2, 10);
        hyper_rect r;
        for (int j = 0; j < n; ++j) r.edges.push_back(rng.log_uniform(0.1, 50.0));
        const weighted_sample s = weighted_sample::equal_weights(r.edges);
        CHECK(close_rel(am_from_perimeter(r), arithmetic_mean(s), 1e-12));
        CHECK(close_rel(gm_from_volume(r), geometric_mean(s), 1e-12));
        CHECK(close_rel(hm_from_ratio(r), harmonic_mean(s), 1e-12));
    }
}

TEST_CASE("degenerate boxes are rejected") {
    CHECK_THROWS_AS(hyperperimeter(hyper_rect{{5}}), invalid_argument);
    CHECK_THROWS_AS(hypervolume(hyper_rect{{2, 0}}), invalid_argument);
    CHECK_THROWS_AS(hypervolume(hyper_rect{{2, -3}}), invalid_argument);
    CHECK_THROWS_AS(facet_volume_mean(hyper_rect{{}}), invalid_argument);
}

TEST_CASE("circle construction realizes the three means") {
    const circle_construction c = build_circle_construction(1, 4);
    CHECK(c.radius_oh == 2.5);
    CHECK(close_rel(c.chord_hg, 2.0, 1e-12));
    CHECK(close_rel(c.segment_hd, 1.6, 1e-12));

    const circle_construction d = build_circle_construction(8, 13);
    CHECK(d.radius_oh == 10.5);
    CHECK(close_rel(d.chord_hg, 10.198039027185569, 1e-12));   // sqrt(104)
    CHECK(close_rel(d.segment_hd, 208.0 / 21.0, 1e-12));

    support::rng_stream rng(422);
    for (int i = 0; i < 200; ++i) {
        const double x1 = rng.log_uniform(0.01, 100.0);
        const double x2 = rng.log_uniform(0.01, 100.0);
        const circle_construction cc = build_circle_construction(x1, x2);
        const weighted_sample s = weighted_sample::equal_weights({x1, x2});
        CHECK(close_rel(cc.radius_oh, arithmetic_mean(s), 1e-12));
        CHECK(close_rel(cc.chord_hg, geometric_mean(s), 1e-12));
        CHECK(close_rel(cc.segment_hd, harmonic_mean(s), 1e-12));
        CHECK(cc.radius_oh >= cc.chord_hg * (1 - 1e-12));
        CHECK(cc.chord_hg >= cc.segment_hd * (1 - 1e-12));
    }

    CHECK_THROWS_AS(build_circle_construction(0, 3), domain_error);
    CHECK_THROWS_AS(build_circle_construction(2, -1), domain_error);
}

TEST_CASE("arithmetic-geometric mean") {
    CHECK(close_rel(arithmetic_geometric_mean(1, 2), 1.4567910310469069, 1e-12));
    CHECK(close_rel(arithmetic_geometric_mean(1, 4), 2.2430285802876026, 1e-12));
    CHECK(arithmetic_geometric_mean(3.25, 3.25) == 3.25);

    support::rng_stream rng(423);
    for (int i = 0; i < 200; ++i) {
        const double a = rng.log_uniform(0.01, 100.0);
        const double b = rng.log_uniform(0.01, 100.0);
        const agm_result r = arithmetic_geometric_mean_trace(a, b);
        const weighted_sample s = weighted_sample::equal_weights({a, b});
        const double gm = geometric_mean(s);
        const double am = arithmetic_mean(s);
        CHECK(r.value >= gm * (1 - 1e-12));
        CHECK(r.value <= am * (1 + 1e-12));
        CHECK(r.iterations <= 64);
        // symmetric down to the last bit
        CHECK(arithmetic_geometric_mean(a, b) == arithmetic_geometric_mean(b, a));
        if (std::fabs(a - b) > 1e-6 * std::max(a, b)) {
            CHECK(r.value > gm);
            CHECK(r.value < am);
            CHECK(r.iterations > 0);
        }
    }

    CHECK_THROWS_AS(arithmetic_geometric_mean(0, 1), domain_error);
    CHECK_THROWS_AS(arithmetic_geometric_mean(1, -1), domain_error);
}
