#include "doctest.h"

#include "pmeans/basket.hpp"
#include "pmeans/csv.hpp"
#include "pmeans/errors.hpp"
#include "pmeans/means.hpp"
#include "support.hpp"

using namespace pmeans;
using support::close_rel;

TEST_CASE("2017 basket aggregates") {
    const index_basket b = parse_basket_csv(support::data_path("cpi2017.csv"));
    REQUIRE(b.size() == 8);
    CHECK(close_rel(aggregate_index(b, mean_kind::arithmetic), 130.2061, 1e-12));
    CHECK(close_rel(aggregate_index(b, mean_kind::geometric), 129.39347066299552, 1e-12));
    CHECK(close_rel(aggregate_index(b, mean_kind::harmonic), 128.49345737376734, 1e-12));

    const index_report r = summarize(b);
    CHECK(close_rel(r.arithmetic, 130.2061, 1e-12));
    CHECK(close_rel(r.geometric, 129.39347066299552, 1e-12));
    CHECK(close_rel(r.harmonic, 128.49345737376734, 1e-12));
    CHECK(close_rel(r.diff_arithmetic_geometric, r.arithmetic - r.geometric, 1e-12));
    CHECK(close_rel(r.diff_geometric_harmonic, r.geometric - r.harmonic, 1e-12));
    CHECK(close_rel(r.diff_arithmetic_harmonic, r.arithmetic - r.harmonic, 1e-12));
    CHECK(close_rel(r.spread_percent, 1.315332097522817, 1e-12));
}

TEST_CASE("aggregate matches the weighted mean of the sub-indices") {
    support::rng_stream rng(451);
    for (int i = 0; i < 300; ++i) {
        const index_basket b = rng.basket(2, 12);
        weighted_sample s;
        for (const auto& e : b.entries) {
            s.values.push_back(e.sub_index);
            s.weights.push_back(e.weight);
        }
        for (mean_kind k : all_mean_kinds)
            CHECK(aggregate_index(b, k) == mean_value(s, k));
    }
}

TEST_CASE("mean choice orders the index") {
    support::rng_stream rng(452);
    for (int i = 0; i < 300; ++i) {
        const index_report r = summarize(rng.basket(2, 12));
        CHECK(r.harmonic <= r.geometric * (1 + 1e-12));
        CHECK(r.geometric <= r.arithmetic * (1 + 1e-12));
        CHECK(r.diff_arithmetic_geometric >= -1e-9);
        CHECK(r.diff_geometric_harmonic >= -1e-9);
        CHECK(r.spread_percent >= -1e-9);
        CHECK(r.spread_percent < 100.0);
    }
}

TEST_CASE("basket validation") {
    index_basket b;
    b.entries = {{"food", 0.5, 120.0}, {"rent", 0.5, 140.0}};
    CHECK_NOTHROW(validate(b));

    index_basket empty;
    CHECK_THROWS_AS(validate(empty), invalid_basket);

    index_basket duplicated = b;
    duplicated.entries[1].category = "food";
    CHECK_THROWS_AS(validate(duplicated), invalid_basket);

    index_basket lopsided = b;
    lopsided.entries[0].weight = 0.6;
    CHECK_THROWS_AS(validate(lopsided), invalid_basket);

    index_basket zero_weight = b;
    zero_weight.entries[0].weight = 0.0;
    zero_weight.entries[1].weight = 1.0;
    CHECK_THROWS_AS(validate(zero_weight), invalid_basket);

    index_basket bad_index = b;
    bad_index.entries[0].sub_index = -3.0;
    CHECK_THROWS_AS(validate(bad_index), invalid_basket);

    // rounded published weights pass the 1e-6 gate
    index_basket rounded = b;
    rounded.entries[0].weight = 0.4999996;
    CHECK_NOTHROW(validate(rounded));
}
