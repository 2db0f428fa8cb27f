#include "doctest.h"

#include "hooktab/enumeration.hpp"
#include "hooktab/errors.hpp"
#include "hooktab/mixed_tableau.hpp"
#include "hooktab/switching.hpp"
#include "hooktab/text_format.hpp"
#include "oracles.hpp"

using namespace hooktab;

namespace {

const char* kQ410 =
    ".|.|.|.|.|.|.|. / .|.|.|.|.|.|.|. / .|.|.|.|.|.|.|. / .|.|.|.|.|.|.|. / "
    ".|.|.|.|.|.|.|. / .|.|.|.|.|.|.|. / .|.|.|a2|a2|a1|b5|b1 / .|.|a2|a1|b6|b2|b1 / .|.|b8|b6|b5|b2";

}  // namespace

TEST_SUITE("mixed") {

TEST_CASE("classification of the GG-jdt example input") {
    const auto q = parse_mixed(kQ410);
    const auto f = classify_mixed(q);
    CHECK(f.alpha_column_strict);
    CHECK(f.beta_row_strict);
    CHECK(f.sorted_alpha_beta);
    CHECK(f.flagged_mixed);
    CHECK(oracle::same(oracle::classify(q), f));
    CHECK(is_totally_column_strict(c_beta_shift(gg_jdt(q), ShiftSign::plus)));
}

TEST_CASE("classification matches a pair scan on small shapes") {
    std::size_t seen = 0;
    for (const auto& shape : skew_shapes_up_to(4)) {
        if (shape.size() == 0) continue;
        oracle::for_each_mixed(shape, -1, 2, [&](const MixedTableau& t) {
            ++seen;
            REQUIRE(oracle::same(oracle::classify(t), classify_mixed(t)));
        });
    }
    CHECK(seen > 5000);
}

TEST_CASE("c_beta shifts are mutually inverse") {
    for (const auto& shape : skew_shapes_up_to(3)) {
        if (shape.size() == 0) continue;
        oracle::for_each_mixed(shape, -2, 2, [&](const MixedTableau& t) {
            REQUIRE(c_beta_shift(c_beta_shift(t, ShiftSign::plus), ShiftSign::minus) == t);
            REQUIRE(c_beta_shift(c_beta_shift(t, ShiftSign::minus), ShiftSign::plus) == t);
        });
    }
    const auto t = parse_mixed(".|.|a2 / .|b1|a1 / b2");
    CHECK(serialize(c_beta_shift(t, ShiftSign::plus)) == ".|.|a2 / .|b1|a1 / b0");
}

TEST_CASE("exquisite examples") {
    for (const char* e : {".|.|a2 / .|b1|a1 / b2", ".|.|a2 / .|b1|a1 / b1", ".|.|a2 / .|a1|a1 / b2",
                          ".|.|a2 / .|a1|a1 / b1"})
        CHECK(is_exquisite(parse_mixed(e)));
    CHECK_FALSE(is_exquisite(parse_mixed(".|.|a2 / .|a1|b1 / b2")));
    CHECK_FALSE(is_exquisite(parse_mixed(".|.|a3 / .|b1|a1 / b2")));
}

TEST_CASE("mixed weight") {
    const auto t = parse_mixed(".|.|a2 / .|b1|a1 / b2");
    CHECK(weight_mixed(t).to_string() == "a1^1 a2^1 b1^1 b2^1");
    CHECK(t.count(Symbol::alpha) == 2);
    CHECK_THROWS_AS(weight_mixed(parse_mixed("b0")), NonpositiveBetaIndex);
}

TEST_CASE("construction rejects bad domains") {
    SkewShape s(Partition{2}, Partition{1});
    CHECK_THROWS_AS(MixedTableau(s, {}), std::invalid_argument);
    CHECK_THROWS_AS(MixedTableau(s, {{Cell{1, 2}, alpha(0)}}), std::invalid_argument);
    CHECK_THROWS_AS(MixedTableau(s, {{Cell{1, 1}, alpha(1)}}), std::invalid_argument);
}

}
