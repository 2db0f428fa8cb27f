#include "doctest.h"

#include <stdexcept>

#include "hooktab/verify.hpp"

using namespace hooktab;

namespace {

VerifyOptions small() {
    VerifyOptions o;
    o.lambda = Partition{1};
    o.bounds = {2, 2};
    o.max_outer = 4;
    o.max_index = 2;
    o.strategies = 5;
    o.seed = 3;
    return o;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("every check passes on a small instance") {
    for (const auto& id : check_ids()) {
        CAPTURE(id);
        const auto r = verify(id, small());
        CHECK(r.passed());
        CHECK(r.instances_checked > 0);
        CHECK(r.check_id == id);
    }
    CHECK_THROWS_AS(verify("nonsense", small()), std::invalid_argument);
}

TEST_CASE("reports are independent of the worker count") {
    for (const auto& id : check_ids()) {
        auto one = small();
        auto many = small();
        many.jobs = 3;
        CHECK(verify(id, one).to_json(false) == verify(id, many).to_json(false));
    }
}

TEST_CASE("json layout") {
    VerificationReport r;
    r.check_id = "x";
    r.parameters = {{"n", "3"}};
    r.instances_checked = 2;
    r.failures = {"bad"};
    const auto j = r.to_json(false);
    CHECK(j.find("\"schema\": 1") != std::string::npos);
    CHECK(j.find("\"passed\": false") != std::string::npos);
    CHECK(j.find("elapsed_ms") == std::string::npos);
    CHECK(r.to_json(true).find("elapsed_ms") != std::string::npos);
}

TEST_CASE("strategy seeds differ per input and per run") {
    CHECK(strategy_seed(0, 0, 0) != strategy_seed(0, 0, 1));
    CHECK(strategy_seed(0, 0, 0) != strategy_seed(0, 1, 0));
    CHECK(strategy_seed(0, 0, 0) != strategy_seed(1, 0, 0));
    CHECK(strategy_seed(5, 7, 9) == strategy_seed(5, 7, 9));
}

}
