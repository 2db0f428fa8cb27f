#include "doctest.h"

#include <sstream>

#include "golden.hpp"
#include "hooktab/cli.hpp"

namespace {

int run(std::vector<std::string> args, const std::string& input, std::string* out = nullptr) {
    std::istringstream in(input);
    std::ostringstream o, e;
    const int code = hooktab::cli::run(args, in, o, e);
    if (out) *out = o.str();
    return code;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("golden cases") {
    const auto outcomes = golden::run_all(HOOKTAB_GOLDEN_DIR);
    CHECK(outcomes.size() >= 30);
    for (const auto& o : outcomes) {
        CAPTURE(o.c.name);
        CAPTURE(o.detail);
        CHECK(o.passed);
    }
}

TEST_CASE("exit codes") {
    CHECK(run({"validate"}, "1|2") == 0);
    CHECK(run({"validate"}, "2|1") == 1);
    CHECK(run({"validate"}, "1|") == 2);
    CHECK(run({"frobnicate"}, "") == 2);
    CHECK(run({"enum", "--family", "hvt", "--lambda", "1", "--n", "1", "--excess", "0", "--count"}, "") == 0);
    CHECK(run({"identity", "--lambda", "1", "--n", "1", "--excess", "-1"}, "") == 2);
}

TEST_CASE("enum listing") {
    std::string out;
    REQUIRE(run({"enum", "--family", "hvt", "--lambda", "1", "--n", "1", "--excess", "1"}, "", &out) == 0);
    CHECK(out == "1\n1+1\n");
}

}
