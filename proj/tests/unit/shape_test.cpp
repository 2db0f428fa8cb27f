#include "doctest.h"

#include <stdexcept>

#include "hooktab/monomial.hpp"
#include "hooktab/shape.hpp"

using namespace hooktab;

TEST_SUITE("shape") {

TEST_CASE("partition basics") {
    Partition p{3, 3, 1};
    CHECK(p.size() == 7);
    CHECK(p.length() == 3);
    CHECK(p.row_length(2) == 3);
    CHECK(p.row_length(4) == 0);
    CHECK(p.column_height(1) == 3);
    CHECK(p.column_height(3) == 2);
    CHECK(p.contains(Cell{3, 1}));
    CHECK_FALSE(p.contains(Cell{3, 2}));
    CHECK(p.contains(Partition{2, 1}));
    CHECK(p.to_string() == "3,3,1");
    CHECK(Partition{2, 1, 0, 0} == Partition{2, 1});
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
}

TEST_CASE("addable cells and parsing") {
    Partition p{2, 1};
    const auto add = p.addable_cells();
    REQUIRE(add.size() == 3);
    CHECK(add[0] == Cell{1, 3});
    CHECK(add[1] == Cell{2, 2});
    CHECK(add[2] == Cell{3, 1});
    CHECK(parse_partition("") == Partition{});
    CHECK(parse_partition("3,1") == Partition{3, 1});
    CHECK_THROWS(parse_partition("1,x"));
}

TEST_CASE("partition counts") {
    const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
    for (int n = 0; n <= 8; ++n) CHECK(partitions_of(n).size() == static_cast<std::size_t>(expected[n]));
    int total = 0;
    for (int n = 1; n <= 4; ++n) total += static_cast<int>(partitions_of(n).size());
    // partitions containing (1) with up to 3 more cells: all of sizes 1..4
    CHECK(partitions_containing(Partition{1}, 3).size() == static_cast<std::size_t>(total));
}

TEST_CASE("skew shapes") {
    SkewShape s(Partition{3, 3, 1}, Partition{2, 1});
    CHECK(s.size() == 4);
    const auto cells = s.cells();
    REQUIRE(cells.size() == 4);
    CHECK(cells.front() == Cell{1, 3});
    CHECK(cells.back() == Cell{3, 1});
    CHECK(Cell{2, 5}.content() == 3);
    CHECK_THROWS_AS(SkewShape(Partition{1}, Partition{2}), std::invalid_argument);
}

TEST_CASE("monomials") {
    Monomial m({{x_var(2), 1}, {alpha_var(1), 2}, {x_var(2), 2}, {beta_var(3), 0}});
    CHECK(m.exponent(x_var(2)) == 3);
    CHECK(m.degree(VarKind::alpha) == 2);
    CHECK(m.to_string() == "x2^3 a1^2");
    CHECK(Monomial().to_string() == "1");
    CHECK(m.divided_by(x_var(2)).exponent(x_var(2)) == 2);
    CHECK(m.without(VarKind::x) == Monomial::of(alpha_var(1), 2));
    CHECK(Monomial::of(x_var(1)) < Monomial::of(x_var(1), 2));
    CHECK_THROWS_AS(Monomial({{x_var(0), 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Monomial({{x_var(1), -1}}), std::invalid_argument);
}

}
