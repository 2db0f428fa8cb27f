#include "doctest.h"

#include <random>

#include "hooktab/errors.hpp"
#include "hooktab/polynomial.hpp"

using namespace hooktab;

namespace {

TruncatedPolynomial random_poly(std::mt19937& rng, int cap) {
    std::uniform_int_distribution<int> coef(-3, 3), exp(0, 2), count(0, 5);
    TruncatedPolynomial p(cap);
    for (int k = count(rng); k > 0; --k) {
        Monomial m({{x_var(1), exp(rng)}, {x_var(2), exp(rng)}, {alpha_var(1), exp(rng)}, {beta_var(1), exp(rng)}});
        p.add_term(m, coef(rng));
    }
    return p;
}

}  // namespace

TEST_SUITE("polynomial") {

TEST_CASE("ring laws on random truncated series") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int cap = 3;
        auto a = random_poly(rng, cap), b = random_poly(rng, cap), c = random_poly(rng, cap);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("truncation drops terms above the cap") {
    TruncatedPolynomial p(2);
    p.add_term(Monomial::of(x_var(1), 3), 1);
    CHECK(p.is_zero());
    p.add_term(Monomial({{x_var(1), 2}, {alpha_var(1), 5}}), 4);
    CHECK(p.term_count() == 1);
    p.add_term(Monomial({{x_var(1), 2}, {alpha_var(1), 5}}), -4);
    CHECK(p.is_zero());
}

TEST_CASE("geometric series inverts 1 - a1 x1") {
    const int cap = 6;
    TruncatedPolynomial one_minus = TruncatedPolynomial::constant(cap, 1);
    one_minus.add_term(Monomial({{alpha_var(1), 1}, {x_var(1), 1}}), -1);
    TruncatedPolynomial series(cap);
    for (int k = 0; k <= cap; ++k) series.add_term(Monomial({{alpha_var(1), k}, {x_var(1), k}}), 1);
    CHECK(one_minus * series == TruncatedPolynomial::constant(cap, 1));
}

TEST_CASE("cap mismatch") {
    CHECK_THROWS_AS(TruncatedPolynomial(2) + TruncatedPolynomial(3), CapMismatch);
    CHECK_THROWS_AS(poly_mul(TruncatedPolynomial(2), TruncatedPolynomial(3)), CapMismatch);
}

TEST_CASE("exact division by a variable difference") {
    const int cap = 4;
    auto x1 = TruncatedPolynomial::monomial(cap, Monomial::of(x_var(1)));
    auto x2 = TruncatedPolynomial::monomial(cap, Monomial::of(x_var(2)));
    auto q = x1 * x1 + x2 * TruncatedPolynomial::monomial(cap, Monomial::of(beta_var(1)));
    CHECK(((x1 - x2) * q).divided_by_difference(1, 2) == q);
    CHECK_THROWS_AS(x1.divided_by_difference(1, 2), std::domain_error);
}

TEST_CASE("vandermonde and big coefficients") {
    auto v = vandermonde(3, 3);
    CHECK(v.term_count() == 6);
    CHECK(v.coefficient(Monomial({{x_var(1), 2}, {x_var(2), 1}})) == 1);
    CHECK(v.coefficient(Monomial({{x_var(2), 2}, {x_var(1), 1}})) == -1);

    auto two = TruncatedPolynomial::constant(0, 2);
    auto p = two;
    for (int i = 0; i < 7; ++i) p = p * p;
    CHECK(p.coefficient(Monomial()) == Integer(1) << 128);
}

TEST_CASE("diff lists mismatched monomials") {
    auto a = TruncatedPolynomial::monomial(2, Monomial::of(x_var(1)), 2);
    auto b = TruncatedPolynomial::monomial(2, Monomial::of(x_var(1)), 3);
    CHECK(poly_diff(a, a).empty());
    CHECK(poly_diff(a, b).size() == 1);
}

}
