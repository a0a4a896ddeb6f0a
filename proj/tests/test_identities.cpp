#include "doctest.h"

#include "qturan/errors.hpp"
#include "qturan/identities.hpp"

using namespace qturan;

TEST_CASE("q-binomial theorem holds coefficientwise") {
    const auto rep = verify_q_binomial(Rational(1, 3), Rational(1, 2), 20);
    CHECK(rep.pass);
    CHECK(rep.certified);
    CHECK(rep.order == 20);
    CHECK(rep.max_residual == "0");
    CHECK_THROWS_AS(verify_q_binomial(Rational(2), Rational(1, 2), 8), domain_error);
    CHECK_THROWS_AS(verify_q_binomial(Rational(1, 3), Rational(3, 2), 8), domain_error);
}

TEST_CASE("symmetric product identity holds coefficientwise") {
    const auto rep = verify_symmetric_vandermonde(Rational(1, 3), Rational(2, 5), Rational(1, 2), 16);
    CHECK(rep.pass);
    CHECK(rep.certified);
    CHECK(rep.max_residual == "0");
    // Degenerate corners still pass: a = 0 collapses one factor to 1/(z;q)_inf.
    CHECK(verify_symmetric_vandermonde(Rational(0), Rational(1, 2), Rational(1, 3), 12).pass);
}

TEST_CASE("q-Gauss summation verified within certified enclosures") {
    const auto a = BoundedFloat::from_rational(Rational(1, 2));
    const auto b = BoundedFloat::from_rational(Rational(1, 2));
    const auto c = BoundedFloat::from_rational(Rational(1, 8));
    const auto q = BoundedFloat::from_rational(Rational(1, 2));
    const auto rep = verify_heine_gauss(a, b, c, q, 48);
    CHECK(rep.pass);
    CHECK(rep.certified);

    // Argument c/(ab) >= 1 is outside the summation's region.
    const auto big_c = BoundedFloat::from_rational(Rational(1, 2));
    CHECK_THROWS_AS(verify_heine_gauss(a, b, big_c, q, 16), domain_error);
}
