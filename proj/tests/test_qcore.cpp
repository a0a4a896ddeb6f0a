#include "doctest.h"

#include "qturan/errors.hpp"
#include "qturan/qcore.hpp"

using namespace qturan;

TEST_CASE("q-number at rational arguments") {
    const Rational q(1, 2);
    CHECK(q_number(2L, q) == Rational(3, 2));
    CHECK(q_number(3L, q) == Rational(7, 4));
    CHECK(q_number(0L, q) == Rational(0));
    CHECK(q_number(Rational(2), q) == Rational(3, 2));
}

TEST_CASE("finite q-Pochhammer values and tables") {
    const Rational q(1, 2);
    CHECK(q_pochhammer(Rational(1, 2), q, 0) == Rational(1));
    CHECK(q_pochhammer(Rational(1, 2), q, 2) == Rational(3, 8));
    const auto table = q_pochhammer_table(Rational(1, 2), q, 3);
    REQUIRE(table.size() == 4);
    CHECK(table[0] == Rational(1));
    CHECK(table[1] == Rational(1, 2));
    CHECK(table[2] == Rational(3, 8));
    CHECK(table[3] == Rational(21, 64));
}

TEST_CASE("infinite q-Pochhammer encloses the Euler value") {
    // (1/2; 1/2)_inf = 0.2887880950866024...
    const BoundedFloat q = BoundedFloat::from_rational(Rational(1, 2));
    const BoundedFloat p = q_pochhammer_inf(q, q);
    CHECK(p.at_least(Rational(288788, 1000000)));
    CHECK(p.at_most(Rational(288789, 1000000)));
}

TEST_CASE("q-gamma at small integers") {
    const Rational q(1, 2);
    CHECK(q_gamma(1L, q) == Rational(1));
    CHECK(q_gamma(2L, q) == Rational(1));
    CHECK(q_gamma(3L, q) == Rational(3, 2));
    CHECK(q_gamma(Rational(3), q) == Rational(3, 2));
    // Gamma_q(4) = [3]_q [2]_q = (7/4)(3/2)
    CHECK(q_gamma(4L, q) == Rational(21, 8));
}

TEST_CASE("inverse q-gamma ladder tracks the exact values") {
    const BoundedFloat q = BoundedFloat::from_rational(Rational(1, 2));
    const auto ladder = inv_q_gamma_ladder(Rational(1), q, 2);
    REQUIRE(ladder.size() == 3);
    CHECK(ladder[0].contains(Rational(1)));      // 1/Gamma_q(1)
    CHECK(ladder[1].contains(Rational(1)));      // 1/Gamma_q(2)
    CHECK(ladder[2].contains(Rational(2, 3)));   // 1/Gamma_q(3)
}

TEST_CASE("exact rational powers of q") {
    CHECK(exact_qpow(Rational(1, 4), Rational(1, 2)) == Rational(1, 2));
    CHECK(exact_qpow(Rational(1, 2), Rational(2)) == Rational(1, 4));
    CHECK(exact_qpow(Rational(1, 2), Rational(0)) == Rational(1));
    CHECK(!exact_qpow(Rational(1, 2), Rational(1, 2)).has_value());
    // Interval route agrees where the exact route exists.
    const BoundedFloat v = qpow(BoundedFloat::from_rational(Rational(1, 4)), Rational(3, 2));
    CHECK(v.contains(Rational(1, 8)));
}
