#include "doctest.h"

#include "qturan/errors.hpp"
#include "qturan/examples.hpp"
#include "qturan/turanian_bounds.hpp"

using namespace qturan;

namespace {
std::vector<Rational> ones(long len) { return std::vector<Rational>(static_cast<std::size_t>(len), Rational(1)); }
std::vector<BoundedFloat> fones(long len) {
    return std::vector<BoundedFloat>(static_cast<std::size_t>(len), BoundedFloat::from_long(1));
}
}  // namespace

TEST_CASE("exact sandwich certificates: family F") {
    const long M = 16;
    const std::vector<Rational> grid = {Rational(0), Rational(1, 8), Rational(1, 4)};
    const auto rep = bounds_check<Rational>(Family::F, ones(M + 2), Rational(1, 2), Rational(1),
                                            Rational(1), Rational(2), grid, M);
    CHECK(rep.mode == "exact-certificate");
    CHECK(rep.fail == 0);
    CHECK(rep.undetermined == 0);
    CHECK(rep.rows.size() == grid.size());
    for (const auto& row : rep.rows) {
        CHECK(row.status == CheckStatus::Pass);
        CHECK(row.in_radius);
        for (const auto& e : row.entries) {
            CHECK(e.certified);
            if (row.x.is_zero() &&
                e.expectation == BoundExpectation::StrictPositiveEqualityAtZero) {
                CHECK(e.equality);
                CHECK(!e.strict);
            }
            if (!row.x.is_zero()) CHECK(e.strict);
        }
    }
}

TEST_CASE("exact sandwich certificates: families D, G, H") {
    const long M = 12;
    const std::vector<Rational> grid = {Rational(0), Rational(1, 8), Rational(1, 4)};
    for (Family fam : {Family::D, Family::G, Family::H}) {
        CAPTURE(to_cstring(fam));
        const auto rep = bounds_check<Rational>(fam, ones(M + 2), Rational(1, 2), Rational(1),
                                                Rational(1), Rational(1), grid, M);
        CHECK(rep.fail == 0);
        CHECK(rep.undetermined == 0);
    }
}

TEST_CASE("float sandwich intervals agree with the exact verdicts") {
    const long M = 16;
    const std::vector<Rational> grid = {Rational(0), Rational(1, 8), Rational(1, 4)};
    const auto rep = bounds_check<BoundedFloat>(Family::F, fones(M + 2),
                                                BoundedFloat::from_rational(Rational(1, 2)),
                                                Rational(1), Rational(1), Rational(2), grid, M);
    CHECK(rep.mode == "float-interval");
    CHECK(rep.fail == 0);
    CHECK(rep.undetermined == 0);
    for (const auto& row : rep.rows)
        if (!row.x.is_zero())
            for (const auto& e : row.entries) CHECK(e.strict);
}

TEST_CASE("float H sandwich accepts an exact base-ratio hint") {
    const long M = 16;
    const std::vector<Rational> grid = {Rational(1, 8), Rational(1, 4)};
    const auto rep = bounds_check<BoundedFloat>(Family::H, fones(M + 2),
                                                BoundedFloat::from_rational(Rational(1, 2)),
                                                Rational(1), Rational(1), Rational(1), grid, M,
                                                default_truncation_eps(), Rational(1));
    CHECK(rep.fail == 0);
}

TEST_CASE("bounds domain and grid guards") {
    const long M = 8;
    const std::vector<Rational> grid = {Rational(1, 8)};
    CHECK_THROWS_AS(bounds_check<Rational>(Family::D, ones(M + 2), Rational(1, 2), Rational(0),
                                           Rational(1), Rational(1), grid, M),
                    domain_error);
    CHECK_THROWS_AS(bounds_check<Rational>(Family::F, ones(M + 2), Rational(1, 2), Rational(1),
                                           Rational(1), Rational(1), {Rational(-1, 8)}, M),
                    grid_error);
    CHECK_THROWS_AS(bounds_check<Rational>(Family::F, ones(3), Rational(1, 2), Rational(1),
                                           Rational(1), Rational(1), grid, M),
                    order_error);
}

TEST_CASE("points beyond the radius estimate are flagged, not dropped") {
    const long M = 12;
    const std::vector<Rational> grid = {Rational(1, 8), Rational(3)};
    const auto rep = bounds_check<Rational>(Family::F, ones(M + 2), Rational(1, 2), Rational(1),
                                            Rational(1), Rational(1), grid, M);
    REQUIRE(rep.rows.size() == 2);
    CHECK(rep.rows[0].in_radius);
    CHECK(!rep.rows[1].in_radius);
}

TEST_CASE("tail-certified series enclosure") {
    // Geometric series 1 + x + x^2 + ... at x = 1/4: the certified tail of the
    // all-ones truncation encloses the true value 4/3.
    TruncatedSeries<BoundedFloat> s(fones(3));
    const auto e = detail::eval_with_tail(s, BoundedFloat::from_rational(Rational(1, 4)),
                                          BoundedFloat::from_rational(Rational(1, 4)));
    CHECK(e.certified);
    CHECK(e.value.contains(Rational(4, 3)));

    // A tail ratio >= 1 cannot be certified.
    const auto u = detail::eval_with_tail(s, BoundedFloat::from_rational(Rational(1, 4)),
                                          BoundedFloat::from_long(1));
    CHECK(!u.certified);
}

TEST_CASE("base ratio sup derived from certified monotone ratios") {
    std::vector<BoundedFloat> halving;
    BoundedFloat v = BoundedFloat::from_long(1);
    const BoundedFloat half = BoundedFloat::from_rational(Rational(1, 2));
    for (int i = 0; i < 6; ++i) {
        halving.push_back(v);
        v = v * half;
    }
    const auto sup = detail::derive_base_ratio_sup(halving, 4);
    REQUIRE(sup.has_value());
    CHECK(sup->contains(Rational(1, 2)));

    std::vector<BoundedFloat> growing = {
        BoundedFloat::from_long(1), BoundedFloat::from_long(1), BoundedFloat::from_long(2),
        BoundedFloat::from_long(6), BoundedFloat::from_long(24)};
    CHECK(!detail::derive_base_ratio_sup(growing, 3).has_value());
}

TEST_CASE("Bessel-type sandwich row at q = 1/2, nu = 1, y = 1") {
    const auto q = BoundedFloat::from_rational(Rational(1, 2));
    const auto row = q_bessel_turan_row(1, Rational(1), BoundedFloat::from_long(1), q, 32);
    CHECK(row.lower_ok);
    CHECK(row.upper_ok);
    CHECK(!row.undecided);
    // Lower bound is exactly (1/2) / [2]_q = 1/3 at these parameters.
    CHECK(row.lower.contains(Rational(1, 3)));
    CHECK(row.middle.at_least(Rational(8337, 10000)));
    CHECK(row.middle.at_most(Rational(8339, 10000)));
    CHECK(row.upper.at_least(Rational(13693, 10000)));
    CHECK(row.upper.at_most(Rational(13694, 10000)));

    // Cross-check the upper bound against its definition q^nu/[nu+1]_q * I_nu^2.
    const auto i1 = q_bessel_i(1, Rational(1), BoundedFloat::from_long(1), q, 32);
    CHECK(i1.at_least(Rational(202683, 100000)));
    CHECK(i1.at_most(Rational(202685, 100000)));
    CHECK(row.upper.intersects(i1 * i1 / BoundedFloat::from_long(3)));
}

TEST_CASE("the q-analogue approaches the classical Bessel function as q -> 1") {
    const auto q = BoundedFloat::from_rational(Rational(999, 1000));
    const auto row = q_bessel_limit_row(1, 1, BoundedFloat::from_long(1), q, 24);
    CHECK(row.within_tolerance);
}

TEST_CASE("confluent-series value and parameter log-concavity probe") {
    const auto q = BoundedFloat::from_rational(Rational(1, 2));
    const auto b = BoundedFloat::from_rational(Rational(1, 3));
    const auto x = BoundedFloat::from_rational(Rational(1, 2));
    const auto v = q_kummer_value(2, BoundedFloat::from_rational(Rational(1, 2)), b, q, x, 32);
    CHECK(v.at_least(Rational(27050, 10000)));
    CHECK(v.at_most(Rational(27055, 10000)));

    const auto probe = kummer_concavity_probe(2, Rational(2), 1, b, q, x, 32);
    CHECK(probe.is_positive());
    CHECK_THROWS_AS(kummer_concavity_probe(2, Rational(1), 2, b, q, x, 32), domain_error);
}
