#include "doctest.h"

#include "qturan/errors.hpp"
#include "qturan/series.hpp"
#include "qturan/turanian.hpp"

using namespace qturan;

namespace {
std::vector<Rational> ones(long len) { return std::vector<Rational>(static_cast<std::size_t>(len), Rational(1)); }
}  // namespace

TEST_CASE("family series coefficients at q = 1/2, value = 1/2") {
    const Rational q(1, 2), v(1, 2);
    const long M = 2;
    const auto f = family_series(FamilySpec<Rational>{Family::F, ones(M + 1), q, v}, M);
    CHECK(f[0] == Rational(1));
    CHECK(f[1] == Rational(1));
    CHECK(f[2] == Rational(1));
    const auto d = family_series(FamilySpec<Rational>{Family::D, ones(M + 1), q, v}, M);
    CHECK(d[1] == Rational(1));
    CHECK(d[2] == Rational(3, 2));
    const auto g = family_series(FamilySpec<Rational>{Family::G, ones(M + 1), q, v}, M);
    CHECK(g[1] == Rational(1));
    CHECK(g[2] == Rational(2, 3));
    const auto h = family_series(FamilySpec<Rational>{Family::H, ones(M + 1), q, v}, M);
    CHECK(h[1] == Rational(2));
    CHECK(h[2] == Rational(8, 3));
}

TEST_CASE("family series guards") {
    const Rational q(1, 2);
    CHECK_THROWS_AS(family_series(FamilySpec<Rational>{Family::F, ones(2), q, Rational(1, 2)}, 5),
                    order_error);
    // (1; q)_n vanishes for n >= 1, so family G rejects value = 1.
    CHECK_THROWS_AS(family_series(FamilySpec<Rational>{Family::G, ones(6), q, Rational(1)}, 4),
                    domain_error);
}

TEST_CASE("truncated basic hypergeometric series") {
    const Rational q(1, 2);
    // 1phi0 with upper parameter q: every coefficient collapses to 1.
    HypergeometricParams<Rational> p{{q}, {}, q};
    const auto s = rphis(p, 4);
    for (long n = 0; n <= 4; ++n) CHECK(s[static_cast<std::size_t>(n)] == Rational(1));

    HypergeometricParams<Rational> too_many{{q, q, q}, {q}, q};
    CHECK_THROWS_AS(rphis(too_many, 4), domain_error);

    // Lower parameter 2 hits the zero factor 1 - 2q at q = 1/2.
    HypergeometricParams<Rational> vanishing{{q}, {Rational(2)}, q};
    CHECK_THROWS_AS(rphis(vanishing, 4), domain_error);
}

TEST_CASE("paired families agree after the base transformation") {
    const Rational q(1, 3), v(1, 2);
    const long M = 6;
    std::vector<Rational> base = {Rational(1),     Rational(2, 3), Rational(3, 5), Rational(7, 11),
                                  Rational(1, 2),  Rational(5, 9), Rational(4, 7), Rational(1, 4)};
    const std::pair<Family, Family> maps[4] = {{Family::D, Family::F},
                                               {Family::F, Family::D},
                                               {Family::H, Family::G},
                                               {Family::G, Family::H}};
    for (const auto& mp : maps) {
        const auto lhs = family_series(FamilySpec<Rational>{mp.first, base, q, v}, M);
        const auto rhs = family_series(
            FamilySpec<Rational>{mp.second, dual_base(mp.first, base, q), q, v}, M);
        for (long n = 0; n <= M; ++n)
            CHECK(lhs[static_cast<std::size_t>(n)] == rhs[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("absolute gamma-weighted series for family G") {
    const BoundedFloat q = BoundedFloat::from_rational(Rational(1, 2));
    std::vector<BoundedFloat> base(5, BoundedFloat::from_long(1));
    const auto s = family_series_absolute(Family::G, base, q, Rational(1), 3);
    CHECK(s[0].contains(Rational(1)));       // 1/Gamma_q(1)
    CHECK(s[1].contains(Rational(1)));       // 1/Gamma_q(2)
    CHECK(s[2].contains(Rational(2, 3)));    // 1/Gamma_q(3)
    CHECK(s[3].contains(Rational(8, 21)));   // 1/Gamma_q(4) = 8/21
    CHECK_THROWS_AS(family_series_absolute(Family::F, base, q, Rational(1), 3), domain_error);
}

TEST_CASE("radius estimate from a geometric coefficient prefix") {
    std::vector<Rational> coeffs;
    Rational c(1);
    for (int n = 0; n <= 6; ++n) {
        coeffs.push_back(c);
        c = c * Rational(2);
    }
    const auto est = radius_estimate(coeffs, 6);
    CHECK(est.value == Rational(1, 2));
}

TEST_CASE("series evaluation") {
    TruncatedSeries<Rational> s(std::vector<Rational>{Rational(1), Rational(2), Rational(3)});
    CHECK(s.order() == 2);
    CHECK(eval(s, Rational(1, 2)) == Rational(11, 4));
    CHECK_THROWS(TruncatedSeries<Rational>(std::vector<Rational>{}));
}
