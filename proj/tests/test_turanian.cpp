#include "doctest.h"

#include "qturan/errors.hpp"
#include "qturan/turanian.hpp"

using namespace qturan;

namespace {
std::vector<Rational> ones(long len) { return std::vector<Rational>(static_cast<std::size_t>(len), Rational(1)); }
std::vector<BoundedFloat> fones(long len) {
    return std::vector<BoundedFloat>(static_cast<std::size_t>(len), BoundedFloat::from_long(1));
}
}  // namespace

TEST_CASE("family F turanian: zero constant term, positive afterwards") {
    const long M = 8;
    FamilySpec<Rational> spec{Family::F, ones(M + 1), Rational(1, 2), Rational(1)};
    const auto rep = turanian_coeffs(spec, Rational(1), Rational(1), M);
    CHECK(rep.normalization == Normalization::Raw);
    CHECK(rep.delta[0] == Rational(0));
    CHECK(rep.delta[1] == Rational(1, 2));
    CHECK(rep.verdicts[0].is_zero());
    for (long m = 1; m <= M; ++m) {
        CHECK(rep.verdicts[static_cast<std::size_t>(m)].is_positive());
        CHECK(rep.verdicts[static_cast<std::size_t>(m)].certified);
    }
    CHECK(rep.pattern.to_string() == "all-positive-from-1");
}

TEST_CASE("family H turanian: zero constant term, negative afterwards") {
    const long M = 8;
    FamilySpec<Rational> spec{Family::H, ones(M + 1), Rational(1, 2), Rational(1, 2)};
    const auto rep = turanian_coeffs(spec, Rational(1), Rational(1), M);
    CHECK(rep.normalization == Normalization::Raw);
    CHECK(rep.delta[0] == Rational(0));
    CHECK(rep.delta[1] == Rational(-10, 21));
    for (long m = 1; m <= M; ++m) {
        CHECK(rep.verdicts[static_cast<std::size_t>(m)].is_negative());
        CHECK(rep.verdicts[static_cast<std::size_t>(m)].certified);
    }
}

TEST_CASE("family G turanian: positive from the constant term on") {
    const long M = 8;
    // q = 1/4 keeps q^(1/2) rational, so mu = 1/2 stays inside exact mode.
    FamilySpec<Rational> spec{Family::G, ones(M + 1), Rational(1, 4), Rational(1, 2)};
    const auto rep = turanian_coeffs(spec, Rational(1), Rational(1), M);
    CHECK(rep.normalization == Normalization::GammaPairMultiplied);
    CHECK(rep.delta[0] == Rational(3, 7));
    for (long m = 0; m <= M; ++m) {
        CHECK(rep.verdicts[static_cast<std::size_t>(m)].is_positive());
        CHECK(rep.verdicts[static_cast<std::size_t>(m)].certified);
    }
}

TEST_CASE("family D turanian: negative from the constant term on") {
    const long M = 12;
    FamilySpec<Rational> spec{Family::D, ones(M + 1), Rational(1, 2), Rational(1, 2)};
    const auto rep = turanian_coeffs(spec, Rational(1), Rational(1), M);
    CHECK(rep.normalization == Normalization::GammaPairDivided);
    CHECK(rep.delta[0] == Rational(-1, 2));
    CHECK(rep.delta[1] == Rational(-9, 8));
    for (long m = 0; m <= M; ++m) {
        CHECK(rep.verdicts[static_cast<std::size_t>(m)].is_negative());
        CHECK(rep.verdicts[static_cast<std::size_t>(m)].certified);
    }
}

TEST_CASE("value-level quadruples") {
    const Rational q(1, 2), a(1, 3);
    const auto quad = make_value_quad(q, a, Rational(1, 3), Rational(1, 2));
    CHECK(quad.b == Rational(1, 9));
    CHECK(quad.c == Rational(1, 6));
    CHECK(quad.d == Rational(1, 18));
    // t = 1/2 = q is recognized as a true shift; s = 1/3 gets a placeholder.
    CHECK(quad.beta == Rational(1));
    CHECK(!quad.alpha.is_integer());

    const long M = 12;
    FamilySpec<Rational> spec{Family::F, ones(M + 1), q, a};
    const auto rep = turanian_coeffs(spec, quad, M);
    CHECK(rep.delta[0] == Rational(0));
    CHECK(rep.delta[1] == Rational(2, 9));
    for (long m = 1; m <= M; ++m)
        CHECK(rep.verdicts[static_cast<std::size_t>(m)].is_positive());

    CHECK_THROWS_AS(make_value_quad(q, a, Rational(1), Rational(1, 2)), domain_error);
    CHECK_THROWS_AS(make_value_quad(q, Rational(0), Rational(1, 3), Rational(1, 2)), domain_error);
}

TEST_CASE("exact gamma normalization needs a detectable integer shift") {
    const Rational q(1, 2), a(1, 3);
    // Neither multiplier is an integer power of q = 1/2.
    const auto quad = make_value_quad(q, a, Rational(1, 3), Rational(1, 3));
    const long M = 6;
    FamilySpec<Rational> dspec{Family::D, ones(M + 1), q, a};
    CHECK_THROWS_AS(turanian_coeffs(dspec, quad, M), mode_error);
    FamilySpec<Rational> fspec{Family::F, ones(M + 1), q, a};
    CHECK_NOTHROW(turanian_coeffs(fspec, quad, M));
}

TEST_CASE("float turanian coefficients enclose the exact ones") {
    const long M = 8;
    FamilySpec<Rational> spec{Family::H, ones(M + 1), Rational(1, 2), Rational(1, 2)};
    const auto exact = turanian_coeffs(spec, Rational(1), Rational(1), M);
    FamilySpec<BoundedFloat> fspec{Family::H, fones(M + 1),
                                   BoundedFloat::from_rational(Rational(1, 2)),
                                   BoundedFloat::from_rational(Rational(1, 2))};
    const auto approx = turanian_coeffs(fspec, Rational(1), Rational(1), M);
    for (long m = 0; m <= M; ++m)
        CHECK(approx.delta[static_cast<std::size_t>(m)].contains(
            exact.delta[static_cast<std::size_t>(m)]));
}

TEST_CASE("telescoping sum: direct and closed forms agree") {
    const Rational a(1, 2), c(1, 4), q(1, 2);
    for (long m = 0; m <= 10; ++m) {
        const Rational d = s_m_direct(a, c, q, m);
        CHECK(d == s_m_closed(a, c, q, m));
        CHECK(d.sign_int() > 0);
    }
    CHECK(s_m_closed(a, c, q, 5) == Rational(16384, 413385));
}

TEST_CASE("folded decomposition diagnostics") {
    const Rational q(1, 2);

    SUBCASE("family F ties back to the raw coefficient") {
        const long m = 4;
        FamilySpec<Rational> spec{Family::F, ones(m + 1), q, Rational(1)};
        const auto rep = turanian_coeffs(spec, Rational(1), Rational(1), m);
        const auto diag = ak_diagnostics(spec, Rational(1), Rational(1), m);
        CHECK(diag.sign_changes <= 1);
        CHECK(diag.sign_changes_certified);
        CHECK(diag.weighted_sum == diag.delta_factor * rep.delta[static_cast<std::size_t>(m)]);
        CHECK(diag.delta_factor == Rational(1));
    }

    SUBCASE("family H decomposes minus delta") {
        const long m = 3;
        FamilySpec<Rational> spec{Family::H, ones(m + 1), q, Rational(1, 2)};
        const auto rep = turanian_coeffs(spec, Rational(1), Rational(1), m);
        const auto diag = ak_diagnostics(spec, Rational(1), Rational(1), m);
        CHECK(diag.delta_factor == Rational(-1));
        CHECK(diag.weighted_sum == diag.delta_factor * rep.delta[static_cast<std::size_t>(m)]);
        CHECK(diag.sign_changes <= 1);
    }

    SUBCASE("family G at alpha = 1 reproduces the telescoping sum") {
        FamilySpec<Rational> spec{Family::G, ones(8), q, Rational(1, 2)};
        for (long m = 0; m <= 6; ++m) {
            const auto diag = ak_diagnostics(spec, Rational(1), Rational(1), m);
            CHECK(diag.unweighted_sum == s_m_closed(Rational(1, 2), Rational(1, 4), q, m));
            CHECK(diag.unweighted_sum.sign_int() > 0);
            CHECK(diag.sign_changes <= 1);
            CHECK(diag.sign_changes_certified);
            const auto rep = turanian_coeffs(spec, Rational(1), Rational(1), m);
            CHECK(diag.weighted_sum ==
                  diag.delta_factor * rep.delta[static_cast<std::size_t>(m)]);
        }
    }

    SUBCASE("family D decomposition is all-negative") {
        const long m = 5;
        FamilySpec<Rational> spec{Family::D, ones(m + 1), q, Rational(1, 2)};
        const auto diag = ak_diagnostics(spec, Rational(1), Rational(1), m);
        for (const auto& v : diag.verdicts) CHECK(v.is_negative());
        const auto rep = turanian_coeffs(spec, Rational(1), Rational(1), m);
        CHECK(diag.weighted_sum ==
              diag.delta_factor * rep.delta[static_cast<std::size_t>(m)]);
    }
}

TEST_CASE("gamma pair ratio stays below one") {
    const Rational q(1, 2);
    const auto quad = make_quad(q, Rational(1, 2), Rational(1), Rational(2));
    const auto r = gamma_pair_ratio(quad, q);
    // Alpha route with j = 1: (1/2; q)_1 / (1/8; q)_1 = (1/2) / (7/8).
    CHECK(r.value == Rational(4, 7));
    CHECK(r.value < Rational(1));
    CHECK(r.value.sign_int() > 0);

    // Float route without an integer shift still brackets a value in (0, 1).
    const auto fq = BoundedFloat::from_rational(q);
    const auto fquad = make_value_quad(fq, BoundedFloat::from_rational(Rational(1, 2)),
                                       BoundedFloat::from_rational(Rational(1, 3)),
                                       BoundedFloat::from_rational(Rational(2, 5)));
    const auto fr = gamma_pair_ratio(fquad, fq);
    CHECK(fr.value.at_least(Rational(0)));
    CHECK(fr.value.at_most(Rational(1)));
}
