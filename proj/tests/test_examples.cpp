#include "doctest.h"

#include "qturan/errors.hpp"
#include "qturan/examples.hpp"

using namespace qturan;

namespace {
ExampleParams<Rational> base_params() { return {}; }
}  // namespace

TEST_CASE("elementary symmetric polynomials") {
    const std::vector<Rational> c = {Rational(1), Rational(2), Rational(3)};
    CHECK(elementary_symmetric(0, c) == Rational(1));
    CHECK(elementary_symmetric(1, c) == Rational(6));
    CHECK(elementary_symmetric(2, c) == Rational(11));
    CHECK(elementary_symmetric(3, c) == Rational(6));
    CHECK_THROWS_AS(elementary_symmetric(4, c), order_error);
}

TEST_CASE("Bessel-type instances") {
    auto p = base_params();
    p.nu = Rational(1);
    const auto ex1 = example_spec(ExampleName::QBessel1, p, Rational(1, 2), 8);
    CHECK(ex1.spec.family == Family::G);
    CHECK(ex1.spec.value == Rational(1, 4));
    CHECK(ex1.spec.base[0] == Rational(1));
    CHECK(ex1.spec.base[1] == Rational(4));
    CHECK(ex1.spec.base[2] == Rational(32, 3));
    CHECK(ex1.spec.base.size() == 10);  // M + 2

    const auto ex2 = example_spec(ExampleName::QBessel2, p, Rational(1, 2), 8);
    CHECK(ex2.spec.base[2] == ex1.spec.base[2] * Rational(1, 64));

    p.nu = Rational(-1);
    CHECK_THROWS_AS(example_spec(ExampleName::QBessel1, p, Rational(1, 2), 8), domain_error);
    p.nu = Rational(-5, 2);
    CHECK_THROWS_AS(example_spec(ExampleName::QBessel1, p, Rational(1, 2), 8), domain_error);
}

TEST_CASE("confluent instances in both shift roles") {
    auto p = base_params();
    p.shift = ShiftRole::Upper;
    p.a = Rational(1, 2);
    p.b = Rational(1, 3);
    const auto up2 = example_spec(ExampleName::QKummer2, p, Rational(1, 2), 8);
    CHECK(up2.spec.family == Family::F);
    CHECK(up2.spec.value == Rational(1, 2));
    CHECK(up2.spec.base[1] == Rational(3, 2));
    CHECK(up2.spec.base[2] == Rational(9, 5));
    const auto up1 = example_spec(ExampleName::QKummer1, p, Rational(1, 2), 8);
    CHECK(up1.spec.base[1] == Rational(3, 2));
    CHECK(up1.spec.base[2] == Rational(9, 10));  // extra q^(n(n-1)/2)

    p.shift = ShiftRole::Lower;
    p.a = Rational(1, 3);
    p.b = Rational(1, 3);
    const auto lo = example_spec(ExampleName::QKummer2, p, Rational(1, 2), 8);
    CHECK(lo.spec.family == Family::H);
    CHECK(lo.spec.value == Rational(1, 3));
    CHECK(lo.spec.base[1] == Rational(4, 3));

    // The lower-shift role needs a < q for double positivity of the base.
    p.a = Rational(3, 4);
    CHECK_THROWS_AS(example_spec(ExampleName::QKummer2, p, Rational(1, 2), 8), domain_error);
}

TEST_CASE("Gauss-type instances in both shift roles") {
    auto p = base_params();
    p.a = Rational(1, 2);
    p.b = Rational(1, 4);
    p.c = Rational(1, 3);
    const auto up = example_spec(ExampleName::Heine2phi1Upper, p, Rational(1, 2), 8);
    CHECK(up.spec.family == Family::F);
    CHECK(up.spec.base[1] == Rational(9, 8));

    p.b = Rational(1, 2);
    p.c = Rational(1, 4);
    CHECK_THROWS_AS(example_spec(ExampleName::Heine2phi1Upper, p, Rational(1, 2), 8),
                    domain_error);

    p.a = Rational(1, 3);
    p.b = Rational(1, 2);
    p.c = Rational(1, 2);
    const auto lo = example_spec(ExampleName::Heine2phi1Lower, p, Rational(1, 2), 8);
    CHECK(lo.spec.family == Family::H);
    CHECK(lo.spec.value == Rational(1, 2));
    CHECK(lo.spec.base[1] == Rational(1, 3));  // (a;q)_1 (b;q)_1
}

TEST_CASE("general numerator instance and its admissibility chain") {
    auto p = base_params();
    p.a = Rational(1, 2);
    p.alphas = {Rational(2)};
    p.betas = {Rational(1), Rational(1)};
    const auto ex = example_spec(ExampleName::RPlus1PhiS, p, Rational(1, 2), 8);
    CHECK(ex.spec.family == Family::F);
    CHECK(ex.spec.base[1] == Rational(3));
    CHECK(ex.spec.base[2] == Rational(7, 3));

    const auto chain = decr_condition(p.alphas, p.betas, Rational(1, 2));
    CHECK(chain.holds);
    CHECK(chain.certified);
    CHECK(chain.first_failure == -1);
    CHECK(chain.links.size() == 1);

    // Reversing the exponent lists breaks the chain at its first link.
    const auto broken = decr_condition({Rational(1)}, {Rational(2)}, Rational(1, 2));
    CHECK(!broken.holds);
    CHECK(broken.certified);
    CHECK(broken.first_failure == 0);
    p.alphas = {Rational(1)};
    p.betas = {Rational(2)};
    CHECK_THROWS_AS(example_spec(ExampleName::RPlus1PhiS, p, Rational(1, 2), 8), domain_error);
}

TEST_CASE("unit-denominator instance") {
    auto p = base_params();
    p.mu = Rational(1);
    p.alphas = {Rational(1)};
    p.betas = {Rational(1, 2), Rational(1)};
    // q = 1/4 keeps the half-integer exponent value q^(1/2) = 1/2 rational.
    const auto ex = example_spec(ExampleName::RPhiSUnitDenominator, p, Rational(1, 4), 8);
    CHECK(ex.spec.family == Family::G);
    CHECK(ex.spec.value == Rational(1, 4));
    CHECK(ex.spec.base[2] == Rational(1, 7));

    // r = s+1 is allowed when the generated prefix certifies as doubly positive.
    p.mu = Rational(1, 2);
    p.alphas = {Rational(2), Rational(2)};
    p.betas = {Rational(1)};
    const auto tall = example_spec(ExampleName::RPhiSUnitDenominator, p, Rational(1, 4), 8);
    CHECK(tall.spec.value == Rational(1, 2));
    CHECK(is_doubly_positive(tall.spec.base).doubly_positive);

    // The last denominator exponent must be the unit one.
    p.alphas = {Rational(1)};
    p.betas = {Rational(1, 2)};
    CHECK_THROWS_AS(example_spec(ExampleName::RPhiSUnitDenominator, p, Rational(1, 4), 8),
                    domain_error);
    // Too many numerator exponents.
    p.alphas = {Rational(1), Rational(1), Rational(1)};
    p.betas = {Rational(1)};
    CHECK_THROWS_AS(example_spec(ExampleName::RPhiSUnitDenominator, p, Rational(1, 4), 8),
                    domain_error);
    // Gamma pole at a nonpositive integer exponent.
    p.alphas = {Rational(1)};
    p.betas = {Rational(1, 2), Rational(1)};
    p.mu = Rational(0);
    CHECK_THROWS_AS(example_spec(ExampleName::RPhiSUnitDenominator, p, Rational(1, 4), 8),
                    domain_error);
}

TEST_CASE("labels are distinct and stable") {
    CHECK(all_example_names().size() == 8);
    for (std::size_t i = 0; i < all_example_names().size(); ++i)
        for (std::size_t j = i + 1; j < all_example_names().size(); ++j)
            CHECK(std::string(example_label(all_example_names()[i])) !=
                  example_label(all_example_names()[j]));
}

TEST_CASE("generated bases satisfy the positivity hypothesis under the restrictions") {
    auto p = base_params();
    p.nu = Rational(1, 2);
    const auto bessel = example_spec(ExampleName::QBessel1, p, Rational(1, 2), 12);
    const auto prof = is_doubly_positive(bessel.spec.base);
    CHECK(prof.doubly_positive);
    CHECK(prof.certified);

    auto k = base_params();
    k.shift = ShiftRole::Lower;
    k.a = Rational(1, 4);
    k.b = Rational(1, 2);
    const auto lower = example_spec(ExampleName::QKummer2, k, Rational(1, 2), 12);
    CHECK(is_doubly_positive(lower.spec.base).doubly_positive);
}
