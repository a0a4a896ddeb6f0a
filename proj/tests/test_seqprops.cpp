#include "doctest.h"

#include "qturan/errors.hpp"
#include "qturan/seqprops.hpp"

#include <functional>

using namespace qturan;

TEST_CASE("geometric sequences are doubly positive with exactly zero gaps") {
    std::vector<Rational> seq;
    Rational v(3);
    for (int n = 0; n <= 20; ++n) {
        seq.push_back(v);
        v = v * Rational(2, 3);
    }
    const auto prof = is_doubly_positive(seq);
    CHECK(prof.doubly_positive);
    CHECK(prof.certified);
    CHECK(prof.nonneg);
    CHECK(prof.log_concave);
    CHECK(prof.internal_zeros.empty());
    for (std::size_t k = 1; k + 1 < seq.size(); ++k)
        CHECK(seq[k] * seq[k] - seq[k - 1] * seq[k + 1] == Rational(0));

    // The same sequence through interval arithmetic stays certified.
    std::vector<BoundedFloat> fseq;
    for (const Rational& r : seq) fseq.push_back(BoundedFloat::from_rational(r));
    const auto fprof = is_doubly_positive(fseq);
    CHECK(fprof.doubly_positive);
    CHECK(fprof.certified);
}

TEST_CASE("violations of double positivity are detected") {
    // Log-convex growth: 1, 1, 2 violates the middle-square inequality.
    const auto convex = is_doubly_positive(std::vector<Rational>{Rational(1), Rational(1), Rational(2)});
    CHECK(!convex.doubly_positive);
    CHECK(!convex.log_concave);
    CHECK(convex.certified);

    // A negative entry.
    const auto neg = is_doubly_positive(std::vector<Rational>{Rational(1), Rational(-1)});
    CHECK(!neg.nonneg);
    CHECK(!neg.doubly_positive);

    // An internal zero between nonzero entries.
    const auto hole = is_doubly_positive(std::vector<Rational>{Rational(1), Rational(0), Rational(1)});
    CHECK(hole.internal_zeros.size() == 1);
    CHECK(!hole.doubly_positive);

    // All-zero prefixes are trivial, hence not doubly positive.
    const auto zero = is_doubly_positive(std::vector<Rational>{Rational(0), Rational(0)});
    CHECK(!zero.nontrivial);
    CHECK(!zero.doubly_positive);
}

TEST_CASE("three-point multiplicative convexity probe") {
    const std::function<Rational(const Rational&)> linear = [](const Rational& x) { return x; };
    // Multiplicatively linear: equality in both directions.
    CHECK(check_gg_three_point<Rational>(linear, Rational(1, 2), Rational(1, 2),
                                         GGDirection::Concave)
              .is_zero());
    CHECK(check_gg_three_point<Rational>(linear, Rational(1, 2), Rational(1, 2),
                                         GGDirection::Convex)
              .is_zero());

    const std::function<Rational(const Rational&)> affine = [](const Rational& x) {
        return Rational(1) + x;
    };
    // 1 + x is multiplicatively convex: the convex orientation is positive,
    // the concave orientation is negative.
    CHECK(check_gg_three_point<Rational>(affine, Rational(1, 2), Rational(1, 2),
                                         GGDirection::Convex)
              .is_positive());
    CHECK(check_gg_three_point<Rational>(affine, Rational(1, 2), Rational(1, 2),
                                         GGDirection::Concave)
              .is_negative());

    CHECK_THROWS_AS(check_gg_three_point<Rational>(linear, Rational(1, 2), Rational(2),
                                                   GGDirection::Convex),
                    domain_error);
    CHECK_THROWS_AS(check_gg_three_point<Rational>(linear, Rational(0), Rational(1, 2),
                                                   GGDirection::Convex),
                    domain_error);
}

TEST_CASE("alternating finite differences as a complete-monotonicity proxy") {
    std::vector<Rational> grid;
    for (int i = 0; i < 12; ++i) grid.push_back(Rational(1) + Rational(i, 2));

    const std::function<Rational(const Rational&)> reciprocal = [](const Rational& y) {
        return Rational(1) / y;
    };
    const auto rep = check_cm_proxy<Rational>(reciprocal, grid, 4);
    CHECK(rep.pass);
    CHECK(rep.certified);
    CHECK(rep.violations == 0);
    CHECK(rep.undecided == 0);
    CHECK(rep.order == 4);
    CHECK(rep.grid_points == 12);

    // f(y) = y has a positive first difference, so -Delta f < 0 everywhere.
    const std::function<Rational(const Rational&)> increasing = [](const Rational& y) { return y; };
    const auto bad = check_cm_proxy<Rational>(increasing, grid, 2);
    CHECK(!bad.pass);
    CHECK(bad.violations > 0);

    CHECK_THROWS_AS(check_cm_proxy<Rational>(reciprocal,
                                             {Rational(1), Rational(2), Rational(4), Rational(5),
                                              Rational(6), Rational(7)},
                                             4),
                    grid_error);
    CHECK_THROWS_AS(check_cm_proxy<Rational>(reciprocal, {Rational(1), Rational(2)}, 4),
                    grid_error);
}
