#include "support.hpp"

#include "qreal/errors.hpp"
#include "qreal/qbinomial.hpp"
#include "qreal/qcore.hpp"
#include "qreal/qgamma.hpp"

#include <doctest.h>

using namespace qreal;
using namespace qreal::testing;

TEST_SUITE("qgamma")
{
    TEST_CASE("Gamma at three halves and one half")
    {
        CHECK(gamma_q(make_rational(3, 2), 8) ==
              series(0, {"1", "1/2", "-5/8", "-3/16", "115/128", "-401/256", "2383/1024", "-8139/2048"}, 8));
        CHECK(gamma_q(make_rational(1, 2), 7) ==
              series(-1, {"1", "3/2", "-1/8", "-13/16", "91/128", "-171/256", "779/1024", "-3373/2048"}, 7));
        CHECK(reflection_product(make_rational(1, 2), 6) == series(-2, {"1", "3", "2", "-2", "-1", "1", "0", "-2"}, 6));
    }

    TEST_CASE("Gamma at two thirds agrees with the independent oracle")
    {
        // Frozen from tests/oracles/qoracle.py.
        CHECK(gamma_q(make_rational(2, 3), 5) ==
              series(-1, {"1", "2/3", "5/9", "-122/81", "272/243", "-259/729"}, 5));
        CHECK(power_integrality(2, 3, 5) == series(-3, {"1", "2", "3", "-2", "-1", "-3", "10", "-13"}, 5));
    }

    TEST_CASE("reflection and power products against the oracle")
    {
        CHECK(reflection_product(make_rational(3, 2), 12) ==
              series(0, {"-1", "-3", "-2", "2", "1", "-1", "0", "2", "-3", "3", "-4", "10"}, 12));
        CHECK(power_integrality(3, 2, 12) ==
              series(0, {"1", "1", "-1", "-1", "2", "-2", "2", "-4", "9", "-17", "29", "-51"}, 12));
        CHECK(reflection_product(make_rational(2, 5), 6) ==
              series(-3, {"1", "2", "2", "2", "-3", "-2", "3", "-3", "9"}, 6));
    }

    TEST_CASE("integer arguments give q-factorials")
    {
        CHECK(gamma_q(BigRational(1), 10).agrees_with(LaurentSeries::constant(1), 10));
        CHECK(gamma_q(BigRational(4), 10).agrees_with(LaurentSeries::from_polynomial(q_factorial(3)), 10));
        CHECK_THROWS_AS(gamma_q(BigRational(0), 5), DomainError);
        CHECK_THROWS_AS(gamma_q(BigRational(-2), 5), DomainError);
        CHECK_THROWS_AS(reflection_product(BigRational(2), 5), DomainError);
        CHECK_THROWS_AS(power_integrality(-4, 2, 5), DomainError);
        CHECK_THROWS_AS(power_integrality(1, 0, 5), DomainError);
    }

    TEST_CASE("functional equation and order")
    {
        for (const auto& a : {make_rational(1, 3), make_rational(7, 4), make_rational(-5, 2), make_rational(-1, 3),
                              make_rational(13, 5)}) {
            CAPTURE(to_string(a));
            const long n = 12;
            const auto lhs = gamma_q(a + 1, n);
            const auto rhs = series_from_ratfun(q_rational(a), n + 10) * gamma_q(a, n + 10);
            CHECK(lhs.agrees_with(rhs, n));
            CHECK(gamma_q(a, n).order() == gamma_order(a));
        }
        CHECK(gamma_order(make_rational(1, 2)) == -1);
        CHECK(gamma_order(make_rational(5, 2)) == 0);
    }

    TEST_CASE("Pochhammer at q and the binomial scalar")
    {
        // (q; q)_2 = (1 - q)(1 - q^2)
        CHECK(pochhammer_at_q(BigRational(2), 10).agrees_with(
            LaurentSeries::from_polynomial(IntPolynomial({1, -1, -1, 1})), 10));
        CHECK_THROWS_AS(pochhammer_at_q(make_rational(-1, 2), 10), DomainError);
        // (1 - q)^{-1/2}
        CHECK(scalar_binomial_series(make_rational(3, 2), 4) == series(0, {"1", "1/2", "3/8", "5/16"}, 4));
    }

    TEST_CASE("well-formedness guard")
    {
        const auto good = gamma_wellformed_guard(make_rational(5, 2));
        CHECK(good.well_defined);
        CHECK(good.strictly_increasing);
        const auto finite = gamma_wellformed_guard(BigRational(3));
        CHECK(finite.term_orders.back() == kInfiniteOrder);
        const auto bad = gamma_wellformed_guard(make_rational(1, 2));
        CHECK_FALSE(bad.well_defined);
        CHECK_FALSE(bad.strictly_increasing);
        const auto worse = gamma_wellformed_guard(make_rational(-3, 2));
        CHECK_FALSE(worse.strictly_increasing);
    }

    TEST_CASE("reflection and powers are integral over a panel")
    {
        for (const auto& a : {make_rational(1, 3), make_rational(5, 4), make_rational(-7, 3), make_rational(11, 6)}) {
            CHECK(reflection_product(a, 20).all_integer());
        }
        for (auto [a, b] : {std::pair{1L, 3L}, {5L, 4L}, {-7L, 3L}, {11L, 6L}}) {
            CHECK(power_integrality(a, b, 15).all_integer());
        }
    }
}
