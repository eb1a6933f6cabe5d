#include "support.hpp"

#include "qreal/errors.hpp"
#include "qreal/qbinomial.hpp"
#include "qreal/qcore.hpp"

#include <doctest.h>

#include <random>

using namespace qreal;
using namespace qreal::testing;

namespace {

BigRational classical_binomial(const BigRational& a, long k)
{
    BigRational c = 1;
    for (long i = 0; i < k; ++i) c = c * (a - i) / (i + 1);
    return c;
}

} // namespace

TEST_SUITE("qbinomial")
{
    TEST_CASE("factorials and finite Pochhammer symbols")
    {
        CHECK(q_factorial(0) == IntPolynomial({1}));
        CHECK(q_factorial(3) == IntPolynomial({1, 2, 2, 1}));
        CHECK_THROWS_AS(q_factorial(-1), DomainError);
        const QRationalFunction q = QRationalFunction::monomial(1);
        // (q; q)_2 = (1 - q)(1 - q^2)
        CHECK(q_pochhammer_finite(q, PochhammerBase::q, 2) == QRationalFunction(IntPolynomial({1, -1, -1, 1})));
        // (q; 1/q)_2 = (1 - q)(1 - 1)
        CHECK(q_pochhammer_finite(q, PochhammerBase::q_inverse, 2).is_zero());
        CHECK(q_pochhammer_finite(q, PochhammerBase::q, 0) == QRationalFunction(1));
        const auto s = q_pochhammer_finite(LaurentSeries::monomial(1), PochhammerBase::q, 2);
        CHECK(s == LaurentSeries::from_polynomial(IntPolynomial({1, -1, -1, 1})));
    }

    TEST_CASE("golden binomials")
    {
        CHECK(q_binomial(make_rational(5, 3), 3) ==
              ratfun(0, {-1, -1, -2, -1}, {1, 4, 10, 16, 19, 16, 10, 4, 1}));
        CHECK(q_binomial(make_rational(5, 2), 2) == ratfun(0, {1, 3, 4, 4, 2, 1}, {1, 3, 3, 1}));
        const auto den734 = IntPolynomial({1, 1}).pow(4) * IntPolynomial({1, 0, 1}).pow(3);
        CHECK(q_binomial(make_rational(7, 4), 3) ==
              QRationalFunction::normalize(0, IntPolynomial({-1, -1, -2, -2, -1}), den734));
        CHECK(q_binomial(make_rational(-1, 2), 3) ==
              QRationalFunction::normalize(-6, IntPolynomial({-1, -1, -2, -1}), IntPolynomial({1, 1}).pow(4)));
        CHECK(q_binomial(BigRational(4), 2) == QRationalFunction(IntPolynomial({1, 1, 2, 1, 1})));
        CHECK(q_binomial(BigRational(2), 3).is_zero());
        CHECK_THROWS_AS(q_binomial(BigRational(2), -1), DomainError);
    }

    TEST_CASE("recurrence and classical limit")
    {
        std::mt19937_64 gen(29);
        std::uniform_int_distribution<long> num(-30, 30);
        std::uniform_int_distribution<long> den(1, 9);
        for (int trial = 0; trial < 60; ++trial) {
            const auto a = make_rational(num(gen), den(gen));
            for (long k = 1; k <= 4; ++k) {
                const auto prev = q_binomial(a, k - 1);
                const auto cur = q_binomial(a, k);
                CHECK(cur == prev * q_rational(a - k + 1) / QRationalFunction(IntPolynomial::q_integer(k)));
                CHECK(cur.evaluate(BigRational(1)) == classical_binomial(a, k));
            }
        }
    }

    TEST_CASE("computed order matches the order lemma")
    {
        std::mt19937_64 gen(31);
        std::uniform_int_distribution<long> num(-40, 40);
        std::uniform_int_distribution<long> den(2, 12);
        std::uniform_int_distribution<long> kk(0, 6);
        for (int trial = 0; trial < 150; ++trial) {
            const auto a = make_rational(num(gen), den(gen));
            if (is_integer(a)) continue;
            const long k = kk(gen);
            CHECK(q_binomial(a, k).order() == binom_order(RealSpec(a), k));
        }
        CHECK(binom_order(spec("5/2"), 2) == 0);
        CHECK(binom_order(spec("1/2"), 3) == -2);
        CHECK_THROWS_AS(binom_order(spec("3"), 1), DomainError);
        const auto golden = spec("[0;(1)]");
        for (long k = 0; k <= 4; ++k) {
            const auto s = q_binomial_series(golden, k, 30);
            CHECK(s.order() == binom_order(golden, k));
        }
    }

    TEST_CASE("rational specs give exact values, irrational ones series")
    {
        const auto exact = q_binomial(spec("5/2"), 2, 10);
        REQUIRE(std::holds_alternative<QRationalFunction>(exact));
        CHECK(std::get<QRationalFunction>(exact) == q_binomial(make_rational(5, 2), 2));
        const auto approx = q_binomial(spec("[2;(2)]"), 2, 10);
        REQUIRE(std::holds_alternative<LaurentSeries>(approx));
        CHECK(std::get<LaurentSeries>(approx).precision() >= 10);
    }

    TEST_CASE("parallel rows match the serial reference")
    {
        for (const auto& a : {make_rational(5, 3), make_rational(-7, 4), make_rational(1, 2)}) {
            for (auto kind : {RowKind::falling, RowKind::rising}) {
                const auto row = binomial_row(a, 8, kind);
                CHECK(row == binomial_row_serial(a, 8, kind));
                CHECK(row[3] == q_binomial(kind == RowKind::falling ? a : a + 2, 3));
            }
        }
        for (const auto& text : {"[2;(2)]", "[0;(1)]", "7/4"}) {
            const auto alpha = spec(text);
            for (auto kind : {RowKind::falling, RowKind::rising}) {
                const auto row = binomial_row_series(alpha, 6, kind, 20);
                const auto ref = binomial_row_series_serial(alpha, 6, kind, 20);
                REQUIRE(row.size() == ref.size());
                for (std::size_t k = 0; k < row.size(); ++k) CHECK(row[k].agrees_with(ref[k], 20));
            }
        }
    }
}
