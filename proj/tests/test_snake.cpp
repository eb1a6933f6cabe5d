#include "support.hpp"

#include "qreal/errors.hpp"
#include "qreal/qcore.hpp"
#include "qreal/snake.hpp"

#include <doctest.h>

#include <algorithm>

using namespace qreal;
using namespace qreal::testing;

TEST_SUITE("snake")
{
    TEST_CASE("graph of 52/23")
    {
        const auto g = SnakeGraph::from_cf(cf_expand(make_rational(52, 23)));
        CHECK(g.word() == "URRRURRRR");
        CHECK(g.size() == 10);
        CHECK(g.contains(0, 1));
        CHECK(g.contains(4, 2));
        CHECK_FALSE(g.contains(1, 0));
        const auto paths = enumerate_paths(g);
        CHECK(paths.paths.size() == 52);
        CHECK(paths.generating == IntPolynomial({1, 3, 5, 7, 8, 8, 7, 6, 4, 2, 1}));
        CHECK(truncated_denominator(g) == IntPolynomial({1, 2, 3, 4, 4, 3, 3, 2, 1}));
        CHECK(truncated_denominator(g).evaluate(BigInt(1)) == 23);
        CHECK_THROWS_AS(SnakeGraph("UX"), DomainError);
    }

    TEST_CASE("paths of 5/2")
    {
        const auto g = SnakeGraph::from_cf(cf_expand(make_rational(5, 2)));
        const auto e = enumerate_paths(g);
        std::vector<long> areas;
        for (const auto& p : e.paths) areas.push_back(p.area);
        std::sort(areas.begin(), areas.end());
        CHECK(areas == std::vector<long>{0, 1, 1, 2, 3});
        CHECK(e.generating == IntPolynomial({1, 2, 1, 1}));
        CHECK(std::is_sorted(e.paths.begin(), e.paths.end(),
                             [](const auto& a, const auto& b) { return a.steps < b.steps; }));
        for (const auto& p : enumerate_paths(g, 1).paths) CHECK(p.steps.front() == 'N');
    }

    TEST_CASE("empty graph and the first column")
    {
        const auto empty = SnakeGraph::empty_graph();
        CHECK(enumerate_paths(empty).paths.size() == 1);
        CHECK(enumerate_paths(empty).generating == IntPolynomial({1}));
        const auto g = SnakeGraph("RRU");
        CHECK(g.without_first_column().word() == "RU");
        CHECK(SnakeGraph("UUR").without_first_column().size() == 1);
    }

    TEST_CASE("pairs of paths for 5/2")
    {
        const auto g = SnakeGraph::from_cf(cf_expand(make_rational(5, 2)));
        const auto sum = enumerate_k_tuples(g, 2);
        CHECK(sum == IntPolynomial({0, 1, 3, 4, 4, 2, 1}));
        const auto listing = list_k_tuples(g, 2);
        CHECK(listing.tuples.size() == 15);
        CHECK(listing.choices.size() == 2);
        for (const auto& p : listing.choices[1]) CHECK(p.steps.front() == 'N');
    }

    TEST_CASE("tuple sums by product, by serial visit and by parallel visit agree")
    {
        for (const auto& a : {make_rational(52, 23), make_rational(17, 5), make_rational(23, 4), make_rational(9, 7)}) {
            const auto g = SnakeGraph::from_cf(cf_expand(a));
            for (long k = 0; k < a; ++k) {
                const auto product = enumerate_k_tuples(g, k);
                CHECK(tuple_histogram(g, k) == product);
                CHECK(tuple_histogram_serial(g, k) == product);
            }
        }
        const auto tiny = SnakeGraph::from_cf(cf_expand(make_rational(5, 2)));
        CHECK_THROWS_AS(tuple_histogram(tiny, 2, 3), DomainError);
        CHECK_THROWS_AS(enumerate_k_tuples(tiny, 4), DomainError);
    }

    TEST_CASE("numerator theorem over a grid of rationals")
    {
        for (long s = 1; s <= 6; ++s) {
            for (long r = s + 1; r < 5 * s; ++r) {
                const auto a = make_rational(r, s);
                if (a.get_den() != s) continue;
                for (long k = 0; k < a; ++k) {
                    const auto check = check_snake_theorem(a, k);
                    CHECK_MESSAGE(check.holds(), r << "/" << s << " k=" << k);
                    CHECK(check.numerator.evaluate(BigInt(1)) == r);
                    CHECK(check.denominator.evaluate(BigInt(1)) == s);
                }
            }
        }
        CHECK_THROWS_AS(check_snake_theorem(make_rational(5, 2), 3), DomainError);
        CHECK_THROWS_AS(check_snake_theorem(make_rational(1, 2), 0), DomainError);
    }
}
