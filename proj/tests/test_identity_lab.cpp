#include "support.hpp"

#include "qreal/errors.hpp"
#include "qreal/identity_lab.hpp"
#include "qreal/render.hpp"

#include <doctest.h>

#include <set>

using namespace qreal;
using namespace qreal::testing;

namespace {

Binding bind(const std::string& alpha, long k = 0, long n = 0, long m = 0, long l = 0)
{
    Binding b;
    b.alpha = spec(alpha);
    b.k = k;
    b.n = n;
    b.m = m;
    b.l = l;
    return b;
}

} // namespace

TEST_SUITE("identity_lab")
{
    TEST_CASE("catalog is complete and unique")
    {
        const auto& catalog = identity_catalog();
        CHECK(catalog.size() >= 20);
        std::set<std::string> ids;
        for (const auto& info : catalog) {
            CHECK(ids.insert(info.id).second);
            CHECK_FALSE(info.statement.empty());
        }
        for (const char* id : {"PASCAL_A", "PASCAL_B", "ALT_FORMS_A", "ALT_FORMS_E", "PRODUCT_B", "PRODUCT_b",
                               "SHIFT_B", "SHIFT_b", "DQ_B", "DQ_b", "FUNC_EQ_B", "FUNC_EQ_b", "OTHER_PASCAL",
                               "CHU_VANDERMONDE", "VAND_LEMMA", "RIORDAN_PRODUCT", "BINOM_LIMIT", "GAMMA_SHIFT",
                               "GAMMA_BINOM", "REFLECTION_INT", "POWER_INT", "BRACE_PROPS_C", "BRACE_NONMULT",
                               "NONADDITIVE"}) {
            CHECK(ids.count(id) == 1);
        }
        CHECK_FALSE(identity_info("BRACE_NONMULT").expect_equal);
        CHECK_THROWS_AS(identity_info("NO_SUCH"), DomainError);
    }

    TEST_CASE("filters")
    {
        CHECK(select_identities("ALL").size() == identity_catalog().size());
        CHECK(select_identities("BRACE_PROPS") ==
              std::vector<std::string>{"BRACE_PROPS_A", "BRACE_PROPS_B", "BRACE_PROPS_C", "BRACE_PROPS_D",
                                       "BRACE_PROPS_E"});
        CHECK(select_identities("SHIFT_b,PASCAL_A") == std::vector<std::string>{"PASCAL_A", "SHIFT_b"});
        CHECK_THROWS_AS(select_identities("NOPE"), DomainError);
    }

    TEST_CASE("exact instances")
    {
        CHECK(verify_identity("CHU_VANDERMONDE", bind("5/3", 2, 2), EvalMode::exact).verdict == Verdict::pass);
        CHECK(verify_identity("PASCAL_A", bind("5/2", 2), EvalMode::exact).verdict == Verdict::pass);
        CHECK(verify_identity("PASCAL_A", bind("4", 2), EvalMode::exact).verdict == Verdict::pass);
        CHECK(verify_identity("BRACE_PROPS_C", bind("1/2", 0, 2), EvalMode::exact).verdict == Verdict::pass);
        CHECK(verify_identity("ALT_FORMS_C", bind("-7/4", 3), EvalMode::exact).verdict == Verdict::pass);
        CHECK(verify_identity("RIORDAN_PRODUCT", bind("2/5", 2, 3), preferred_mode("RIORDAN_PRODUCT", bind("2/5")))
                  .verdict == Verdict::pass);
    }

    TEST_CASE("series instances agree with exact ones")
    {
        for (const char* id : {"PASCAL_B", "ALT_FORMS_D", "OTHER_PASCAL", "BRACE_PROPS_E"}) {
            CAPTURE(id);
            const auto b = bind("7/3", 2, 2, 1, 1);
            CHECK(verify_identity(id, b, EvalMode::exact).verdict == Verdict::pass);
            CHECK(verify_identity(id, b, EvalMode::series, 24).verdict == Verdict::pass);
        }
        CHECK(verify_identity("SHIFT_Bn", bind("[2;(2)]", 0, 2), EvalMode::series, 20, 4).verdict == Verdict::pass);
        CHECK(preferred_mode("PASCAL_A", bind("[2;(2)]")) == EvalMode::series);
        CHECK(preferred_mode("PASCAL_A", bind("1/2")) == EvalMode::exact);
        CHECK_THROWS_AS(verify_identity("PRODUCT_B", bind("1/2"), EvalMode::exact), DomainError);
    }

    TEST_CASE("must-fail cases carry their witnesses")
    {
        const auto nonmult = verify_identity("BRACE_NONMULT", bind("1/2"), EvalMode::exact);
        CHECK(nonmult.verdict == Verdict::expected_inequality);
        REQUIRE(nonmult.witness.has_value());
        CHECK(nonmult.witness->lhs == render(ratfun(1, {1, 0, 2, 0, 1}, {1, 2, 1})));
        CHECK(nonmult.witness->rhs == render(QRationalFunction::monomial(2)));

        const auto nonadd = verify_identity("NONADDITIVE", bind("1/2"), EvalMode::exact);
        CHECK(nonadd.verdict == Verdict::expected_inequality);
        REQUIRE(nonadd.witness.has_value());
        CHECK(nonadd.witness->rhs == render(ratfun(1, {2, 1, 1}, {1, 2, 1})));
        CHECK_FALSE(is_unexpected(Verdict::expected_inequality));
        CHECK(is_unexpected(Verdict::unexpected_equality));
    }

    TEST_CASE("the lemma summed from zero fails outside its domain")
    {
        // Counterexample to the unrestricted form, l > n with m > 0.
        CHECK_THROWS_AS(verify_identity("VAND_LEMMA", bind("9/32", 0, 4, 6, 5), EvalMode::exact), DomainError);
        CHECK(verify_identity("VAND_LEMMA", bind("9/32", 0, 4, 6, 3), EvalMode::exact).verdict == Verdict::pass);
        CHECK(verify_identity("VAND_LEMMA", bind("9/32", 0, 4, 0, 5), EvalMode::exact).verdict == Verdict::pass);
    }

    TEST_CASE("domain checks")
    {
        CHECK_THROWS_AS(verify_identity("OTHER_PASCAL", bind("0", 1), EvalMode::exact), DomainError);
        CHECK_THROWS_AS(verify_identity("SNAKE_THEOREM", bind("5/2", 3), EvalMode::exact), DomainError);
        CHECK_THROWS_AS(verify_identity("GAMMA_SHIFT", bind("-2"), EvalMode::series), DomainError);
        CHECK_THROWS_AS(verify_identity("REFLECTION_INT", bind("3"), EvalMode::series), DomainError);
        CHECK_THROWS_AS(verify_identity("PASCAL_A", bind("1/2", -1), EvalMode::exact), DomainError);
        CHECK_THROWS_AS(verify_identity("POWER_INT", bind("[1;(1)]", 0, 2), EvalMode::series), DomainError);
    }

    TEST_CASE("bindings are deterministic and inside the domain")
    {
        for (const auto& info : identity_catalog()) {
            CAPTURE(info.id);
            const auto a = generate_bindings(info.id, 10, 99);
            const auto b = generate_bindings(info.id, 10, 99);
            REQUIRE(a.size() == b.size());
            for (std::size_t i = 0; i < a.size(); ++i) {
                CHECK(binding_to_string(a[i], info.params) == binding_to_string(b[i], info.params));
            }
        }
    }

    TEST_CASE("suite reports do not depend on the thread count")
    {
        SuiteConfig config;
        config.filter = "PASCAL,BRACE_PROPS,ALT_FORMS_E,BRACE_NONMULT,NONADDITIVE";
        config.trials = 6;
        config.seed = 123;
        config.N = 16;
        config.jobs = 1;
        const auto serial = run_suite(config);
        config.jobs = 4;
        const auto parallel = run_suite(config);
        CHECK(serial.unexpected == 0);
        CHECK(serial.to_json() == parallel.to_json());
        CHECK(serial.text() == parallel.text());
        config.trials = 0;
        CHECK_THROWS_AS(run_suite(config), DomainError);
    }
}
