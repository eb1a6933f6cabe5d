#include "support.hpp"

#include "qreal/cli.hpp"
#include "qreal/json_io.hpp"
#include "qreal/qbinomial.hpp"
#include "qreal/qcore.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using namespace qreal;
using namespace qreal::testing;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("text output")
    {
        const auto r = run({"eval", "52/23", "--form", "ratfun"});
        CHECK(r.code == kExitOk);
        CHECK(r.out.find("[52/23]_q = (1 + 3q + 5q^2") != std::string::npos);
        const auto p = run({"snake", "paths", "5/2"});
        CHECK(p.code == kExitOk);
        CHECK(p.out.find("5 paths") != std::string::npos);
        CHECK(run({"eval", "[2;(2)]"}).out.rfind("[2;(2)]_q = ", 0) == 0);
    }

    TEST_CASE("JSON results round trip")
    {
        const auto r = run({"binom", "5/2", "2", "--format", "json", "--form", "ratfun"});
        REQUIRE(r.code == kExitOk);
        const auto j = json::parse(r.out);
        CHECK(j["command"] == "binom");
        CHECK_FALSE(j.contains("timing"));
        CHECK(j["result"]["form"] == "ratfun");
        CHECK(ratfun_from_json(j["result"]["value"]) == q_binomial(make_rational(5, 2), 2));

        const auto s = run({"eval", "3/2", "--format", "json", "--prec", "10", "--form", "series"});
        REQUIRE(s.code == kExitOk);
        const auto js = json::parse(s.out);
        CHECK(series_from_json(js["result"]["value"]) == series_from_ratfun(q_rational(make_rational(3, 2)), 10));

        const auto t = run({"gamma", "1/2", "--format", "json", "--timing"});
        CHECK(json::parse(t.out).contains("timing"));
    }

    TEST_CASE("output is deterministic")
    {
        const std::vector<std::string> args = {"identity", "run", "--filter", "PASCAL", "--trials", "4",
                                               "--format", "json"};
        const auto a = run(args);
        const auto b = run(args);
        CHECK(a.code == kExitOk);
        CHECK(a.out == b.out);
    }

    TEST_CASE("identity subcommands")
    {
        const auto list = run({"identity", "list"});
        CHECK(list.code == kExitOk);
        CHECK(list.out.find("CHU_VANDERMONDE") != std::string::npos);
        const auto check = run({"identity", "check", "CHU_VANDERMONDE", "--alpha", "5/3", "-k", "2", "-n", "2"});
        CHECK(check.code == kExitOk);
        CHECK(check.out.find("pass") != std::string::npos);
    }

    TEST_CASE("exit codes")
    {
        CHECK(run({"--help"}).code == kExitOk);
        CHECK(run({}).code == kExitUsage);
        CHECK(run({"eval", "1/0"}).code == kExitUsage);
        CHECK(run({"eval", "5/2", "--form", "bogus"}).code == kExitUsage);
        CHECK(run({"gamma", "0"}).code == kExitDomain);
        CHECK(run({"binom", "5/2", "-1"}).code == kExitUsage);
        CHECK(run({"snake", "tuples", "5/2", "3"}).code == kExitDomain);
        CHECK(run({"identity", "check", "NO_SUCH"}).code == kExitDomain);
        CHECK(run({"eval", "[0;(1)]", "--prec", "200"}).code == kExitNonConvergence);
        CHECK(run({"eval", "-7/3", "--form", "ratfun"}).code == kExitOk);
    }
}
