#include "qreal/cli.hpp"

#include "qreal/errors.hpp"
#include "qreal/identity_lab.hpp"
#include "qreal/json_io.hpp"
#include "qreal/qbinomial.hpp"
#include "qreal/qgamma.hpp"
#include "qreal/qseries.hpp"
#include "qreal/render.hpp"
#include "qreal/snake.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace qreal {

namespace {

using nlohmann::json;

struct Flags {
    long prec = 32;
    long xdeg = 8;
    std::string form;
    std::string format = "text";
    bool latex = false;
    int jobs = 0;
    bool timing = false;
};

struct Output {
    json input = json::object();
    json result = json::object();
    json precision = json::object();
    std::string text;
    int status = kExitOk;
};

RenderOptions render_options(const Flags& f) { return RenderOptions{f.latex}; }

void check_prec(const Flags& f)
{
    if (f.prec < 1) {
        throw DomainError("precision must be positive");
    }
}

BigRational require_rational(const RealSpec& spec, const std::string& what)
{
    const auto r = spec.as_rational();
    if (!r) {
        throw DomainError(what + " needs a rational argument, got " + spec.to_string());
    }
    return *r;
}

// ratfun when requested or when the value is rational and no form is given.
bool use_ratfun(const Flags& f, const RealSpec& spec, const std::string& what)
{
    if (f.form == "ratfun") {
        require_rational(spec, what + " --form ratfun");
        return true;
    }
    return f.form.empty() && spec.as_rational().has_value();
}

// "[5/2]_q", or "[2;(2)]_q" when the spec already carries brackets.
std::string bracketed(const RealSpec& spec)
{
    const std::string s = spec.to_string();
    return (s.front() == '[' ? s : "[" + s + "]") + "_q";
}

json ratfun_result(const QRationalFunction& v) { return {{"form", "ratfun"}, {"value", to_json(v)}}; }

json series_result(const LaurentSeries& v) { return {{"form", "series"}, {"value", to_json(v)}}; }

// ---- commands ----------------------------------------------------------------

Output cmd_eval(const std::string& alpha, const Flags& f)
{
    check_prec(f);
    const RealSpec spec = parse_real_spec(alpha);
    Output o;
    o.input = {{"alpha", spec.to_string()}};
    const std::string label = bracketed(spec) + " = ";
    if (use_ratfun(f, spec, "eval")) {
        const QRationalFunction v = q_rational(*spec.as_rational());
        o.result = ratfun_result(v);
        o.text = label + render(v, render_options(f)) + "\n";
    } else {
        const LaurentSeries v = q_real_series(spec, f.prec);
        o.result = series_result(v);
        o.precision["N"] = f.prec;
        o.text = label + render(v, render_options(f)) + "\n";
    }
    return o;
}

Output cmd_binom(const std::string& alpha, long k, const Flags& f)
{
    check_prec(f);
    const RealSpec spec = parse_real_spec(alpha);
    Output o;
    o.input = {{"alpha", spec.to_string()}, {"k", k}};
    const std::string label = "binom(" + spec.to_string() + ", " + std::to_string(k) + ")_q = ";
    if (use_ratfun(f, spec, "binom")) {
        const QRationalFunction v = q_binomial(*spec.as_rational(), k);
        o.result = ratfun_result(v);
        o.text = label + render(v, render_options(f)) + "\n";
    } else {
        const LaurentSeries v = q_binomial_series(spec, k, f.prec);
        o.result = series_result(v);
        o.precision["N"] = f.prec;
        o.text = label + render(v, render_options(f)) + "\n";
    }
    return o;
}

Output cmd_brace(const std::string& alpha, const Flags& f)
{
    check_prec(f);
    const RealSpec spec = parse_real_spec(alpha);
    Output o;
    o.input = {{"alpha", spec.to_string()}};
    const std::string label = "{" + spec.to_string() + "}_q = ";
    if (use_ratfun(f, spec, "brace")) {
        const QRationalFunction v = q_brace(*spec.as_rational());
        o.result = ratfun_result(v);
        o.text = label + render(v, render_options(f)) + "\n";
    } else {
        const LaurentSeries v = brace_series(spec, f.prec);
        o.result = series_result(v);
        o.precision["N"] = f.prec;
        o.text = label + render(v, render_options(f)) + "\n";
    }
    return o;
}

Output cmd_gamma(const std::string& alpha, const Flags& f)
{
    check_prec(f);
    if (f.form == "ratfun") {
        throw DomainError("gamma has no ratfun form");
    }
    const BigRational a = require_rational(parse_real_spec(alpha), "gamma");
    const LaurentSeries v = gamma_q(a, f.prec);
    Output o;
    o.input = {{"alpha", to_string(a)}};
    o.result = series_result(v);
    o.result["order"] = gamma_order(a);
    o.precision["N"] = f.prec;
    o.text = "Gamma_q(" + to_string(a) + ") = " + render(v, render_options(f)) + "\n";
    return o;
}

Output cmd_series(const std::string& which, const std::string& alpha, const std::string& route, const Flags& f)
{
    check_prec(f);
    if (f.xdeg < 0) {
        throw DomainError("x-degree must be nonnegative");
    }
    const RealSpec spec = parse_real_spec(alpha);
    const bool big = which == "B";
    XSeries v;
    if (route == "product") {
        v = big ? B_product(spec, f.xdeg, f.prec) : b_product(spec, f.xdeg, f.prec);
    } else {
        v = big ? B_series(spec, f.xdeg, f.prec) : b_series(spec, f.xdeg, f.prec);
    }
    Output o;
    o.input = {{"which", which}, {"alpha", spec.to_string()}, {"route", route}};
    o.result = {{"value", to_json(v)}};
    o.precision = {{"N", f.prec}, {"K", f.xdeg}};
    o.text = which + "_" + spec.to_string() + "(q, x):\n" + render(v, render_options(f)) + "\n";
    return o;
}

json path_json(const LatticePath& p) { return {{"steps", p.steps}, {"area", p.area}}; }

SnakeGraph graph_of(const std::string& alpha, BigRational& value)
{
    value = require_rational(parse_real_spec(alpha), "snake");
    return SnakeGraph::from_cf(cf_expand(value));
}

Output cmd_snake(const std::string& what, const std::string& alpha, long k, bool have_k, const Flags& f)
{
    BigRational a;
    const SnakeGraph g = graph_of(alpha, a);
    const RenderOptions ro = render_options(f);
    Output o;
    o.input = {{"what", what}, {"alpha", to_string(a)}};
    std::ostringstream t;
    if (what == "graph") {
        const IntPolynomial numerator = enumerate_paths(g).generating;
        const IntPolynomial denominator = truncated_denominator(g);
        json cells = json::array();
        for (const auto& c : g.cells()) {
            cells.push_back({c.x, c.y});
        }
        o.result = {{"word", g.word()},
                    {"cells", cells},
                    {"numerator", to_json(numerator)},
                    {"denominator", to_json(denominator)},
                    {"numerator_at_1", to_json(numerator.evaluate(BigInt(1)))},
                    {"denominator_at_1", to_json(denominator.evaluate(BigInt(1)))}};
        t << "snake graph of " << to_string(a) << ": word " << (g.word().empty() ? "(empty)" : g.word()) << ", "
          << g.size() << " cells\n"
          << g.ascii() << "R(q) = " << render(numerator, ro) << "\n"
          << "S(q) = " << render(denominator, ro) << "\n"
          << "R(1) = " << to_string(numerator.evaluate(BigInt(1))) << ", S(1) = " << to_string(denominator.evaluate(BigInt(1)))
          << "\n";
    } else if (what == "paths") {
        const PathEnumeration e = enumerate_paths(g);
        json paths = json::array();
        t << e.paths.size() << " paths of the snake graph of " << to_string(a) << "\n";
        for (const auto& p : e.paths) {
            paths.push_back(path_json(p));
            t << p.steps << "  area " << p.area << "\n";
        }
        o.result = {{"paths", paths}, {"generating", to_json(e.generating)}};
        t << "R(q) = " << render(e.generating, ro) << "\n";
    } else {
        if (!have_k) {
            throw CLI::ValidationError("snake tuples", "needs k");
        }
        o.input["k"] = k;
        const SnakeTheoremCheck check = check_snake_theorem(a, k);
        json listing = json();
        try {
            const TupleListing l = list_k_tuples(g, k);
            listing = json::array();
            t << l.tuples.size() << " " << k << "-tuples for " << to_string(a) << "\n";
            for (const auto& tuple : l.tuples) {
                json steps = json::array();
                long area = 0;
                t << "(";
                for (std::size_t i = 0; i < tuple.size(); ++i) {
                    const LatticePath& p = l.choices[i][tuple[i]];
                    steps.push_back(p.steps);
                    area += p.area;
                    t << (i ? ", " : "") << (p.steps.empty() ? "-" : p.steps);
                }
                t << ")  area " << area << "\n";
                listing.push_back({{"paths", steps}, {"area", area}});
            }
        } catch (const DomainError&) {
            t << "tuple listing omitted (too many tuples)\n";
        }
        o.result = {{"tuples", listing},
                    {"tuple_sum", to_json(check.tuple_sum)},
                    {"numerator", to_json(check.numerator)},
                    {"denominator", to_json(check.denominator)},
                    {"predicted", to_json(check.predicted)},
                    {"direct", to_json(check.direct)},
                    {"holds", check.holds()}};
        t << "tuple sum = " << render(check.tuple_sum, ro) << "\n"
          << "q^-C(k,2) sum / (S^k [k]!) = " << render(check.predicted, ro) << "\n"
          << "binom(" << to_string(a) << ", " << k << ")_q = " << render(check.direct, ro) << "\n"
          << "identity " << (check.holds() ? "holds" : "FAILS") << "\n";
        if (!check.holds()) {
            o.status = kExitIdentityFailure;
        }
    }
    o.text = t.str();
    return o;
}

Output cmd_identity_run(const SuiteConfig& config)
{
    const SuiteReport r = run_suite(config);
    Output o;
    o.input = {{"filter", config.filter}, {"trials", config.trials}, {"seed", config.seed}};
    o.precision = {{"N", config.N}, {"K", config.K}};
    o.result = r.to_json();
    o.text = r.text();
    o.status = r.unexpected == 0 ? kExitOk : kExitIdentityFailure;
    return o;
}

Output cmd_identity_list()
{
    Output o;
    json list = json::array();
    std::ostringstream t;
    for (const auto& info : identity_catalog()) {
        list.push_back({{"id", info.id},
                        {"params", info.params},
                        {"expect_equal", info.expect_equal},
                        {"statement", info.statement}});
        t << std::left << std::setw(18) << info.id << std::setw(6) << info.params << info.statement << "\n";
    }
    o.result = {{"identities", list}};
    o.text = t.str();
    return o;
}

Output cmd_identity_check(const std::string& id, const Binding& b, const std::string& mode, long N, long K)
{
    const EvalMode m = mode.empty() ? preferred_mode(id, b) : (mode == "exact" ? EvalMode::exact : EvalMode::series);
    const IdentityCase c = verify_identity(id, b, m, N, K);
    Output o;
    o.input = {{"id", id}};
    o.precision = {{"N", N}, {"K", K}};
    o.result = to_json(c);
    std::ostringstream t;
    t << id << " [" << binding_to_string(b, identity_info(id).params) << "] " << to_string(c.mode) << ": "
      << to_string(c.verdict) << "\n";
    if (c.witness) {
        t << "  lhs: " << c.witness->lhs << "\n  rhs: " << c.witness->rhs << "\n";
    }
    o.text = t.str();
    o.status = is_unexpected(c.verdict) ? kExitIdentityFailure : kExitOk;
    return o;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact q-rational, q-real, q-binomial and q-Gamma computations"};
    app.name("qreal");
    app.require_subcommand(1);
    app.fallthrough();

    Flags flags;
    app.add_option("--prec", flags.prec, "q-precision N: coefficients below q^N")->envname("QREAL_PREC");
    auto* xdeg_opt = app.add_option("--xdeg", flags.xdeg, "x-degree K for x-series");
    app.add_option("--form", flags.form, "ratfun or series")->check(CLI::IsMember({"ratfun", "series"}));
    app.add_option("--format", flags.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--latex", flags.latex, "LaTeX-style exponents in text output");
    app.add_option("--jobs", flags.jobs, "OpenMP threads (0: default)")->check(CLI::NonNegativeNumber);
    app.add_flag("--timing", flags.timing, "report wall-clock time");

    std::string alpha;
    long k = 0;
    std::string which;
    std::string route = "sum";
    std::string what;

    auto* eval = app.add_subcommand("eval", "[alpha]_q");
    eval->add_option("alpha", alpha, "a/b, n, [a0,a1,...] or [a0;(period)]")->required();

    auto* binom = app.add_subcommand("binom", "binom(alpha, k)_q");
    binom->add_option("alpha", alpha)->required();
    binom->add_option("k", k)->required()->check(CLI::NonNegativeNumber);

    auto* brace = app.add_subcommand("brace", "{alpha}_q = [alpha + 1]_q - [alpha]_q");
    brace->add_option("alpha", alpha)->required();

    auto* gamma = app.add_subcommand("gamma", "Gamma_q(alpha) for rational alpha");
    gamma->add_option("alpha", alpha)->required();

    auto* series = app.add_subcommand("series", "B_alpha(q, x) or b_alpha(q, x)");
    series->add_option("which", which, "B or b")->required()->check(CLI::IsMember({"B", "b"}));
    series->add_option("alpha", alpha)->required();
    series->add_option("--route", route, "sum or product")->check(CLI::IsMember({"sum", "product"}));

    auto* snake = app.add_subcommand("snake", "snake graph of a rational alpha > 1");
    snake->add_option("what", what, "paths, tuples or graph")
        ->required()
        ->check(CLI::IsMember({"paths", "tuples", "graph"}));
    snake->add_option("alpha", alpha)->required();
    auto* snake_k = snake->add_option("k", k, "tuple size (tuples only)")->check(CLI::NonNegativeNumber);

    auto* identity = app.add_subcommand("identity", "identity catalog");
    identity->require_subcommand(1);
    SuiteConfig suite;
    auto* run = identity->add_subcommand("run", "run the randomized identity suite");
    run->add_option("--filter", suite.filter, "ALL or comma-separated ids");
    run->add_option("--trials", suite.trials)->check(CLI::PositiveNumber);
    run->add_option("--seed", suite.seed);
    auto* list = identity->add_subcommand("list", "list the catalog");
    std::string check_id;
    std::string check_mode;
    Binding binding;
    std::string binding_alpha = "0";
    auto* check = identity->add_subcommand("check", "verify one identity at one binding");
    check->add_option("id", check_id)->required();
    check->add_option("--alpha", binding_alpha);
    check->add_option("-k", binding.k);
    check->add_option("-n", binding.n);
    check->add_option("-m", binding.m);
    check->add_option("-l", binding.l);
    check->add_option("--mode", check_mode)->check(CLI::IsMember({"exact", "series"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    if (flags.jobs > 0) {
        omp_set_num_threads(flags.jobs);
    }

    try {
        const auto start = std::chrono::steady_clock::now();
        Output o;
        std::string command;
        if (eval->parsed()) {
            command = "eval";
            o = cmd_eval(alpha, flags);
        } else if (binom->parsed()) {
            command = "binom";
            o = cmd_binom(alpha, k, flags);
        } else if (brace->parsed()) {
            command = "brace";
            o = cmd_brace(alpha, flags);
        } else if (gamma->parsed()) {
            command = "gamma";
            o = cmd_gamma(alpha, flags);
        } else if (series->parsed()) {
            command = "series";
            o = cmd_series(which, alpha, route, flags);
        } else if (snake->parsed()) {
            command = "snake";
            o = cmd_snake(what, alpha, k, snake_k->count() > 0, flags);
        } else if (run->parsed()) {
            command = "identity run";
            suite.N = flags.prec;
            suite.K = xdeg_opt->count() > 0 ? flags.xdeg : SuiteConfig{}.K;
            suite.jobs = flags.jobs;
            o = cmd_identity_run(suite);
        } else if (list->parsed()) {
            command = "identity list";
            o = cmd_identity_list();
        } else {
            command = "identity check";
            binding.alpha = parse_real_spec(binding_alpha);
            o = cmd_identity_check(check_id, binding, check_mode, flags.prec,
                                   xdeg_opt->count() > 0 ? flags.xdeg : SuiteConfig{}.K);
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (flags.format == "json") {
            json envelope{{"command", command}, {"input", o.input}, {"result", o.result}, {"precision", o.precision}};
            if (flags.timing) {
                envelope["timing"] = {{"seconds", seconds}};
            }
            out << envelope.dump(2) << "\n";
        } else {
            out << o.text;
            if (flags.timing) {
                out << "time: " << std::fixed << std::setprecision(3) << seconds << " s\n";
            }
        }
        return o.status;
    } catch (const CLI::ValidationError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NonConvergence& e) {
        err << "non-convergence: " << e.what() << "\n";
        return kExitNonConvergence;
    } catch (const InsufficientPrecision& e) {
        err << "insufficient precision: " << e.what() << "\n";
        return kExitNonConvergence;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    }
}

} // namespace qreal
