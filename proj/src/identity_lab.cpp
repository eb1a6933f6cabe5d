#include "qreal/identity_lab.hpp"

#include "qreal/errors.hpp"
#include "qreal/json_io.hpp"
#include "qreal/parallel.hpp"
#include "qreal/qbinomial.hpp"
#include "qreal/qgamma.hpp"
#include "qreal/qseries.hpp"
#include "qreal/render.hpp"
#include "qreal/snake.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>

namespace qreal {

namespace {

struct Comparison {
    bool equal = false;
    Witness witness;
};

using Comparisons = std::vector<Comparison>;

// Thrown by a comparison whose operands are known only below q^{N - missing}.
struct Shortfall {
    long missing = 0;
};

long pair_count(long k) { return k * (k - 1) / 2; }

// Periodic streams with small partial quotients gain about one coefficient
// per convergent, so the budget grows with the working precision.
QRealOptions options_for(long work)
{
    QRealOptions opt;
    opt.budget = static_cast<int>(std::max<long>(opt.budget, 3 * work));
    return opt;
}

// ---- scalar evaluators ------------------------------------------------------

class ExactEval {
public:
    using Value = QRationalFunction;

    ExactEval(BigRational alpha, bool render_equal) : alpha_(std::move(alpha)), render_equal_(render_equal) {}

    Value real(long j) const { return q_rational(alpha_ + j); }
    Value brace(long j) const { return q_brace(alpha_ + j); }
    Value binom(long j, long k) const { return k < 0 ? Value(0) : q_binomial(alpha_ + j, k); }
    Value lift(const QRationalFunction& f) const { return f; }

    Comparison compare(const Value& lhs, const Value& rhs) const
    {
        Comparison c;
        c.equal = lhs == rhs;
        if (!c.equal || render_equal_) {
            c.witness = {render(lhs), render(rhs)};
        }
        return c;
    }

private:
    BigRational alpha_;
    bool render_equal_;
};

// Values are series known below q^work; comparisons need every coefficient
// below q^N on both sides.
class SeriesEval {
public:
    using Value = LaurentSeries;

    SeriesEval(RealSpec alpha, long work, long N, bool render_equal)
        : alpha_(std::move(alpha)), work_(work), N_(N), render_equal_(render_equal)
    {
    }

    Value real(long j)
    {
        auto it = cache_.find(j);
        if (it == cache_.end()) {
            it = cache_.emplace(j, q_real_series(alpha_.plus(j), work_, options_for(work_))).first;
        }
        return it->second;
    }
    // The definition {a}_q = [a + 1]_q - [a]_q, each side an independent limit.
    Value brace(long j) { return real(j + 1) - real(j); }
    Value binom(long j, long k)
    {
        if (k < 0) {
            return LaurentSeries();
        }
        LaurentSeries num = LaurentSeries::constant(1);
        for (long i = 0; i < k; ++i) {
            num *= real(j - i);
        }
        return LaurentSeries::divide(num, LaurentSeries::from_polynomial(q_factorial(k)), num.precision());
    }
    Value lift(const QRationalFunction& f) const
    {
        if (f.den().degree() == 0 && f.den().leading() == 1) {
            return LaurentSeries::from_polynomial(f.num()).shifted(f.exponent());
        }
        return series_from_ratfun(f, work_);
    }

    Comparison compare(const Value& lhs, const Value& rhs) const
    {
        const long got = std::min(lhs.precision(), rhs.precision());
        if (got < N_) {
            throw Shortfall{N_ - got};
        }
        Comparison c;
        c.equal = lhs.agrees_with(rhs, N_);
        if (!c.equal || render_equal_) {
            c.witness = {render(lhs.truncated(N_)), render(rhs.truncated(N_))};
        }
        return c;
    }

private:
    RealSpec alpha_;
    long work_;
    long N_;
    bool render_equal_;
    std::map<long, LaurentSeries> cache_;
};

template <class E>
typename E::Value mono(const E& e, long x)
{
    return e.lift(QRationalFunction::monomial(x));
}

template <class E>
typename E::Value constant(const E& e, long c)
{
    return e.lift(QRationalFunction(c));
}

template <class E>
typename E::Value qint(const E& e, long n)
{
    return e.lift(QRationalFunction(IntPolynomial::q_integer(n)));
}

// Gaussian binomial with integer top; zero below the range.
template <class E>
typename E::Value gauss(const E& e, long n, long k)
{
    return k < 0 ? constant(e, 0) : e.lift(q_binomial(BigRational(n), k));
}

template <class E>
typename E::Value factorial(const E& e, long k)
{
    return e.lift(QRationalFunction(q_factorial(k)));
}

// (q; q)_k
template <class E>
typename E::Value q_poch(const E& e, long k)
{
    IntPolynomial p = IntPolynomial::constant(1);
    for (long i = 1; i <= k; ++i) {
        p = p * (IntPolynomial::constant(1) - IntPolynomial::monomial(i));
    }
    return e.lift(QRationalFunction(p));
}

template <class V>
V power(const V& v, long e, const V& one)
{
    V r = one;
    for (long i = 0; i < e; ++i) {
        r *= v;
    }
    return r;
}

// ---- scalar identities -------------------------------------------------------

template <class E>
Comparisons pascal_a(E& e, const Binding& b)
{
    const long k = b.k;
    return {e.compare(e.binom(0, k), mono(e, k) * e.binom(-1, k) + e.binom(-1, k - 1))};
}

template <class E>
Comparisons pascal_b(E& e, const Binding& b)
{
    const long k = b.k;
    return {e.compare(e.binom(0, k), e.binom(-1, k) + e.brace(-k) * e.binom(-1, k - 1))};
}

template <class E>
Comparisons alt_a(E& e, const Binding& b)
{
    auto rhs = constant(e, 1);
    for (long i = 0; i < b.k; ++i) {
        rhs *= (e.real(0) - qint(e, i)) / (qint(e, b.k) - qint(e, i));
    }
    return {e.compare(e.binom(0, b.k), rhs)};
}

template <class E>
Comparisons alt_b(E& e, const Binding& b)
{
    auto prod = constant(e, 1);
    for (long i = 0; i < b.k; ++i) {
        prod *= e.real(0) - qint(e, i);
    }
    return {e.compare(e.binom(0, b.k), prod / (mono(e, pair_count(b.k)) * factorial(e, b.k)))};
}

template <class E>
Comparisons alt_c(E& e, const Binding& b)
{
    const auto one = constant(e, 1);
    const auto br = e.brace(0);
    const auto inv = one / br;
    auto prod = one;
    for (long i = 0; i < b.k; ++i) {
        prod *= one - mono(e, i) * inv;
    }
    const auto rhs = power(constant(e, 0) - br, b.k, one) * mono(e, -pair_count(b.k)) * prod / q_poch(e, b.k);
    return {e.compare(e.binom(0, b.k), rhs)};
}

template <class E>
Comparisons alt_d(E& e, const Binding& b)
{
    const auto one = constant(e, 1);
    const auto br = e.brace(0);
    auto prod = one;
    for (long i = 0; i < b.k; ++i) {
        prod *= one - mono(e, -i) * br;
    }
    return {e.compare(e.binom(0, b.k), prod / q_poch(e, b.k))};
}

template <class E>
Comparisons alt_e(E& e, const Binding& b)
{
    const auto one = constant(e, 1);
    const auto br = e.brace(0);
    auto prod = one;
    for (long i = 0; i < b.k; ++i) {
        prod *= one - mono(e, i) * br;
    }
    return {e.compare(e.binom(b.k - 1, b.k), prod / q_poch(e, b.k))};
}

template <class E>
Comparisons other_pascal(E& e, const Binding& b)
{
    const long k = b.k;
    const auto one = constant(e, 1);
    const auto factor = (constant(e, 2) - mono(e, k) - e.brace(-k)) / (one - e.brace(0));
    return {e.compare(e.binom(-1, k) + e.binom(-1, k - 1), factor * e.binom(0, k))};
}

template <class E>
Comparisons chu_vandermonde(E& e, const Binding& b)
{
    const long n = b.n;
    const long k = b.k;
    auto rhs = constant(e, 0);
    for (long j = 0; j <= k; ++j) {
        rhs += mono(e, j * (n - k + j)) * gauss(e, n, k - j) * e.binom(0, j);
    }
    return {e.compare(e.binom(n, k), rhs)};
}

template <class E>
Comparisons vand_lemma(E& e, const Binding& b)
{
    const long l = b.l;
    const long m = b.m;
    const long n = b.n;
    auto lhs = constant(e, 0);
    for (long j = std::max(0L, n - l); j <= n; ++j) {
        lhs += mono(e, l * (j - n + l) + j * (m - n + j)) * gauss(e, l, n - j) * e.binom(0, m + j);
    }
    return {e.compare(lhs, mono(e, (m - l) * (n - l)) * e.binom(l, m + n))};
}

template <class E>
Comparisons riordan(E& e, const Binding& b)
{
    const long m = b.m;
    const long n = b.n;
    auto rhs = constant(e, 0);
    for (long l = 0; l <= std::min(m, n); ++l) {
        rhs += mono(e, (m - l) * (n - l)) * gauss(e, n, l) * gauss(e, m, l) * e.binom(l, m + n);
    }
    return {e.compare(e.binom(0, m) * e.binom(0, n), rhs)};
}

template <class E>
Comparisons brace_a(E& e, const Binding&)
{
    return {e.compare(e.brace(0), constant(e, 1) + (mono(e, 1) - constant(e, 1)) * e.real(0))};
}

template <class E>
Comparisons brace_b(E& e, const Binding&)
{
    const auto one = constant(e, 1);
    return {e.compare((one - e.brace(0)) / (one - mono(e, 1)), e.real(0))};
}

template <class E>
Comparisons brace_c(E& e, const Binding& b)
{
    return {e.compare(e.brace(b.n), mono(e, b.n) * e.brace(0))};
}

template <class E>
Comparisons brace_e(E& e, const Binding& b)
{
    return {e.compare(e.brace(0), (e.real(b.n) - e.real(0)) / qint(e, b.n))};
}

template <class E>
Comparisons int_shift(E& e, const Binding& b)
{
    const long n = b.n;
    return {e.compare(e.real(n), qint(e, n) + mono(e, n) * e.real(0)),
            e.compare(e.real(-n), mono(e, -n) * (e.real(0) - qint(e, n)))};
}

// ---- dispatch helpers ----------------------------------------------------------

template <class Attempt>
Comparisons with_raising(long N, Attempt attempt)
{
    long work = N + 8;
    for (int round = 0; round < 12; ++round) {
        try {
            return attempt(work);
        } catch (const Shortfall& s) {
            work += s.missing + 8;
        } catch (const InsufficientPrecision&) {
            work *= 2;
        }
    }
    throw InsufficientPrecision("identity sides did not reach q^" + std::to_string(N));
}

template <class F>
Comparisons run_scalar(const Binding& b, EvalMode mode, long N, bool render_equal, F body)
{
    if (mode == EvalMode::exact) {
        ExactEval e(*b.alpha.as_rational(), render_equal);
        return body(e);
    }
    return with_raising(N, [&](long work) {
        SeriesEval e(b.alpha, work, N, render_equal);
        return body(e);
    });
}

Comparison compare_x(const XSeries& lhs, const XSeries& rhs, long N, long K)
{
    const long got = std::min(lhs.qprec(), rhs.qprec());
    if (got < N) {
        throw Shortfall{N - got};
    }
    Comparison c;
    c.equal = lhs.agrees_with(rhs, N, K);
    if (!c.equal) {
        c.witness = {render(lhs.truncated_x(K).truncated_q(N)), render(rhs.truncated_x(K).truncated_q(N))};
    }
    return c;
}

Comparison compare_series(const LaurentSeries& lhs, const LaurentSeries& rhs, long N)
{
    const long got = std::min(lhs.precision(), rhs.precision());
    if (got < N) {
        throw Shortfall{N - got};
    }
    Comparison c;
    c.equal = lhs.agrees_with(rhs, N);
    if (!c.equal) {
        c.witness = {render(lhs.truncated(N)), render(rhs.truncated(N))};
    }
    return c;
}

// ---- x-series identities ---------------------------------------------------------

Comparisons x_identity(const std::string& id, const Binding& b, long N, long K)
{
    const RealSpec& a = b.alpha;
    return with_raising(N, [&](long W) -> Comparisons {
        const QRealOptions opt = options_for(W);
        if (id == "PRODUCT_B") {
            return {compare_x(B_product(a, K, W, opt), B_series(a, K, W, opt), N, K)};
        }
        if (id == "PRODUCT_b") {
            return {compare_x(b_product(a, K, W, opt), b_series(a, K, W, opt), N, K)};
        }
        const LaurentSeries br = brace_series(a, W, opt);
        if (id == "SHIFT_B") {
            const XSeries base = B_series(a, K, W, opt);
            const XSeries lhs = B_series(a.plus(1), K, W, opt);
            return {compare_x(lhs, base.compose_qx(1).times_linear(LaurentSeries::constant(1)), N, K),
                    compare_x(lhs, base.times_linear(br), N, K)};
        }
        if (id == "SHIFT_b") {
            const XSeries base = b_series(a, K, W, opt);
            const XSeries lhs = b_series(a.plus(1), K, W, opt);
            return {compare_x(lhs, base.compose_qx(1).over_linear(LaurentSeries::constant(-1)), N, K),
                    compare_x(lhs, base.over_linear(-br), N, K)};
        }
        if (id == "SHIFT_Bn") {
            const XSeries base = B_series(a, K, W, opt);
            const XSeries integer = B_series(RealSpec(BigRational(b.n)), K, W);
            const XSeries lhs = B_series(a.plus(b.n), K, W, opt);
            return {compare_x(lhs, integer * base.compose_qx(b.n), N, K),
                    compare_x(lhs, integer.compose_scale(br) * base, N, K)};
        }
        if (id == "SHIFT_bn") {
            const XSeries base = b_series(a, K, W, opt);
            const XSeries integer = b_series(RealSpec(BigRational(b.n)), K, W);
            const XSeries lhs = b_series(a.plus(b.n), K, W, opt);
            return {compare_x(lhs, integer * base.compose_qx(b.n), N, K),
                    compare_x(lhs, integer.compose_scale(br) * base, N, K)};
        }
        const LaurentSeries real = real_series(a, W, opt);
        if (id == "DQ_B") {
            return {compare_x(q_derivative_x(B_series(a, K + 1, W, opt)), B_series(a.plus(-1), K, W, opt).compose_qx(1).scaled(real),
                              N, K)};
        }
        if (id == "DQ_b") {
            return {compare_x(q_derivative_x(b_series(a, K + 1, W, opt)), b_series(a.plus(1), K, W, opt).scaled(real), N, K)};
        }
        if (id == "FUNC_EQ_B") {
            return {compare_x(q_derivative_x(B_series(a, K + 1, W, opt)),
                              B_series(a, K, W, opt).scaled(real).over_linear(LaurentSeries::constant(1)), N, K)};
        }
        if (id == "FUNC_EQ_b") {
            return {compare_x(q_derivative_x(b_series(a, K + 1, W, opt)),
                              b_series(a, K, W, opt).compose_qx(1).scaled(real).over_linear(LaurentSeries::constant(-1)), N,
                              K)};
        }
        throw std::logic_error("no x-series identity " + id);
    });
}

// ---- gamma identities --------------------------------------------------------------

// (q; q)_beta = (q; q)_inf / ({beta}_q q; q)_inf below q^W, for beta >= 0.
LaurentSeries pochhammer_by_product(const BigRational& beta, long W)
{
    IntPolynomial top = IntPolynomial::constant(1);
    for (long j = 1; j < W; ++j) {
        top = top * (IntPolynomial::constant(1) - IntPolynomial::monomial(j));
    }
    const LaurentSeries br = series_from_ratfun(q_brace(beta), W);
    LaurentSeries bottom = LaurentSeries::constant(1);
    for (long j = 1; j + br.valuation_bound() < W; ++j) {
        bottom = (bottom * (LaurentSeries::constant(1) - br.shifted(j))).truncated(W);
    }
    return LaurentSeries::from_polynomial(top).truncated(W) / bottom;
}

Comparisons gamma_identity(const std::string& id, const Binding& b, long N)
{
    const BigRational a = *b.alpha.as_rational();
    if (id == "GAMMA_SHIFT") {
        return with_raising(N, [&](long W) -> Comparisons {
            return {compare_series(gamma_q(a + 1, W), gamma_q(a, W) * series_from_ratfun(q_rational(a), W), N)};
        });
    }
    if (id == "GAMMA_BINOM") {
        const long k = b.k;
        return with_raising(N, [&](long W) -> Comparisons {
            const LaurentSeries direct = series_from_ratfun(q_binomial(a, k), W);
            Comparisons out{
                compare_series(direct, gamma_q(a + 1, W) / (gamma_q(BigRational(k + 1), W) * gamma_q(a - k + 1, W)), N)};
            if (a >= k) {
                out.push_back(compare_series(direct,
                                             pochhammer_by_product(a, W) / (pochhammer_by_product(BigRational(k), W) *
                                                                            pochhammer_by_product(a - k, W)),
                                             N));
            }
            return out;
        });
    }
    auto integral = [](const std::function<LaurentSeries()>& f) {
        Comparison c;
        try {
            f();
            c.equal = true;
        } catch (const IntegralityViolation& e) {
            c.witness = {e.what(), "integer coefficients"};
        }
        return c;
    };
    if (id == "REFLECTION_INT") {
        Comparisons out{integral([&] { return reflection_product(a, N); })};
        if (out.front().equal) {
            out.push_back(compare_series(reflection_product(a, N), reflection_product(BigRational(1) - a, N), N));
        }
        return out;
    }
    if (id == "POWER_INT") {
        const BigRational top = a * b.n;
        return {integral([&] { return power_integrality(to_long(top.get_num()), b.n, N); })};
    }
    throw std::logic_error("no gamma identity " + id);
}

Comparisons binom_limit(const Binding& b)
{
    const long k = b.k;
    const long n = to_long(b.alpha.floor()) - k;
    const LaurentSeries lhs = q_binomial_series(b.alpha, k, n, options_for(n));
    const LaurentSeries rhs =
        series_from_ratfun(QRationalFunction(1) / q_pochhammer_finite(QRationalFunction::monomial(1),
                                                                      PochhammerBase::q, k),
                           n);
    return {compare_series(lhs, rhs, n)};
}

Comparisons must_fail(const std::string& id, const BigRational& a)
{
    ExactEval e(a, true);
    if (id == "BRACE_NONMULT") {
        return {e.compare(q_brace(a) * q_brace(a + 1), q_brace(2 * a + 1))};
    }
    return {e.compare(q_rational(2 * a), q_rational(a) + q_brace(a) * q_rational(a))};
}

Comparisons snake_identity(const Binding& b)
{
    const SnakeTheoremCheck c = check_snake_theorem(*b.alpha.as_rational(), b.k);
    Comparison out;
    out.equal = c.holds();
    if (!out.equal) {
        out.witness = {render(c.predicted) + (c.unreduced_numerator_matches ? "" : " (unreduced numerator differs)"),
                       render(c.direct)};
    }
    return {out};
}

// ---- catalog --------------------------------------------------------------------------

enum class Family { scalar, xseries, gamma, limit, must_fail, snake, brace_d };

struct Entry {
    IdentityInfo info;
    Family family = Family::scalar;
    std::function<Comparisons(ExactEval&, const Binding&)> exact;
    std::function<Comparisons(SeriesEval&, const Binding&)> series;
};

#define QREAL_SCALAR(fn) [](ExactEval& e, const Binding& b) { return fn(e, b); }, \
                         [](SeriesEval& e, const Binding& b) { return fn(e, b); }

const std::vector<Entry>& entries()
{
    static const std::vector<Entry> table = [] {
        std::vector<Entry> t;
        auto scalar = [&](std::string id, std::string params, std::string statement,
                          std::function<Comparisons(ExactEval&, const Binding&)> ex,
                          std::function<Comparisons(SeriesEval&, const Binding&)> se) {
            t.push_back({{std::move(id), std::move(params), true, true, false, std::move(statement)},
                         Family::scalar,
                         std::move(ex),
                         std::move(se)});
        };
        auto other = [&](std::string id, std::string params, std::string statement, Family f, bool expect_equal,
                         bool exact_capable, bool rational_only) {
            t.push_back({{std::move(id), std::move(params), expect_equal, exact_capable, rational_only,
                          std::move(statement)},
                         f,
                         {},
                         {}});
        };
        scalar("PASCAL_A", "ak", "binom(a,k) = q^k binom(a-1,k) + binom(a-1,k-1)", QREAL_SCALAR(pascal_a));
        scalar("PASCAL_B", "ak", "binom(a,k) = binom(a-1,k) + {a-k} binom(a-1,k-1)", QREAL_SCALAR(pascal_b));
        scalar("ALT_FORMS_A", "ak", "binom(a,k) = prod_i ([a]-[i])/([k]-[i])", QREAL_SCALAR(alt_a));
        scalar("ALT_FORMS_B", "ak", "binom(a,k) = q^-C(k,2)/[k]! prod_i ([a]-[i])", QREAL_SCALAR(alt_b));
        scalar("ALT_FORMS_C", "ak", "binom(a,k) = (-{a})^k q^-C(k,2) ({a}^-1;q)_k/(q;q)_k", QREAL_SCALAR(alt_c));
        scalar("ALT_FORMS_D", "ak", "binom(a,k) = ({a};1/q)_k/(q;q)_k", QREAL_SCALAR(alt_d));
        scalar("ALT_FORMS_E", "ak", "binom(a+k-1,k) = ({a};q)_k/(q;q)_k", QREAL_SCALAR(alt_e));
        other("PRODUCT_B", "a", "sum_k q^C(k,2) binom(a,k) x^k = (-x;q)_inf/(-{a}x;q)_inf", Family::xseries, true,
              false, false);
        other("PRODUCT_b", "a", "sum_k binom(a+k-1,k) x^k = ({a}x;q)_inf/(x;q)_inf", Family::xseries, true, false,
              false);
        other("SHIFT_B", "a", "B_{a+1}(x) = (1+x) B_a(qx) = (1+{a}x) B_a(x)", Family::xseries, true, false, false);
        other("SHIFT_b", "a", "b_{a+1}(x) = b_a(qx)/(1-x) = b_a(x)/(1-{a}x)", Family::xseries, true, false, false);
        other("SHIFT_Bn", "an", "B_{a+n}(x) = B_n(x) B_a(q^n x) = B_n({a}x) B_a(x)", Family::xseries, true, false,
              false);
        other("SHIFT_bn", "an", "b_{a+n}(x) = b_n(x) b_a(q^n x) = b_n({a}x) b_a(x)", Family::xseries, true, false,
              false);
        other("DQ_B", "a", "D_q B_a(x) = [a] B_{a-1}(qx)", Family::xseries, true, false, false);
        other("DQ_b", "a", "D_q b_a(x) = [a] b_{a+1}(x)", Family::xseries, true, false, false);
        other("FUNC_EQ_B", "a", "D_q B_a(x) = [a]/(1+x) B_a(x)", Family::xseries, true, false, false);
        other("FUNC_EQ_b", "a", "D_q b_a(x) = [a]/(1-x) b_a(qx)", Family::xseries, true, false, false);
        scalar("OTHER_PASCAL", "ak", "binom(a-1,k) + binom(a-1,k-1) = (2-q^k-{a-k})/(1-{a}) binom(a,k)",
               QREAL_SCALAR(other_pascal));
        scalar("CHU_VANDERMONDE", "akn", "binom(a+n,k) = sum_j q^(j(n-k+j)) binom(n,k-j) binom(a,j)",
               QREAL_SCALAR(chu_vandermonde));
        scalar("VAND_LEMMA", "amnl",
               "sum_j q^(l(j-n+l)+j(m-n+j)) binom(l,n-j) binom(a,m+j) = q^((m-l)(n-l)) binom(a+l,m+n)",
               QREAL_SCALAR(vand_lemma));
        scalar("RIORDAN_PRODUCT", "amn",
               "binom(a,m) binom(a,n) = sum_l q^((m-l)(n-l)) binom(n,l) binom(m,l) binom(a+l,m+n)",
               QREAL_SCALAR(riordan));
        other("BINOM_LIMIT", "ak", "binom(a,k) = 1/(q;q)_k below q^(floor(a)-k)", Family::limit, true, false, false);
        other("GAMMA_SHIFT", "a", "Gamma(a+1) = [a] Gamma(a)", Family::gamma, true, false, true);
        other("GAMMA_BINOM", "ak",
              "binom(a,k) = Gamma(a+1)/(Gamma(k+1) Gamma(a-k+1)) = (q;q)_a/((q;q)_k (q;q)_{a-k})", Family::gamma,
              true, false, true);
        other("REFLECTION_INT", "a", "Gamma(a) Gamma(1-a) has integer coefficients", Family::gamma, true, false,
              true);
        other("POWER_INT", "an", "Gamma(a)^n has integer coefficients when a n is an integer", Family::gamma, true,
              false, true);
        scalar("BRACE_PROPS_A", "a", "{a} = 1 + (q-1)[a]", QREAL_SCALAR(brace_a));
        scalar("BRACE_PROPS_B", "a", "(1-{a})/(1-q) = [a]", QREAL_SCALAR(brace_b));
        scalar("BRACE_PROPS_C", "an", "{a+n} = q^n {a}", QREAL_SCALAR(brace_c));
        other("BRACE_PROPS_D", "a", "{-a}_q = {a}_(1/q)", Family::brace_d, true, true, true);
        scalar("BRACE_PROPS_E", "an", "{a} = ([a+n]-[a])/[n]", QREAL_SCALAR(brace_e));
        scalar("INT_SHIFT", "an", "[a+n] = [n] + q^n [a] and [a-n] = q^-n ([a]-[n])", QREAL_SCALAR(int_shift));
        other("SNAKE_THEOREM", "ak", "binom(a,k) = q^-C(k,2) E_k/(S^k [k]!) from k-tuples of snake paths",
              Family::snake, true, true, true);
        other("BRACE_NONMULT", "a", "{a}{a+1} != {2a+1}", Family::must_fail, false, true, true);
        other("NONADDITIVE", "a", "[2a] != [a] + {a}[a]", Family::must_fail, false, true, true);
        return t;
    }();
    return table;
}

#undef QREAL_SCALAR

const Entry& entry(const std::string& id)
{
    for (const auto& e : entries()) {
        if (e.info.id == id) {
            return e;
        }
    }
    throw DomainError("unknown identity: " + id);
}

std::size_t entry_index(const std::string& id)
{
    const auto& t = entries();
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i].info.id == id) {
            return i;
        }
    }
    throw DomainError("unknown identity: " + id);
}

bool has(const std::string& params, char c) { return params.find(c) != std::string::npos; }

bool nonpositive_integer(const BigRational& r) { return is_integer(r) && r <= 0; }

void check_domain(const Entry& e, const Binding& b)
{
    const auto& p = e.info.params;
    const std::string& id = e.info.id;
    for (auto [c, v] : {std::pair{'k', b.k}, std::pair{'n', b.n}, std::pair{'m', b.m}, std::pair{'l', b.l}}) {
        if (has(p, c) && v < 0) {
            throw DomainError(id + " needs " + std::string(1, c) + " >= 0");
        }
    }
    const auto rational = b.alpha.as_rational();
    if (e.info.rational_only && !rational) {
        throw DomainError(id + " needs a rational alpha");
    }
    if ((id == "BRACE_PROPS_C" || id == "BRACE_PROPS_E" || id == "SHIFT_Bn" || id == "SHIFT_bn" ||
         id == "INT_SHIFT") &&
        b.n < 1) {
        throw DomainError(id + " needs n >= 1");
    }
    if (id == "VAND_LEMMA" && b.l > b.n && b.m > 0) {
        throw DomainError("VAND_LEMMA needs l <= n or m = 0 (the sum starts at j = 0)");
    }
    if (id == "OTHER_PASCAL" && rational && *rational == 0) {
        throw DomainError("OTHER_PASCAL needs alpha != 0");
    }
    if (id == "SNAKE_THEOREM" && (*rational <= 1 || *rational <= b.k)) {
        throw DomainError("SNAKE_THEOREM needs alpha > 1 and k < alpha");
    }
    if (id == "BINOM_LIMIT" && b.alpha.floor() <= b.k) {
        throw DomainError("BINOM_LIMIT needs floor(alpha) > k");
    }
    if (id == "GAMMA_SHIFT" && nonpositive_integer(*rational)) {
        throw DomainError("GAMMA_SHIFT needs alpha outside Z<=0");
    }
    if (id == "GAMMA_BINOM" &&
        (b.k < 1 || nonpositive_integer(*rational + 1) || nonpositive_integer(*rational - b.k + 1))) {
        throw DomainError("GAMMA_BINOM needs k >= 1 and alpha + 1, alpha - k + 1 outside Z<=0");
    }
    if (id == "REFLECTION_INT" && is_integer(*rational)) {
        throw DomainError("REFLECTION_INT needs a non-integer alpha");
    }
    if (id == "POWER_INT" && (b.n < 1 || !is_integer(*rational * b.n) || nonpositive_integer(*rational))) {
        throw DomainError("POWER_INT needs n >= 1, alpha n integral and alpha outside Z<=0");
    }
}

// ---- random panels -----------------------------------------------------------------

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

// |alpha| <= 6 with numerator and denominator at most 40 in absolute value.
BigRational random_rational(Rng& rng)
{
    const long den = uniform(rng, 1, 40);
    const long num = uniform(rng, std::max(-40L, -6 * den), std::min(40L, 6 * den));
    return make_rational(num, den);
}

const std::vector<std::string>& irrational_panel()
{
    static const std::vector<std::string> panel{"[1;(2)]", "[2;(2)]", "[1;(1)]", "[0;(1)]", "[-2;1,1,(2)]"};
    return panel;
}

RealSpec random_real(Rng& rng, long trial, bool allow_irrational)
{
    if (allow_irrational && trial % 5 == 4) {
        const auto& panel = irrational_panel();
        return parse_real_spec(panel[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(panel.size()) - 1))]);
    }
    return random_rational(rng);
}

Binding draw(const Entry& e, Rng& rng, long trial)
{
    const std::string& id = e.info.id;
    Binding b;
    const bool irrational_ok = !e.info.rational_only;
    if (id == "SNAKE_THEOREM") {
        const long den = uniform(rng, 1, 12);
        b.alpha = make_rational(uniform(rng, den + 1, 6 * den - 1), den);
        const BigInt top = floor_of(*b.alpha.as_rational() - make_rational(1, den));
        b.k = uniform(rng, 0, to_long(top));
        return b;
    }
    if (id == "BINOM_LIMIT") {
        b.k = uniform(rng, 0, 4);
        const long whole = uniform(rng, b.k + 1, 20);
        if (trial % 5 == 4) {
            b.alpha = parse_real_spec("[0;(1)]").plus(whole);
        } else {
            const long den = uniform(rng, 2, 40);
            b.alpha = make_rational(whole * den + uniform(rng, 1, den - 1), den);
        }
        return b;
    }
    if (id == "POWER_INT") {
        do {
            b.n = uniform(rng, 1, 6);
            b.alpha = make_rational(uniform(rng, -12, 12), b.n);
        } while (nonpositive_integer(*b.alpha.as_rational()));
        return b;
    }
    for (;;) {
        b.alpha = random_real(rng, trial, irrational_ok);
        const auto& p = e.info.params;
        if (has(p, 'k')) {
            b.k = id == "GAMMA_BINOM" ? uniform(rng, 1, 4) : uniform(rng, id == "OTHER_PASCAL" ? 1 : 0, 6);
        }
        if (has(p, 'n')) {
            b.n = (id == "SHIFT_Bn" || id == "SHIFT_bn") ? uniform(rng, 1, 3)
                  : (id == "BRACE_PROPS_C")               ? uniform(rng, 1, 6)
                  : (id == "BRACE_PROPS_E" || id == "INT_SHIFT") ? uniform(rng, 1, 5)
                                                                 : uniform(rng, 0, 6);
        }
        if (has(p, 'm')) {
            b.m = uniform(rng, 0, 6);
        }
        if (has(p, 'l')) {
            b.l = uniform(rng, 0, 6);
        }
        try {
            check_domain(e, b);
            return b;
        } catch (const DomainError&) {
        }
    }
}

std::string group_of(const std::string& id)
{
    const auto cut = id.rfind('_');
    return cut == std::string::npos ? id : id.substr(0, cut);
}

} // namespace

bool is_unexpected(Verdict v)
{
    return v == Verdict::fail || v == Verdict::unexpected_equality || v == Verdict::error;
}

std::string to_string(EvalMode m) { return m == EvalMode::exact ? "exact" : "series"; }

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::pass:
        return "pass";
    case Verdict::expected_inequality:
        return "expected-inequality";
    case Verdict::fail:
        return "fail";
    case Verdict::unexpected_equality:
        return "unexpected-equality";
    case Verdict::error:
        return "error";
    }
    return "error";
}

const std::vector<IdentityInfo>& identity_catalog()
{
    static const std::vector<IdentityInfo> infos = [] {
        std::vector<IdentityInfo> v;
        for (const auto& e : entries()) {
            v.push_back(e.info);
        }
        return v;
    }();
    return infos;
}

const IdentityInfo& identity_info(const std::string& id) { return entry(id).info; }

std::string binding_to_string(const Binding& b, const std::string& params)
{
    std::ostringstream os;
    bool first = true;
    auto item = [&](const std::string& name, const std::string& value) {
        os << (first ? "" : ", ") << name << '=' << value;
        first = false;
    };
    for (char c : params) {
        switch (c) {
        case 'a':
            item("alpha", b.alpha.to_string());
            break;
        case 'k':
            item("k", std::to_string(b.k));
            break;
        case 'n':
            item("n", std::to_string(b.n));
            break;
        case 'm':
            item("m", std::to_string(b.m));
            break;
        case 'l':
            item("l", std::to_string(b.l));
            break;
        default:
            break;
        }
    }
    return os.str();
}

EvalMode preferred_mode(const std::string& id, const Binding& binding)
{
    const auto& info = identity_info(id);
    return info.exact_capable && binding.alpha.as_rational() ? EvalMode::exact : EvalMode::series;
}

IdentityCase verify_identity(const std::string& id, const Binding& binding, EvalMode mode, long N, long K)
{
    const Entry& e = entry(id);
    if (N < 1 || K < 0) {
        throw DomainError("identity checks need N >= 1 and K >= 0");
    }
    check_domain(e, binding);
    const bool rational = binding.alpha.as_rational().has_value();
    if (mode == EvalMode::exact && (!e.info.exact_capable || !rational)) {
        throw DomainError(id + " has no exact mode for alpha = " + binding.alpha.to_string());
    }
    const bool series_capable = e.family != Family::must_fail && e.family != Family::snake &&
                                e.family != Family::brace_d;
    if (mode == EvalMode::series && !series_capable) {
        throw DomainError(id + " is checked in exact mode only");
    }

    Comparisons results;
    switch (e.family) {
    case Family::scalar:
        if (mode == EvalMode::exact) {
            ExactEval ev(*binding.alpha.as_rational(), !e.info.expect_equal);
            results = e.exact(ev, binding);
        } else {
            results = with_raising(N, [&](long work) {
                SeriesEval ev(binding.alpha, work, N, !e.info.expect_equal);
                return e.series(ev, binding);
            });
        }
        break;
    case Family::xseries:
        results = x_identity(id, binding, N, K);
        break;
    case Family::gamma:
        results = gamma_identity(id, binding, N);
        break;
    case Family::limit:
        results = binom_limit(binding);
        break;
    case Family::must_fail:
        results = must_fail(id, *binding.alpha.as_rational());
        break;
    case Family::snake:
        results = snake_identity(binding);
        break;
    case Family::brace_d: {
        const BigRational a = *binding.alpha.as_rational();
        ExactEval ev(a, false);
        results = {ev.compare(q_brace(-a), q_brace(a).substitute_inverse_q())};
        break;
    }
    }

    IdentityCase c;
    c.id = id;
    c.binding = binding;
    c.mode = mode;
    const auto differing = std::find_if(results.begin(), results.end(), [](const Comparison& r) { return !r.equal; });
    if (e.info.expect_equal) {
        c.verdict = differing == results.end() ? Verdict::pass : Verdict::fail;
    } else {
        c.verdict = differing == results.end() ? Verdict::unexpected_equality : Verdict::expected_inequality;
    }
    if (differing != results.end()) {
        c.witness = differing->witness;
    } else if (!e.info.expect_equal && !results.empty()) {
        c.witness = results.front().witness;
    }
    return c;
}

std::vector<std::string> select_identities(const std::string& filter)
{
    std::vector<std::string> out;
    const auto& catalog = identity_catalog();
    if (filter == "ALL") {
        for (const auto& info : catalog) {
            out.push_back(info.id);
        }
        return out;
    }
    std::vector<bool> chosen(catalog.size(), false);
    std::stringstream ss(filter);
    std::string item;
    while (std::getline(ss, item, ',')) {
        bool matched = false;
        for (std::size_t i = 0; i < catalog.size(); ++i) {
            if (catalog[i].id == item || group_of(catalog[i].id) == item) {
                chosen[i] = true;
                matched = true;
            }
        }
        if (!matched) {
            throw DomainError("unknown identity: " + item);
        }
    }
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        if (chosen[i]) {
            out.push_back(catalog[i].id);
        }
    }
    return out;
}

std::vector<Binding> generate_bindings(const std::string& id, long trials, std::uint64_t seed)
{
    const Entry& e = entry(id);
    if (e.family == Family::must_fail) {
        Binding b;
        b.alpha = make_rational(1, 2);
        return {b};
    }
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(entry_index(id))};
    Rng rng(seq);
    std::vector<Binding> out;
    for (long t = 0; t < trials; ++t) {
        out.push_back(draw(e, rng, t));
    }
    return out;
}

SuiteReport run_suite(const SuiteConfig& config)
{
    if (config.trials < 1) {
        throw DomainError("trials must be at least 1");
    }
    SuiteReport report;
    report.config = config;
    const auto ids = select_identities(config.filter);
    for (const auto& id : ids) {
        for (auto& b : generate_bindings(id, config.trials, config.seed)) {
            IdentityCase c;
            c.id = id;
            c.binding = std::move(b);
            c.mode = preferred_mode(id, c.binding);
            report.cases.push_back(std::move(c));
        }
    }
    parallel_for(
        static_cast<long>(report.cases.size()),
        [&](long i) {
            IdentityCase& c = report.cases[static_cast<std::size_t>(i)];
            try {
                c = verify_identity(c.id, c.binding, c.mode, config.N, config.K);
            } catch (const std::exception& ex) {
                c.verdict = Verdict::error;
                c.witness = Witness{ex.what(), ""};
            }
        },
        config.jobs);
    for (const auto& id : ids) {
        IdentitySummary s;
        s.id = id;
        for (const auto& c : report.cases) {
            if (c.id != id) {
                continue;
            }
            ++s.cases;
            if (is_unexpected(c.verdict)) {
                ++s.unexpected;
                if (!s.first_counterexample) {
                    s.first_counterexample = c;
                }
            } else {
                ++s.passed;
            }
        }
        report.unexpected += s.unexpected;
        report.identities.push_back(std::move(s));
    }
    return report;
}

std::string SuiteReport::text() const
{
    std::ostringstream os;
    os << "identity suite: filter=" << config.filter << " trials=" << config.trials << " seed=" << config.seed
       << " N=" << config.N << " K=" << config.K << '\n';
    os << std::left << std::setw(18) << "identity" << std::right << std::setw(7) << "cases" << std::setw(7)
       << "pass" << std::setw(12) << "unexpected" << '\n';
    for (const auto& s : identities) {
        os << std::left << std::setw(18) << s.id << std::right << std::setw(7) << s.cases << std::setw(7) << s.passed
           << std::setw(12) << s.unexpected << '\n';
    }
    os << "total: " << cases.size() << " cases, " << unexpected << " unexpected\n";
    for (const auto& s : identities) {
        if (!s.first_counterexample) {
            continue;
        }
        const auto& c = *s.first_counterexample;
        os << "counterexample " << s.id << " [" << binding_to_string(c.binding, identity_info(c.id).params) << "] "
           << to_string(c.mode) << ' ' << to_string(c.verdict) << '\n';
        if (c.witness) {
            os << "  lhs: " << c.witness->lhs << '\n' << "  rhs: " << c.witness->rhs << '\n';
        }
    }
    return os.str();
}

nlohmann::json to_json(const IdentityCase& c)
{
    const auto& params = identity_info(c.id).params;
    nlohmann::json binding = nlohmann::json::object();
    for (char p : params) {
        switch (p) {
        case 'a':
            binding["alpha"] = c.binding.alpha.to_string();
            break;
        case 'k':
            binding["k"] = c.binding.k;
            break;
        case 'n':
            binding["n"] = c.binding.n;
            break;
        case 'm':
            binding["m"] = c.binding.m;
            break;
        case 'l':
            binding["l"] = c.binding.l;
            break;
        default:
            break;
        }
    }
    nlohmann::json j{{"id", c.id}, {"binding", binding}, {"mode", to_string(c.mode)}, {"verdict", to_string(c.verdict)}};
    j["witness"] = c.witness ? nlohmann::json{{"lhs", c.witness->lhs}, {"rhs", c.witness->rhs}} : nlohmann::json();
    return j;
}

nlohmann::json SuiteReport::to_json() const
{
    nlohmann::json ids = nlohmann::json::array();
    for (const auto& s : identities) {
        ids.push_back({{"id", s.id},
                       {"cases", s.cases},
                       {"passed", s.passed},
                       {"unexpected", s.unexpected},
                       {"first_counterexample",
                        s.first_counterexample ? qreal::to_json(*s.first_counterexample) : nlohmann::json()}});
    }
    nlohmann::json all = nlohmann::json::array();
    for (const auto& c : cases) {
        all.push_back(qreal::to_json(c));
    }
    return {{"config",
             {{"filter", config.filter}, {"trials", config.trials}, {"seed", config.seed}, {"N", config.N},
              {"K", config.K}}},
            {"identities", ids},
            {"cases", all},
            {"unexpected", unexpected}};
}

} // namespace qreal
