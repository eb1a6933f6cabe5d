#include "qreal/qseries.hpp"

#include "qreal/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qreal {

namespace {

void check_degrees(long K, long N)
{
    if (K < 0) {
        throw DomainError("x-degree K must be nonnegative");
    }
    if (N < 1) {
        throw DomainError("q-precision N must be positive");
    }
}

XSeries from_row(std::vector<LaurentSeries> row, bool pentagonal_shift)
{
    if (pentagonal_shift) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            const auto kk = static_cast<long>(k);
            row[k] = row[k].shifted(kk * (kk - 1) / 2);
        }
    }
    return XSeries(std::move(row));
}

XSeries truncated_product(const LaurentSeries& c, FactorSign sign, long K, long factors, long work)
{
    XSeries p = XSeries::one(K);
    const LaurentSeries signed_c = sign == FactorSign::plus ? c : -c;
    for (long j = 0; j < factors; ++j) {
        p = p.times_linear(signed_c.shifted(j)).truncated_q(work);
    }
    return p;
}

// Repeats `attempt(work)` with a larger working precision until the result
// is known below q^n, or the precision stops improving.
template <class Attempt>
XSeries raise_until(long n, Attempt attempt)
{
    long work = n + 4;
    long best = -kExactPrecision;
    XSeries result;
    for (int round = 0; round < 24; ++round) {
        result = attempt(work);
        if (result.qprec() >= n) {
            return result.truncated_q(n);
        }
        if (result.qprec() <= best) {
            break;
        }
        best = result.qprec();
        work += (n - result.qprec()) + 4;
    }
    return result;
}

XSeries require(XSeries s, long n, const char* what)
{
    if (s.qprec() < n) {
        throw InsufficientPrecision(std::string(what) + " reached only q^" + std::to_string(s.qprec()) +
                                    ", wanted q^" + std::to_string(n));
    }
    return s;
}

} // namespace

LaurentSeries brace_series(const RealSpec& alpha, long n, const QRealOptions& opt)
{
    if (auto r = alpha.as_rational()) {
        return series_from_ratfun(q_brace(*r), n);
    }
    return q_brace_series(alpha, n, opt);
}

LaurentSeries real_series(const RealSpec& alpha, long n, const QRealOptions& opt)
{
    return q_real_series(alpha, n, opt);
}

XSeries B_series(const RealSpec& alpha, long K, long N, const QRealOptions& opt)
{
    check_degrees(K, N);
    return from_row(binomial_row_series(alpha, K, RowKind::falling, N, opt), true);
}

XSeries B_series_serial(const RealSpec& alpha, long K, long N, const QRealOptions& opt)
{
    check_degrees(K, N);
    return from_row(binomial_row_series_serial(alpha, K, RowKind::falling, N, opt), true);
}

XSeries b_series(const RealSpec& alpha, long K, long N, const QRealOptions& opt)
{
    check_degrees(K, N);
    return from_row(binomial_row_series(alpha, K, RowKind::rising, N, opt), false);
}

XSeries b_series_serial(const RealSpec& alpha, long K, long N, const QRealOptions& opt)
{
    check_degrees(K, N);
    return from_row(binomial_row_series_serial(alpha, K, RowKind::rising, N, opt), false);
}

long pochhammer_factor_count(long v, long K, long N)
{
    long factors = N;
    for (long k = 1; k <= K; ++k) {
        factors = std::max(factors, N - k * v - (k - 1) * (k - 2) / 2);
    }
    return std::max(0L, factors) + 4;
}

XSeries pochhammer_product(const LaurentSeries& c, FactorSign sign, long K, long N)
{
    check_degrees(K, N);
    if (c.is_zero() && c.is_exact()) {
        return XSeries::one(K).truncated_q(N);
    }
    const long factors = pochhammer_factor_count(c.valuation_bound(), K, N);
    return raise_until(N, [&](long work) { return truncated_product(c, sign, K, factors, work); });
}

XSeries B_product(const RealSpec& alpha, long K, long N, const QRealOptions& opt)
{
    check_degrees(K, N);
    return require(raise_until(N,
                               [&](long work) {
                                   const LaurentSeries brace = brace_series(alpha, work, opt);
                                   return pochhammer_product(LaurentSeries::constant(1), FactorSign::plus, K, work) /
                                          pochhammer_product(brace, FactorSign::plus, K, work);
                               }),
                   N, "B product");
}

XSeries b_product(const RealSpec& alpha, long K, long N, const QRealOptions& opt)
{
    check_degrees(K, N);
    return require(raise_until(N,
                               [&](long work) {
                                   const LaurentSeries brace = brace_series(alpha, work, opt);
                                   return pochhammer_product(brace, FactorSign::minus, K, work) /
                                          pochhammer_product(LaurentSeries::constant(1), FactorSign::minus, K, work);
                               }),
                   N, "b product");
}

XSeries gen_pochhammer(const RealSpec& alpha, long K, long N, const QRealOptions& opt)
{
    check_degrees(K, N);
    XSeries product = require(raise_until(N,
                                          [&](long work) {
                                              const LaurentSeries brace = brace_series(alpha, work, opt);
                                              return pochhammer_product(LaurentSeries::constant(1),
                                                                        FactorSign::minus, K, work) /
                                                     pochhammer_product(brace, FactorSign::minus, K, work);
                                          }),
                              N, "generalized q-Pochhammer");
    const XSeries sum = B_series(alpha, K, N, opt).compose_scale(LaurentSeries::constant(-1));
    if (!product.agrees_with(sum, N, K)) {
        throw std::logic_error("product and sum forms of (x;q)_alpha disagree for alpha = " + alpha.to_string());
    }
    return product;
}

} // namespace qreal
