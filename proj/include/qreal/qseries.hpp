#ifndef QREAL_QSERIES_HPP
#define QREAL_QSERIES_HPP

#include "qreal/qbinomial.hpp"
#include "qreal/xseries.hpp"

namespace qreal {

/// sum_{k <= K} q^{C(k,2)} binom(alpha, k)_q x^k, coefficients below q^N.
XSeries B_series(const RealSpec& alpha, long K, long N, const QRealOptions& opt = {});
XSeries B_series_serial(const RealSpec& alpha, long K, long N, const QRealOptions& opt = {});

/// sum_{k <= K} binom(alpha + k - 1, k)_q x^k, coefficients below q^N.
XSeries b_series(const RealSpec& alpha, long K, long N, const QRealOptions& opt = {});
XSeries b_series_serial(const RealSpec& alpha, long K, long N, const QRealOptions& opt = {});

enum class FactorSign { plus, minus };

/// prod_{j >= 0} (1 + q^j c x) for plus, (1 - q^j c x) for minus, modulo
/// (q^N, x^{K+1}). Factors from j = J on cannot reach below q^N, with
/// J = max_{1 <= k <= K} (N - k v - C(k-1, 2)) + 4 and v the order of c.
/// The result's qprec is below N only when c itself is too coarse.
XSeries pochhammer_product(const LaurentSeries& c, FactorSign sign, long K, long N);

/// Number of factors pochhammer_product multiplies for an order-v c.
long pochhammer_factor_count(long v, long K, long N);

/// Product forms (-x; q)_inf / (-{alpha} x; q)_inf and
/// ({alpha} x; q)_inf / (x; q)_inf.
XSeries B_product(const RealSpec& alpha, long K, long N, const QRealOptions& opt = {});
XSeries b_product(const RealSpec& alpha, long K, long N, const QRealOptions& opt = {});

/// (x; q)_alpha = (x; q)_inf / ({alpha} x; q)_inf by the product route.
/// Throws std::logic_error if it disagrees with B_alpha(q, -x).
XSeries gen_pochhammer(const RealSpec& alpha, long K, long N, const QRealOptions& opt = {});

/// {alpha}_q below q^n; exact expansion for rational alpha.
LaurentSeries brace_series(const RealSpec& alpha, long n, const QRealOptions& opt = {});
/// [alpha]_q below q^n; exact expansion for rational alpha.
LaurentSeries real_series(const RealSpec& alpha, long n, const QRealOptions& opt = {});

} // namespace qreal

#endif
