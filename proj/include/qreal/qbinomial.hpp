#ifndef QREAL_QBINOMIAL_HPP
#define QREAL_QBINOMIAL_HPP

#include "qreal/real_spec.hpp"

#include <variant>
#include <vector>

namespace qreal {

/// [k]_q! = [1]_q [2]_q ... [k]_q; [0]_q! = 1. Throws DomainError for k < 0.
IntPolynomial q_factorial(long k);

enum class PochhammerBase { q, q_inverse };

/// (x; q)_n = (1 - x)(1 - q x)...(1 - q^{n-1} x), or with q^{-i} for the
/// inverse base. n = 0 gives 1. Throws DomainError for n < 0.
QRationalFunction q_pochhammer_finite(const QRationalFunction& x, PochhammerBase base, long n);
LaurentSeries q_pochhammer_finite(const LaurentSeries& x, PochhammerBase base, long n);

/// [alpha]_q [alpha - 1]_q ... [alpha - k + 1]_q / [k]_q!, exact.
/// Throws DomainError for k < 0.
QRationalFunction q_binomial(const BigRational& alpha, long k);

/// Exact value for rational alpha, a series below q^n otherwise.
using BinomialValue = std::variant<QRationalFunction, LaurentSeries>;
BinomialValue q_binomial(const RealSpec& alpha, long k, long n, const QRealOptions& opt = {});

/// q_binomial as a series below q^n for any spec.
LaurentSeries q_binomial_series(const RealSpec& alpha, long k, long n, const QRealOptions& opt = {});

/// Predicted order of binom(alpha, k)_q with N = floor(alpha) and
/// b = ord [alpha - N]_q:
///   0                    k <= N
///   b - C(k - N, 2)      k > N >= 0
///   N k - C(k, 2)        N < 0
/// Throws DomainError for alpha a nonnegative integer or k < 0.
long binom_order(const RealSpec& alpha, long k, const QRealOptions& opt = {});

/// Row shapes used by the x-series: falling gives binom(alpha, k) and
/// rising gives binom(alpha + k - 1, k), for k = 0..kmax.
enum class RowKind { falling, rising };

std::vector<QRationalFunction> binomial_row(const BigRational& alpha, long kmax, RowKind kind);
/// Incremental reference: entry k is entry k-1 times one factor over [k]_q.
std::vector<QRationalFunction> binomial_row_serial(const BigRational& alpha, long kmax, RowKind kind);

/// Row entries as series, every entry known below q^n. Rational specs are
/// expanded from the exact row; other specs derive every factor from one
/// [alpha]_q series via [alpha + j]_q = [j]_q + q^j [alpha]_q and raise the
/// working precision until all entries reach n.
std::vector<LaurentSeries> binomial_row_series(const RealSpec& alpha, long kmax, RowKind kind, long n,
                                               const QRealOptions& opt = {});
std::vector<LaurentSeries> binomial_row_series_serial(const RealSpec& alpha, long kmax, RowKind kind, long n,
                                                      const QRealOptions& opt = {});

} // namespace qreal

#endif
