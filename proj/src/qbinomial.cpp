#include "qreal/qbinomial.hpp"

#include "qreal/errors.hpp"
#include "qreal/parallel.hpp"

#include <algorithm>
#include <string>

namespace qreal {

IntPolynomial q_factorial(long k)
{
    if (k < 0) {
        throw DomainError("q-factorial of a negative integer: " + std::to_string(k));
    }
    IntPolynomial f = IntPolynomial::constant(1);
    for (long i = 2; i <= k; ++i) {
        f = f * IntPolynomial::q_integer(i);
    }
    return f;
}

QRationalFunction q_pochhammer_finite(const QRationalFunction& x, PochhammerBase base, long n)
{
    if (n < 0) {
        throw DomainError("q-Pochhammer length must be nonnegative");
    }
    const long step = base == PochhammerBase::q ? 1 : -1;
    QRationalFunction p(1);
    for (long i = 0; i < n; ++i) {
        p *= QRationalFunction(1) - x.shifted(step * i);
    }
    return p;
}

LaurentSeries q_pochhammer_finite(const LaurentSeries& x, PochhammerBase base, long n)
{
    if (n < 0) {
        throw DomainError("q-Pochhammer length must be nonnegative");
    }
    const long step = base == PochhammerBase::q ? 1 : -1;
    LaurentSeries p = LaurentSeries::constant(1);
    for (long i = 0; i < n; ++i) {
        p *= LaurentSeries::constant(1) - x.shifted(step * i);
    }
    return p;
}

namespace {

void check_k(long k)
{
    if (k < 0) {
        throw DomainError("binomial index k must be nonnegative, got " + std::to_string(k));
    }
}

// Offset j of the factor [alpha + j]_q that entry k gains over entry k - 1.
long factor_offset(RowKind kind, long k) { return kind == RowKind::falling ? -(k - 1) : k - 1; }

// [j]_q for any integer j, exactly: [j]_q = -q^j [-j]_q when j < 0.
LaurentSeries integer_q_series(long j)
{
    if (j >= 0) {
        return LaurentSeries::from_polynomial(IntPolynomial::q_integer(j));
    }
    return -LaurentSeries::from_polynomial(IntPolynomial::q_integer(-j)).shifted(j);
}

LaurentSeries shifted_real(const LaurentSeries& base, long j) { return integer_q_series(j) + base.shifted(j); }

LaurentSeries divide_by_factorial(const LaurentSeries& s, long k)
{
    if (k < 2) {
        return s;
    }
    return LaurentSeries::divide(s, LaurentSeries::from_polynomial(q_factorial(k)), s.precision());
}

long worst_precision(const std::vector<LaurentSeries>& row)
{
    long worst = kExactPrecision;
    for (const auto& s : row) {
        worst = std::min(worst, s.precision());
    }
    return worst;
}

template <class RowAt>
std::vector<LaurentSeries> raise_until(long n, RowAt row_at)
{
    long p = n + 4;
    for (int attempt = 0; attempt < 24; ++attempt) {
        std::vector<LaurentSeries> row = row_at(p);
        const long worst = worst_precision(row);
        if (worst >= n) {
            for (auto& s : row) {
                s = s.truncated(n);
            }
            return row;
        }
        p += (n - worst) + 4;
    }
    throw InsufficientPrecision("binomial row could not reach precision q^" + std::to_string(n));
}

std::vector<LaurentSeries> expand_row(const std::vector<QRationalFunction>& exact, long n)
{
    std::vector<LaurentSeries> out(exact.size());
    parallel_for(static_cast<long>(exact.size()), [&](long k) {
        out[static_cast<std::size_t>(k)] = series_from_ratfun(exact[static_cast<std::size_t>(k)], n);
    });
    return out;
}

} // namespace

QRationalFunction q_binomial(const BigRational& alpha, long k)
{
    check_k(k);
    QRationalFunction num(1);
    for (long i = 0; i < k; ++i) {
        num *= q_rational(alpha - i);
        if (num.is_zero()) {
            return num;
        }
    }
    return num / QRationalFunction(q_factorial(k));
}

LaurentSeries q_binomial_series(const RealSpec& alpha, long k, long n, const QRealOptions& opt)
{
    check_k(k);
    if (auto r = alpha.as_rational()) {
        return series_from_ratfun(q_binomial(*r, k), n);
    }
    return binomial_row_series(alpha, k, RowKind::falling, n, opt)[static_cast<std::size_t>(k)];
}

BinomialValue q_binomial(const RealSpec& alpha, long k, long n, const QRealOptions& opt)
{
    if (auto r = alpha.as_rational()) {
        return q_binomial(*r, k);
    }
    return q_binomial_series(alpha, k, n, opt);
}

long binom_order(const RealSpec& alpha, long k, const QRealOptions& opt)
{
    check_k(k);
    if (auto r = alpha.as_rational(); r && is_integer(*r) && *r >= 0) {
        throw DomainError("binom_order excludes nonnegative integers, got " + qreal::to_string(*r));
    }
    const long floor = to_long(alpha.floor());
    if (floor < 0) {
        return floor * k - k * (k - 1) / 2;
    }
    if (k <= floor) {
        return 0;
    }
    const long b = order_of(alpha.plus(-floor), 32, opt);
    const long excess = k - floor;
    return b - excess * (excess - 1) / 2;
}

std::vector<QRationalFunction> binomial_row(const BigRational& alpha, long kmax, RowKind kind)
{
    check_k(kmax);
    const auto size = static_cast<std::size_t>(kmax + 1);
    std::vector<QRationalFunction> factors(size);
    parallel_for(kmax, [&](long i) {
        factors[static_cast<std::size_t>(i + 1)] = q_rational(alpha + factor_offset(kind, i + 1));
    });
    std::vector<QRationalFunction> row(size);
    parallel_for(kmax + 1, [&](long k) {
        QRationalFunction num(1);
        for (long i = 1; i <= k && !num.is_zero(); ++i) {
            num *= factors[static_cast<std::size_t>(i)];
        }
        row[static_cast<std::size_t>(k)] = num / QRationalFunction(q_factorial(k));
    });
    return row;
}

std::vector<QRationalFunction> binomial_row_serial(const BigRational& alpha, long kmax, RowKind kind)
{
    check_k(kmax);
    std::vector<QRationalFunction> row;
    row.reserve(static_cast<std::size_t>(kmax + 1));
    row.emplace_back(1);
    for (long k = 1; k <= kmax; ++k) {
        const QRationalFunction factor = q_rational(alpha + factor_offset(kind, k));
        row.push_back(row.back() * factor / QRationalFunction(IntPolynomial::q_integer(k)));
    }
    return row;
}

std::vector<LaurentSeries> binomial_row_series(const RealSpec& alpha, long kmax, RowKind kind, long n,
                                               const QRealOptions& opt)
{
    check_k(kmax);
    if (auto r = alpha.as_rational()) {
        return expand_row(binomial_row(*r, kmax, kind), n);
    }
    return raise_until(n, [&](long p) {
        const LaurentSeries base = q_real_series(alpha, p, opt);
        const auto size = static_cast<std::size_t>(kmax + 1);
        std::vector<LaurentSeries> factors(size);
        for (long k = 1; k <= kmax; ++k) {
            factors[static_cast<std::size_t>(k)] = shifted_real(base, factor_offset(kind, k));
        }
        std::vector<LaurentSeries> row(size);
        parallel_for(kmax + 1, [&](long k) {
            LaurentSeries num = LaurentSeries::constant(1);
            for (long i = 1; i <= k; ++i) {
                num *= factors[static_cast<std::size_t>(i)];
            }
            row[static_cast<std::size_t>(k)] = divide_by_factorial(num, k);
        });
        return row;
    });
}

std::vector<LaurentSeries> binomial_row_series_serial(const RealSpec& alpha, long kmax, RowKind kind, long n,
                                                      const QRealOptions& opt)
{
    check_k(kmax);
    if (auto r = alpha.as_rational()) {
        std::vector<LaurentSeries> out;
        for (const auto& f : binomial_row_serial(*r, kmax, kind)) {
            out.push_back(series_from_ratfun(f, n));
        }
        return out;
    }
    return raise_until(n, [&](long p) {
        const LaurentSeries base = q_real_series(alpha, p, opt);
        std::vector<LaurentSeries> row{LaurentSeries::constant(1)};
        LaurentSeries num = LaurentSeries::constant(1);
        for (long k = 1; k <= kmax; ++k) {
            num *= shifted_real(base, factor_offset(kind, k));
            row.push_back(divide_by_factorial(num, k));
        }
        return row;
    });
}

} // namespace qreal
