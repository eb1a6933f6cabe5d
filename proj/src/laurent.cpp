#include "qreal/laurent.hpp"

#include "qreal/errors.hpp"

#include <algorithm>
#include <utility>

namespace qreal {
namespace {

long clamp_precision(long p) { return std::min(p, kExactPrecision); }

long add_precision(long a, long b) { return clamp_precision(a + b); }

} // namespace

LaurentSeries::LaurentSeries(long start, std::vector<BigRational> coeffs, long precision)
    : order_(start), precision_(clamp_precision(precision)), coeffs_(std::move(coeffs))
{
    if (precision_ < kExactPrecision) {
        const long keep = std::max(0L, precision_ - start);
        if (static_cast<long>(coeffs_.size()) > keep) {
            coeffs_.resize(static_cast<std::size_t>(keep));
        }
    }
    normalize();
}

void LaurentSeries::normalize()
{
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) {
        ++lead;
    }
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        order_ = 0;
        return;
    }
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
        order_ += static_cast<long>(lead);
    }
    while (coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

LaurentSeries LaurentSeries::zero(long precision) { return LaurentSeries(0, {}, precision); }

LaurentSeries LaurentSeries::constant(const BigRational& c, long precision)
{
    return LaurentSeries(0, {c}, precision);
}

LaurentSeries LaurentSeries::monomial(long exponent, const BigRational& c, long precision)
{
    return LaurentSeries(exponent, {c}, precision);
}

LaurentSeries LaurentSeries::from_polynomial(const IntPolynomial& p, long precision)
{
    std::vector<BigRational> v(p.coeffs().begin(), p.coeffs().end());
    return LaurentSeries(0, std::move(v), precision);
}

BigRational LaurentSeries::coeff(long i) const
{
    if (i >= precision_) {
        throw InsufficientPrecision("coefficient of q^" + std::to_string(i) + " is beyond O(q^" +
                                    std::to_string(precision_) + ")");
    }
    if (is_zero() || i < order_ || i - order_ >= static_cast<long>(coeffs_.size())) {
        return 0;
    }
    return coeffs_[static_cast<std::size_t>(i - order_)];
}

std::vector<BigRational> LaurentSeries::window(long lo, long hi) const
{
    if (hi > precision_) {
        throw InsufficientPrecision("window extends past the series precision");
    }
    std::vector<BigRational> out;
    out.reserve(static_cast<std::size_t>(std::max(0L, hi - lo)));
    for (long i = lo; i < hi; ++i) {
        out.push_back(coeff(i));
    }
    return out;
}

LaurentSeries LaurentSeries::truncated(long n) const
{
    if (n >= precision_) {
        return *this;
    }
    return LaurentSeries(order_, coeffs_, n);
}

LaurentSeries LaurentSeries::shifted(long n) const
{
    LaurentSeries r = *this;
    if (!is_exact()) {
        r.precision_ = precision_ + n;
    }
    if (!is_zero()) {
        r.order_ += n;
    }
    return r;
}

LaurentSeries LaurentSeries::scaled(const BigRational& c) const
{
    LaurentSeries r = *this;
    for (auto& x : r.coeffs_) {
        x *= c;
    }
    r.normalize();
    return r;
}

bool LaurentSeries::all_integer() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigRational& c) { return c.get_den() == 1; });
}

bool LaurentSeries::agrees_with(const LaurentSeries& other, long n) const
{
    if (precision_ < n || other.precision_ < n) {
        throw InsufficientPrecision("comparison below q^" + std::to_string(n) + " needs more precision");
    }
    const long lo = std::min(valuation_bound(), other.valuation_bound());
    for (long i = lo; i < n; ++i) {
        if (coeff(i) != other.coeff(i)) {
            return false;
        }
    }
    return true;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b)
{
    const long prec = std::min(a.precision_, b.precision_);
    if (a.is_zero()) {
        return LaurentSeries(b.order_, b.coeffs_, prec);
    }
    if (b.is_zero()) {
        return LaurentSeries(a.order_, a.coeffs_, prec);
    }
    const long start = std::min(a.order_, b.order_);
    long end = std::max(a.order_ + static_cast<long>(a.coeffs_.size()), b.order_ + static_cast<long>(b.coeffs_.size()));
    end = std::min(end, prec);
    if (end <= start) {
        return LaurentSeries::zero(prec);
    }
    std::vector<BigRational> v(static_cast<std::size_t>(end - start));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        const long e = a.order_ + static_cast<long>(i);
        if (e >= end) {
            break;
        }
        v[static_cast<std::size_t>(e - start)] += a.coeffs_[i];
    }
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
        const long e = b.order_ + static_cast<long>(i);
        if (e >= end) {
            break;
        }
        v[static_cast<std::size_t>(e - start)] += b.coeffs_[i];
    }
    return LaurentSeries(start, std::move(v), prec);
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b)
{
    const long prec = std::min(add_precision(a.precision_, b.valuation_bound()),
                               add_precision(b.precision_, a.valuation_bound()));
    if (a.is_zero() || b.is_zero()) {
        return LaurentSeries::zero(prec);
    }
    const long start = a.order_ + b.order_;
    long len = static_cast<long>(a.coeffs_.size() + b.coeffs_.size()) - 1;
    len = std::min(len, prec - start);
    if (len <= 0) {
        return LaurentSeries::zero(prec);
    }
    std::vector<BigRational> v(static_cast<std::size_t>(len));
    BigRational t;
    for (std::size_t i = 0; i < a.coeffs_.size() && static_cast<long>(i) < len; ++i) {
        if (a.coeffs_[i] == 0) {
            continue;
        }
        const std::size_t jmax = std::min(b.coeffs_.size(), static_cast<std::size_t>(len) - i);
        for (std::size_t j = 0; j < jmax; ++j) {
            if (b.coeffs_[j] == 0) {
                continue;
            }
            mpq_mul(t.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
            v[i + j] += t;
        }
    }
    return LaurentSeries(start, std::move(v), prec);
}

LaurentSeries LaurentSeries::divide(const LaurentSeries& a, const LaurentSeries& b, long cap)
{
    if (b.is_zero()) {
        if (b.is_exact()) {
            throw DivisionByZero("division by the zero series");
        }
        throw InsufficientPrecision("divisor is O(q^" + std::to_string(b.precision_) + "), its order is unknown");
    }
    const long order_c = a.valuation_bound() - b.order_;
    long rel = std::min(a.precision_ - a.valuation_bound(), b.precision_ - b.order_);
    if (a.is_exact() && a.is_zero()) {
        return LaurentSeries::zero(std::min(kExactPrecision, cap));
    }
    long prec = clamp_precision(order_c + rel);
    if (b.coeffs_.size() == 1 && prec >= kExactPrecision) {
        // Exact division by a monomial.
        LaurentSeries r = a.scaled(BigRational(1) / b.coeffs_[0]).shifted(-b.order_);
        return r.truncated(cap);
    }
    prec = std::min(prec, cap);
    if (prec >= kExactPrecision) {
        throw InsufficientPrecision("exact quotient is an infinite series; a precision cap is required");
    }
    if (a.is_zero()) {
        return LaurentSeries::zero(prec);
    }
    const long len = prec - order_c;
    if (len <= 0) {
        return LaurentSeries::zero(prec);
    }
    std::vector<BigRational> c(static_cast<std::size_t>(len));
    const BigRational inv0 = BigRational(1) / b.coeffs_[0];
    BigRational t;
    for (long i = 0; i < len; ++i) {
        BigRational acc = i < static_cast<long>(a.coeffs_.size()) ? a.coeffs_[static_cast<std::size_t>(i)] : BigRational(0);
        const long jmax = std::min(i, static_cast<long>(b.coeffs_.size()) - 1);
        for (long j = 1; j <= jmax; ++j) {
            const auto& bj = b.coeffs_[static_cast<std::size_t>(j)];
            if (bj == 0) {
                continue;
            }
            mpq_mul(t.get_mpq_t(), bj.get_mpq_t(), c[static_cast<std::size_t>(i - j)].get_mpq_t());
            acc -= t;
        }
        c[static_cast<std::size_t>(i)] = acc * inv0;
    }
    return LaurentSeries(order_c, std::move(c), prec);
}

LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b)
{
    return LaurentSeries::divide(a, b, kExactPrecision);
}

LaurentSeries LaurentSeries::pow(unsigned e) const
{
    LaurentSeries result = constant(1);
    LaurentSeries base = *this;
    while (e > 0) {
        if (e & 1U) {
            result = result * base;
        }
        e >>= 1U;
        if (e > 0) {
            base = base * base;
        }
    }
    return result;
}

LaurentSeries series_from_ratfun(const QRationalFunction& f, long n)
{
    if (f.is_zero()) {
        return LaurentSeries::zero(n);
    }
    const long len = n - f.exponent();
    if (len <= 0) {
        return LaurentSeries::zero(n);
    }
    const auto& num = f.num().coeffs();
    const auto& den = f.den().coeffs();
    const auto count = static_cast<std::size_t>(len);
    std::vector<BigRational> out(count);
    if (den[0] == 1) {
        // Integer long division.
        std::vector<BigInt> c(count);
        for (std::size_t i = 0; i < count; ++i) {
            BigInt acc = i < num.size() ? num[i] : BigInt(0);
            const std::size_t jmax = std::min(i, den.size() - 1);
            for (std::size_t j = 1; j <= jmax; ++j) {
                mpz_submul(acc.get_mpz_t(), den[j].get_mpz_t(), c[i - j].get_mpz_t());
            }
            c[i] = std::move(acc);
        }
        for (std::size_t i = 0; i < count; ++i) {
            out[i] = BigRational(c[i]);
        }
    } else {
        const BigRational inv0 = BigRational(1) / BigRational(den[0]);
        for (std::size_t i = 0; i < count; ++i) {
            BigRational acc = i < num.size() ? BigRational(num[i]) : BigRational(0);
            const std::size_t jmax = std::min(i, den.size() - 1);
            for (std::size_t j = 1; j <= jmax; ++j) {
                acc -= BigRational(den[j]) * out[i - j];
            }
            out[i] = acc * inv0;
        }
    }
    return LaurentSeries(f.exponent(), std::move(out), n);
}

} // namespace qreal
