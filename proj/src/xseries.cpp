#include "qreal/xseries.hpp"

#include "qreal/errors.hpp"

#include <algorithm>
#include <utility>

namespace qreal {

XSeries::XSeries(std::vector<LaurentSeries> coeffs) : coeffs_(std::move(coeffs)) { sync_precision(); }

void XSeries::sync_precision()
{
    qprec_ = kExactPrecision;
    for (const auto& c : coeffs_) {
        qprec_ = std::min(qprec_, c.precision());
    }
    for (auto& c : coeffs_) {
        c = c.truncated(qprec_);
    }
}

XSeries XSeries::one(long xdegree, long qprec)
{
    std::vector<LaurentSeries> v(static_cast<std::size_t>(xdegree) + 1, LaurentSeries::zero(qprec));
    v[0] = LaurentSeries::constant(1, qprec);
    return XSeries(std::move(v));
}

XSeries XSeries::linear(const LaurentSeries& c0, const LaurentSeries& c1, long xdegree)
{
    const long prec = std::min(c0.precision(), c1.precision());
    std::vector<LaurentSeries> v(static_cast<std::size_t>(xdegree) + 1, LaurentSeries::zero(prec));
    v[0] = c0;
    if (xdegree >= 1) {
        v[1] = c1;
    }
    return XSeries(std::move(v));
}

XSeries XSeries::truncated_x(long xdegree) const
{
    std::vector<LaurentSeries> v(coeffs_.begin(), coeffs_.begin() + std::min<long>(xdegree + 1, static_cast<long>(coeffs_.size())));
    return XSeries(std::move(v));
}

XSeries XSeries::truncated_q(long n) const
{
    std::vector<LaurentSeries> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        v.push_back(c.truncated(n));
    }
    return XSeries(std::move(v));
}

XSeries operator+(const XSeries& a, const XSeries& b)
{
    const long k = std::min(a.xdegree(), b.xdegree());
    std::vector<LaurentSeries> v;
    for (long i = 0; i <= k; ++i) {
        v.push_back(a[i] + b[i]);
    }
    return XSeries(std::move(v));
}

XSeries operator-(const XSeries& a, const XSeries& b)
{
    const long k = std::min(a.xdegree(), b.xdegree());
    std::vector<LaurentSeries> v;
    for (long i = 0; i <= k; ++i) {
        v.push_back(a[i] - b[i]);
    }
    return XSeries(std::move(v));
}

XSeries operator*(const XSeries& a, const XSeries& b)
{
    const long k = std::min(a.xdegree(), b.xdegree());
    std::vector<LaurentSeries> v;
    for (long n = 0; n <= k; ++n) {
        LaurentSeries acc = a[0] * b[n];
        for (long i = 1; i <= n; ++i) {
            acc += a[i] * b[n - i];
        }
        v.push_back(std::move(acc));
    }
    return XSeries(std::move(v));
}

XSeries operator/(const XSeries& a, const XSeries& b)
{
    const long k = std::min(a.xdegree(), b.xdegree());
    const long cap = std::min(a.qprec(), b.qprec());
    const bool unit = b[0].is_exact() && b[0] == LaurentSeries::constant(1);
    std::vector<LaurentSeries> c;
    for (long n = 0; n <= k; ++n) {
        LaurentSeries acc = a[n];
        for (long i = 1; i <= n; ++i) {
            acc -= b[i] * c[static_cast<std::size_t>(n - i)];
        }
        c.push_back(unit ? acc : LaurentSeries::divide(acc, b[0], cap));
    }
    return XSeries(std::move(c));
}

XSeries XSeries::scaled(const LaurentSeries& c) const
{
    std::vector<LaurentSeries> v;
    for (const auto& x : coeffs_) {
        v.push_back(x * c);
    }
    return XSeries(std::move(v));
}

XSeries XSeries::compose_scale(const LaurentSeries& c) const
{
    std::vector<LaurentSeries> v;
    LaurentSeries power = LaurentSeries::constant(1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        v.push_back(coeffs_[i] * power);
        if (i + 1 < coeffs_.size()) {
            power = power * c;
        }
    }
    return XSeries(std::move(v));
}

XSeries XSeries::compose_qx(long n) const
{
    std::vector<LaurentSeries> v;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        v.push_back(coeffs_[i].shifted(n * static_cast<long>(i)));
    }
    return XSeries(std::move(v));
}

XSeries XSeries::times_linear(const LaurentSeries& c) const
{
    std::vector<LaurentSeries> v;
    v.reserve(coeffs_.size());
    v.push_back(coeffs_[0]);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        v.push_back(coeffs_[i] + c * coeffs_[i - 1]);
    }
    return XSeries(std::move(v));
}

XSeries XSeries::over_linear(const LaurentSeries& c) const
{
    std::vector<LaurentSeries> v;
    v.reserve(coeffs_.size());
    v.push_back(coeffs_[0]);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        v.push_back(coeffs_[i] - c * v[i - 1]);
    }
    return XSeries(std::move(v));
}

bool XSeries::agrees_with(const XSeries& other, long n, long k) const
{
    if (xdegree() < k || other.xdegree() < k) {
        throw InsufficientPrecision("comparison up to x^" + std::to_string(k) + " needs a larger xdegree");
    }
    for (long i = 0; i <= k; ++i) {
        if (!(*this)[i].agrees_with(other[i], n)) {
            return false;
        }
    }
    return true;
}

XSeries q_derivative_x(const XSeries& f)
{
    if (f.xdegree() < 1) {
        throw DomainError("q-derivative needs an xdegree of at least 1");
    }
    std::vector<LaurentSeries> v;
    for (long n = 1; n <= f.xdegree(); ++n) {
        v.push_back(f[n] * LaurentSeries::from_polynomial(IntPolynomial::q_integer(n)));
    }
    return XSeries(std::move(v));
}

} // namespace qreal
