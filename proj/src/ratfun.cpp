#include "qreal/ratfun.hpp"

#include "qreal/errors.hpp"

#include <algorithm>
#include <utility>

namespace qreal {
namespace {

IntPolynomial must_divide(const IntPolynomial& a, const IntPolynomial& b)
{
    auto q = IntPolynomial::exact_divide(a, b);
    if (!q) {
        throw std::logic_error("gcd does not divide its argument");
    }
    return *std::move(q);
}

// Cancels the common integer content and fixes den(0) > 0.
void fix_content_and_sign(IntPolynomial& num, IntPolynomial& den)
{
    BigInt c;
    const BigInt cn = num.content();
    const BigInt cd = den.content();
    mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (den[0] < 0) {
        c = -c;
    }
    if (c != 1) {
        num = num.divexact(c);
        den = den.divexact(c);
    }
}

} // namespace

QRationalFunction::QRationalFunction(long c) : QRationalFunction(BigInt(c)) {}

QRationalFunction::QRationalFunction(const BigInt& c)
    : num_(IntPolynomial::constant(c)), den_(IntPolynomial::constant(1))
{
}

QRationalFunction::QRationalFunction(const IntPolynomial& p)
{
    *this = normalize(0, p, IntPolynomial::constant(1));
}

QRationalFunction QRationalFunction::monomial(long e, const BigInt& c)
{
    QRationalFunction r(c);
    if (c != 0) {
        r.exponent_ = e;
    }
    return r;
}

QRationalFunction QRationalFunction::normalize(long e, IntPolynomial num, IntPolynomial den)
{
    if (den.is_zero()) {
        throw DivisionByZero("rational function with zero denominator");
    }
    QRationalFunction r;
    if (num.is_zero()) {
        return r;
    }
    const long vn = num.valuation();
    const long vd = den.valuation();
    num = num.shifted(-vn);
    den = den.shifted(-vd);
    e += vn - vd;

    if (num.degree() > 0 && den.degree() > 0) {
        IntPolynomial g = poly_gcd(num, den);
        if (g.degree() > 0) {
            num = must_divide(num, g);
            den = must_divide(den, g);
        }
    }
    fix_content_and_sign(num, den);
    r.exponent_ = e;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
}

QRationalFunction QRationalFunction::operator-() const
{
    QRationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

QRationalFunction QRationalFunction::inverse() const
{
    if (is_zero()) {
        throw DivisionByZero("inverse of the zero rational function");
    }
    QRationalFunction r;
    r.exponent_ = -exponent_;
    r.num_ = den_;
    r.den_ = num_;
    if (r.den_[0] < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

QRationalFunction QRationalFunction::substitute_inverse_q() const
{
    if (is_zero()) {
        return *this;
    }
    // q^e N(1/q) / D(1/q) = q^{-e - deg N + deg D} rev(N) / rev(D)
    return normalize(-exponent_ - num_.degree() + den_.degree(), num_.reversed(), den_.reversed());
}

QRationalFunction QRationalFunction::pow(long e) const
{
    if (e < 0) {
        return inverse().pow(-e);
    }
    QRationalFunction r;
    r.num_ = num_.pow(static_cast<unsigned>(e));
    r.den_ = den_.pow(static_cast<unsigned>(e));
    r.exponent_ = is_zero() ? 0 : exponent_ * e;
    if (e == 0) {
        r.num_ = IntPolynomial::constant(1);
        r.den_ = IntPolynomial::constant(1);
        r.exponent_ = 0;
    }
    return r;
}

QRationalFunction QRationalFunction::shifted(long n) const
{
    QRationalFunction r = *this;
    if (!is_zero()) {
        r.exponent_ += n;
    }
    return r;
}

BigRational QRationalFunction::evaluate(const BigRational& q) const
{
    const BigRational d = den_.evaluate(q);
    if (d == 0) {
        throw DivisionByZero("rational function evaluated at a pole");
    }
    BigRational value = num_.evaluate(q) / d;
    if (exponent_ != 0 && !is_zero()) {
        if (q == 0) {
            throw DivisionByZero("q = 0 with a negative exponent");
        }
        BigRational base = exponent_ > 0 ? q : BigRational(1) / q;
        for (long i = 0; i < std::labs(exponent_); ++i) {
            value *= base;
        }
    }
    return value;
}

QRationalFunction operator+(const QRationalFunction& a, const QRationalFunction& b)
{
    if (a.is_zero()) {
        return b;
    }
    if (b.is_zero()) {
        return a;
    }
    const long e = std::min(a.exponent_, b.exponent_);
    if (a.den_ == b.den_) {
        IntPolynomial n = a.num_.shifted(a.exponent_ - e) + b.num_.shifted(b.exponent_ - e);
        return QRationalFunction::normalize(e, std::move(n), a.den_);
    }
    IntPolynomial n = a.num_.shifted(a.exponent_ - e) * b.den_ + b.num_.shifted(b.exponent_ - e) * a.den_;
    return QRationalFunction::normalize(e, std::move(n), a.den_ * b.den_);
}

QRationalFunction operator-(const QRationalFunction& a, const QRationalFunction& b) { return a + (-b); }

QRationalFunction operator*(const QRationalFunction& a, const QRationalFunction& b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    // Cross cancellation keeps the gcds small; canonical inputs make the
    // product coprime afterwards.
    IntPolynomial an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
    if (an.degree() > 0 && bd.degree() > 0) {
        IntPolynomial g = poly_gcd(an, bd);
        if (g.degree() > 0) {
            an = must_divide(an, g);
            bd = must_divide(bd, g);
        }
    }
    if (bn.degree() > 0 && ad.degree() > 0) {
        IntPolynomial g = poly_gcd(bn, ad);
        if (g.degree() > 0) {
            bn = must_divide(bn, g);
            ad = must_divide(ad, g);
        }
    }
    QRationalFunction r;
    r.exponent_ = a.exponent_ + b.exponent_;
    r.num_ = an * bn;
    r.den_ = ad * bd;
    fix_content_and_sign(r.num_, r.den_);
    return r;
}

QRationalFunction operator/(const QRationalFunction& a, const QRationalFunction& b) { return a * b.inverse(); }

} // namespace qreal
