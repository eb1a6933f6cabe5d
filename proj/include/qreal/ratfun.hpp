#ifndef QREAL_RATFUN_HPP
#define QREAL_RATFUN_HPP

#include "qreal/int_poly.hpp"

#include <limits>

namespace qreal {

/// Order of the zero series or zero function.
inline constexpr long kInfiniteOrder = std::numeric_limits<long>::max();

/// Exact rational function q^e * num(q) / den(q) in canonical form:
/// num(0) != 0, den(0) > 0, gcd(num, den) = 1 and the content is
/// pulled into a common form (num/den coprime as integer polynomials).
/// Zero is (e = 0, num = 0, den = 1).
class QRationalFunction {
public:
    QRationalFunction() : den_(IntPolynomial::constant(1)) {}
    QRationalFunction(long c); // NOLINT: integers embed implicitly
    QRationalFunction(const BigInt& c);
    QRationalFunction(const IntPolynomial& p);

    /// q^e * num / den in canonical form. Throws DivisionByZero when den = 0.
    static QRationalFunction normalize(long e, IntPolynomial num, IntPolynomial den);
    static QRationalFunction monomial(long e, const BigInt& c = 1);

    long exponent() const { return exponent_; }
    const IntPolynomial& num() const { return num_; }
    const IntPolynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    /// exponent(), or kInfiniteOrder for zero.
    long order() const { return is_zero() ? kInfiniteOrder : exponent_; }
    bool is_polynomial() const { return den_.degree() == 0 && den_.leading() == 1 && exponent_ >= 0; }

    QRationalFunction operator-() const;
    QRationalFunction inverse() const;
    /// f(q) -> f(1/q).
    QRationalFunction substitute_inverse_q() const;
    QRationalFunction pow(long e) const;
    /// Multiply by q^n.
    QRationalFunction shifted(long n) const;

    /// Value at a rational point q (den(q) must not vanish there).
    BigRational evaluate(const BigRational& q) const;

    friend QRationalFunction operator+(const QRationalFunction& a, const QRationalFunction& b);
    friend QRationalFunction operator-(const QRationalFunction& a, const QRationalFunction& b);
    friend QRationalFunction operator*(const QRationalFunction& a, const QRationalFunction& b);
    friend QRationalFunction operator/(const QRationalFunction& a, const QRationalFunction& b);
    friend bool operator==(const QRationalFunction& a, const QRationalFunction& b) = default;

    QRationalFunction& operator+=(const QRationalFunction& o) { return *this = *this + o; }
    QRationalFunction& operator-=(const QRationalFunction& o) { return *this = *this - o; }
    QRationalFunction& operator*=(const QRationalFunction& o) { return *this = *this * o; }
    QRationalFunction& operator/=(const QRationalFunction& o) { return *this = *this / o; }

private:
    long exponent_ = 0;
    IntPolynomial num_;
    IntPolynomial den_;
};

/// Free-function spelling of QRationalFunction::normalize.
inline QRationalFunction ratfun_normalize(long e, IntPolynomial num, IntPolynomial den)
{
    return QRationalFunction::normalize(e, std::move(num), std::move(den));
}

} // namespace qreal

#endif
