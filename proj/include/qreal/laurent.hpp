#ifndef QREAL_LAURENT_HPP
#define QREAL_LAURENT_HPP

#include "qreal/ratfun.hpp"

#include <limits>
#include <vector>

namespace qreal {

/// Precision of a series that is known exactly (a Laurent polynomial).
inline constexpr long kExactPrecision = std::numeric_limits<long>::max() / 4;

/// Truncated Laurent series  sum_{i >= order} c_i q^i + O(q^precision)
/// with exact rational coefficients.
///
/// Coefficients are stored from `order` upward; terms past the stored
/// range and below `precision` are zero. A nonzero series has a nonzero
/// coefficient at `order`. The zero series has order kInfiniteOrder and
/// still carries its precision (it means O(q^precision)). A precision of
/// kExactPrecision marks a Laurent polynomial known exactly.
class LaurentSeries {
public:
    LaurentSeries() = default; // exact zero

    /// sum_i coeffs[i] q^{start + i} + O(q^precision); entries at or past
    /// the precision are dropped.
    LaurentSeries(long start, std::vector<BigRational> coeffs, long precision);

    static LaurentSeries zero(long precision = kExactPrecision);
    static LaurentSeries constant(const BigRational& c, long precision = kExactPrecision);
    static LaurentSeries monomial(long exponent, const BigRational& c = 1, long precision = kExactPrecision);
    static LaurentSeries from_polynomial(const IntPolynomial& p, long precision = kExactPrecision);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_exact() const { return precision_ >= kExactPrecision; }
    long order() const { return is_zero() ? kInfiniteOrder : order_; }
    long precision() const { return precision_; }
    /// Lower bound for the order of the true value: order(), or the
    /// precision when nothing below it is known to be nonzero.
    long valuation_bound() const { return is_zero() ? precision_ : order_; }

    /// Coefficient of q^i; throws InsufficientPrecision for i >= precision.
    BigRational coeff(long i) const;
    const std::vector<BigRational>& stored() const { return coeffs_; }

    /// Same series with precision lowered to min(precision, n).
    LaurentSeries truncated(long n) const;
    /// Multiply by q^n.
    LaurentSeries shifted(long n) const;
    LaurentSeries scaled(const BigRational& c) const;
    LaurentSeries operator-() const { return scaled(-1); }

    bool all_integer() const;
    /// Coefficients of q^lo .. q^{hi-1}; hi must not exceed the precision.
    std::vector<BigRational> window(long lo, long hi) const;

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    /// Throws DivisionByZero for an exact zero divisor and
    /// InsufficientPrecision when the divisor's order is unknown or the
    /// quotient of two exact operands is an infinite series.
    friend LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b);

    LaurentSeries& operator+=(const LaurentSeries& o) { return *this = *this + o; }
    LaurentSeries& operator-=(const LaurentSeries& o) { return *this = *this - o; }
    LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }

    /// Structural equality: same precision and the same coefficients.
    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) = default;

    /// True when the coefficients below n agree (both precisions must be
    /// at least n, otherwise InsufficientPrecision).
    bool agrees_with(const LaurentSeries& other, long n) const;

    LaurentSeries pow(unsigned e) const;
    /// Quotient with the result truncated at `cap`, which allows dividing
    /// exact operands.
    static LaurentSeries divide(const LaurentSeries& a, const LaurentSeries& b, long cap);

private:
    void normalize();

    long order_ = 0;
    long precision_ = kExactPrecision;
    std::vector<BigRational> coeffs_;
};

/// Laurent expansion of f at q = 0 up to O(q^n).
LaurentSeries series_from_ratfun(const QRationalFunction& f, long n);

} // namespace qreal

#endif
