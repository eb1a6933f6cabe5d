#ifndef QREAL_INT_POLY_HPP
#define QREAL_INT_POLY_HPP

#include "qreal/bigrat.hpp"

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qreal {

/// Dense polynomial in q with arbitrary-precision integer coefficients,
/// ascending by degree. The zero polynomial has no coefficients and
/// degree -1; otherwise the leading coefficient is nonzero.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial constant(const BigInt& c);
    static IntPolynomial monomial(long degree, const BigInt& c = 1);
    /// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
    static IntPolynomial q_integer(long n);

    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    /// Coefficient of q^i; zero outside the stored range.
    BigInt operator[](long i) const;
    const BigInt& leading() const { return coeffs_.back(); }

    /// Exponent of the lowest nonzero term; -1 for the zero polynomial.
    long valuation() const;
    BigInt content() const;
    IntPolynomial primitive_part() const;

    /// Multiply by q^n (n >= 0) or drop the n lowest terms (n < 0, those
    /// terms must be zero).
    IntPolynomial shifted(long n) const;
    /// q^{deg} p(1/q).
    IntPolynomial reversed() const;

    BigInt evaluate(const BigInt& q) const;
    BigRational evaluate(const BigRational& q) const;

    IntPolynomial operator-() const;
    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    IntPolynomial& operator*=(const BigInt& c);

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(IntPolynomial a, const BigInt& c) { return a *= c; }
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

    /// Divides every coefficient by c; c must divide all of them.
    IntPolynomial divexact(const BigInt& c) const;

    /// Quotient when b divides a exactly over Z[q], nullopt otherwise.
    static std::optional<IntPolynomial> exact_divide(const IntPolynomial& a, const IntPolynomial& b);

    IntPolynomial pow(unsigned e) const;

private:
    void trim();

    std::vector<BigInt> coeffs_;
};

/// Greatest common divisor in Z[q], returned primitive with positive
/// leading coefficient. gcd(a, 0) is the normalized a; gcd(0, 0) = 0.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive part with positive leading coefficient (zero stays zero).
IntPolynomial normalized(const IntPolynomial& p);

} // namespace qreal

#endif
