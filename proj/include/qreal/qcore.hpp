#ifndef QREAL_QCORE_HPP
#define QREAL_QCORE_HPP

#include "qreal/laurent.hpp"

#include <string>
#include <vector>

namespace qreal {

/// Even-length expansion [a1, ..., a2m] with every term >= 1, denoting a
/// rational greater than one.
class ContinuedFraction {
public:
    /// Throws DomainError unless the terms satisfy the invariants.
    explicit ContinuedFraction(std::vector<long> terms);

    const std::vector<long>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    long operator[](std::size_t i) const { return terms_[i]; }
    BigRational value() const;
    std::string to_string() const;

    friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

private:
    std::vector<long> terms_;
};

/// Value of a finite continued fraction a0 + 1/(a1 + 1/(...)), any length.
BigRational evaluate_terms(const std::vector<long>& terms);

/// Even-length expansion of r > 1. An odd-length Euclidean expansion ending
/// in a_n >= 2 is rewritten as [..., a_n - 1, 1]. Throws DomainError for
/// r <= 1.
ContinuedFraction cf_expand(const BigRational& r);

/// [r]_q as an exact rational function, for every rational r. Values
/// above one use the q-deformed continued fraction; values at or below one
/// are shifted up by the least m with r + m > 1 and brought back with
/// [a - m]_q = q^{-m} ([a]_q - [m]_q).
QRationalFunction q_rational(const BigRational& r);

/// The q-deformed continued fraction evaluated bottom-up.
QRationalFunction q_deformed_cf(const ContinuedFraction& cf);

/// {r}_q = [r + 1]_q - [r]_q.
QRationalFunction q_brace(const BigRational& r);

} // namespace qreal

#endif
