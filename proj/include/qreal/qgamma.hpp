#ifndef QREAL_QGAMMA_HPP
#define QREAL_QGAMMA_HPP

#include "qreal/qseries.hpp"

#include <string>
#include <vector>

namespace qreal {

/// (1 - q)^{-(alpha - 1)} = sum_n C(alpha + n - 2, n) q^n with classical
/// binomials, below q^N.
LaurentSeries scalar_binomial_series(const BigRational& alpha, long N);

/// B_beta(q, -q) = sum_k (-1)^k q^{C(k,2) + k} binom(beta, k)_q below q^N,
/// which is (q; q)_beta. Needs beta >= 0 so that the term orders increase;
/// stops once a term's order reaches N. Throws DomainError for beta < 0
/// and InsufficientPrecision past `max_terms` terms.
LaurentSeries pochhammer_at_q(const BigRational& beta, long N, long max_terms = 4096);

/// Gamma_q(alpha) below q^N for rational alpha outside Z<=0:
/// B_{alpha-1}(q,-q) (1-q)^{-(alpha-1)} for alpha >= 1, and
/// Gamma_q(alpha + 1) / [alpha]_q below that.
LaurentSeries gamma_q(const BigRational& alpha, long N);

/// Order of gamma_q(alpha): 0 for alpha >= 1, otherwise minus the orders of
/// [alpha]_q ... [alpha + m - 1]_q with alpha + m >= 1.
long gamma_order(const BigRational& alpha);

struct GammaGuard {
    bool well_defined = false;
    /// C(k,2) + k + ord binom(alpha - 1, k)_q for k = 0..kmax; kInfiniteOrder
    /// marks a vanishing term.
    std::vector<long> term_orders;
    bool strictly_increasing = false;
    std::string pattern;
};

/// Whether B_{alpha-1}(q, -q) is a formal power series, with the term
/// orders that decide it.
GammaGuard gamma_wellformed_guard(const BigRational& alpha, long kmax = 10);

/// Gamma_q(alpha) Gamma_q(1 - alpha) below q^N. Throws DomainError for
/// integer alpha and IntegralityViolation on a non-integer coefficient.
LaurentSeries reflection_product(const BigRational& alpha, long N);

/// Gamma_q(a/b)^b below q^N. Throws DomainError for b < 1 or a/b in Z<=0,
/// IntegralityViolation on a non-integer coefficient.
LaurentSeries power_integrality(long a, long b, long N);

} // namespace qreal

#endif
