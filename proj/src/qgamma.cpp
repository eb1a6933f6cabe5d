#include "qreal/qgamma.hpp"

#include "qreal/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qreal {

namespace {

bool nonpositive_integer(const BigRational& a) { return is_integer(a) && a <= 0; }

long pentagonal_exponent(long k) { return k * (k - 1) / 2 + k; }

// Least m >= 0 with alpha + m >= 1.
long lift_count(const BigRational& alpha)
{
    if (alpha >= 1) {
        return 0;
    }
    BigInt m = floor_of(BigRational(1) - alpha);
    if (alpha + BigRational(m) < 1) {
        m += 1;
    }
    return to_long(m);
}

// [alpha]_q [alpha + 1]_q ... [alpha + m - 1]_q
QRationalFunction lift_factors(const BigRational& alpha, long m)
{
    QRationalFunction d(1);
    for (long i = 0; i < m; ++i) {
        d *= q_rational(alpha + i);
    }
    return d;
}

void check_integral(const LaurentSeries& s, const std::string& what)
{
    if (!s.all_integer()) {
        throw IntegralityViolation(what + " has a non-integer coefficient");
    }
}

// (q; q)_n as an exact polynomial.
LaurentSeries finite_q_pochhammer(long n)
{
    IntPolynomial p = IntPolynomial::constant(1);
    for (long i = 1; i <= n; ++i) {
        p = p * (IntPolynomial::constant(1) - IntPolynomial::monomial(i));
    }
    return LaurentSeries::from_polynomial(p);
}

} // namespace

LaurentSeries scalar_binomial_series(const BigRational& alpha, long N)
{
    if (N < 1) {
        throw DomainError("precision N must be positive");
    }
    std::vector<BigRational> c(static_cast<std::size_t>(N));
    c[0] = 1;
    for (long n = 1; n < N; ++n) {
        c[static_cast<std::size_t>(n)] = c[static_cast<std::size_t>(n - 1)] * (alpha - 2 + n) / n;
    }
    return LaurentSeries(0, std::move(c), N);
}

LaurentSeries pochhammer_at_q(const BigRational& beta, long N, long max_terms)
{
    if (beta < 0) {
        throw DomainError("B_beta(q, -q) is not a formal power series for beta = " + to_string(beta) + " < 0");
    }
    if (is_integer(beta)) {
        return finite_q_pochhammer(to_long(beta.get_num())).truncated(N);
    }
    const RealSpec spec(beta);
    long work = N + 4;
    for (int round = 0; round < 24; ++round) {
        const LaurentSeries base = series_from_ratfun(q_rational(beta), work);
        LaurentSeries sum = LaurentSeries::zero();
        LaurentSeries term = LaurentSeries::constant(1);
        long previous = -1;
        for (long k = 0;; ++k) {
            if (k > max_terms) {
                throw InsufficientPrecision("B_beta(q, -q) needs more than " + std::to_string(max_terms) +
                                            " terms to reach q^" + std::to_string(N));
            }
            if (k > 0) {
                // [beta - k + 1]_q = q^{-(k-1)} ([beta]_q - [k-1]_q)
                const LaurentSeries factor =
                    (base - LaurentSeries::from_polynomial(IntPolynomial::q_integer(k - 1))).shifted(-(k - 1));
                const LaurentSeries num = term * factor;
                term = LaurentSeries::divide(num, LaurentSeries::from_polynomial(IntPolynomial::q_integer(k)),
                                             num.precision());
            }
            const long order = pentagonal_exponent(k) + binom_order(spec, k);
            if (order <= previous) {
                throw std::logic_error("term orders of B_beta(q, -q) fail to increase at k = " + std::to_string(k));
            }
            previous = order;
            if (order >= N) {
                break;
            }
            const LaurentSeries placed = term.shifted(pentagonal_exponent(k));
            sum += k % 2 == 0 ? placed : -placed;
        }
        if (sum.precision() >= N) {
            return sum.truncated(N);
        }
        work += (N - sum.precision()) + 4;
    }
    throw InsufficientPrecision("B_beta(q, -q) could not reach q^" + std::to_string(N));
}

LaurentSeries gamma_q(const BigRational& alpha, long N)
{
    if (nonpositive_integer(alpha)) {
        throw DomainError("Gamma_q is undefined at nonpositive integers, got " + to_string(alpha));
    }
    if (N < 1) {
        throw DomainError("precision N must be positive");
    }
    const long m = lift_count(alpha);
    if (m == 0) {
        return (pochhammer_at_q(alpha - 1, N) * scalar_binomial_series(alpha, N)).truncated(N);
    }
    const QRationalFunction divisor = lift_factors(alpha, m);
    const long e = divisor.order();
    const long lifted_precision = std::max(1L, N + e);
    const LaurentSeries lifted = gamma_q(alpha + m, lifted_precision);
    const LaurentSeries inverse = series_from_ratfun(divisor.inverse(), N);
    return (lifted * inverse).truncated(N);
}

long gamma_order(const BigRational& alpha)
{
    if (nonpositive_integer(alpha)) {
        throw DomainError("Gamma_q is undefined at nonpositive integers, got " + to_string(alpha));
    }
    return -lift_factors(alpha, lift_count(alpha)).order();
}

GammaGuard gamma_wellformed_guard(const BigRational& alpha, long kmax)
{
    GammaGuard g;
    g.well_defined = alpha >= 1;
    const BigRational beta = alpha - 1;
    const bool finite = is_integer(beta) && beta >= 0;
    for (long k = 0; k <= kmax; ++k) {
        if (finite && BigRational(k) > beta) {
            g.term_orders.push_back(kInfiniteOrder);
        } else if (finite) {
            g.term_orders.push_back(pentagonal_exponent(k));
        } else {
            g.term_orders.push_back(pentagonal_exponent(k) + binom_order(RealSpec(beta), k));
        }
    }
    g.strictly_increasing = true;
    for (std::size_t i = 1; i < g.term_orders.size(); ++i) {
        if (g.term_orders[i] != kInfiniteOrder && g.term_orders[i] <= g.term_orders[i - 1]) {
            g.strictly_increasing = false;
        }
    }
    if (g.well_defined) {
        g.pattern = finite ? "finite sum (terms vanish past k = " + to_string(beta) + ")" : "strictly increasing";
    } else {
        const long n = to_long(floor_of(beta));
        if (n == -1) {
            g.pattern = "constant order 0: (N+1)k with N = -1";
        } else {
            g.pattern = "orders (N+1)k with N = " + std::to_string(n) + " decrease without bound";
        }
    }
    return g;
}

LaurentSeries reflection_product(const BigRational& alpha, long N)
{
    if (is_integer(alpha)) {
        throw DomainError("reflection product needs a non-integer alpha, got " + to_string(alpha));
    }
    const BigRational other = BigRational(1) - alpha;
    const long oa = gamma_order(alpha);
    const long ob = gamma_order(other);
    const LaurentSeries a = gamma_q(alpha, std::max(oa + 1, N - ob));
    const LaurentSeries b = gamma_q(other, std::max(ob + 1, N - oa));
    LaurentSeries p = (a * b).truncated(N);
    if (p.precision() < N) {
        throw InsufficientPrecision("reflection product reached only q^" + std::to_string(p.precision()));
    }
    check_integral(p, "Gamma_q(" + to_string(alpha) + ") Gamma_q(" + to_string(other) + ")");
    return p;
}

LaurentSeries power_integrality(long a, long b, long N)
{
    if (b < 1) {
        throw DomainError("power_integrality needs b >= 1");
    }
    const BigRational alpha = make_rational(a, b);
    const long o = gamma_order(alpha);
    const LaurentSeries g = gamma_q(alpha, std::max(o + 1, N - (b - 1) * o));
    LaurentSeries p = g.pow(static_cast<unsigned>(b)).truncated(N);
    if (p.precision() < N) {
        throw InsufficientPrecision("power reached only q^" + std::to_string(p.precision()));
    }
    check_integral(p, "Gamma_q(" + to_string(alpha) + ")^" + std::to_string(b));
    return p;
}

} // namespace qreal
