#include "qreal/qcore.hpp"

#include "qreal/errors.hpp"

#include <utility>

namespace qreal {

ContinuedFraction::ContinuedFraction(std::vector<long> terms) : terms_(std::move(terms))
{
    if (terms_.size() < 2 || terms_.size() % 2 != 0) {
        throw DomainError("continued fraction must have even length >= 2");
    }
    for (long a : terms_) {
        if (a < 1) {
            throw DomainError("continued fraction terms must be positive");
        }
    }
}

BigRational ContinuedFraction::value() const { return evaluate_terms(terms_); }

std::string ContinuedFraction::to_string() const
{
    std::string s = "[";
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        s += (i ? "," : "") + std::to_string(terms_[i]);
    }
    return s + "]";
}

BigRational evaluate_terms(const std::vector<long>& terms)
{
    if (terms.empty()) {
        throw DomainError("empty continued fraction");
    }
    BigRational v = terms.back();
    for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it) {
        if (v == 0) {
            throw DivisionByZero("continued fraction with a zero partial quotient");
        }
        v = BigRational(*it) + BigRational(1) / v;
    }
    return v;
}

ContinuedFraction cf_expand(const BigRational& r)
{
    if (r <= 1) {
        throw DomainError("continued fraction expansion needs a value > 1, got " + qreal::to_string(r));
    }
    std::vector<long> terms;
    BigInt num = r.get_num();
    BigInt den = r.get_den();
    while (den != 0) {
        BigInt a, rem;
        mpz_fdiv_qr(a.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        terms.push_back(to_long(a));
        num = den;
        den = rem;
    }
    if (terms.size() % 2 != 0) {
        terms.back() -= 1;
        terms.push_back(1);
    }
    return ContinuedFraction(std::move(terms));
}

namespace {

// [a]_{q^{-1}} = q^{-(a-1)} [a]_q
QRationalFunction q_integer_inverse(long a)
{
    return QRationalFunction::normalize(-(a - 1), IntPolynomial::q_integer(a), IntPolynomial::constant(1));
}

QRationalFunction q_integer_fn(long a) { return QRationalFunction(IntPolynomial::q_integer(a)); }

} // namespace

QRationalFunction q_deformed_cf(const ContinuedFraction& cf)
{
    const auto& a = cf.terms();
    const std::size_t n = a.size();
    QRationalFunction tail = q_integer_inverse(a[n - 1]);
    // Index i is 0-based, so even i carries [a]_q and q^{a}.
    for (std::size_t step = n - 1; step-- > 0;) {
        const long ai = a[step];
        if (step % 2 == 0) {
            tail = q_integer_fn(ai) + QRationalFunction::monomial(ai) / tail;
        } else {
            tail = q_integer_inverse(ai) + QRationalFunction::monomial(-ai) / tail;
        }
    }
    return tail;
}

QRationalFunction q_rational(const BigRational& r)
{
    if (is_integer(r) && r >= 1) {
        return QRationalFunction(IntPolynomial::q_integer(to_long(r.get_num())));
    }
    if (r > 1) {
        return q_deformed_cf(cf_expand(r));
    }
    const BigInt m = floor_of(BigRational(1) - r) + 1;
    const long shift = to_long(m);
    const QRationalFunction lifted = q_rational(r + BigRational(m));
    return (lifted - q_integer_fn(shift)).shifted(-shift);
}

QRationalFunction q_brace(const BigRational& r) { return q_rational(r + 1) - q_rational(r); }

} // namespace qreal
