#include "qreal/int_poly.hpp"

#include "qreal/errors.hpp"

#include <algorithm>
#include <utility>

namespace qreal {

long to_long(const BigInt& z)
{
    if (!z.fits_slong_p()) {
        throw DomainError("integer " + z.get_str() + " does not fit in a machine word");
    }
    return z.get_si();
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs)
{
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) {
        coeffs_.emplace_back(c);
    }
    trim();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::monomial(long degree, const BigInt& c)
{
    if (degree < 0) {
        throw DomainError("monomial with negative degree");
    }
    std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::q_integer(long n)
{
    if (n < 0) {
        throw DomainError("q-integer of a negative number is not a polynomial");
    }
    return IntPolynomial(std::vector<BigInt>(static_cast<std::size_t>(n), BigInt(1)));
}

void IntPolynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

BigInt IntPolynomial::operator[](long i) const
{
    if (i < 0 || i > degree()) {
        return 0;
    }
    return coeffs_[static_cast<std::size_t>(i)];
}

long IntPolynomial::valuation() const
{
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) {
            return static_cast<long>(i);
        }
    }
    return -1;
}

BigInt IntPolynomial::content() const
{
    BigInt g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) {
            break;
        }
    }
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const
{
    if (is_zero()) {
        return {};
    }
    BigInt c = content();
    if (leading() < 0) {
        c = -c;
    }
    return divexact(c);
}

IntPolynomial IntPolynomial::divexact(const BigInt& c) const
{
    if (c == 1) {
        return *this;
    }
    std::vector<BigInt> v(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        mpz_divexact(v[i].get_mpz_t(), coeffs_[i].get_mpz_t(), c.get_mpz_t());
    }
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::shifted(long n) const
{
    if (is_zero() || n == 0) {
        return *this;
    }
    std::vector<BigInt> v;
    if (n > 0) {
        v.resize(coeffs_.size() + static_cast<std::size_t>(n));
        std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + n);
    } else {
        const auto drop = static_cast<std::size_t>(-n);
        for (std::size_t i = 0; i < std::min(drop, coeffs_.size()); ++i) {
            if (coeffs_[i] != 0) {
                throw DomainError("shift would discard a nonzero term");
            }
        }
        if (drop < coeffs_.size()) {
            v.assign(coeffs_.begin() + static_cast<long>(drop), coeffs_.end());
        }
    }
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::reversed() const
{
    std::vector<BigInt> v(coeffs_.rbegin(), coeffs_.rend());
    return IntPolynomial(std::move(v));
}

BigInt IntPolynomial::evaluate(const BigInt& q) const
{
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * q + *it;
    }
    return acc;
}

BigRational IntPolynomial::evaluate(const BigRational& q) const
{
    BigRational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * q + BigRational(*it);
    }
    return acc;
}

IntPolynomial IntPolynomial::operator-() const
{
    IntPolynomial r = *this;
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o)
{
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] += o.coeffs_[i];
    }
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o)
{
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] -= o.coeffs_[i];
    }
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& c)
{
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) {
        x *= c;
    }
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            mpz_addmul(v[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
        }
    }
    return IntPolynomial(std::move(v));
}

std::optional<IntPolynomial> IntPolynomial::exact_divide(const IntPolynomial& a, const IntPolynomial& b)
{
    if (b.is_zero()) {
        throw DivisionByZero("polynomial division by zero");
    }
    if (a.is_zero()) {
        return IntPolynomial{};
    }
    if (a.degree() < b.degree()) {
        return std::nullopt;
    }
    std::vector<BigInt> rem = a.coeffs_;
    const long db = b.degree();
    std::vector<BigInt> quot(static_cast<std::size_t>(a.degree() - db) + 1);
    const BigInt& lb = b.leading();
    BigInt r;
    for (long i = a.degree() - db; i >= 0; --i) {
        BigInt& top = rem[static_cast<std::size_t>(i + db)];
        if (top == 0) {
            continue;
        }
        mpz_tdiv_r(r.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        if (r != 0) {
            return std::nullopt;
        }
        BigInt& qi = quot[static_cast<std::size_t>(i)];
        mpz_divexact(qi.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        for (long j = 0; j <= db; ++j) {
            mpz_submul(rem[static_cast<std::size_t>(i + j)].get_mpz_t(), qi.get_mpz_t(),
                       b.coeffs_[static_cast<std::size_t>(j)].get_mpz_t());
        }
    }
    for (long i = 0; i < db; ++i) {
        if (rem[static_cast<std::size_t>(i)] != 0) {
            return std::nullopt;
        }
    }
    return IntPolynomial(std::move(quot));
}

IntPolynomial IntPolynomial::pow(unsigned e) const
{
    IntPolynomial result = constant(1);
    IntPolynomial base = *this;
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

IntPolynomial normalized(const IntPolynomial& p) { return p.primitive_part(); }

} // namespace qreal
