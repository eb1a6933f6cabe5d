#ifndef QREAL_BIGRAT_HPP
#define QREAL_BIGRAT_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qreal {

using BigInt = mpz_class;
// Always kept canonical: gcd(|num|, den) = 1, den >= 1.
using BigRational = mpq_class;

inline BigRational make_rational(const BigInt& num, const BigInt& den)
{
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

inline BigRational make_rational(long num, long den = 1)
{
    return make_rational(BigInt(num), BigInt(den));
}

inline bool is_integer(const BigRational& r) { return r.get_den() == 1; }

inline BigInt floor_of(const BigRational& r)
{
    BigInt f;
    mpz_fdiv_q(f.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return f;
}

// Throws DomainError when the value does not fit in a long.
long to_long(const BigInt& z);

// "a/b", "-a/b" or "n"; whitespace is not allowed. Throws ParseError.
BigRational parse_rational(std::string_view text);

// "a/b" or "a" when the denominator is one.
std::string to_string(const BigRational& r);
std::string to_string(const BigInt& z);

} // namespace qreal

#endif
