#ifndef QREAL_TESTS_SUPPORT_HPP
#define QREAL_TESTS_SUPPORT_HPP

#include "qreal/bigrat.hpp"
#include "qreal/int_poly.hpp"
#include "qreal/laurent.hpp"
#include "qreal/ratfun.hpp"
#include "qreal/real_spec.hpp"

#include <string>
#include <vector>

namespace qreal::testing {

inline BigRational rat(const std::string& text) { return parse_rational(text); }

inline RealSpec spec(const std::string& text) { return parse_real_spec(text); }

/// sum coeffs[i] q^{start+i} + O(q^precision), coefficients as "a/b" strings.
inline LaurentSeries series(long start, const std::vector<std::string>& coeffs, long precision)
{
    std::vector<BigRational> c;
    for (const auto& s : coeffs) c.push_back(parse_rational(s));
    return LaurentSeries(start, std::move(c), precision);
}

/// q^e num/den with integer coefficient lists.
inline QRationalFunction ratfun(long e, std::initializer_list<long> num, std::initializer_list<long> den)
{
    return QRationalFunction::normalize(e, IntPolynomial(num), IntPolynomial(den));
}

inline long choose2(long k) { return k * (k - 1) / 2; }

} // namespace qreal::testing

#endif
