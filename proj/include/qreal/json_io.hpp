#ifndef QREAL_JSON_IO_HPP
#define QREAL_JSON_IO_HPP

#include "qreal/laurent.hpp"
#include "qreal/xseries.hpp"

#include <json.hpp>

namespace qreal {

// Integers are JSON numbers when they fit in 64 bits and decimal strings
// otherwise; readers accept both.
//
//   BigRational        [num, den]
//   IntPolynomial      [c0, c1, ...]
//   QRationalFunction  {"exponent": e, "num": [...], "den": [...]}
//   LaurentSeries      {"order": o | null, "precision": N | null, "coeffs": [[num, den], ...]}
//   XSeries            {"xdeg": K, "qprec": N | null, "coeffs": [LaurentSeries, ...]}
//
// A null order marks the zero series; a null precision marks an exact value.

nlohmann::json to_json(const BigInt& z);
nlohmann::json to_json(const BigRational& r);
nlohmann::json to_json(const IntPolynomial& p);
nlohmann::json to_json(const QRationalFunction& f);
nlohmann::json to_json(const LaurentSeries& s);
nlohmann::json to_json(const XSeries& s);

BigInt bigint_from_json(const nlohmann::json& j);
BigRational rational_from_json(const nlohmann::json& j);
IntPolynomial polynomial_from_json(const nlohmann::json& j);
QRationalFunction ratfun_from_json(const nlohmann::json& j);
LaurentSeries series_from_json(const nlohmann::json& j);
XSeries xseries_from_json(const nlohmann::json& j);

} // namespace qreal

#endif
