#include "qreal/json_io.hpp"

#include "qreal/errors.hpp"

#include <utility>
#include <vector>

namespace qreal {

using nlohmann::json;

json to_json(const BigInt& z)
{
    if (z.fits_slong_p()) {
        return z.get_si();
    }
    return z.get_str();
}

json to_json(const BigRational& r) { return json::array({to_json(r.get_num()), to_json(r.get_den())}); }

json to_json(const IntPolynomial& p)
{
    json arr = json::array();
    for (const auto& c : p.coeffs()) {
        arr.push_back(to_json(c));
    }
    return arr;
}

json to_json(const QRationalFunction& f)
{
    return json{{"exponent", f.exponent()}, {"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

json to_json(const LaurentSeries& s)
{
    json coeffs = json::array();
    for (const auto& c : s.stored()) {
        coeffs.push_back(to_json(c));
    }
    json j;
    j["order"] = s.is_zero() ? json(nullptr) : json(s.order());
    j["precision"] = s.is_exact() ? json(nullptr) : json(s.precision());
    j["coeffs"] = std::move(coeffs);
    return j;
}

json to_json(const XSeries& s)
{
    json coeffs = json::array();
    for (const auto& c : s.coeffs()) {
        coeffs.push_back(to_json(c));
    }
    json j;
    j["xdeg"] = s.xdegree();
    j["qprec"] = s.qprec() >= kExactPrecision ? json(nullptr) : json(s.qprec());
    j["coeffs"] = std::move(coeffs);
    return j;
}

BigInt bigint_from_json(const json& j)
{
    if (j.is_number_integer()) {
        return BigInt(j.get<long>());
    }
    if (j.is_string()) {
        return BigInt(j.get<std::string>());
    }
    throw ParseError("expected an integer, got " + j.dump());
}

BigRational rational_from_json(const json& j)
{
    if (!j.is_array() || j.size() != 2) {
        throw ParseError("expected [num, den], got " + j.dump());
    }
    return make_rational(bigint_from_json(j[0]), bigint_from_json(j[1]));
}

IntPolynomial polynomial_from_json(const json& j)
{
    std::vector<BigInt> v;
    for (const auto& c : j) {
        v.push_back(bigint_from_json(c));
    }
    return IntPolynomial(std::move(v));
}

QRationalFunction ratfun_from_json(const json& j)
{
    return QRationalFunction::normalize(j.at("exponent").get<long>(), polynomial_from_json(j.at("num")),
                                        polynomial_from_json(j.at("den")));
}

LaurentSeries series_from_json(const json& j)
{
    const long precision = j.at("precision").is_null() ? kExactPrecision : j.at("precision").get<long>();
    std::vector<BigRational> coeffs;
    for (const auto& c : j.at("coeffs")) {
        coeffs.push_back(rational_from_json(c));
    }
    const long order = j.at("order").is_null() ? 0 : j.at("order").get<long>();
    return LaurentSeries(order, std::move(coeffs), precision);
}

XSeries xseries_from_json(const json& j)
{
    std::vector<LaurentSeries> coeffs;
    for (const auto& c : j.at("coeffs")) {
        coeffs.push_back(series_from_json(c));
    }
    return XSeries(std::move(coeffs));
}

} // namespace qreal
