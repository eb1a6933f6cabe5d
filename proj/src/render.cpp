#include "qreal/render.hpp"

#include "qreal/errors.hpp"

#include <sstream>
#include <utility>
#include <vector>

namespace qreal {

BigRational parse_rational(std::string_view text)
{
    auto parse_int = [&](std::string_view s) {
        if (s.empty()) {
            throw ParseError("malformed rational '" + std::string(text) + "'");
        }
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) {
            throw ParseError("malformed rational '" + std::string(text) + "'");
        }
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') {
                throw ParseError("malformed rational '" + std::string(text) + "'");
            }
        }
        std::string digits(s[0] == '+' ? s.substr(1) : s);
        return BigInt(digits);
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return BigRational(parse_int(text));
    }
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    return make_rational(num, den);
}

std::string to_string(const BigRational& r) { return r.get_str(); }
std::string to_string(const BigInt& z) { return z.get_str(); }

namespace {

struct Term {
    long exponent;
    BigRational coeff;
};

std::string power_text(long e, bool latex)
{
    if (e == 0) {
        return "";
    }
    if (e == 1) {
        return "q";
    }
    if (latex) {
        return "q^{" + std::to_string(e) + "}";
    }
    return "q^" + std::to_string(e);
}

// Magnitude of a term without its sign.
std::string magnitude_text(const Term& t, bool latex)
{
    BigRational mag = abs(t.coeff);
    const std::string mono = power_text(t.exponent, latex);
    if (mag == 1 && !mono.empty()) {
        return mono;
    }
    std::string c;
    if (mag.get_den() == 1) {
        c = mag.get_num().get_str();
    } else if (latex) {
        c = "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}";
    } else {
        c = mag.get_str();
        if (!mono.empty()) {
            c = "(" + c + ")";
        }
    }
    return c + mono;
}

std::string join_terms(const std::vector<Term>& terms, bool latex)
{
    std::string out;
    for (const auto& t : terms) {
        const bool negative = t.coeff < 0;
        if (out.empty()) {
            out = negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        out += magnitude_text(t, latex);
    }
    return out;
}

std::vector<Term> terms_of(const IntPolynomial& p, long shift = 0)
{
    std::vector<Term> terms;
    for (long i = 0; i <= p.degree(); ++i) {
        if (p[i] != 0) {
            terms.push_back({i + shift, BigRational(p[i])});
        }
    }
    return terms;
}

std::string precision_tail(long n, bool latex)
{
    return latex ? "O(q^{" + std::to_string(n) + "})" : "O(q^" + std::to_string(n) + ")";
}

} // namespace

std::string render(const IntPolynomial& p, const RenderOptions& opt)
{
    if (p.is_zero()) {
        return "0";
    }
    return join_terms(terms_of(p), opt.latex);
}

std::string render(const QRationalFunction& f, const RenderOptions& opt)
{
    if (f.is_zero()) {
        return "0";
    }
    const bool unit_den = f.den().degree() == 0 && f.den()[0] == 1;
    if (unit_den) {
        return join_terms(terms_of(f.num(), f.exponent()), opt.latex);
    }
    std::string num;
    if (f.num().degree() == 0) {
        num = join_terms({Term{f.exponent(), BigRational(f.num()[0])}}, opt.latex);
    } else {
        const std::string prefix = power_text(f.exponent(), opt.latex);
        num = (prefix.empty() ? "" : prefix + " ") + "(" + render(f.num(), opt) + ")";
    }
    const std::string den = f.den().degree() == 0 ? render(f.den(), opt) : "(" + render(f.den(), opt) + ")";
    if (opt.latex) {
        return "\\frac{" + num + "}{" + den + "}";
    }
    return num + "/" + den;
}

std::string render(const LaurentSeries& s, const RenderOptions& opt)
{
    std::vector<Term> terms;
    if (!s.is_zero()) {
        const auto& c = s.stored();
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] != 0) {
                terms.push_back({s.order() + static_cast<long>(i), c[i]});
            }
        }
    }
    std::string body = join_terms(terms, opt.latex);
    if (s.is_exact()) {
        return body.empty() ? "0" : body;
    }
    const std::string tail = precision_tail(s.precision(), opt.latex);
    return body.empty() ? tail : body + " + " + tail;
}

std::string render(const XSeries& s, const RenderOptions& opt)
{
    std::ostringstream os;
    for (long k = 0; k <= s.xdegree(); ++k) {
        os << "x^" << k << ": " << render(s[k], opt) << '\n';
    }
    return os.str();
}

} // namespace qreal
