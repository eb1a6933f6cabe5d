#include "qreal/real_spec.hpp"

#include "qreal/errors.hpp"

#include <cctype>
#include <sstream>
#include <utility>

namespace qreal {

long CFStream::term(std::size_t i) const
{
    if (i < prefix.size()) {
        return prefix[i];
    }
    if (period.empty()) {
        throw DomainError("term index past the end of a finite continued fraction");
    }
    return period[(i - prefix.size()) % period.size()];
}

BigRational CFStream::convergent(std::size_t n) const
{
    std::vector<long> terms;
    terms.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        terms.push_back(term(i));
    }
    return evaluate_terms(terms);
}

RealSpec::RealSpec(CFStream s)
{
    if (s.prefix.empty() && s.period.empty()) {
        throw DomainError("empty continued fraction stream");
    }
    for (std::size_t i = 0; i < s.prefix.size() + s.period.size(); ++i) {
        const long a = i < s.prefix.size() ? s.prefix[i] : s.period[i - s.prefix.size()];
        if (i > 0 && a < 1) {
            throw DomainError("continued fraction terms after the first must be positive");
        }
    }
    value_ = std::move(s);
}

RealSpec::RealSpec(ConvergentSeq s)
{
    if (s.values.empty()) {
        throw DomainError("empty convergent sequence");
    }
    value_ = std::move(s);
}

std::optional<BigRational> RealSpec::as_rational() const
{
    if (const auto* r = std::get_if<BigRational>(&value_)) {
        return *r;
    }
    if (const auto* s = std::get_if<CFStream>(&value_); s && s->is_finite()) {
        return evaluate_terms(s->prefix);
    }
    return std::nullopt;
}

BigInt RealSpec::floor() const
{
    if (auto r = as_rational()) {
        return floor_of(*r);
    }
    if (const auto* s = std::get_if<CFStream>(&value_)) {
        return s->term(0);
    }
    return floor_of(std::get<ConvergentSeq>(value_).values.back());
}

BigRational RealSpec::representative() const
{
    if (auto r = as_rational()) {
        return *r;
    }
    if (const auto* s = std::get_if<CFStream>(&value_)) {
        return s->convergent(s->prefix.size() + 2 * s->period.size() + 8);
    }
    return std::get<ConvergentSeq>(value_).values.back();
}

RealSpec RealSpec::plus(long n) const
{
    if (const auto* r = std::get_if<BigRational>(&value_)) {
        return RealSpec(*r + n);
    }
    if (const auto* s = std::get_if<CFStream>(&value_)) {
        CFStream t = *s;
        if (t.prefix.empty()) {
            t.prefix.push_back(t.period.front());
            std::rotate(t.period.begin(), t.period.begin() + 1, t.period.end());
        }
        t.prefix[0] += n;
        return RealSpec(std::move(t));
    }
    ConvergentSeq c = std::get<ConvergentSeq>(value_);
    for (auto& v : c.values) {
        v += n;
    }
    return RealSpec(std::move(c));
}

std::string RealSpec::to_string() const
{
    if (const auto* r = std::get_if<BigRational>(&value_)) {
        return qreal::to_string(*r);
    }
    std::ostringstream os;
    if (const auto* s = std::get_if<CFStream>(&value_)) {
        os << '[';
        for (std::size_t i = 0; i < s->prefix.size(); ++i) {
            os << (i == 0 ? "" : (i == 1 ? ";" : ",")) << s->prefix[i];
        }
        if (!s->period.empty()) {
            os << (s->prefix.empty() ? "" : (s->prefix.size() == 1 ? ";" : ",")) << '(';
            for (std::size_t i = 0; i < s->period.size(); ++i) {
                os << (i ? "," : "") << s->period[i];
            }
            os << ')';
        }
        os << ']';
        return os.str();
    }
    const auto& v = std::get<ConvergentSeq>(value_).values;
    os << '{';
    for (std::size_t i = 0; i < v.size(); ++i) {
        os << (i ? "," : "") << qreal::to_string(v[i]);
    }
    os << '}';
    return os.str();
}

RealSpec parse_real_spec(std::string_view text)
{
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            s.push_back(c);
        }
    }
    if (s.empty()) {
        throw ParseError("empty number");
    }
    if (s.front() != '[') {
        return RealSpec(parse_rational(s));
    }
    if (s.back() != ']') {
        throw ParseError("continued fraction must end with ']': " + std::string(text));
    }
    const std::string body = s.substr(1, s.size() - 2);
    CFStream cf;
    std::string period_text;
    std::string prefix_text = body;
    if (const auto open = body.find('('); open != std::string::npos) {
        const auto close = body.find(')', open);
        if (close == std::string::npos || close + 1 != body.size()) {
            throw ParseError("periodic block must be the final '(...)': " + std::string(text));
        }
        period_text = body.substr(open + 1, close - open - 1);
        prefix_text = body.substr(0, open);
        if (period_text.empty()) {
            throw ParseError("empty periodic block: " + std::string(text));
        }
    }
    auto split = [&](const std::string& part, std::vector<long>& out) {
        std::string token;
        auto flush = [&] {
            if (token.empty()) {
                return;
            }
            const BigRational v = parse_rational(token);
            if (!is_integer(v)) {
                throw ParseError("continued fraction terms must be integers: " + std::string(text));
            }
            out.push_back(to_long(v.get_num()));
            token.clear();
        };
        for (char c : part) {
            if (c == ',' || c == ';') {
                flush();
            } else {
                token.push_back(c);
            }
        }
        flush();
    };
    split(prefix_text, cf.prefix);
    split(period_text, cf.period);
    return RealSpec(std::move(cf));
}

namespace {

LaurentSeries stabilized(const std::vector<BigRational>& approximants, bool unbounded, const CFStream* stream,
                         long n, const QRealOptions& opt)
{
    LaurentSeries previous;
    int streak = 0;
    const int budget = opt.budget;
    for (int j = 0; j < budget; ++j) {
        BigRational value;
        if (unbounded) {
            value = stream->convergent(static_cast<std::size_t>(j) + 1);
        } else {
            if (static_cast<std::size_t>(j) >= approximants.size()) {
                break;
            }
            value = approximants[static_cast<std::size_t>(j)];
        }
        LaurentSeries current = series_from_ratfun(q_rational(value), n);
        streak = (j > 0 && current.agrees_with(previous, n)) ? streak + 1 : 1;
        if (streak >= opt.agreement) {
            return current;
        }
        previous = std::move(current);
    }
    throw NonConvergence("q-real did not stabilize below q^" + std::to_string(n) + " within " +
                         std::to_string(budget) + " convergents");
}

} // namespace

LaurentSeries q_real_series(const RealSpec& spec, long n, const QRealOptions& opt)
{
    if (auto r = spec.as_rational()) {
        return series_from_ratfun(q_rational(*r), n);
    }
    if (const auto* s = std::get_if<CFStream>(&spec.value())) {
        return stabilized({}, true, s, n, opt);
    }
    return stabilized(std::get<ConvergentSeq>(spec.value()).values, false, nullptr, n, opt);
}

LaurentSeries q_brace_series(const RealSpec& spec, long n, const QRealOptions& opt)
{
    if (auto r = spec.as_rational(); r && is_integer(*r)) {
        return LaurentSeries::monomial(to_long(r->get_num()), 1, n);
    }
    const LaurentSeries value = q_real_series(spec, n, opt);
    return LaurentSeries::constant(1) + LaurentSeries::from_polynomial(IntPolynomial{-1, 1}) * value;
}

long order_of(const RealSpec& spec, long n, const QRealOptions& opt)
{
    if (auto r = spec.as_rational()) {
        if (*r >= 1) {
            return 0;
        }
        if (*r == 0) {
            return kInfiniteOrder;
        }
        if (*r < 0) {
            return to_long(floor_of(*r));
        }
        const long e = q_rational(*r).order();
        if (e < 1) {
            throw std::logic_error("order of [alpha]_q below 1 on (0, 1)");
        }
        return e;
    }
    const BigInt f = spec.floor();
    if (f >= 1) {
        return 0;
    }
    if (f < 0) {
        return to_long(f);
    }
    const LaurentSeries s = q_real_series(spec, n, opt);
    if (s.is_zero()) {
        throw NonConvergence("order of the q-real exceeds the working precision " + std::to_string(n));
    }
    if (s.order() < 1) {
        throw std::logic_error("order of [alpha]_q below 1 on (0, 1)");
    }
    return s.order();
}

} // namespace qreal
