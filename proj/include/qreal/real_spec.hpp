#ifndef QREAL_REAL_SPEC_HPP
#define QREAL_REAL_SPEC_HPP

#include "qreal/qcore.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qreal {

/// Continued fraction a0; a1, a2, ... given as a finite prefix followed by
/// an optional repeating block. An empty period makes the stream finite.
struct CFStream {
    std::vector<long> prefix;
    std::vector<long> period;

    bool is_finite() const { return period.empty(); }
    /// Value of the first n terms.
    BigRational convergent(std::size_t n) const;
    long term(std::size_t i) const;
};

/// Explicit list of rational approximants, consumed in order.
struct ConvergentSeq {
    std::vector<BigRational> values;
};

/// A real number as one of: an exact rational, a continued fraction
/// stream, or a sequence of rational approximants.
class RealSpec {
public:
    using Variant = std::variant<BigRational, CFStream, ConvergentSeq>;

    RealSpec(BigRational r) : value_(std::move(r)) {} // NOLINT
    RealSpec(CFStream s);                            // NOLINT
    RealSpec(ConvergentSeq s);                       // NOLINT

    const Variant& value() const { return value_; }
    /// The exact value when the spec denotes a rational (including finite
    /// continued fraction streams).
    std::optional<BigRational> as_rational() const;
    /// floor of the value; for approximant sequences, the floor of the
    /// last approximant.
    BigInt floor() const;
    /// Spec for the value + n.
    RealSpec plus(long n) const;
    /// A rational value used for sign and range decisions.
    BigRational representative() const;
    std::string to_string() const;

private:
    Variant value_;
};

/// Parses "a/b", "n", "[2,3,1,5]" (finite continued fraction),
/// "[2;(2)]" or "[1;1,(1,2)]" (periodic tail in parentheses).
RealSpec parse_real_spec(std::string_view text);

struct QRealOptions {
    /// Number of consecutive convergents that must agree below q^N.
    int agreement = 3;
    /// Maximum number of convergents examined.
    int budget = 64;
};

/// [alpha]_q to precision N. Irrational specs expand successive
/// convergents until `agreement` consecutive ones match below q^N.
/// Throws NonConvergence when the budget runs out.
LaurentSeries q_real_series(const RealSpec& spec, long n, const QRealOptions& opt = {});

/// {alpha}_q = 1 + (q - 1)[alpha]_q to precision N.
LaurentSeries q_brace_series(const RealSpec& spec, long n, const QRealOptions& opt = {});

/// ord([alpha]_q): 0 for alpha >= 1, kInfiniteOrder for alpha = 0,
/// floor(alpha) for alpha < 0, and the computed order (checked >= 1) for
/// 0 < alpha < 1. Irrational values in (0, 1) use the stabilized series
/// at precision `n`.
long order_of(const RealSpec& spec, long n = 32, const QRealOptions& opt = {});

} // namespace qreal

#endif
