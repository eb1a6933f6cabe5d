#ifndef QREAL_XSERIES_HPP
#define QREAL_XSERIES_HPP

#include "qreal/laurent.hpp"

#include <vector>

namespace qreal {

/// Element of Q((q))[[x]] truncated at x^{K+1} and q^N: coefficient k
/// is the LaurentSeries multiplying x^k. Every coefficient carries the
/// same q-precision N, which is the minimum over the inputs it was built
/// from.
class XSeries {
public:
    XSeries() = default;
    explicit XSeries(std::vector<LaurentSeries> coeffs);

    /// 1 + 0x + ... with the given truncation.
    static XSeries one(long xdegree, long qprec = kExactPrecision);
    /// c0 + c1 x (higher coefficients zero up to xdegree).
    static XSeries linear(const LaurentSeries& c0, const LaurentSeries& c1, long xdegree);

    long xdegree() const { return static_cast<long>(coeffs_.size()) - 1; }
    long qprec() const { return qprec_; }
    const LaurentSeries& operator[](long k) const { return coeffs_[static_cast<std::size_t>(k)]; }
    const std::vector<LaurentSeries>& coeffs() const { return coeffs_; }

    XSeries truncated_x(long xdegree) const;
    XSeries truncated_q(long n) const;

    friend XSeries operator+(const XSeries& a, const XSeries& b);
    friend XSeries operator-(const XSeries& a, const XSeries& b);
    friend XSeries operator*(const XSeries& a, const XSeries& b);
    /// The divisor's x^0 coefficient must be invertible.
    friend XSeries operator/(const XSeries& a, const XSeries& b);
    friend bool operator==(const XSeries& a, const XSeries& b) = default;

    /// Multiply every coefficient by a q-series.
    XSeries scaled(const LaurentSeries& c) const;
    /// x -> c x, i.e. coefficient k gets multiplied by c^k.
    XSeries compose_scale(const LaurentSeries& c) const;
    /// x -> q^n x.
    XSeries compose_qx(long n = 1) const;
    /// Multiply by (1 + c x) or divide by it, truncating at the current
    /// xdegree. Linear factors are the building block of the infinite
    /// products, so these avoid a general product.
    XSeries times_linear(const LaurentSeries& c) const;
    XSeries over_linear(const LaurentSeries& c) const;

    /// Coefficients of x^0..x^K agree below q^N.
    bool agrees_with(const XSeries& other, long n, long k) const;

private:
    void sync_precision();

    long qprec_ = kExactPrecision;
    std::vector<LaurentSeries> coeffs_;
};

/// Jackson derivative in x: coefficient of x^{n-1} becomes [n]_q times the
/// coefficient of x^n. The xdegree drops by one.
XSeries q_derivative_x(const XSeries& f);

} // namespace qreal

#endif
