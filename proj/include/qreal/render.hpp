#ifndef QREAL_RENDER_HPP
#define QREAL_RENDER_HPP

#include "qreal/laurent.hpp"
#include "qreal/xseries.hpp"

#include <string>

namespace qreal {

struct RenderOptions {
    bool latex = false;
};

// Canonical text forms, ascending in q:
//   polynomial      1 + 2q + q^3
//   rational fn     q^2 (1 + q^2)/(1 + q)
//   series          1 + (1/2)q - (5/8)q^2 + O(q^3)
std::string render(const IntPolynomial& p, const RenderOptions& opt = {});
std::string render(const QRationalFunction& f, const RenderOptions& opt = {});
std::string render(const LaurentSeries& s, const RenderOptions& opt = {});
/// One line per x-power: "x^k: <series>".
std::string render(const XSeries& s, const RenderOptions& opt = {});

} // namespace qreal

#endif
