// Text round-trip formats and human-readable printing.
#pragma once

#include "hecke/series.hpp"

#include <string>

namespace hecke {

std::string to_text(const Poly2& p);
std::string to_text(const Scalar& s);
std::string to_text(const LaurentX& f);
std::string to_text(const Laurent2& f);
std::string to_text(const SeriesX& f);

Poly2 poly_from_text(const std::string& s);
Scalar scalar_from_text(const std::string& s);
LaurentX laurent_from_text(const std::string& s);
Laurent2 laurent2_from_text(const std::string& s);
SeriesX series_from_text(const std::string& s);

// Printing in q and t, e.g. "(t-1)/(q*t-1)".
std::string pretty(const Scalar& s);
std::string pretty(const LaurentX& f, const std::string& var = "X");
std::string pretty(const Laurent2& f, const std::string& v1, const std::string& v2);
// Rational function of t alone, ascending powers, numerator content pulled
// out: "2(1+t)/(1-t)".  Half-integral powers of t are not supported.
std::string pretty_t(const Scalar& s);

}  // namespace hecke
