#pragma once

#include <string>

#include "edgeshadow/trig_poly.hpp"

namespace edgeshadow {

/// LaTeX rendering of a polynomial body (terms by ascending frequency, sines
/// before cosines per frequency); "0" for the empty polynomial.
std::string emit_poly_latex(const TrigPoly& p);

}  // namespace edgeshadow
