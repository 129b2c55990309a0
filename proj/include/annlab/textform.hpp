#ifndef ANNLAB_TEXTFORM_HPP
#define ANNLAB_TEXTFORM_HPP

#include <string_view>

#include "annlab/poly.hpp"

namespace annlab {

/* Parse the POLY grammar: terms separated by + or -, factors joined by *,
 * powers with ^, integer (or a/b) coefficients, names resolved against the
 * ring's variables. Whitespace-insensitive. Throws parse_error with
 * position information. parse(print(p)) == p for every polynomial. */
Poly parse_poly(const PolyRing& R, std::string_view text);

}  // namespace annlab

#endif
