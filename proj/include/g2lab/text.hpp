#pragma once

#include <string>
#include <string_view>

#include "g2lab/form.hpp"

namespace g2lab {

/// Shortest decimal form of v at the given number of significant digits
/// ("%.Ng"), the fixed rendering used by reports and the form printer.
std::string fmt_sig(double v, int digits = 12);

/// Render a form as a signed sum of c*e<digits> terms, indices ascending,
/// terms in lexicographic tuple order: "2*e12 + 2*e34 - 4*e56". The zero form
/// renders as "0".
std::string render_form(const Form& a, int digits = 12);

/// Parse a form expression: terms `[+|-] [<decimal> [*]] e<digits>` joined by
/// + or -, or the literal 0. Indices are normalized (with sign) to ascending
/// order; a repeated index inside one monomial is an error. If required_grade
/// is >= 0 every monomial must have that many indices, and "0" yields the zero
/// form of that grade. Errors carry a 1-based column in InputError::what().
Form parse_form(int dim, std::string_view expr, int required_grade = -1);

}  // namespace g2lab
