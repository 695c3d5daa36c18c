#pragma once

#include <map>
#include <string>
#include <string_view>

#include "triplane/hpoly.hpp"

namespace triplane {

// Grammar: terms joined by + and -; a term is an optional rational
// coefficient (integer or p/q), '*'-separated variable powers `v` or `v^k`,
// and parenthesized groups; '/' is limited to a scalar divisor, as in
// "(x^2+y^2)/3".  Identifiers outside the variable set must appear in
// `bindings` and are substituted by their rational values.
QPoly parse_poly(std::string_view text, const VarSet& vars = VarSet::xyt(),
                 const std::map<std::string, Rat>& bindings = {});

// As parse_poly, then validates homogeneity (error names both degrees).
HPoly parse_hpoly(std::string_view text, const VarSet& vars = VarSet::xyt(),
                  const std::map<std::string, Rat>& bindings = {});

// Canonical form: graded-lex order with explicit '*' and '^' only for
// exponents >= 2.  format(parse(s)) is a fixed point.
std::string format(const QPoly& p);
std::string format(const HPoly& p);
std::string format(const XPoly& p);
std::string format(const XHPoly& p);

} // namespace triplane
