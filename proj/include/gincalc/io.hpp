#ifndef GINCALC_IO_HPP
#define GINCALC_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "gincalc/ideal.hpp"

namespace gincalc {

/// Parses "x0^2*x1" style monomials; whitespace-separated exponent tuples
/// are handled by the ideal reader, not here.
Monomial parse_monomial(const std::string& text, int arity);

/// Ideal text format: a "vars: N" header, then one generator per line,
/// written either as "x0^2*x1" or as an exponent tuple "2 1 0 0".
/// '#' starts a comment.
MonomialIdeal read_ideal(std::istream& in);
MonomialIdeal read_ideal_file(const std::string& path);
std::string write_ideal(const MonomialIdeal& ideal);

/// Parameterization file: one line per coordinate, each holding the same
/// number of field elements (degree + 1 coefficients).
std::vector<std::vector<long long>> read_param_file(const std::string& path);

}  // namespace gincalc

#endif
