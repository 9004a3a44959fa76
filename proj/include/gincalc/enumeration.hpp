#ifndef GINCALC_ENUMERATION_HPP
#define GINCALC_ENUMERATION_HPP

#include <vector>

#include "gincalc/exec.hpp"
#include "gincalc/gen_tree.hpp"
#include "gincalc/ideal.hpp"

namespace gincalc {

struct EnumerationFilter {
  int colength = 1;
  int reg_cap = 0;            // 0 means no cap
  bool nondegenerate = false; // exclude ideals with a linear generator
  bool ellia_peskine = false; // chain inequality on the lambda invariants (2-variable cuts)
};

/// All saturated Borel-fixed zero-dimensional ideals with the requested
/// colength, enumerated directly as Borel-fixed staircases over the cut
/// variables (2 or 3) and returned in the ambient one variable up.
/// Results are sorted canonically.
std::vector<MonomialIdeal> enumerate_staircases(int cut_arity,
                                                const EnumerationFilter& filter,
                                                ExecMode mode = ExecMode::parallel);

/// Two-variable staircases through the planar filters; the lambda invariants
/// are read off the generators x0^k, x0^{k-1} x1^{l_{k-1}}, ..., x1^{l_0}.
std::vector<MonomialIdeal> enumerate_planar_gins(const EnumerationFilter& filter,
                                                 ExecMode mode = ExecMode::parallel);

/// Every ideal reachable from the empty tree by exactly `degree` lambda
/// rewritings, deduplicated by canonical form and sorted canonically.
std::vector<MonomialIdeal> lambda_reachable_set(int degree, Ruleset rs,
                                                ExecMode mode = ExecMode::parallel);

/// Number of minimal generators of total degree 2.
int quadratic_generator_count(const MonomialIdeal& ideal);

/// The lambda invariants of a two-variable staircase ideal (given at cut or
/// section arity): entry j is the x1-degree of the generator with
/// x0-exponent j. Throws when the generators do not form a staircase.
std::vector<int> lambda_invariants(const MonomialIdeal& ideal);

}  // namespace gincalc

#endif
