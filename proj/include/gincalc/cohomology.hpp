#ifndef GINCALC_COHOMOLOGY_HPP
#define GINCALC_COHOMOLOGY_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "gincalc/exec.hpp"
#include "gincalc/gen_tree.hpp"
#include "gincalc/hilbert.hpp"

namespace gincalc {

/// The seven admissible hyperplane gins of degree-10 rational curves: five
/// nondegenerate section ideals and two planar ones.
enum class CaseId { c1, c2, c3, c4a, c4b, planar1, planar2 };

const char* case_name(CaseId id);
std::optional<CaseId> case_from_name(const std::string& name);
MonomialIdeal case_hyperplane_gin(CaseId id);
Ruleset case_ruleset(CaseId id);
/// 8 where the analysis allows an extra generator degree, 7 otherwise.
int case_default_reg_cap(CaseId id);

constexpr CaseId all_cases[] = {CaseId::c1, CaseId::c2,      CaseId::c3,
                                CaseId::c4a, CaseId::c4b,    CaseId::planar1,
                                CaseId::planar2};

struct CaseContext {
  MonomialIdeal hyperplane_gin;
  Ruleset ambient;
  int g_gamma;
  int reg_cap;       // 6, 7 or 8
  int target_genus;  // in [0, g_gamma]
};

CaseContext make_case_context(CaseId id, int target_genus, int reg_cap);

enum class Condition {
  none,
  sum_below_four,          // g+i < 4
  secant_budget,           // 8-secant allowance with g+i < 10
  hyperquadric_budget,     // hyperquadric allowance with g+i < 7
  genus_growth,            // g+i < min(2g, 8)
  planar_threshold,        // g+i < 11 + min(g, 5)
};
const char* condition_name(Condition c);

struct CaseVerdict {
  int max_i = 0;
  std::optional<RewriteTrace> witness;
  Condition condition_met = Condition::none;
  bool problematic = true;
};

/// Genus of the cone over the section scheme: with m the regularity of the
/// extension and A the ambient dimension, d*m + 1 - C(m+A, A) + dim I_m.
/// Cross-checked against the Hilbert-polynomial fit of the extension; a
/// disagreement throws.
long long genus_of_cone(const MonomialIdeal& hyperplane_gin, Ruleset ambient,
                        ExecMode mode = ExecMode::parallel);

/// g_gamma minus the number of steps; verified against the fitted genus of
/// the end ideal, throwing on disagreement.
long long genus_after_trace(const RewriteTrace& trace, long long g_gamma,
                            ExecMode mode = ExecMode::parallel);

/// Number of rewritings applied at degree 6 or greater.
int i_from_trace(const RewriteTrace& trace);

/// The same count read off a finished tree: internal vertices of depth >= 6.
/// Every rewriting at degree >= 6 makes exactly one such vertex internal, so
/// the count does not depend on the order the tree was built in.
int tree_excess_rewrite_count(const GenTree& tree);

/// Exact maximum of i over all Borel-preserving C-rule sequences of length
/// g_gamma - target_genus whose final ideal satisfies the regularity cap.
/// Breadth-first over canonical ideal forms; states whose generator degree
/// already exceeds the cap are pruned (rewriting never lowers degrees).
/// Returns a maximizing witness trace with deterministic tie-breaking, and
/// fills condition_met/problematic with the default certificate (both
/// budget flags available).
CaseVerdict max_i_search(const CaseContext& ctx, ExecMode mode = ExecMode::parallel);

/// Checks the rewrite count against the sheaf-cohomology oracle at twist 5
/// and the section-count identity dim I_5 = C(5+A, A) - (5d - g + 1) + i.
bool i_oracle_agreement(const RewriteTrace& trace, ExecMode mode = ExecMode::parallel);

bool g_plus_i_check(const CaseContext& ctx, const CaseVerdict& verdict);

struct CertificateFlags {
  bool has_8secant_budget = true;
  bool on_hyperquadric_budget = true;
};

/// Which escape condition the pair (g, i) satisfies, if any.
Condition certificate_condition(const CaseContext& ctx, int max_i, CertificateFlags flags);
bool nonproblematic_certificate(const CaseContext& ctx, const CaseVerdict& verdict,
                                CertificateFlags flags);

/// All end ideals of admissible C-rule sequences of the context's length.
std::vector<MonomialIdeal> c_rule_frontier(const CaseContext& ctx,
                                           ExecMode mode = ExecMode::parallel);

/// One breadth-first sweep of a case to depth g_gamma, reporting per level
/// (= per target genus) the state count, the exact maximum of i, and
/// whether every state passes the fitted-genus and section-count
/// identities. Level k is the final frontier of the search with
/// target_genus = g_gamma - k.
struct LevelSummary {
  int steps = 0;
  int genus = 0;
  long long states = 0;
  int max_i = 0;
  bool identities_ok = true;
};
std::vector<LevelSummary> case_level_sweep(CaseId id, int reg_cap,
                                           ExecMode mode = ExecMode::parallel);

/// Random C-rule walks from the extension of a hyperplane gin. Lengths vary
/// over [0, g_gamma]; only legal (Borel-preserving) rewritings are recorded.
std::vector<RewriteTrace> random_c_traces(const MonomialIdeal& hyperplane_gin,
                                          Ruleset rs, int count, std::uint64_t seed);

/// Batch check of the two machine identities over random traces: the fitted
/// genus drops by exactly one per accepted step, and the rewrite count at
/// degree >= 6 matches the cohomology oracle at twist 5.
struct TraceSweepResult {
  int traces = 0;
  long long steps = 0;
  bool genus_drop_ok = true;
  bool i_oracle_ok = true;
};
TraceSweepResult random_trace_identity_sweep(const MonomialIdeal& hyperplane_gin,
                                             Ruleset rs, int count, std::uint64_t seed,
                                             ExecMode mode = ExecMode::parallel);

/// Known degree-10 curve gins used as reachability witnesses: the genus-0
/// endpoint over case c1 with a single degree-6 rewriting, and the genus-1
/// endpoint over case c2 with three of them.
MonomialIdeal expected_witness_case1_g0();
MonomialIdeal expected_witness_case2_g1();
/// The gin of the rational normal quartic (equal to its section gin).
MonomialIdeal rational_quartic_gin(int arity);

}  // namespace gincalc

#endif
