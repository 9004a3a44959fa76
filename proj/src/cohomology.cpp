#include "gincalc/cohomology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "gincalc/rng.hpp"

namespace gincalc {

namespace {

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

std::vector<Monomial> borel_of(int arity, std::vector<int> e) {
  return borel_closure(arity, {mono(std::move(e))}).generators();
}

MonomialIdeal join(int arity, std::initializer_list<std::vector<Monomial>> parts) {
  std::vector<Monomial> gens;
  for (const auto& p : parts) gens.insert(gens.end(), p.begin(), p.end());
  return MonomialIdeal(arity, std::move(gens));
}

}  // namespace

const char* case_name(CaseId id) {
  switch (id) {
    case CaseId::c1: return "1";
    case CaseId::c2: return "2";
    case CaseId::c3: return "3";
    case CaseId::c4a: return "4a";
    case CaseId::c4b: return "4b";
    case CaseId::planar1: return "planar1";
    case CaseId::planar2: return "planar2";
  }
  throw std::logic_error("unknown case");
}

std::optional<CaseId> case_from_name(const std::string& name) {
  for (CaseId id : all_cases)
    if (name == case_name(id)) return id;
  return std::nullopt;
}

MonomialIdeal case_hyperplane_gin(CaseId id) {
  switch (id) {
    case CaseId::c1:
      return join(4, {borel_of(4, {0, 0, 3, 0})});
    case CaseId::c2:
      return join(4, {borel_of(4, {0, 1, 2, 0}),
                      {mono({2, 0, 0, 0}), mono({0, 0, 4, 0})}});
    case CaseId::c3:
      return join(4, {borel_of(4, {1, 1, 0, 0}),
                      {mono({0, 3, 0, 0}), mono({0, 2, 1, 0}), mono({1, 0, 2, 0}),
                       mono({0, 1, 3, 0}), mono({0, 0, 4, 0})}});
    case CaseId::c4a:
      return join(4, {borel_of(4, {1, 0, 1, 0}), borel_of(4, {0, 0, 4, 0}),
                      {mono({0, 3, 0, 0})}});
    case CaseId::c4b:
      return join(4, {borel_of(4, {1, 1, 0, 0}),
                      {mono({1, 0, 3, 0}), mono({0, 2, 0, 0}), mono({0, 1, 3, 0}),
                       mono({0, 0, 4, 0})}});
    case CaseId::planar1:
      return join(3, {borel_of(3, {0, 4, 0})});
    case CaseId::planar2:
      return join(3, {{mono({0, 5, 0}), mono({1, 3, 0}), mono({2, 2, 0}),
                       mono({3, 0, 0})}});
  }
  throw std::logic_error("unknown case");
}

Ruleset case_ruleset(CaseId id) {
  return (id == CaseId::planar1 || id == CaseId::planar2) ? Ruleset::planar_p3
                                                          : Ruleset::nondegenerate_p4;
}

int case_default_reg_cap(CaseId id) {
  switch (id) {
    case CaseId::c4a:
    case CaseId::c4b:
    case CaseId::planar1:
    case CaseId::planar2:
      return 8;
    default:
      return 7;
  }
}

const char* condition_name(Condition c) {
  switch (c) {
    case Condition::none: return "none";
    case Condition::sum_below_four: return "g+i<4";
    case Condition::secant_budget: return "8-secant budget, g+i<10";
    case Condition::hyperquadric_budget: return "hyperquadric budget, g+i<7";
    case Condition::genus_growth: return "g+i<min(2g,8)";
    case Condition::planar_threshold: return "g+i<11+min(g,5)";
  }
  throw std::logic_error("unknown condition");
}

long long genus_of_cone(const MonomialIdeal& hyperplane_gin, Ruleset ambient,
                        ExecMode mode) {
  const RulesetInfo info = ruleset_info(ambient);
  MonomialIdeal ext = hyperplane_gin.arity() == info.curve_arity
                          ? hyperplane_gin
                          : hyperplane_gin.extended(info.curve_arity);
  HilbertData section = hilbert_data(hyperplane_gin, mode);
  if (!section.zero_dimensional)
    throw std::invalid_argument("hyperplane gin must be zero-dimensional");
  const long long d = section.colength;
  const int m = regularity_borel(ext);
  const int ambient_dim = info.curve_arity - 1;
  long long g = d * m + 1 - binomial(m + ambient_dim, ambient_dim) +
                graded_piece_dim(ext, m, mode);
  CurvePolynomial fit = hilbert_polynomial_curve(ext, mode);
  if (fit.degree != d || fit.genus != g)
    throw std::logic_error("cone genus disagrees with the Hilbert-polynomial fit");
  return g;
}

CaseContext make_case_context(CaseId id, int target_genus, int reg_cap) {
  CaseContext ctx{case_hyperplane_gin(id), case_ruleset(id), 0, reg_cap, target_genus};
  ctx.g_gamma = static_cast<int>(genus_of_cone(ctx.hyperplane_gin, ctx.ambient));
  if (reg_cap < 6 || reg_cap > 8)
    throw std::invalid_argument("regularity cap must be 6, 7 or 8");
  if (target_genus < 0 || target_genus > ctx.g_gamma)
    throw std::invalid_argument("target genus out of range");
  return ctx;
}

long long genus_after_trace(const RewriteTrace& trace, long long g_gamma, ExecMode mode) {
  long long g = g_gamma - static_cast<long long>(trace.steps.size());
  CurvePolynomial fit = hilbert_polynomial_curve(trace.end, mode);
  if (fit.genus != g)
    throw std::logic_error("trace length and fitted genus disagree");
  return g;
}

int i_from_trace(const RewriteTrace& trace) {
  int n = 0;
  for (const RewriteStep& s : trace.steps)
    if (s.step_degree >= 6) ++n;
  return n;
}

int tree_excess_rewrite_count(const GenTree& tree) {
  return tree.nonleaf_count_from_depth(6);
}

namespace {

struct SearchEntry {
  std::vector<int> key;
  MonomialIdeal ideal;
  std::vector<int> pred;
  Monomial target;
};

struct NodeInfo {
  MonomialIdeal ideal;
  std::vector<int> pred;
  Monomial target;
};

using Level = std::map<std::vector<int>, NodeInfo>;

int max_generator_degree(const MonomialIdeal& ideal) {
  int d = 0;
  for (const Monomial& g : ideal.generators()) d = std::max(d, g.degree());
  return d;
}

/// Level-synchronous expansion of the C-rule relation with cap pruning.
/// Levels are ordered maps and the per-level fold runs in source order, so
/// the stored predecessors (hence witnesses) are deterministic.
std::vector<Level> c_rule_bfs(const MonomialIdeal& start, Ruleset rs, int steps,
                              int reg_cap, ExecMode mode) {
  std::vector<Level> levels(static_cast<size_t>(steps) + 1);
  levels[0].emplace(start.canonical_key(),
                    NodeInfo{start, {}, Monomial::one(start.arity())});
  for (int level = 0; level < steps; ++level) {
    std::vector<const NodeInfo*> work;
    work.reserve(levels[static_cast<size_t>(level)].size());
    for (auto& [key, node] : levels[static_cast<size_t>(level)]) work.push_back(&node);
    const int n = static_cast<int>(work.size());
    std::vector<std::vector<SearchEntry>> buckets(static_cast<size_t>(n));
#pragma omp parallel for schedule(dynamic) if (mode == ExecMode::parallel && n >= 24)
    for (int w = 0; w < n; ++w) {
      const NodeInfo& node = *work[static_cast<size_t>(w)];
      GenTree tree = GenTree::from_ideal(node.ideal);
      std::vector<int> my_key = node.ideal.canonical_key();
      for (int leaf : tree.leaves()) {
        if (leaf == 0) continue;
        auto next = tree.try_apply_c_rule(leaf, rs);
        if (!next) continue;
        MonomialIdeal ideal = next->ideal();
        if (max_generator_degree(ideal) > reg_cap) continue;
        buckets[static_cast<size_t>(w)].push_back(
            SearchEntry{ideal.canonical_key(), std::move(ideal), my_key,
                        tree.path_monomial(leaf)});
      }
    }
    Level& next = levels[static_cast<size_t>(level) + 1];
    for (auto& bucket : buckets)
      for (SearchEntry& e : bucket)
        next.emplace(e.key, NodeInfo{std::move(e.ideal), std::move(e.pred),
                                     std::move(e.target)});
  }
  return levels;
}

}  // namespace

CaseVerdict max_i_search(const CaseContext& ctx, ExecMode mode) {
  const RulesetInfo info = ruleset_info(ctx.ambient);
  const int steps = ctx.g_gamma - ctx.target_genus;
  if (steps < 0) throw std::invalid_argument("target genus exceeds the cone genus");

  MonomialIdeal start = ctx.hyperplane_gin.extended(info.curve_arity);
  std::vector<Level> levels = c_rule_bfs(start, ctx.ambient, steps, ctx.reg_cap, mode);

  CaseVerdict verdict;
  const Level& final_level = levels[static_cast<size_t>(steps)];
  if (final_level.empty())
    throw std::logic_error("no admissible rewriting sequence of the requested length");

  const std::vector<int>* best_key = nullptr;
  int best_i = -1;
  for (const auto& [key, node] : final_level) {
    int i = tree_excess_rewrite_count(GenTree::from_ideal(node.ideal));
    if (i > best_i) {
      best_i = i;
      best_key = &key;
    }
  }
  verdict.max_i = best_i;

  // Reconstruct the maximizing trace.
  RewriteTrace trace;
  trace.start = start;
  trace.end = final_level.at(*best_key).ideal;
  std::vector<RewriteStep> rev;
  const std::vector<int>* cur = best_key;
  for (int level = steps; level > 0; --level) {
    const NodeInfo& node = levels[static_cast<size_t>(level)].at(*cur);
    rev.push_back(RewriteStep{RuleFamily::c_rule, ctx.ambient, node.target,
                              node.target.degree()});
    cur = &levels[static_cast<size_t>(level) - 1].find(node.pred)->first;
  }
  std::reverse(rev.begin(), rev.end());
  trace.steps = std::move(rev);
  verdict.witness = std::move(trace);

  verdict.condition_met = certificate_condition(ctx, verdict.max_i, CertificateFlags{});
  verdict.problematic = verdict.condition_met == Condition::none;
  return verdict;
}

std::vector<MonomialIdeal> c_rule_frontier(const CaseContext& ctx, ExecMode mode) {
  const RulesetInfo info = ruleset_info(ctx.ambient);
  const int steps = ctx.g_gamma - ctx.target_genus;
  if (steps < 0) throw std::invalid_argument("target genus exceeds the cone genus");
  MonomialIdeal start = ctx.hyperplane_gin.extended(info.curve_arity);
  std::vector<Level> levels = c_rule_bfs(start, ctx.ambient, steps, ctx.reg_cap, mode);
  std::vector<MonomialIdeal> out;
  out.reserve(levels.back().size());
  for (const auto& [key, node] : levels.back()) out.push_back(node.ideal);
  return out;
}

std::vector<LevelSummary> case_level_sweep(CaseId id, int reg_cap, ExecMode mode) {
  CaseContext ctx = make_case_context(id, 0, reg_cap);
  const RulesetInfo info = ruleset_info(ctx.ambient);
  const int ambient_dim = info.curve_arity - 1;
  MonomialIdeal start = ctx.hyperplane_gin.extended(info.curve_arity);
  std::vector<Level> levels =
      c_rule_bfs(start, ctx.ambient, ctx.g_gamma, reg_cap, mode);

  std::vector<LevelSummary> out;
  for (int level = 0; level <= ctx.g_gamma; ++level) {
    LevelSummary summary;
    summary.steps = level;
    summary.genus = ctx.g_gamma - level;
    const Level& states = levels[static_cast<size_t>(level)];
    summary.states = static_cast<long long>(states.size());
    std::vector<const NodeInfo*> work;
    work.reserve(states.size());
    for (auto& [key, node] : states) work.push_back(&node);
    const int n = static_cast<int>(work.size());
    int max_i = 0;
    bool ok = true;
#pragma omp parallel for schedule(dynamic) reduction(max : max_i) \
    reduction(&& : ok) if (mode == ExecMode::parallel && n >= 16)
    for (int w = 0; w < n; ++w) {
      const MonomialIdeal& ideal = work[static_cast<size_t>(w)]->ideal;
      int i = tree_excess_rewrite_count(GenTree::from_ideal(ideal));
      max_i = std::max(max_i, i);
      CurvePolynomial p = hilbert_polynomial_curve(ideal, ExecMode::serial);
      if (p.genus != summary.genus || p.degree != 10) ok = false;
      if (sheaf_h1_oracle(ideal, 5, ExecMode::serial).value != i) ok = false;
      long long expected_dim = binomial(5 + ambient_dim, ambient_dim) -
                               (5 * p.degree - p.genus + 1) + i;
      if (graded_piece_dim(ideal, 5, ExecMode::serial) != expected_dim) ok = false;
    }
    summary.max_i = max_i;
    summary.identities_ok = ok;
    out.push_back(summary);
  }
  return out;
}

bool i_oracle_agreement(const RewriteTrace& trace, ExecMode mode) {
  const MonomialIdeal& end = trace.end;
  CurvePolynomial p = hilbert_polynomial_curve(end, mode);
  const int ambient_dim = end.arity() - 1;
  long long i = i_from_trace(trace);
  if (sheaf_h1_oracle(end, 5, mode).value != i) return false;
  long long expected_dim =
      binomial(5 + ambient_dim, ambient_dim) - (5 * p.degree - p.genus + 1) + i;
  return graded_piece_dim(end, 5, mode) == expected_dim;
}

bool g_plus_i_check(const CaseContext& ctx, const CaseVerdict& verdict) {
  return ctx.target_genus + verdict.max_i <= ctx.g_gamma;
}

Condition certificate_condition(const CaseContext& ctx, int max_i, CertificateFlags flags) {
  const long long g = ctx.target_genus;
  const long long sum = g + max_i;
  if (ctx.ambient == Ruleset::planar_p3)
    return sum < 11 + std::min<long long>(g, 5) ? Condition::planar_threshold
                                                : Condition::none;
  if (sum < 4) return Condition::sum_below_four;
  if (flags.has_8secant_budget && sum < 10) return Condition::secant_budget;
  if (flags.on_hyperquadric_budget && sum < 7) return Condition::hyperquadric_budget;
  if (sum < std::min(2 * g, 8LL)) return Condition::genus_growth;
  return Condition::none;
}

bool nonproblematic_certificate(const CaseContext& ctx, const CaseVerdict& verdict,
                                CertificateFlags flags) {
  return certificate_condition(ctx, verdict.max_i, flags) != Condition::none;
}

std::vector<RewriteTrace> random_c_traces(const MonomialIdeal& hyperplane_gin,
                                          Ruleset rs, int count, std::uint64_t seed) {
  const RulesetInfo info = ruleset_info(rs);
  const long long g_gamma = genus_of_cone(hyperplane_gin, rs, ExecMode::serial);
  MonomialIdeal start = hyperplane_gin.extended(info.curve_arity);
  Rng root(seed);
  std::vector<RewriteTrace> traces;
  traces.reserve(static_cast<size_t>(count));
  for (int n = 0; n < count; ++n) {
    Rng rng = root.split();
    RewriteTrace trace;
    trace.start = start;
    GenTree tree = GenTree::from_ideal(start);
    const int want = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(g_gamma) + 1));
    for (int s = 0; s < want; ++s) {
      std::vector<int> leaves = tree.leaves();
      const size_t nl = leaves.size();
      const size_t offset = rng.bounded(nl);
      bool applied = false;
      for (size_t j = 0; j < nl && !applied; ++j) {
        int leaf = leaves[(offset + j) % nl];
        if (leaf == 0) continue;
        auto next = tree.try_apply_c_rule(leaf, rs);
        if (!next) continue;
        trace.steps.push_back(RewriteStep{RuleFamily::c_rule, rs,
                                          tree.path_monomial(leaf),
                                          tree.depth(leaf)});
        tree = std::move(*next);
        applied = true;
      }
      if (!applied) break;  // no legal rewriting left
    }
    trace.end = tree.ideal();
    traces.push_back(std::move(trace));
  }
  return traces;
}

TraceSweepResult random_trace_identity_sweep(const MonomialIdeal& hyperplane_gin,
                                             Ruleset rs, int count, std::uint64_t seed,
                                             ExecMode mode) {
  const long long g_gamma = genus_of_cone(hyperplane_gin, rs, mode);
  std::vector<RewriteTrace> traces = random_c_traces(hyperplane_gin, rs, count, seed);
  TraceSweepResult result;
  result.traces = count;
  bool genus_ok = true, oracle_ok = true;
  long long total_steps = 0;
  const int n = static_cast<int>(traces.size());
#pragma omp parallel for schedule(dynamic) reduction(&& : genus_ok, oracle_ok) \
    reduction(+ : total_steps) if (mode == ExecMode::parallel)
  for (int t = 0; t < n; ++t) {
    const RewriteTrace& trace = traces[static_cast<size_t>(t)];
    total_steps += static_cast<long long>(trace.steps.size());
    GenTree tree = GenTree::from_ideal(trace.start);
    long long g = g_gamma;
    for (const RewriteStep& step : trace.steps) {
      auto leaf = tree.find_leaf(step.target);
      if (!leaf) {
        genus_ok = false;
        break;
      }
      tree = tree.apply_c_rule(*leaf, rs);
      --g;
      if (hilbert_polynomial_curve(tree.ideal(), ExecMode::serial).genus != g) {
        genus_ok = false;
        break;
      }
    }
    if (!i_oracle_agreement(trace, ExecMode::serial)) oracle_ok = false;
  }
  result.steps = total_steps;
  result.genus_drop_ok = genus_ok;
  result.i_oracle_ok = oracle_ok;
  return result;
}

MonomialIdeal expected_witness_case1_g0() {
  std::vector<Monomial> gens = borel_of(5, {0, 1, 2, 0, 0});
  gens.push_back(mono({0, 0, 5, 0, 0}));
  gens.push_back(mono({0, 0, 4, 2, 0}));
  gens.push_back(mono({0, 0, 3, 4, 0}));
  return MonomialIdeal(5, std::move(gens));
}

MonomialIdeal expected_witness_case2_g1() {
  std::vector<Monomial> gens = borel_of(5, {0, 1, 2, 0, 0});
  gens.push_back(mono({2, 0, 0, 0, 0}));
  gens.push_back(mono({0, 0, 7, 0, 0}));
  gens.push_back(mono({0, 0, 6, 1, 0}));
  gens.push_back(mono({0, 0, 5, 2, 0}));
  gens.push_back(mono({0, 0, 4, 3, 0}));
  return MonomialIdeal(5, std::move(gens));
}

MonomialIdeal rational_quartic_gin(int arity) {
  if (arity < 3) throw std::invalid_argument("arity too small");
  return borel_closure(arity, {mono(std::vector<int>(static_cast<size_t>(arity), 0))
                                   .times_var(2, 2)});
}

}  // namespace gincalc
