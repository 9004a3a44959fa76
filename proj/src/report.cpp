#include "gincalc/report.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "gincalc/cohomology.hpp"
#include "gincalc/enumeration.hpp"
#include "gincalc/gin_lab.hpp"
#include "gincalc/surface.hpp"

namespace gincalc {

namespace {

std::uint64_t claim_seed(const VerifyConfig& config, const std::string& id) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : id) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return config.seed ^ h;
}

std::string render_ideals(std::vector<MonomialIdeal> ideals) {
  std::sort(ideals.begin(), ideals.end(),
            [](const MonomialIdeal& a, const MonomialIdeal& b) {
              return a.canonical_key() < b.canonical_key();
            });
  std::string out;
  for (size_t k = 0; k < ideals.size(); ++k) {
    if (k) out += " | ";
    out += ideals[k].str();
  }
  return out.empty() ? "none" : out;
}

std::string render_ints(const std::vector<long long>& v) {
  if (v.empty()) return "none";
  std::string out;
  for (size_t k = 0; k < v.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(v[k]);
  }
  return out;
}

/// The values a claim computes and the value it pins; `source` is set only
/// for claims whose original statement disagrees with the pinned value.
struct ClaimSpec {
  std::string id;
  std::string anchor;
  std::string expected;
  std::string source;  // empty when the source agrees
  std::function<std::string(const VerifyConfig&)> run;
};

// ---------------------------------------------------------------------------
// enumeration claims

std::string run_five_section_ideals(const VerifyConfig& config) {
  EnumerationFilter filter{10, 4, true, false};
  return render_ideals(enumerate_staircases(3, filter, config.mode));
}

std::string expected_five_section_ideals() {
  std::vector<MonomialIdeal> ideals;
  for (CaseId id : {CaseId::c1, CaseId::c2, CaseId::c3, CaseId::c4a, CaseId::c4b})
    ideals.push_back(case_hyperplane_gin(id));
  return render_ideals(std::move(ideals));
}

std::string run_planar_section_ideals(const VerifyConfig& config) {
  EnumerationFilter filter{10, 5, true, true};
  return render_ideals(enumerate_planar_gins(filter, config.mode));
}

std::string expected_planar_section_ideals() {
  return render_ideals({case_hyperplane_gin(CaseId::planar1),
                        case_hyperplane_gin(CaseId::planar2)});
}

std::string agreement_by_degree(Ruleset rs, int cut, const VerifyConfig& config,
                                bool from_lambda) {
  std::vector<long long> counts;
  bool equal = true;
  for (int d = 1; d <= 10; ++d) {
    EnumerationFilter filter{d, 0, false, false};
    std::vector<MonomialIdeal> stairs = enumerate_staircases(cut, filter, config.mode);
    std::vector<MonomialIdeal> reach = lambda_reachable_set(d, rs, config.mode);
    if (stairs != reach) equal = false;
    counts.push_back(static_cast<long long>(from_lambda ? reach.size() : stairs.size()));
  }
  return render_ints(counts) + ";sets=" + (equal ? "equal" : "differ");
}

std::string run_nonleaf_colength(const VerifyConfig& config) {
  for (Ruleset rs : {Ruleset::nondegenerate_p4, Ruleset::planar_p3}) {
    int cut = ruleset_info(rs).cut_arity;
    for (int d = 1; d <= 10; ++d) {
      EnumerationFilter filter{d, 0, false, false};
      for (const MonomialIdeal& ideal : enumerate_staircases(cut, filter, config.mode)) {
        HilbertData data = hilbert_data(ideal, config.mode);
        if (!data.zero_dimensional || data.colength != d) return "colength mismatch";
        if (GenTree::from_ideal(ideal).nonleaf_count() != d) return "nonleaf mismatch";
      }
    }
  }
  return "ok";
}

std::string run_quadratic_stratification(const VerifyConfig& config) {
  EnumerationFilter filter{10, 4, true, false};
  std::vector<int> by_count(5, 0);
  for (const MonomialIdeal& ideal : enumerate_staircases(3, filter, config.mode))
    ++by_count[static_cast<size_t>(std::min(quadratic_generator_count(ideal), 4))];
  std::string out;
  for (int q = 0; q <= 3; ++q)
    out += std::to_string(q) + ":" + std::to_string(by_count[static_cast<size_t>(q)]) +
           (q < 3 ? "," : "");
  return out;
}

std::string run_four_quadratics(const VerifyConfig& config) {
  EnumerationFilter filter{10, 0, false, false};
  for (const MonomialIdeal& ideal : enumerate_staircases(3, filter, config.mode)) {
    if (quadratic_generator_count(ideal) < 4) continue;
    if (regularity_borel(ideal) < 5) return "regular counterexample: " + ideal.str();
  }
  return "ok";
}

std::string run_planar_ep_superset(const VerifyConfig& config) {
  EnumerationFilter with{10, 5, true, true};
  EnumerationFilter without{10, 5, true, false};
  auto a = enumerate_planar_gins(with, config.mode);
  auto b = enumerate_planar_gins(without, config.mode);
  if (a.size() >= b.size()) return "not larger";
  for (const MonomialIdeal& ideal : a)
    if (std::find(b.begin(), b.end(), ideal) == b.end()) return "not a subset";
  return "strict-superset";
}

// ---------------------------------------------------------------------------
// cohomology claims

std::string run_cone_genus_table(const VerifyConfig& config) {
  std::string out;
  for (CaseId id : all_cases) {
    if (!out.empty()) out += " ";
    out += std::string(case_name(id)) + ":" +
           std::to_string(genus_of_cone(case_hyperplane_gin(id), case_ruleset(id),
                                        config.mode));
  }
  return out;
}

int case_cap(CaseId id, const VerifyConfig& config) {
  return config.reg_cap > 0 ? config.reg_cap : case_default_reg_cap(id);
}

std::string run_case_sweep(CaseId id, const VerifyConfig& config) {
  std::vector<LevelSummary> sweep = case_level_sweep(id, case_cap(id, config), config.mode);
  CaseContext ctx = make_case_context(id, 0, case_cap(id, config));
  bool identities = true, bound = true, monotone = true;
  std::vector<long long> profile;
  for (const LevelSummary& level : sweep) {
    identities = identities && level.identities_ok;
    bound = bound && (level.genus + level.max_i <= ctx.g_gamma);
    profile.push_back(level.max_i);
  }
  for (size_t k = 1; k < profile.size(); ++k)
    if (profile[k] < profile[k - 1]) monotone = false;
  return "i-by-steps=" + render_ints(profile) + ";identities=" +
         (identities ? "ok" : "fail") + ";g+i-bound=" + (bound ? "ok" : "fail") +
         ";monotone=" + (monotone ? "ok" : "fail");
}

std::string run_max_i(CaseId id, int genus, int cap, const VerifyConfig& config) {
  CaseContext ctx =
      make_case_context(id, genus, config.reg_cap > 0 ? config.reg_cap : cap);
  CaseVerdict verdict = max_i_search(ctx, config.mode);
  if (!verdict.witness) return "no witness";
  if (i_from_trace(*verdict.witness) != verdict.max_i) return "witness i mismatch";
  if (!i_oracle_agreement(*verdict.witness, config.mode)) return "oracle mismatch";
  return std::to_string(verdict.max_i);
}

std::string run_witness_reachable(CaseId id, int genus, const MonomialIdeal& target,
                                  int expect_i, const VerifyConfig& config) {
  CaseContext ctx = make_case_context(id, genus, case_cap(id, config));
  for (const MonomialIdeal& ideal : c_rule_frontier(ctx, config.mode))
    if (ideal == target)
      return tree_excess_rewrite_count(GenTree::from_ideal(ideal)) == expect_i
                 ? "reachable,i=" + std::to_string(expect_i)
                 : "reachable,wrong i";
  return "unreachable";
}

std::string run_cap_monotone(const VerifyConfig& config) {
  int last = -1;
  for (int cap : {6, 7, 8}) {
    CaseContext ctx = make_case_context(CaseId::c2, 1, cap);
    int i = max_i_search(ctx, config.mode).max_i;
    if (i < last) return "cap monotonicity violated";
    last = i;
  }
  return "ok";
}

std::string run_trace_identities(CaseId id, const VerifyConfig& config,
                                 const std::string& claim_id) {
  TraceSweepResult result = random_trace_identity_sweep(
      case_hyperplane_gin(id), case_ruleset(id), 1000,
      claim_seed(config, claim_id), config.mode);
  if (!result.genus_drop_ok) return "genus drop failed";
  if (!result.i_oracle_ok) return "oracle agreement failed";
  return "ok:1000";
}

std::string run_threshold_probe(const VerifyConfig& config, const std::string& claim_id) {
  // Find a trace with a degree-6 rewriting; at threshold ">= 6" the count
  // matches the cohomology oracle, at "> 6" it does not.
  for (CaseId id : {CaseId::planar1, CaseId::c1}) {
    auto traces = random_c_traces(case_hyperplane_gin(id), case_ruleset(id), 200,
                                  claim_seed(config, claim_id));
    for (const RewriteTrace& trace : traces) {
      int ge6 = 0, gt6 = 0;
      for (const RewriteStep& s : trace.steps) {
        if (s.step_degree >= 6) ++ge6;
        if (s.step_degree > 6) ++gt6;
      }
      if (ge6 == gt6) continue;
      long long h1 = sheaf_h1_oracle(trace.end, 5, config.mode).value;
      if (h1 == ge6 && h1 != gt6) return "ge6";
      return "ambiguous";
    }
  }
  return "no probe trace";
}

// ---------------------------------------------------------------------------
// surface claims

std::string render_rational(const Rational& r) { return r.str(); }

std::string run_chi(int n, long long a, long long b) {
  HirzebruchSurface s(n);
  return render_rational(s.riemann_roch_chi(DivisorClass{a, b}));
}

std::string run_chi_integrality(const VerifyConfig&) {
  for (int n : {1, 3}) {
    HirzebruchSurface s(n);
    for (long long a = -10; a <= 10; ++a)
      for (long long b = -10; b <= 20; ++b) {
        if (!s.riemann_roch_chi(DivisorClass{a, b}).is_integer()) return "non-integer chi";
        long long self = s.intersect(DivisorClass{a, b}, DivisorClass{a, b});
        long long with_k = s.intersect(DivisorClass{a, b}, s.canonical());
        if ((self + with_k) % 2 != 0) return "parity failure";
      }
  }
  return "ok";
}

std::string run_no_genus8(const VerifyConfig&) {
  for (int n : {1, 3})
    for (const ClassWithGenus& c : degree10_classes(HirzebruchSurface(n)))
      if (c.genus == Rational(8)) return "genus-8 class found";
  return "none";
}

std::string run_vertex_transform(const VerifyConfig&) {
  bool genus8 = false;
  std::vector<long long> genus9;
  for (const TransformCandidate& c : vertex_multiplicity_scan(12, 12)) {
    if (c.genus == Rational(8)) genus8 = true;
    if (c.genus == Rational(9)) genus9.push_back(c.a - c.m);
  }
  std::sort(genus9.begin(), genus9.end());
  genus9.erase(std::unique(genus9.begin(), genus9.end()), genus9.end());
  return std::string("genus8:") + (genus8 ? "found" : "none") +
         ";genus9-at:" + render_ints(genus9);
}

std::string run_splitting_enumeration(const VerifyConfig&) {
  std::string out;
  for (const auto& [t, codim] : enumerate_splittings(10, 4)) {
    if (codim >= 4 || codim == 0) continue;
    if (!out.empty()) out += ",";
    out += "(";
    for (size_t k = 0; k < t.parts.size(); ++k)
      out += std::to_string(t.parts[k]) + (k + 1 < t.parts.size() ? "," : "");
    out += "):" + std::to_string(codim);
  }
  return out.empty() ? "none" : out;
}

std::string run_chi_bounds(long long a, long long b, long long n) {
  ReducibleChiBounds r = reducible_chi_bounds(a, b, n);
  return "chi>=" + render_ints({r.chi_union, r.chi_mixed, r.chi_planar_pair}) +
         ";dim<=" + render_ints({r.cap_union, r.cap_mixed, r.cap_planar_pair});
}

// ---------------------------------------------------------------------------
// groebner claims

std::string run_quartic_gin(const VerifyConfig& config, const std::string& claim_id) {
  auto gens = rational_normal_curve_ideal(4, config.field);
  GinResult r = gin_estimate(gens, 5, claim_seed(config, claim_id), config.cap,
                             GinEngine::buchberger);
  return r.gin.str() + (r.stable ? ";stable" : ";unstable");
}

std::string run_twisted_cubic(const VerifyConfig& config) {
  auto gens = rational_normal_curve_ideal(3, config.field);
  Fp sample(1, config.field);
  MonomialIdeal via_buchberger = initial_ideal(buchberger(gens, config.cap));
  MonomialIdeal via_rank = initial_ideal_by_linear_algebra(gens, config.cap, sample);
  if (via_buchberger != via_rank) return "routes disagree";
  return via_buchberger.str();
}

std::string run_leadterm_pairs(const VerifyConfig& config, const std::string& claim_id) {
  Rng rng(claim_seed(config, claim_id));
  int passed = 0;
  for (int k = 0; k < 50; ++k) {
    Rng child = rng.split();
    Polynomial<Fp> f = random_plane_quintic(0, config.field, child);
    Polynomial<Fp> g = random_plane_quintic(2, config.field, child);
    if (verify_leadterm_claim(f, g)) ++passed;
  }
  return "ok:" + std::to_string(passed);
}

std::string run_fact1_quartic(const VerifyConfig& config, const std::string& claim_id) {
  auto gens = rational_normal_curve_ideal(4, config.field);
  return restriction_saturation_check(gens, claim_seed(config, claim_id), 2,
                                      config.cap, GinEngine::buchberger)
             ? "ok"
             : "failed";
}

std::string run_fact1_random(const VerifyConfig& config, const std::string& claim_id) {
  Rng rng(claim_seed(config, claim_id));
  int passed = 0;
  for (int k = 0; k < 5; ++k) {
    Rng child = rng.split();
    auto forms = random_parameterization(10, config.field, child);
    auto gens = minimal_generators_from_param(forms, 6);
    if (restriction_saturation_check(gens, child.next(), 2, 7,
                                     GinEngine::linear_algebra))
      ++passed;
  }
  return "ok:" + std::to_string(passed);
}

std::string run_macaulay_agreement(const VerifyConfig& config, const std::string& claim_id) {
  Fp sample(1, config.field);
  auto check = [&](const std::vector<Polynomial<Fp>>& gens) {
    MonomialIdeal in = initial_ideal(buchberger(gens, config.cap));
    for (int t = 0; t <= config.cap; ++t) {
      long long lhs = graded_ideal_dim(gens, t, sample);
      long long rhs = graded_piece_dim(in, t, config.mode);
      if (lhs != rhs) return false;
    }
    return true;
  };
  if (!check(rational_normal_curve_ideal(4, config.field))) return "quartic failed";
  Rng rng(claim_seed(config, claim_id));
  Polynomial<Fp> f = random_plane_quintic(0, config.field, rng);
  Polynomial<Fp> g = random_plane_quintic(2, config.field, rng);
  if (!check(union_quintics_ideal(f, g))) return "union failed";
  return "ok";
}

std::string run_generic_curves(const VerifyConfig& config, const std::string& claim_id) {
  Rng rng(claim_seed(config, claim_id));
  int passed = 0;
  for (int k = 0; k < 20; ++k) {
    Rng child = rng.split();
    auto forms = random_parameterization(10, config.field, child);
    GinResult r = gin_from_param(forms, 2, child.next(), 8);
    if (!r.stable) continue;
    if (regularity_borel(r.gin) > 6) continue;
    if (sheaf_h1_oracle(r.gin, 5, config.mode).value != 0) continue;
    CurvePolynomial fit = hilbert_polynomial_curve(r.gin, config.mode);
    if (fit.degree != 10 || fit.genus != 0) continue;  // image degree check
    ++passed;
  }
  return "ok:" + std::to_string(passed);
}

std::string run_union_gin(const VerifyConfig& config, const std::string& claim_id) {
  Rng rng(claim_seed(config, claim_id));
  int passed = 0;
  for (int k = 0; k < 5; ++k) {
    Rng child = rng.split();
    Polynomial<Fp> f = random_plane_quintic(0, config.field, child);
    Polynomial<Fp> g = random_plane_quintic(2, config.field, child);
    auto gens = union_quintics_ideal(f, g);
    GinResult r = gin_estimate(gens, 2, child.next(), 7, GinEngine::buchberger);
    if (!r.stable) continue;
    if (regularity_borel(r.gin) <= 6) ++passed;
  }
  return "ok:" + std::to_string(passed);
}

// ---------------------------------------------------------------------------

std::vector<ClaimSpec> build_registry() {
  std::vector<ClaimSpec> specs;
  auto add = [&](std::string id, std::string anchor, std::string expected,
                 std::string source,
                 std::function<std::string(const VerifyConfig&)> run) {
    specs.push_back(ClaimSpec{std::move(id), std::move(anchor), std::move(expected),
                              std::move(source), std::move(run)});
  };

  // --- enumeration
  add("enumeration/five-section-ideals",
      "exactly five admissible nondegenerate section ideals of colength 10 within "
      "regularity 4",
      expected_five_section_ideals(), "", run_five_section_ideals);
  add("enumeration/planar-section-ideals",
      "exactly two admissible planar section ideals of colength 10 within "
      "regularity 5 and the chain inequality",
      expected_planar_section_ideals(), "", run_planar_section_ideals);
  add("enumeration/lambda-staircase-agreement-p4",
      "lambda-reachable ideals coincide with directly enumerated staircases, "
      "3-variable cut, colengths 1..10",
      "1,1,2,3,4,6,9,12,17,24;sets=equal", "",
      [](const VerifyConfig& c) {
        return agreement_by_degree(Ruleset::nondegenerate_p4, 3, c, true);
      });
  add("enumeration/lambda-staircase-agreement-p3",
      "lambda-reachable ideals coincide with directly enumerated staircases, "
      "2-variable cut, colengths 1..10",
      "1,1,2,2,3,4,5,6,8,10;sets=equal", "",
      [](const VerifyConfig& c) {
        return agreement_by_degree(Ruleset::planar_p3, 2, c, true);
      });
  add("enumeration/nonleaf-colength",
      "nonleaf count of every enumerated tree equals the Hilbert-function "
      "colength, colengths 1..10, both rulesets",
      "ok", "", run_nonleaf_colength);
  add("enumeration/quadratic-stratification",
      "the five section ideals split by quadratic generator count as one each "
      "for 0..2 and two for 3",
      "0:1,1:1,2:1,3:2", "", run_quadratic_stratification);
  add("enumeration/four-quadratics-regularity",
      "every colength-10 staircase with at least four quadratic generators "
      "needs a generator of degree 5 or more",
      "ok", "", run_four_quadratics);
  add("enumeration/planar-ep-superset",
      "dropping the chain inequality strictly enlarges the planar colength-10 "
      "list",
      "strict-superset", "", run_planar_ep_superset);

  // --- cohomology
  add("cohomology/cone-genus-table",
      "cone genus over each section ideal: 6, 7, 8, 9, 9 nondegenerate and 11, "
      "12 planar",
      "1:6 2:7 3:8 4a:9 4b:9 planar1:11 planar2:12", "", run_cone_genus_table);
  for (CaseId id : all_cases) {
    std::string name = case_name(id);
    add("cohomology/sweep-" + name,
        "full rewrite search for case " + name +
            ": per-level max excess count, fitted-genus and section-count "
            "identities, and the g+i bound",
        [&]{
          static const std::map<std::string, std::string> profiles = {
              {"1", "0,0,0,0,1,1,1"},
              {"2", "0,0,0,1,1,2,3,3"},
              {"3", "0,0,0,1,1,2,3,3,3"},
              {"4a", "0,0,0,1,2,2,3,4,5,6"},
              {"4b", "0,0,0,1,2,2,3,4,5,6"},
              {"planar1", "0,0,0,1,2,2,3,4,5,6,7,7"},
              {"planar2", "0,0,1,2,3,4,5,5,5,6,7,7,8"},
          };
          return "i-by-steps=" + profiles.at(name) +
                 ";identities=ok;g+i-bound=ok;monotone=ok";
        }(), "",
        [id](const VerifyConfig& c) { return run_case_sweep(id, c); });
  }
  add("cohomology/max-i-case1-genus0",
      "search maximum of the excess-rewrite count for case 1 at genus 0 under "
      "the regularity-7 cap",
      "1", "", [](const VerifyConfig& c) { return run_max_i(CaseId::c1, 0, 7, c); });
  add("cohomology/max-i-case2-genus1",
      "search maximum of the excess-rewrite count for case 2 at genus 1 under "
      "the regularity-7 cap",
      "3", "", [](const VerifyConfig& c) { return run_max_i(CaseId::c2, 1, 7, c); });
  add("cohomology/witness-reachable-case1",
      "the recorded genus-0 endpoint over case 1 is search-reachable with one "
      "excess rewriting",
      "reachable,i=1", "",
      [](const VerifyConfig& c) {
        return run_witness_reachable(CaseId::c1, 0, expected_witness_case1_g0(), 1, c);
      });
  add("cohomology/witness-reachable-case2",
      "the recorded genus-1 endpoint over case 2 is search-reachable with three "
      "excess rewritings",
      "reachable,i=3", "",
      [](const VerifyConfig& c) {
        return run_witness_reachable(CaseId::c2, 1, expected_witness_case2_g1(), 3, c);
      });
  add("cohomology/max-i-cap-monotone",
      "raising the regularity cap never lowers the search maximum (case 2, "
      "genus 1, caps 6..8)",
      "ok", "", run_cap_monotone);
  for (CaseId id : all_cases) {
    std::string name = case_name(id);
    std::string claim_id = "cohomology/trace-identities-" + name;
    add(claim_id,
        "1000 random rewriting traces over case " + name +
            ": every step drops the fitted genus by one and the excess count "
            "matches the twist-5 cohomology oracle",
        "ok:1000", "",
        [id, claim_id](const VerifyConfig& c) {
          return run_trace_identities(id, c, claim_id);
        });
  }
  add("cohomology/rewrite-degree-threshold",
      "the excess count matching the cohomology oracle counts rewritings at "
      "degree 6 or greater",
      "ge6", "gt6",
      [](const VerifyConfig& c) {
        return run_threshold_probe(c, "cohomology/rewrite-degree-threshold");
      });

  // --- surface geometry
  add("surface/scroll-genus9-classes",
      "integer solutions of the smooth-scroll genus equation at genus 9",
      "3,4", "", [](const VerifyConfig&) {
        return render_ints(solve_scroll_quadratic(9));
      });
  add("surface/scroll-genus8-classes",
      "integer solutions of the smooth-scroll genus equation at genus 8",
      "none", "", [](const VerifyConfig&) {
        return render_ints(solve_scroll_quadratic(8));
      });
  add("surface/no-genus8-degree10-class",
      "no degree-10 class of adjunction genus 8 on either cubic-scroll surface",
      "none", "", run_no_genus8);
  add("surface/chi-e-plus-f-f1", "Euler characteristic of e+f on the blown-up plane",
      "3", "4", [](const VerifyConfig&) { return run_chi(1, 1, 1); });
  add("surface/chi-3e7f-f1", "Euler characteristic of 3e+7f on the blown-up plane",
      "26", "23", [](const VerifyConfig&) { return run_chi(1, 3, 7); });
  add("surface/chi-4e6f-f1", "Euler characteristic of 4e+6f on the blown-up plane",
      "25", "40", [](const VerifyConfig&) { return run_chi(1, 4, 6); });
  add("surface/chi-4e10f-f3", "Euler characteristic of 4e+10f on the cone scroll",
      "25", "33", [](const VerifyConfig&) { return run_chi(3, 4, 10); });
  add("surface/chi-5e10f-f3", "Euler characteristic of 5e+10f on the cone scroll",
      "21", "57/2", [](const VerifyConfig&) { return run_chi(3, 5, 10); });
  add("surface/chi-integrality",
      "Riemann-Roch characteristic and adjunction parity are integral across "
      "the class window",
      "ok", "", run_chi_integrality);
  add("surface/vertex-transform-genus",
      "proper transforms of degree-10 classes through the cone vertex: no "
      "genus-8 transform; genus-9 transforms sit at coefficient 3 or 4",
      "genus8:none;genus9-at:3,4", "transform genus 7 at coefficient 3",
      run_vertex_transform);
  add("surface/splitting-codim-4321",
      "codimension of the splitting stratum (4,3,2,1)", "4", "",
      [](const VerifyConfig&) {
        return std::to_string(splitting_codim(SplittingType{{4, 3, 2, 1}}));
      });
  add("surface/splitting-codim-balanced",
      "codimension of the balanced splitting stratum (3,3,2,2)", "0", "",
      [](const VerifyConfig&) {
        return std::to_string(splitting_codim(SplittingType{{3, 3, 2, 2}}));
      });
  add("surface/splitting-sub4-strata",
      "special splitting strata of codimension below 4 in the (10,4) "
      "enumeration",
      "(4,2,2,2):3,(3,3,3,1):3", "none", run_splitting_enumeration);
  add("surface/twist-vanishing-quintic",
      "the quintic twist of a degree-10 curve of genus at most 9 "
      "out-characterizes its dualizing sheaf: extremes 42 against 8",
      "true;42,8", "", [](const VerifyConfig&) {
        auto [lo, hi] = twist_vanishing_extremes(10, 9, 5);
        return std::string(twist_vanishing_check(10, 9, 5) ? "true" : "false") + ";" +
               std::to_string(lo) + "," + std::to_string(hi);
      });
  add("surface/ci-genus-223",
      "degree and genus of a (2,2,3) complete-intersection curve", "(12,13)", "",
      [](const VerifyConfig&) {
        CiCurve c = ci_genus({2, 2, 3}, 4);
        return "(" + std::to_string(c.degree) + "," + c.genus.str() + ")";
      });
  add("surface/ci-genus-quartic",
      "degree and genus of a (2,2) complete-intersection space curve", "(4,1)", "",
      [](const VerifyConfig&) {
        CiCurve c = ci_genus({2, 2}, 3);
        return "(" + std::to_string(c.degree) + "," + c.genus.str() + ")";
      });
  add("surface/linkage-residual-genus",
      "genus of the degree-2 residual of a degree-10 genus-8 curve in a "
      "(2,2,3) complete intersection",
      "0", "16", [](const VerifyConfig&) {
        return linkage_genus(8, 10, 2, {2, 2, 3}).str();
      });
  add("surface/chi-bounds-5-5-1",
      "section lower bounds and dimension caps for a (5,5) union meeting in "
      "length 1",
      "chi>=51,45,39;dim<=50,44,38", "",
      [](const VerifyConfig&) { return run_chi_bounds(5, 5, 1); });
  add("surface/chi-bounds-2-8-7",
      "section lower bounds and dimension caps for a (2,8) union meeting in "
      "length 7",
      "chi>=45,24,33;dim<=44,23,32", "",
      [](const VerifyConfig&) { return run_chi_bounds(2, 8, 7); });
  add("surface/castelnuovo-lookup",
      "tabulated maximal genera: degree 10 in four-space and degree 4 in "
      "three-space",
      "9,1", "", [](const VerifyConfig&) {
        return render_ints({castelnuovo_halphen_max(10, 4), castelnuovo_halphen_max(4, 3)});
      });

  // --- groebner lab
  add("groebner/quartic-gin",
      "the generic initial ideal of the rational normal quartic is the full "
      "square of the first three variables, stable over five trials",
      rational_quartic_gin(5).str() + ";stable", "",
      [](const VerifyConfig& c) { return run_quartic_gin(c, "groebner/quartic-gin"); });
  add("groebner/twisted-cubic-initial",
      "initial ideal of the twisted-cubic minors: Buchberger and rank "
      "computations agree",
      "(x1^2, x1*x2, x2^2)", "", run_twisted_cubic);
  add("groebner/leadterm-50-pairs",
      "50 random admissible quintic pairs: the union ideal has exactly the six "
      "expected leading terms and is generated within degree 5",
      "ok:50", "",
      [](const VerifyConfig& c) { return run_leadterm_pairs(c, "groebner/leadterm-50-pairs"); });
  add("groebner/fact1-quartic",
      "restriction-saturation compatibility for the rational normal quartic",
      "ok", "",
      [](const VerifyConfig& c) { return run_fact1_quartic(c, "groebner/fact1-quartic"); });
  add("groebner/fact1-random-curves",
      "restriction-saturation compatibility for five random degree-10 rational "
      "curves",
      "ok:5", "",
      [](const VerifyConfig& c) { return run_fact1_random(c, "groebner/fact1-random-curves"); });
  add("groebner/macaulay-dimension-agreement",
      "graded dimensions of polynomial ideals and their initial ideals agree "
      "through the cap",
      "ok", "",
      [](const VerifyConfig& c) {
        return run_macaulay_agreement(c, "groebner/macaulay-dimension-agreement");
      });
  add("groebner/generic-curve-experiment",
      "20 random degree-10 parameterizations: the estimated gin is 6-regular "
      "with vanishing twist-5 first cohomology",
      "ok:20", "",
      [](const VerifyConfig& c) { return run_generic_curves(c, "groebner/generic-curve-experiment"); });
  add("groebner/union-gin-generation",
      "estimated gins of sampled quintic unions are generated within degree 6",
      "ok:5", "",
      [](const VerifyConfig& c) { return run_union_gin(c, "groebner/union-gin-generation"); });

  // --- tree calculus bookkeeping
  add("trees/planar-initial-rule",
      "the planar initial rule produces the two-variable point ideal",
      "(x0, x1)", "(x0, x1, x2)", [](const VerifyConfig&) {
        GenTree t = GenTree::empty(3).apply_lambda(0, Ruleset::planar_p3);
        return t.ideal().str();
      });

  std::sort(specs.begin(), specs.end(),
            [](const ClaimSpec& a, const ClaimSpec& b) { return a.id < b.id; });
  return specs;
}

}  // namespace

const char* claim_status_name(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::match: return "match";
    case ClaimStatus::mismatch: return "mismatch";
    case ClaimStatus::documented_discrepancy: return "documented-discrepancy";
  }
  throw std::logic_error("unknown status");
}

Report verify_paper(const VerifyConfig& config) {
  std::vector<ClaimSpec> specs = build_registry();
  if (!config.id_prefix.empty())
    std::erase_if(specs, [&](const ClaimSpec& s) {
      return s.id.rfind(config.id_prefix, 0) != 0;
    });
  Report report;
  report.config = config;
  report.claims.resize(specs.size());
  const int n = static_cast<int>(specs.size());
#pragma omp parallel for schedule(dynamic) if (config.mode == ExecMode::parallel)
  for (int k = 0; k < n; ++k) {
    const ClaimSpec& spec = specs[static_cast<size_t>(k)];
    ClaimRecord record;
    record.id = spec.id;
    record.anchor = spec.anchor;
    record.expected = spec.expected;
    record.source_value = spec.source;
    auto t0 = std::chrono::steady_clock::now();
    try {
      record.computed = spec.run(config);
    } catch (const std::exception& e) {
      record.computed = std::string("error: ") + e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    record.runtime_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    if (record.computed != record.expected)
      record.status = ClaimStatus::mismatch;
    else if (!record.source_value.empty() && record.source_value != record.expected)
      record.status = ClaimStatus::documented_discrepancy;
    else
      record.status = ClaimStatus::match;
    report.claims[static_cast<size_t>(k)] = std::move(record);
  }
  for (const ClaimRecord& record : report.claims) {
    switch (record.status) {
      case ClaimStatus::match: ++report.matches; break;
      case ClaimStatus::mismatch: ++report.mismatches; break;
      case ClaimStatus::documented_discrepancy: ++report.discrepancies; break;
    }
  }
  return report;
}

std::string report_text(const Report& report) {
  std::ostringstream out;
  out << "verification report  (field=" << report.config.field
      << " seed=" << report.config.seed << " cap=" << report.config.cap << ")\n";
  out << std::string(78, '-') << "\n";
  for (const ClaimRecord& c : report.claims) {
    out << "[" << claim_status_name(c.status) << "] " << c.id;
    if (report.config.timings) out << " (" << c.runtime_ms << " ms)";
    out << "\n    checked:  " << c.anchor << "\n";
    out << "    computed: " << c.computed << "\n";
    if (c.status != ClaimStatus::match) out << "    expected: " << c.expected << "\n";
    if (!c.source_value.empty())
      out << "    source:   " << c.source_value << "\n";
  }
  out << std::string(78, '-') << "\n";
  out << report.matches << " match, " << report.mismatches << " mismatch, "
      << report.discrepancies << " documented-discrepancy\n";
  return out.str();
}

std::string report_json(const Report& report) {
  nlohmann::json j;
  j["config"] = {{"seed", report.config.seed},
                 {"field", report.config.field},
                 {"cap", report.config.cap},
                 {"reg_cap", report.config.reg_cap}};
  j["summary"] = {{"match", report.matches},
                  {"mismatch", report.mismatches},
                  {"documented_discrepancy", report.discrepancies}};
  j["claims"] = nlohmann::json::array();
  for (const ClaimRecord& c : report.claims) {
    nlohmann::json e = {{"id", c.id},
                        {"anchor", c.anchor},
                        {"computed", c.computed},
                        {"expected", c.expected},
                        {"status", claim_status_name(c.status)}};
    if (!c.source_value.empty()) e["source_value"] = c.source_value;
    if (report.config.timings) e["runtime_ms"] = c.runtime_ms;
    j["claims"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

Report parse_report(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  Report report;
  report.config.seed = j["config"]["seed"].get<std::uint64_t>();
  report.config.field = j["config"]["field"].get<std::uint32_t>();
  report.config.cap = j["config"]["cap"].get<int>();
  if (j["config"].contains("reg_cap"))
    report.config.reg_cap = j["config"]["reg_cap"].get<int>();
  report.matches = j["summary"]["match"].get<int>();
  report.mismatches = j["summary"]["mismatch"].get<int>();
  report.discrepancies = j["summary"]["documented_discrepancy"].get<int>();
  for (const auto& e : j["claims"]) {
    ClaimRecord c;
    c.id = e["id"].get<std::string>();
    c.anchor = e["anchor"].get<std::string>();
    c.computed = e["computed"].get<std::string>();
    c.expected = e["expected"].get<std::string>();
    if (e.contains("source_value")) c.source_value = e["source_value"].get<std::string>();
    if (e.contains("runtime_ms")) c.runtime_ms = e["runtime_ms"].get<long long>();
    std::string status = e["status"].get<std::string>();
    if (status == "match") c.status = ClaimStatus::match;
    else if (status == "mismatch") c.status = ClaimStatus::mismatch;
    else c.status = ClaimStatus::documented_discrepancy;
    report.claims.push_back(std::move(c));
  }
  return report;
}

int report_exit_code(const Report& report) { return report.mismatches == 0 ? 0 : 1; }

void write_dot_bundle(const std::string& dir, const VerifyConfig& config) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  auto write = [&](const std::string& name, const std::string& body) {
    std::ofstream out(dir + "/" + name);
    if (!out) throw std::runtime_error("cannot write " + dir + "/" + name);
    out << body;
  };
  write("rational-quartic-gin.dot",
        GenTree::from_ideal(rational_quartic_gin(5)).to_dot("quartic_gin"));
  write("case1-genus0-endpoint.dot",
        GenTree::from_ideal(expected_witness_case1_g0()).to_dot("case1_endpoint"));
  write("case2-genus1-endpoint.dot",
        GenTree::from_ideal(expected_witness_case2_g1()).to_dot("case2_endpoint"));
  CaseVerdict v1 = max_i_search(make_case_context(CaseId::c1, 0, 7), config.mode);
  if (v1.witness)
    write("case1-genus0-max-witness.dot",
          GenTree::from_ideal(v1.witness->end).to_dot("case1_witness"));
  CaseVerdict v2 = max_i_search(make_case_context(CaseId::c2, 1, 7), config.mode);
  if (v2.witness)
    write("case2-genus1-max-witness.dot",
          GenTree::from_ideal(v2.witness->end).to_dot("case2_witness"));
}

}  // namespace gincalc
