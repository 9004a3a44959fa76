#include "gincalc/enumeration.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace gincalc {

namespace {

/// A two-variable Borel staircase is a strictly decreasing vector of column
/// heights; a three-variable one is a sequence of such slices obeying the
/// shadow conditions imposed by the exchange moves.
using Slice = std::vector<int>;

void strictly_decreasing_rec(int remaining, int max_first, Slice& cur,
                             std::vector<Slice>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int v = std::min(remaining, max_first); v >= 1; --v) {
    // the tail must fit below v: 1 + 2 + ... + (v-1) bounds it
    if (remaining - v > v * (v - 1) / 2) continue;
    cur.push_back(v);
    strictly_decreasing_rec(remaining - v, v - 1, cur, out);
    cur.pop_back();
  }
}

std::vector<Slice> strictly_decreasing_partitions(int n, int max_first) {
  std::vector<Slice> out;
  Slice cur;
  if (n == 0) {
    out.push_back(cur);
    return out;
  }
  strictly_decreasing_rec(n, max_first, cur, out);
  return out;
}

/// Shadow conditions for slice Q sitting on top of slice P:
/// P[b] >= Q[b] + 1 and P[b+1] >= Q[b] for every column b of Q.
bool slice_fits(const Slice& below, const Slice& above) {
  for (size_t b = 0; b < above.size(); ++b) {
    if (b >= below.size() || below[b] < above[b] + 1) return false;
    if (b + 1 >= below.size() || below[b + 1] < above[b]) return false;
  }
  return true;
}

struct Staircase3 {
  std::vector<Slice> slices;  // indexed by x0-exponent

  bool standard(int a, int b, int c) const {
    if (a >= static_cast<int>(slices.size())) return false;
    const Slice& s = slices[static_cast<size_t>(a)];
    if (b >= static_cast<int>(s.size())) return false;
    return c < s[static_cast<size_t>(b)];
  }
};

void staircase3_rec(int remaining, const Slice& below, Staircase3& cur,
                    std::vector<Staircase3>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  int cap = 0;
  for (int h : below) cap += std::max(0, h - 1);  // |T_a| < |T_{a-1}| is forced
  for (int size = std::min(remaining, cap); size >= 1; --size)
    for (Slice& s : strictly_decreasing_partitions(size, below.empty() ? size : below[0] - 1)) {
      if (!slice_fits(below, s)) continue;
      cur.slices.push_back(s);
      staircase3_rec(remaining - size, s, cur, out);
      cur.slices.pop_back();
    }
}

std::vector<Monomial> generators_of_staircase3(const Staircase3& sc, int cut_arity) {
  std::vector<Monomial> gens;
  int k = static_cast<int>(sc.slices.size());
  int bmax = 0, cmax = 0;
  for (const Slice& s : sc.slices) {
    bmax = std::max(bmax, static_cast<int>(s.size()));
    for (int h : s) cmax = std::max(cmax, h);
  }
  for (int a = 0; a <= k; ++a)
    for (int b = 0; b <= bmax; ++b)
      for (int c = 0; c <= cmax; ++c) {
        if (sc.standard(a, b, c)) continue;
        if (a > 0 && !sc.standard(a - 1, b, c)) continue;
        if (b > 0 && !sc.standard(a, b - 1, c)) continue;
        if (c > 0 && !sc.standard(a, b, c - 1)) continue;
        if (a + b + c == 0) continue;
        std::vector<int> e(static_cast<size_t>(cut_arity), 0);
        e[0] = a;
        if (cut_arity > 1) e[1] = b;
        if (cut_arity > 2) e[2] = c;
        gens.push_back(Monomial(std::move(e)));
      }
  return gens;
}

bool passes_common_filters(const MonomialIdeal& ideal, const EnumerationFilter& f) {
  int reg = 0;
  bool linear = false;
  for (const Monomial& g : ideal.generators()) {
    reg = std::max(reg, g.degree());
    if (g.degree() == 1) linear = true;
  }
  if (f.reg_cap > 0 && reg > f.reg_cap) return false;
  if (f.nondegenerate && linear) return false;
  return true;
}

bool passes_ellia_peskine(const MonomialIdeal& ideal) {
  std::vector<int> lambda = lambda_invariants(ideal);
  for (size_t i = 0; i + 1 < lambda.size(); ++i)
    if (!(lambda[i] - 1 >= lambda[i + 1] && lambda[i + 1] >= lambda[i] - 2)) return false;
  return true;
}

void sort_canonically(std::vector<MonomialIdeal>& ideals) {
  std::sort(ideals.begin(), ideals.end(),
            [](const MonomialIdeal& a, const MonomialIdeal& b) {
              return a.canonical_key() < b.canonical_key();
            });
}

}  // namespace

std::vector<int> lambda_invariants(const MonomialIdeal& ideal) {
  std::vector<std::pair<int, int>> pairs;  // (x0-exponent, x1-exponent)
  int k = -1;
  for (const Monomial& g : ideal.generators()) {
    for (int v = 2; v < g.arity(); ++v)
      if (g.exponent(v) != 0)
        throw std::invalid_argument("not a two-variable staircase ideal");
    if (g.exponent(1) == 0)
      k = g.exponent(0);
    else
      pairs.emplace_back(g.exponent(0), g.exponent(1));
  }
  if (k < 0) throw std::invalid_argument("staircase lacks a pure power of x0");
  std::vector<int> lambda(static_cast<size_t>(k), 0);
  for (auto [a, b] : pairs) {
    if (a >= k) throw std::invalid_argument("generators do not form a staircase");
    lambda[static_cast<size_t>(a)] = b;
  }
  for (size_t j = 0; j < lambda.size(); ++j)
    if (lambda[j] == 0) throw std::invalid_argument("missing staircase generator");
  return lambda;
}

std::vector<MonomialIdeal> enumerate_staircases(int cut_arity,
                                                const EnumerationFilter& filter,
                                                ExecMode mode) {
  if (filter.colength < 1) throw std::invalid_argument("colength must be positive");
  if (filter.reg_cap < 0) throw std::invalid_argument("negative regularity cap");
  if (cut_arity != 2 && cut_arity != 3)
    throw std::invalid_argument("staircase enumeration supports 2- or 3-variable cuts");

  std::vector<MonomialIdeal> out;
  const int section_arity = cut_arity + 1;

  if (cut_arity == 2) {
    // Staircases are exactly the strictly decreasing height vectors.
    for (const Slice& s : strictly_decreasing_partitions(filter.colength, filter.colength)) {
      std::vector<Monomial> gens;
      int k = static_cast<int>(s.size());
      gens.push_back(Monomial(std::vector<int>{k, 0}));
      for (int j = 0; j < k; ++j)
        gens.push_back(Monomial(std::vector<int>{j, s[static_cast<size_t>(j)]}));
      MonomialIdeal ideal(2, std::move(gens));
      if (!passes_common_filters(ideal, filter)) continue;
      if (filter.ellia_peskine && !passes_ellia_peskine(ideal)) continue;
      out.push_back(ideal.extended(section_arity));
    }
    sort_canonically(out);
    return out;
  }

  // Partition the search by the bottom slice, then extend each bottom slice
  // independently; partitions are disjoint so the merge is a concatenation.
  std::vector<Staircase3> bottoms;
  for (int size = filter.colength; size >= 1; --size)
    for (Slice& s : strictly_decreasing_partitions(size, size)) {
      Staircase3 sc;
      sc.slices.push_back(s);
      bottoms.push_back(std::move(sc));
    }

  std::vector<std::vector<MonomialIdeal>> buckets(bottoms.size());
  const int n = static_cast<int>(bottoms.size());
#pragma omp parallel for schedule(dynamic) if (mode == ExecMode::parallel)
  for (int i = 0; i < n; ++i) {
    const Slice bottom = bottoms[static_cast<size_t>(i)].slices[0];
    int used = 0;
    for (int h : bottom) used += h;
    std::vector<Staircase3> all;
    staircase3_rec(filter.colength - used, bottom, bottoms[static_cast<size_t>(i)], all);
    for (const Staircase3& sc : all) {
      MonomialIdeal ideal(cut_arity, generators_of_staircase3(sc, cut_arity));
      if (!passes_common_filters(ideal, filter)) continue;
      buckets[static_cast<size_t>(i)].push_back(ideal.extended(section_arity));
    }
  }
  for (auto& b : buckets) out.insert(out.end(), b.begin(), b.end());
  sort_canonically(out);
  return out;
}

std::vector<MonomialIdeal> enumerate_planar_gins(const EnumerationFilter& filter,
                                                 ExecMode mode) {
  return enumerate_staircases(2, filter, mode);
}

std::vector<MonomialIdeal> lambda_reachable_set(int degree, Ruleset rs, ExecMode mode) {
  if (degree < 1) throw std::invalid_argument("degree must be positive");
  const RulesetInfo info = ruleset_info(rs);
  using Key = std::vector<int>;
  std::unordered_map<Key, MonomialIdeal, IdealKeyHash> frontier;
  {
    GenTree seed = GenTree::empty(info.section_arity);
    GenTree first = seed.apply_lambda(0, rs);
    MonomialIdeal ideal = first.ideal();
    frontier.emplace(ideal.canonical_key(), ideal);
  }
  for (int level = 1; level < degree; ++level) {
    std::vector<const MonomialIdeal*> work;
    work.reserve(frontier.size());
    for (auto& [key, ideal] : frontier) work.push_back(&ideal);
    std::unordered_map<Key, MonomialIdeal, IdealKeyHash> next;
    const int n = static_cast<int>(work.size());
#pragma omp parallel if (mode == ExecMode::parallel && n >= 24)
    {
      std::unordered_map<Key, MonomialIdeal, IdealKeyHash> local;
#pragma omp for schedule(dynamic) nowait
      for (int i = 0; i < n; ++i) {
        GenTree tree = GenTree::from_ideal(*work[static_cast<size_t>(i)]);
        for (int leaf : tree.leaves()) {
          if (leaf == 0) continue;
          auto rewritten = tree.try_apply_lambda(leaf, rs);
          if (!rewritten) continue;
          MonomialIdeal ideal = rewritten->ideal();
          local.emplace(ideal.canonical_key(), std::move(ideal));
        }
      }
#pragma omp critical
      next.merge(local);
    }
    frontier = std::move(next);
  }
  std::vector<MonomialIdeal> out;
  out.reserve(frontier.size());
  for (auto& [key, ideal] : frontier) out.push_back(std::move(ideal));
  std::sort(out.begin(), out.end(), [](const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.canonical_key() < b.canonical_key();
  });
  return out;
}

int quadratic_generator_count(const MonomialIdeal& ideal) {
  int n = 0;
  for (const Monomial& g : ideal.generators())
    if (g.degree() == 2) ++n;
  return n;
}

}  // namespace gincalc
