#include "gincalc/ideal.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace gincalc {

MonomialIdeal::MonomialIdeal(int arity, std::vector<Monomial> generators)
    : arity_(arity) {
  for (const Monomial& g : generators)
    if (g.arity() != arity)
      throw std::invalid_argument("generator arity differs from ideal arity");
  gens_ = minimalize(std::move(generators));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const Monomial& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

MonomialIdeal MonomialIdeal::extended(int new_arity) const {
  std::vector<Monomial> gens;
  gens.reserve(gens_.size());
  for (const Monomial& g : gens_) gens.push_back(g.extended(new_arity));
  return MonomialIdeal(new_arity, std::move(gens));
}

MonomialIdeal MonomialIdeal::restricted(int new_arity) const {
  std::vector<Monomial> gens;
  gens.reserve(gens_.size());
  for (const Monomial& g : gens_) gens.push_back(g.restricted(new_arity));
  return MonomialIdeal(new_arity, std::move(gens));
}

std::vector<int> MonomialIdeal::canonical_key() const {
  std::vector<int> key;
  key.reserve(2 + gens_.size() * static_cast<size_t>(arity_));
  key.push_back(arity_);
  key.push_back(static_cast<int>(gens_.size()));
  for (const Monomial& g : gens_)
    key.insert(key.end(), g.exponents().begin(), g.exponents().end());
  return key;
}

std::string MonomialIdeal::str() const {
  std::string out = "(";
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].str();
  }
  out += ")";
  return out;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), RevlexLess{});
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const Monomial& g : gens) {
    bool redundant = false;
    // Only earlier (revlex-smaller, hence degree-no-larger) survivors can divide g.
    for (const Monomial& kept : out)
      if (kept.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  // canonical listing order: by degree, then revlex-largest first, matching
  // the usual way Borel generating sets are written down
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return revlex_less(b, a);
  });
  return out;
}

bool is_borel_fixed(const MonomialIdeal& ideal) {
  for (const Monomial& g : ideal.generators())
    for (int j = 1; j < ideal.arity(); ++j) {
      if (g.exponent(j) == 0) continue;
      for (int i = 0; i < j; ++i)
        if (!ideal.contains(borel_move(g, i, j))) return false;
    }
  return true;
}

MonomialIdeal borel_closure(int arity, const std::vector<Monomial>& gens) {
  if (gens.empty()) throw std::invalid_argument("borel_closure needs generators");
  std::unordered_set<Monomial, MonomialHash> seen;
  std::vector<Monomial> stack;
  for (const Monomial& g : gens) {
    if (g.arity() != arity) throw std::invalid_argument("generator arity mismatch");
    if (seen.insert(g).second) stack.push_back(g);
  }
  // Exchanges preserve degree, so the closure of each generator is finite.
  while (!stack.empty()) {
    Monomial m = stack.back();
    stack.pop_back();
    for (int j = 1; j < arity; ++j) {
      if (m.exponent(j) == 0) continue;
      for (int i = 0; i < j; ++i) {
        Monomial moved = borel_move(m, i, j);
        if (seen.insert(moved).second) stack.push_back(moved);
      }
    }
  }
  return MonomialIdeal(arity, std::vector<Monomial>(seen.begin(), seen.end()));
}

bool is_saturated_borel(const MonomialIdeal& ideal) {
  if (!is_borel_fixed(ideal))
    throw std::invalid_argument("saturation criterion requires a Borel-fixed ideal");
  int last = ideal.arity() - 1;
  for (const Monomial& g : ideal.generators())
    if (g.exponent(last) > 0) return false;
  return true;
}

MonomialIdeal saturate_wrt(const MonomialIdeal& ideal, int var) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size());
  for (const Monomial& g : ideal.generators()) gens.push_back(g.without_var(var));
  return MonomialIdeal(ideal.arity(), std::move(gens));
}

std::size_t hash_value(const MonomialIdeal& ideal) {
  return IdealKeyHash{}(ideal.canonical_key());
}

std::size_t IdealKeyHash::operator()(const std::vector<int>& key) const {
  std::uint64_t h = 1469598103934665603ULL;
  for (int v : key) {
    h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(v));
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace gincalc
