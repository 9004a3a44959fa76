#ifndef GINCALC_IDEAL_HPP
#define GINCALC_IDEAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "gincalc/monomial.hpp"

namespace gincalc {

/// A monomial ideal held by its unique minimal generating set, kept sorted
/// in graded revlex order. The zero ideal is represented by no generators.
class MonomialIdeal {
public:
  MonomialIdeal() = default;  // arity-0 placeholder, only for containers
  explicit MonomialIdeal(int arity) : arity_(arity) {}
  MonomialIdeal(int arity, std::vector<Monomial> generators);

  int arity() const { return arity_; }
  const std::vector<Monomial>& generators() const& { return gens_; }
  // on temporaries the generators move out, so chained access cannot dangle
  std::vector<Monomial> generators() && { return std::move(gens_); }
  bool is_zero() const { return gens_.empty(); }

  /// Membership test: divisible by some minimal generator.
  bool contains(const Monomial& m) const;

  MonomialIdeal extended(int new_arity) const;
  /// Drop trailing variables; every generator must avoid them.
  MonomialIdeal restricted(int new_arity) const;

  /// Deterministic encoding used for hashing and set membership in searches.
  std::vector<int> canonical_key() const;

  std::string str() const;

  bool operator==(const MonomialIdeal& rhs) const {
    return arity_ == rhs.arity_ && gens_ == rhs.gens_;
  }
  bool operator!=(const MonomialIdeal& rhs) const { return !(*this == rhs); }

private:
  int arity_ = 0;
  std::vector<Monomial> gens_;
};

/// Divisibility-minimal subset generating the same ideal, deduplicated and
/// sorted in graded revlex order. Idempotent.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

/// Criterion for Borel-fixity: every elementary exchange of every minimal
/// generator stays inside the ideal.
bool is_borel_fixed(const MonomialIdeal& ideal);

/// Smallest Borel-fixed ideal containing the given generators (fixpoint of
/// elementary exchanges, then minimalized).
MonomialIdeal borel_closure(int arity, const std::vector<Monomial>& gens);

/// Saturation test for Borel-fixed ideals: no minimal generator may involve
/// the last variable. Throws if the input is not Borel-fixed, where the
/// criterion is not valid.
bool is_saturated_borel(const MonomialIdeal& ideal);

/// Saturation with respect to one variable: zero out that exponent in every
/// generator and minimalize.
MonomialIdeal saturate_wrt(const MonomialIdeal& ideal, int var);

std::size_t hash_value(const MonomialIdeal& ideal);

struct IdealKeyHash {
  std::size_t operator()(const std::vector<int>& key) const;
};

}  // namespace gincalc

#endif
