#ifndef GINCALC_GEN_TREE_HPP
#define GINCALC_GEN_TREE_HPP

#include <optional>
#include <string>
#include <vector>

#include "gincalc/ideal.hpp"

namespace gincalc {

/// Which rewriting tables apply. The nondegenerate ruleset drives trees of
/// section ideals in four variables toward curve ideals in five; the planar
/// ruleset drives trees in three variables toward curve ideals in four.
enum class Ruleset { nondegenerate_p4, planar_p3 };

struct RulesetInfo {
  int cut_arity;      // variables carrying section-ideal generators (3 or 2)
  int section_arity;  // ambient of the hyperplane section (4 or 3)
  int curve_arity;    // ambient of the curve (5 or 4)
  int lambda_top;     // largest child label a lambda rule may glue
  int c_top;          // largest child label a C rule may glue
};
RulesetInfo ruleset_info(Ruleset rs);

const char* ruleset_name(Ruleset rs);

/// Trie of the minimal generating set of a monomial ideal: each generator is
/// the nondecreasing sequence of its variable labels, leaves correspond
/// exactly to minimal generators, and children of any vertex carry distinct
/// labels in increasing order. Canonical by construction, so equal ideals
/// give structurally identical trees.
class GenTree {
public:
  struct Vertex {
    int label = -1;   // -1 only at the root
    int parent = -1;  // -1 only at the root
    std::vector<int> children;
  };

  /// Single-vertex tree of the zero ideal.
  static GenTree empty(int arity);

  /// Trie of the minimal generators; rejects non-Borel-fixed input.
  static GenTree from_ideal(const MonomialIdeal& ideal);

  MonomialIdeal ideal() const;

  int arity() const { return arity_; }
  /// Same structure over a different ambient ring.
  GenTree with_arity(int new_arity) const;

  int vertex_count() const { return static_cast<int>(verts_.size()); }
  const Vertex& vertex(int v) const { return verts_[static_cast<size_t>(v)]; }
  bool is_leaf(int v) const { return verts_[static_cast<size_t>(v)].children.empty(); }
  std::vector<int> leaves() const;
  int depth(int v) const;
  Monomial path_monomial(int v) const;
  /// Leaf whose path product equals m, if any.
  std::optional<int> find_leaf(const Monomial& m) const;

  /// Internal vertices, the root included once it has children.
  int nonleaf_count() const;
  /// Internal vertices of depth at least `min_depth`.
  int nonleaf_count_from_depth(int min_depth) const;

  /// Lambda rewriting at a leaf (the root of the empty tree accepts the
  /// initial rule). Returns nothing when the rule does not match the label
  /// or when the rewritten tree would violate Borel-fixity or minimality.
  std::optional<GenTree> try_apply_lambda(int leaf, Ruleset rs) const;
  GenTree apply_lambda(int leaf, Ruleset rs) const;

  /// C rewriting at a leaf: the leaf with maximal dividing variable x_k
  /// gains children x_k..x_top; a leaf already divisible by x_top gains the
  /// single chain child x_top. Refused when Borel-fixity or minimality
  /// would break.
  std::optional<GenTree> try_apply_c_rule(int leaf, Ruleset rs) const;
  GenTree apply_c_rule(int leaf, Ruleset rs) const;

  /// Removes every leaf of maximal degree, contracting their edges; the
  /// inverse of a full batch of same-degree rewritings.
  GenTree prune() const;

  /// Tree of the saturation with respect to one variable: contracts every
  /// edge ending in a vertex labeled `var` and re-minimalizes.
  GenTree contract_saturation(int var) const;

  /// Deterministic DOT rendering; identical trees produce identical bytes.
  std::string to_dot(const std::string& graph_name = "gentree") const;

  bool operator==(const GenTree& rhs) const {
    return arity_ == rhs.arity_ && ideal() == rhs.ideal();
  }

private:
  GenTree() = default;
  static GenTree build(int arity, const std::vector<Monomial>& minimal_gens);

  int arity_ = 0;
  std::vector<Vertex> verts_;  // index 0 is the root
};

enum class RuleFamily { lambda, c_rule };

const char* rule_family_name(RuleFamily f);

/// One recorded rewriting: which rule family, under which table, applied to
/// which generator, at which degree.
struct RewriteStep {
  RuleFamily family;
  Ruleset ruleset;
  Monomial target;
  int step_degree;
};

/// A start ideal, a sequence of rewritings, and the resulting ideal.
/// `replay` re-applies every step, checking Borel-fixity and saturation of
/// every intermediate ideal, and throws on any inconsistency.
struct RewriteTrace {
  MonomialIdeal start;
  std::vector<RewriteStep> steps;
  MonomialIdeal end;
};

MonomialIdeal replay(const RewriteTrace& trace);

}  // namespace gincalc

#endif
