#include "gincalc/gen_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace gincalc {

RulesetInfo ruleset_info(Ruleset rs) {
  switch (rs) {
    case Ruleset::nondegenerate_p4:
      return RulesetInfo{3, 4, 5, 2, 3};
    case Ruleset::planar_p3:
      return RulesetInfo{2, 3, 4, 1, 2};
  }
  throw std::logic_error("unknown ruleset");
}

const char* ruleset_name(Ruleset rs) {
  return rs == Ruleset::nondegenerate_p4 ? "nondegenerate-p4" : "planar-p3";
}

const char* rule_family_name(RuleFamily f) {
  return f == RuleFamily::lambda ? "lambda" : "c";
}

GenTree GenTree::empty(int arity) {
  GenTree t;
  t.arity_ = arity;
  t.verts_.push_back(Vertex{});
  return t;
}

GenTree GenTree::build(int arity, const std::vector<Monomial>& minimal_gens) {
  GenTree t = empty(arity);
  for (const Monomial& g : minimal_gens) {
    int cur = 0;
    for (int var = 0; var < arity; ++var)
      for (int rep = 0; rep < g.exponent(var); ++rep) {
        // walk the trie along the nondecreasing label sequence of g,
        // keeping children sorted by label
        const std::vector<int>& ch = t.verts_[static_cast<size_t>(cur)].children;
        int next = -1;
        for (int c : ch)
          if (t.verts_[static_cast<size_t>(c)].label == var) {
            next = c;
            break;
          }
        if (next == -1) {
          next = t.vertex_count();
          t.verts_.push_back(Vertex{var, cur, {}});
          auto& children = t.verts_[static_cast<size_t>(cur)].children;
          auto pos = std::find_if(children.begin(), children.end(), [&](int c) {
            return t.verts_[static_cast<size_t>(c)].label > var;
          });
          children.insert(pos, next);
        }
        cur = next;
      }
  }
  return t;
}

GenTree GenTree::from_ideal(const MonomialIdeal& ideal) {
  if (!is_borel_fixed(ideal))
    throw std::invalid_argument("tree representation requires a Borel-fixed ideal");
  return build(ideal.arity(), ideal.generators());
}

MonomialIdeal GenTree::ideal() const {
  std::vector<Monomial> gens;
  for (int v : leaves())
    if (v != 0) gens.push_back(path_monomial(v));
  return MonomialIdeal(arity_, std::move(gens));
}

GenTree GenTree::with_arity(int new_arity) const {
  for (size_t v = 1; v < verts_.size(); ++v)
    if (verts_[v].label >= new_arity)
      throw std::invalid_argument("with_arity would drop a used label");
  GenTree t = *this;
  t.arity_ = new_arity;
  return t;
}

std::vector<int> GenTree::leaves() const {
  std::vector<int> out;
  for (int v = 0; v < vertex_count(); ++v)
    if (is_leaf(v)) out.push_back(v);
  return out;
}

int GenTree::depth(int v) const {
  int d = 0;
  while (verts_[static_cast<size_t>(v)].parent != -1) {
    v = verts_[static_cast<size_t>(v)].parent;
    ++d;
  }
  return d;
}

Monomial GenTree::path_monomial(int v) const {
  std::vector<int> e(static_cast<size_t>(arity_), 0);
  while (verts_[static_cast<size_t>(v)].parent != -1) {
    ++e[static_cast<size_t>(verts_[static_cast<size_t>(v)].label)];
    v = verts_[static_cast<size_t>(v)].parent;
  }
  return Monomial(std::move(e));
}

std::optional<int> GenTree::find_leaf(const Monomial& m) const {
  for (int v : leaves())
    if (v != 0 && path_monomial(v) == m) return v;
  return std::nullopt;
}

int GenTree::nonleaf_count() const {
  int n = 0;
  for (int v = 0; v < vertex_count(); ++v)
    if (!is_leaf(v)) ++n;
  return n;
}

int GenTree::nonleaf_count_from_depth(int min_depth) const {
  int n = 0;
  for (int v = 0; v < vertex_count(); ++v)
    if (!is_leaf(v) && depth(v) >= min_depth) ++n;
  return n;
}

namespace {

/// Rebuilds the tree for (gens - target) + replacements and checks the tree
/// invariants: replacements must stay minimal generators and the ideal must
/// stay Borel-fixed.
std::optional<GenTree> rewrite_checked(const GenTree& tree, const Monomial& target,
                                       const std::vector<Monomial>& replacements) {
  const MonomialIdeal before = tree.ideal();
  std::vector<Monomial> gens;
  for (const Monomial& g : before.generators())
    if (g != target) gens.push_back(g);
  for (const Monomial& r : replacements) gens.push_back(r);
  size_t count = gens.size();
  std::vector<Monomial> minimal = minimalize(std::move(gens));
  if (minimal.size() != count) return std::nullopt;
  MonomialIdeal ideal(tree.arity(), minimal);
  if (!is_borel_fixed(ideal)) return std::nullopt;
  return GenTree::from_ideal(ideal).with_arity(tree.arity());
}

}  // namespace

std::optional<GenTree> GenTree::try_apply_lambda(int leaf, Ruleset rs) const {
  const RulesetInfo info = ruleset_info(rs);
  if (leaf < 0 || leaf >= vertex_count() || !is_leaf(leaf)) return std::nullopt;
  if (leaf == 0) {
    // Initial rule on the empty tree.
    if (vertex_count() != 1) return std::nullopt;
    std::vector<Monomial> gens;
    for (int var = 0; var <= info.lambda_top; ++var)
      gens.push_back(Monomial::variable(arity_, var));
    GenTree t = build(arity_, gens);
    return t;
  }
  int label = verts_[static_cast<size_t>(leaf)].label;
  if (label > info.lambda_top) return std::nullopt;
  Monomial target = path_monomial(leaf);
  std::vector<Monomial> repl;
  for (int var = label; var <= info.lambda_top; ++var)
    repl.push_back(target.times_var(var));
  return rewrite_checked(*this, target, repl);
}

GenTree GenTree::apply_lambda(int leaf, Ruleset rs) const {
  auto t = try_apply_lambda(leaf, rs);
  if (!t) throw std::invalid_argument("lambda rule refused at this leaf");
  return *t;
}

std::optional<GenTree> GenTree::try_apply_c_rule(int leaf, Ruleset rs) const {
  const RulesetInfo info = ruleset_info(rs);
  if (arity_ != info.curve_arity) return std::nullopt;
  if (leaf <= 0 || leaf >= vertex_count() || !is_leaf(leaf)) return std::nullopt;
  Monomial target = path_monomial(leaf);
  int k = target.max_var();
  if (k > info.c_top) return std::nullopt;  // saturation would break
  std::vector<Monomial> repl;
  if (k == info.c_top)
    repl.push_back(target.times_var(info.c_top));  // chain extension
  else
    for (int var = k; var <= info.c_top; ++var) repl.push_back(target.times_var(var));
  return rewrite_checked(*this, target, repl);
}

GenTree GenTree::apply_c_rule(int leaf, Ruleset rs) const {
  auto t = try_apply_c_rule(leaf, rs);
  if (!t) throw std::invalid_argument("C rule refused at this leaf");
  return *t;
}

GenTree GenTree::prune() const {
  if (vertex_count() == 1) throw std::invalid_argument("cannot prune the empty tree");
  std::vector<Monomial> gens;
  int max_deg = 0;
  for (int v : leaves())
    if (v != 0) {
      gens.push_back(path_monomial(v));
      max_deg = std::max(max_deg, gens.back().degree());
    }
  std::vector<Monomial> kept;
  for (const Monomial& g : gens)
    if (g.degree() < max_deg) kept.push_back(g);
  for (const Monomial& g : gens)
    if (g.degree() == max_deg) {
      // the dominating vertex inherits the leaf's slot
      std::vector<int> e = g.exponents();
      --e[static_cast<size_t>(g.max_var())];
      kept.push_back(Monomial(std::move(e)));
    }
  return build(arity_, minimalize(std::move(kept)));
}

GenTree GenTree::contract_saturation(int var) const {
  std::vector<Monomial> gens;
  for (int v : leaves())
    if (v != 0) gens.push_back(path_monomial(v).without_var(var));
  return build(arity_, minimalize(std::move(gens)));
}

std::string GenTree::to_dot(const std::string& graph_name) const {
  std::string out = "digraph " + graph_name + " {\n";
  out += "  node [shape=circle];\n";
  for (int v = 0; v < vertex_count(); ++v) {
    out += "  v" + std::to_string(v) + " [label=\"";
    if (v == 0)
      out += "*";
    else
      out += "x" + std::to_string(verts_[static_cast<size_t>(v)].label);
    out += "\"];\n";
  }
  for (int v = 1; v < vertex_count(); ++v)
    out += "  v" + std::to_string(verts_[static_cast<size_t>(v)].parent) + " -> v" +
           std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

MonomialIdeal replay(const RewriteTrace& trace) {
  GenTree tree = trace.start.is_zero() ? GenTree::empty(trace.start.arity())
                                       : GenTree::from_ideal(trace.start);
  for (const RewriteStep& step : trace.steps) {
    if (step.target.degree() != step.step_degree)
      throw std::invalid_argument("step degree does not match its target");
    int leaf;
    if (step.family == RuleFamily::lambda && tree.vertex_count() == 1)
      leaf = 0;
    else {
      auto found = tree.find_leaf(step.target);
      if (!found) throw std::invalid_argument("trace target is not a leaf");
      leaf = *found;
    }
    tree = step.family == RuleFamily::lambda ? tree.apply_lambda(leaf, step.ruleset)
                                             : tree.apply_c_rule(leaf, step.ruleset);
    MonomialIdeal ideal = tree.ideal();
    if (!is_saturated_borel(ideal))
      throw std::logic_error("intermediate ideal lost saturation");
  }
  MonomialIdeal end = tree.ideal();
  if (end != trace.end) throw std::invalid_argument("trace does not replay to its end ideal");
  return end;
}

}  // namespace gincalc
