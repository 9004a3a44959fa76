#include "gincalc/groebner.hpp"

namespace gincalc {

namespace {

void fill_monomials(int arity, int degree, std::vector<int>& e, size_t pos,
                    std::vector<Monomial>& out) {
  if (pos + 1 == e.size()) {
    e[pos] = degree;
    out.push_back(Monomial(e));
    return;
  }
  for (int v = degree; v >= 0; --v) {
    e[pos] = v;
    fill_monomials(arity, degree - v, e, pos + 1, out);
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int arity, int degree) {
  std::vector<Monomial> out;
  std::vector<int> e(static_cast<size_t>(arity), 0);
  fill_monomials(arity, degree, e, 0, out);
  std::sort(out.begin(), out.end(), RevlexGreater{});
  return out;
}

}  // namespace gincalc
