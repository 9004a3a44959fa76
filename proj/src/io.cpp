#include "gincalc/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gincalc {

namespace {

std::string strip(const std::string& line) {
  std::string s = line.substr(0, line.find('#'));
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

Monomial parse_monomial(const std::string& text, int arity) {
  std::vector<int> e(static_cast<size_t>(arity), 0);
  if (text == "1") return Monomial(std::move(e));
  std::stringstream ss(text);
  std::string factor;
  while (std::getline(ss, factor, '*')) {
    if (factor.empty() || factor[0] != 'x')
      throw std::invalid_argument("bad monomial factor: " + factor);
    size_t caret = factor.find('^');
    int var = std::stoi(factor.substr(1, caret == std::string::npos
                                             ? std::string::npos
                                             : caret - 1));
    int exp = caret == std::string::npos ? 1 : std::stoi(factor.substr(caret + 1));
    if (var < 0 || var >= arity) throw std::invalid_argument("variable out of range");
    if (exp < 1) throw std::invalid_argument("exponent must be positive");
    e[static_cast<size_t>(var)] += exp;
  }
  return Monomial(std::move(e));
}

MonomialIdeal read_ideal(std::istream& in) {
  std::string line;
  int arity = -1;
  std::vector<Monomial> gens;
  while (std::getline(in, line)) {
    std::string s = strip(line);
    if (s.empty()) continue;
    if (s.rfind("vars:", 0) == 0) {
      arity = std::stoi(s.substr(5));
      if (arity < 1) throw std::invalid_argument("vars must be positive");
      continue;
    }
    if (arity < 0) throw std::invalid_argument("missing 'vars:' header");
    if (s[0] == 'x' || s == "1") {
      gens.push_back(parse_monomial(s, arity));
    } else {
      std::stringstream ss(s);
      std::vector<int> e;
      long long v;
      while (ss >> v) e.push_back(static_cast<int>(v));
      if (static_cast<int>(e.size()) != arity)
        throw std::invalid_argument("exponent tuple length differs from vars");
      gens.push_back(Monomial(std::move(e)));
    }
  }
  if (arity < 0) throw std::invalid_argument("empty ideal file");
  return MonomialIdeal(arity, std::move(gens));
}

MonomialIdeal read_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_ideal(in);
}

std::string write_ideal(const MonomialIdeal& ideal) {
  std::string out = "vars: " + std::to_string(ideal.arity()) + "\n";
  for (const Monomial& g : ideal.generators()) out += g.str() + "\n";
  return out;
}

std::vector<std::vector<long long>> read_param_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::vector<long long>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::string s = strip(line);
    if (s.empty()) continue;
    std::stringstream ss(s);
    std::vector<long long> row;
    long long v;
    while (ss >> v) row.push_back(v);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("empty parameterization file");
  for (const auto& r : rows)
    if (r.size() != rows.front().size())
      throw std::invalid_argument("coefficient rows of unequal length");
  return rows;
}

}  // namespace gincalc
