#include <doctest.h>

#include <set>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gincalc/io.hpp"
#include "gincalc/report.hpp"

using namespace gincalc;

namespace {

Report tiny_report() {
  Report r;
  r.config.seed = 7;
  r.config.field = 101;
  r.config.cap = 8;
  ClaimRecord ok{"area/ok", "a fact", "42", "42", "", ClaimStatus::match, 3};
  ClaimRecord ledgered{"area/slip", "a recorded slip", "3", "3", "4",
                       ClaimStatus::documented_discrepancy, 1};
  ClaimRecord bad{"area/bad", "a failure", "1", "2", "", ClaimStatus::mismatch, 2};
  r.claims = {ok, ledgered, bad};
  r.matches = 1;
  r.discrepancies = 1;
  r.mismatches = 1;
  return r;
}

}  // namespace

TEST_CASE("status naming and exit codes") {
  Report r = tiny_report();
  CHECK(report_exit_code(r) == 1);
  r.mismatches = 0;
  CHECK(report_exit_code(r) == 0);
  CHECK(std::string(claim_status_name(ClaimStatus::documented_discrepancy)) ==
        "documented-discrepancy");
}

TEST_CASE("structured output round-trips") {
  Report r = tiny_report();
  Report back = parse_report(report_json(r));
  CHECK(back.config.seed == r.config.seed);
  CHECK(back.config.field == r.config.field);
  CHECK(back.claims.size() == r.claims.size());
  for (size_t k = 0; k < r.claims.size(); ++k) {
    CHECK(back.claims[k].id == r.claims[k].id);
    CHECK(back.claims[k].anchor == r.claims[k].anchor);
    CHECK(back.claims[k].computed == r.claims[k].computed);
    CHECK(back.claims[k].expected == r.claims[k].expected);
    CHECK(back.claims[k].source_value == r.claims[k].source_value);
    CHECK(back.claims[k].status == r.claims[k].status);
  }
  CHECK(back.matches == r.matches);
  CHECK(back.mismatches == r.mismatches);
  CHECK(back.discrepancies == r.discrepancies);
  // timings are excluded from serialization unless requested
  CHECK(back.claims[0].runtime_ms == 0);
  CHECK(report_json(r).find("runtime_ms") == std::string::npos);
}

TEST_CASE("text rendering shows expectations on non-matches") {
  Report r = tiny_report();
  std::string text = report_text(r);
  CHECK(text.find("[mismatch] area/bad") != std::string::npos);
  CHECK(text.find("[documented-discrepancy] area/slip") != std::string::npos);
  CHECK(text.find("source:   4") != std::string::npos);
  CHECK(text.find("1 match, 1 mismatch, 1 documented-discrepancy") != std::string::npos);
  CHECK(text == report_text(r));
}

TEST_CASE("an empty claim list is a valid report") {
  Report empty;
  empty.config.seed = 1;
  Report back = parse_report(report_json(empty));
  CHECK(back.claims.empty());
  CHECK(report_exit_code(back) == 0);
  CHECK(report_text(empty).find("0 match, 0 mismatch") != std::string::npos);
}

TEST_CASE("the documented discrepancies are exactly the ledgered set") {
  const std::set<std::string> ledgered = {
      "surface/chi-e-plus-f-f1",   "surface/chi-3e7f-f1",
      "surface/chi-4e6f-f1",       "surface/chi-4e10f-f3",
      "surface/chi-5e10f-f3",      "surface/vertex-transform-genus",
      "surface/splitting-sub4-strata",
      "surface/linkage-residual-genus",
      "trees/planar-initial-rule",
  };
  std::set<std::string> found;
  for (const char* prefix : {"surface/", "trees/"}) {
    VerifyConfig config;
    config.id_prefix = prefix;
    for (const ClaimRecord& c : verify_paper(config).claims)
      if (c.status == ClaimStatus::documented_discrepancy) found.insert(c.id);
  }
  CHECK(found == ledgered);
}

TEST_CASE("a fixed seed reproduces the report byte for byte") {
  VerifyConfig config;
  config.id_prefix = "surface/";  // the cheap claims are enough to pin the contract
  Report first = verify_paper(config);
  Report second = verify_paper(config);
  CHECK(report_json(first) == report_json(second));
  CHECK(report_text(first) == report_text(second));
  CHECK(first.mismatches == 0);
  CHECK(first.claims.size() > 10);
  // the ledgered chi records really are flagged
  int flagged = 0;
  for (const ClaimRecord& c : first.claims)
    if (c.status == ClaimStatus::documented_discrepancy) ++flagged;
  CHECK(flagged >= 6);
}

TEST_CASE("the witness bundle lands on disk") {
  VerifyConfig config;
  std::string dir = (std::filesystem::temp_directory_path() /
                     "gincalc-dot-bundle-test").string();
  write_dot_bundle(dir, config);
  for (const char* name :
       {"rational-quartic-gin.dot", "case1-genus0-endpoint.dot",
        "case2-genus1-endpoint.dot", "case1-genus0-max-witness.dot",
        "case2-genus1-max-witness.dot"}) {
    std::ifstream in(dir + "/" + name);
    REQUIRE(in.good());
    std::string first;
    std::getline(in, first);
    CHECK(first.rfind("digraph", 0) == 0);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("ideal text format round-trips") {
  MonomialIdeal original(4, {Monomial({2, 1, 0, 0}), Monomial({0, 0, 3, 0})});
  std::string text = write_ideal(original);
  std::istringstream in(text);
  CHECK(read_ideal(in) == original);
  // both generator syntaxes and comments
  std::istringstream mixed(
      "# a comment\nvars: 4\nx0^2*x1\n0 0 3 0  # tuple form\n");
  CHECK(read_ideal(mixed) == original);
  std::istringstream missing_header("x0^2\n");
  CHECK_THROWS(read_ideal(missing_header));
  std::istringstream bad_tuple("vars: 4\n1 2 3\n");
  CHECK_THROWS(read_ideal(bad_tuple));
  CHECK(parse_monomial("x1^3*x2", 4) == Monomial({0, 3, 1, 0}));
  CHECK_THROWS(parse_monomial("y2", 4));
}
