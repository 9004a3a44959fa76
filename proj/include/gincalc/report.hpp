#ifndef GINCALC_REPORT_HPP
#define GINCALC_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gincalc/exec.hpp"
#include "gincalc/fp.hpp"

namespace gincalc {

enum class ClaimStatus { match, mismatch, documented_discrepancy };
const char* claim_status_name(ClaimStatus s);

/// One verified statement: a stable id, a description of what is checked,
/// the value this run computed, the value the suite pins, and -- for claims
/// whose original source states something else -- that source value.
/// A claim whose source value differs from the pinned expectation is a
/// documented discrepancy, never a failure; a computed value that differs
/// from the pinned expectation is always a mismatch.
struct ClaimRecord {
  std::string id;
  std::string anchor;
  std::string computed;
  std::string expected;
  std::string source_value;  // empty unless ledgered
  ClaimStatus status = ClaimStatus::mismatch;
  long long runtime_ms = 0;
};

struct VerifyConfig {
  std::uint64_t seed = 20251;
  std::uint32_t field = kDefaultPrime;
  int cap = 8;      // truncation cap for basis computations
  int reg_cap = 0;  // 0 = per-case defaults; an override reruns the rewrite
                    // searches under the stricter cap, and any deviation from
                    // the registered expectations is flagged in the report
  bool timings = false;  // timings are excluded by default so reports are
                         // byte-identical for a fixed configuration
  ExecMode mode = ExecMode::parallel;
  std::string id_prefix;  // restrict to claims whose id starts with this
};

struct Report {
  VerifyConfig config;
  std::vector<ClaimRecord> claims;
  int matches = 0;
  int mismatches = 0;
  int discrepancies = 0;
};

/// Runs the whole claim registry. Claims execute concurrently; records are
/// merged in registry order, which is sorted by id.
Report verify_paper(const VerifyConfig& config);

/// Plain-text table.
std::string report_text(const Report& report);
/// Structured document; parse_report inverts it exactly.
std::string report_json(const Report& report);
Report parse_report(const std::string& json_text);

/// 0 when no claim mismatches (documented discrepancies do not fail).
int report_exit_code(const Report& report);

/// Writes the witness trees (quartic gin, the two case witnesses, and the
/// maximizing search traces) as DOT files under dir.
void write_dot_bundle(const std::string& dir, const VerifyConfig& config);

}  // namespace gincalc

#endif
