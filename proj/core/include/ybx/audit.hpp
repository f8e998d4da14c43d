#pragma once

#include <map>
#include <string>
#include <vector>

namespace ybx {

// One audited claim: what the source asserts, what exact evaluation observes.
// "holds" means the claim verifies; "fails-as-stated" means the evaluation
// contradicts it.  The audit as a whole passes when observed == expected for
// every row — reporting a documented failure is a pass of the audit.
struct ClaimResult {
  std::string name;
  std::string category;  // linear | set | colored | transc | ujla
  std::string expected;
  std::string observed;
  bool match = false;
  std::string detail;
  double ms = 0.0;
};

struct AuditResult {
  std::vector<ClaimResult> rows;
  bool all_match = false;
};

struct RawClaim {
  bool pass = false;  // the claim itself, with no expected-status overlay
  std::string detail;
};

std::vector<std::string> audit_claim_names();

// Parsed from the checked-in manifest baked in at build time.
std::map<std::string, std::string> default_expected_manifest();

RawClaim run_audit_claim(const std::string& name);  // DomainError on unknown name

AuditResult audit_all(const std::map<std::string, std::string>& expected,
                      const std::string& category_filter = "");

}  // namespace ybx
