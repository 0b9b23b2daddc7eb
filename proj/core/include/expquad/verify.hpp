#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace expquad {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

// Self-contained invariant suite: quadrature interpolation identities,
// phi recursion and bounds, matrix-function action against a quadrature
// oracle, symmetrizability and spectrum of the discretizations, constant
// preservation, classical/corrected equivalence on trace-free data, and
// the elliptic accuracy checks. Needs no reference data.
VerificationReport run_verification();

void print_report(const VerificationReport& report, std::ostream& out);

}  // namespace expquad
