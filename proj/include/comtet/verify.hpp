#pragma once

#include <string>
#include <vector>

namespace comtet {

struct CheckOptions {
  int nmax = 0;   // 0 = the check's documented default
  int order = 0;  // 0 = the check's documented default
  int threads = 1;
};

struct VerificationReport {
  enum class Verdict { pass, fail, finding };

  std::string name;
  std::string params;
  Verdict verdict = Verdict::fail;
  // Findings report observations instead of asserting; `conforms` records
  // whether they match the documented expectation.
  bool conforms = true;
  std::string witness;  // first counterexample; nonempty whenever fail
  std::vector<std::string> details;
  double seconds = 0.0;

  bool passed() const {
    return verdict == Verdict::pass ||
           (verdict == Verdict::finding && conforms);
  }
};

// Check names in acceptance order.
const std::vector<std::string>& check_names();

// Runs one named verification; throws invalid_input for unknown names.
VerificationReport run_check(const std::string& name,
                             const CheckOptions& opts = {});

std::string format_report(const VerificationReport& rep, bool verbose = true);

}  // namespace comtet
