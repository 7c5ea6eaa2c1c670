// Acceptance suite: runs the named verifications with their documented
// bounds and prints one pass/fail line per criterion. With arguments, runs
// only the named checks. Exit code 0 iff everything passed.

#include <iostream>
#include <string>
#include <vector>

#include "comtet/verify.hpp"

int main(int argc, char** argv) {
  using namespace comtet;
  std::vector<std::string> names;
  if (argc > 1) {
    for (int i = 1; i < argc; ++i) names.emplace_back(argv[i]);
  } else {
    names = check_names();
  }
  bool all_ok = true;
  int index = 1;
  for (const auto& name : names) {
    VerificationReport rep;
    try {
      rep = run_check(name);
    } catch (const std::exception& e) {
      std::cout << "[FAIL] " << name << ": " << e.what() << "\n";
      all_ok = false;
      ++index;
      continue;
    }
    std::cout << format_report(rep, /*verbose=*/false) << "\n";
    for (const auto& line : rep.details)
      if (line.find("DEVIATES") != std::string::npos ||
          line.find("unexpected") != std::string::npos ||
          line.find("missing") != std::string::npos)
        std::cout << "  " << line << "\n";
    all_ok = all_ok && rep.passed();
    ++index;
  }
  return all_ok ? 0 : 1;
}
