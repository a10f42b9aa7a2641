#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gacalc::verify {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;  // first failure, or a short summary when passing
};

// Names of the lemma/theorem checks, in report order.
const std::vector<std::string>& suite_names();

// Runs one named check. Throws gacalc::Error for an unknown name.
CheckResult run_check(const std::string& name, std::uint64_t seed = 20250811);

std::vector<CheckResult> run_all(std::uint64_t seed = 20250811);

}  // namespace gacalc::verify
