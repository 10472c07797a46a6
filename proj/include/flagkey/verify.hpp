#pragma once

#include <optional>
#include <string>
#include <vector>

namespace flagkey::verify {

struct Failure {
  std::string inputs;
  std::string expected;
  std::string got;
};

struct VerifyReport {
  std::string suite;
  long instances = 0;  // individual checks performed
  std::vector<Failure> failures;
  double seconds = 0;

  bool passed() const { return failures.empty(); }
  /// Appends another report's checks and failures.
  void merge(const VerifyReport& other);
};

/// Unset fields fall back to each suite's own default.
struct Bounds {
  std::optional<int> n;
  std::optional<int> deg;
};

std::vector<std::string> suite_names();

/// Runs a named suite. Throws std::invalid_argument for an unknown name.
VerifyReport run_suite(const std::string& name, const Bounds& bounds = {});

/// The thirteen-letter worked example of flagged RSK, either with the
/// corrected eighth letter or exactly as originally printed.
VerifyReport thirteen_letter_example(bool as_printed);

/// Fixed numerical regressions: the h_11 and ĥ_(0,1)^2 identities, the two
/// large tabloids, the opposite-sign tabloid pair, the key-poset comparisons
/// and the three-move Kohnert example.
VerifyReport regressions();

}  // namespace flagkey::verify
