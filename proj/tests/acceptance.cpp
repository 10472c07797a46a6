// One pass/fail line per acceptance criterion. Exit status is nonzero when any
// criterion fails, including when a time limit is exceeded.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "flagkey/verify.hpp"

using flagkey::verify::VerifyReport;
namespace fv = flagkey::verify;

namespace {

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;  // 0 means no limit
  std::function<VerifyReport()> run;
};

}  // namespace

int main() {
  auto suite = [](const char* name) { return [name] { return fv::run_suite(name); }; };
  std::vector<Criterion> criteria = {
      {1, "h basis unitriangular and invertible", 10, suite("hbasis")},
      {2, "stable limit equals h_lambda", 0, suite("stable")},
      {3, "Kohnert character and phi round trip", 30, suite("kohnert")},
      {4, "key and atom expansions", 0, suite("expand")},
      {5, "Kostka bridges", 0, suite("kostka")},
      {6, "truncated Cauchy identity", 0, suite("cauchy")},
      {7, "flagged RSK bijection and the 13-letter word", 60,
       [] {
         VerifyReport r = fv::run_suite("frsk");
         r.merge(fv::thirteen_letter_example(false));
         r.merge(fv::thirteen_letter_example(true));
         return r;
       }},
      {8, "snake expansion and matrix inversion", 0, suite("snakes")},
      {9, "cancellation-free shapes and rim hooks", 0, suite("cancelfree")},
      {10, "sign-reversing involution", 0, suite("involution")},
      {11, "Schubert expansion and Pieri products", 0, suite("schubert")},
      {12, "value regressions", 0, [] { return fv::regressions(); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    VerifyReport r = c.run();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool slow = c.limit_seconds > 0 && secs >= c.limit_seconds;
    bool ok = r.passed() && !slow;
    failed += !ok;
    std::printf("criterion %2d %s  %-46s %6ld checks %4zu failures %7.2fs%s\n", c.number, ok ? "PASS" : "FAIL",
                c.title.c_str(), r.instances, r.failures.size(), secs, slow ? " (over time limit)" : "");
    for (const auto& f : r.failures)
      std::printf("    %s\n      expected: %s\n      got:      %s\n", f.inputs.c_str(), f.expected.c_str(),
                  f.got.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
