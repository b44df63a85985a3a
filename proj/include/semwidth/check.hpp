#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace semwidth {

// Result of one property suite over the fixed worked examples plus a seeded
// random pool. Failures carry the serialized inputs for replay.
struct CheckReport {
  std::string suite;
  int checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

CheckReport check_hierarchy(std::uint64_t seed, int count);
CheckReport check_core_minimality(std::uint64_t seed, int count);
CheckReport check_duality(std::uint64_t seed, int count);
CheckReport check_scv_repair(std::uint64_t seed, int count);
CheckReport check_redh(std::uint64_t seed, int count);
CheckReport check_ucq(std::uint64_t seed, int count);
CheckReport check_solver_agreement(std::uint64_t seed, int count);
CheckReport check_pushforward(std::uint64_t seed, int count);

std::string format_report(const CheckReport& r);

}  // namespace semwidth
