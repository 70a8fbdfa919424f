#ifndef BELLINV_REPORT_HPP
#define BELLINV_REPORT_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace bellinv {

inline constexpr const char* kToolVersion = "bellinv 1.0.0";

/// One verified identity instance. `status` is "pass", "fail" or
/// "skipped-pole"; `witness` carries counterexample values on failure and
/// `note` carries documented deviations or skip summaries.
struct VerifyCase {
  std::string id;
  std::string params;
  std::string n_range;
  std::string status;
  std::string witness;
  std::string note;

  static VerifyCase pass(std::string id, std::string params, std::string n_range,
                         std::string note = "") {
    return {std::move(id), std::move(params), std::move(n_range), "pass", "", std::move(note)};
  }
  static VerifyCase fail(std::string id, std::string params, std::string n_range,
                         std::string witness) {
    return {std::move(id), std::move(params), std::move(n_range), "fail", std::move(witness), ""};
  }
  static VerifyCase skipped(std::string id, std::string params, std::string n_range,
                            std::string note) {
    return {std::move(id), std::move(params), std::move(n_range), "skipped-pole", "",
            std::move(note)};
  }
};

struct VerificationReport {
  std::string suite;
  int order = 0;
  std::uint64_t seed = 0;
  std::string tool_version = kToolVersion;
  std::vector<VerifyCase> cases;

  void add(VerifyCase c) { cases.push_back(std::move(c)); }
  void add(std::vector<VerifyCase> cs) {
    for (auto& c : cs) cases.push_back(std::move(c));
  }

  size_t failures() const {
    return static_cast<size_t>(
        std::count_if(cases.begin(), cases.end(), [](const VerifyCase& c) { return c.status == "fail"; }));
  }

  /// Deterministic report layout: cases ordered by id, then params, then range.
  void sort_cases() {
    std::stable_sort(cases.begin(), cases.end(), [](const VerifyCase& a, const VerifyCase& b) {
      if (a.id != b.id) return a.id < b.id;
      if (a.params != b.params) return a.params < b.params;
      return a.n_range < b.n_range;
    });
  }
};

}  // namespace bellinv

#endif  // BELLINV_REPORT_HPP
