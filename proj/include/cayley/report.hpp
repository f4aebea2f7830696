#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cayley {

/// Named verification suites with seeded determinism and machine-readable
/// reports.
namespace report {

struct SuiteConfig {
  std::string suite = "all";
  int samples = 500;
  std::uint64_t seed = 42;
  double tol = 1e-9;
  int max_k = 3;
  bool deep = false;  ///< enables the minutes-scale extras (exact dim H_3)
  std::string format = "text";
};

struct CaseResult {
  std::string name;
  bool pass = false;
  double measured = 0.0;
  double expected = 0.0;
  double abs_error = 0.0;
  double rel_error = 0.0;
  std::string note;  ///< provenance of the value being tested, if any
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  SuiteConfig config;
  std::vector<CaseResult> cases;
  double elapsed_ms = 0.0;

  bool all_pass() const {
    for (const auto& c : cases)
      if (!c.pass) return false;
    return true;
  }
};

/// Runs a named suite: one of octonion, jordan, plane, embedding, atlas,
/// harmonic, bargmann, all. Throws std::invalid_argument for unknown names.
Report run_suite(const SuiteConfig& config);

/// Serializes a report; format is "text" (aligned table, failing cases
/// first) or "json". Throws on an empty case list.
std::string emit_report(const Report& r, const std::string& format);

}  // namespace report
}  // namespace cayley
