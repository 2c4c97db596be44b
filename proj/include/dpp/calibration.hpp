#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dpp/construction.hpp"
#include "dpp/solver.hpp"

namespace dpp {

/// Outcome of the uniqueness / spanning / crossing battery on one instance.
struct InstanceChecks {
  Verdict unique = Verdict::indeterminate;
  Verdict spanning = Verdict::indeterminate;
  std::vector<int> crossing_profile;
  int total_crossings = 0;
  bool total_ok = false;    // total == 2^k - 1
  bool profile_ok = false;  // k_0 = 0, k_i = 2^(i-1)

  bool passed() const {
    return unique == Verdict::yes && spanning == Verdict::yes && total_ok && profile_ok;
  }
  /// Human-readable list of failed or indeterminate checks; empty when passed.
  std::vector<std::string> violations() const;
};

using SolverHandle = std::function<SolveOutcome(const Instance&, SolveMode)>;

SolverHandle default_solver(SolveOptions options = {});

/// Runs the battery against an instance with generator metadata.
InstanceChecks check_instance(const Instance& inst, const SolverHandle& solver);

struct CandidateReport {
  std::string rule;
  S0Placement placement;
  int k = 0;
  std::vector<std::string> violations;
};

struct Calibration {
  ArcRule rule;
  S0Placement placement;
  std::vector<CandidateReport> report;
};

class CalibrationError : public std::runtime_error {
 public:
  CalibrationError(const std::string& what, std::vector<CandidateReport> report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const std::vector<CandidateReport>& report() const { return report_; }

 private:
  std::vector<CandidateReport> report_;
};

/// Picks the arc rule under which every instance with k <= k_max passes the
/// battery. Placements are tried in order (default first); within the first
/// placement that admits a passing rule, the rule must be unique. Throws
/// CalibrationError with the per-candidate violations otherwise.
Calibration calibrate_arc_rule(int k_max, const SolverHandle& solver,
                               const std::vector<ArcRule>& candidates = candidate_arc_rules(),
                               const std::vector<S0Placement>& placements = all_placements());

}  // namespace dpp
