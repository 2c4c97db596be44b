#include "dpp/calibration.hpp"

namespace dpp {

std::vector<std::string> InstanceChecks::violations() const {
  std::vector<std::string> out;
  if (unique != Verdict::yes) out.push_back("uniqueness: " + std::string(to_string(unique)));
  if (spanning != Verdict::yes) out.push_back("spanning: " + std::string(to_string(spanning)));
  if (!total_ok) out.push_back("total crossings " + std::to_string(total_crossings));
  if (!profile_ok) {
    std::string text = "crossing profile (";
    for (std::size_t i = 0; i < crossing_profile.size(); ++i) {
      text += (i ? "," : "") + std::to_string(crossing_profile[i]);
    }
    out.push_back(text + ")");
  }
  return out;
}

SolverHandle default_solver(SolveOptions options) {
  return [options](const Instance& inst, SolveMode mode) { return solve(inst, mode, options); };
}

InstanceChecks check_instance(const Instance& inst, const SolverHandle& solver) {
  InstanceChecks checks;
  if (!inst.meta || !inst.layout) return checks;
  const int k = inst.meta->k;
  const auto outcome = solver(inst, SolveMode::count_up_to(2));
  if (outcome.status == SolveStatus::aborted) return checks;
  checks.unique = outcome.solutions.size() == 1 ? Verdict::yes : Verdict::no;
  if (outcome.solutions.empty()) {
    checks.spanning = Verdict::no;
    return checks;
  }
  // With more than one solution the profile of the first is still reported.
  const Linkage& first = outcome.solutions.front();
  checks.spanning = spans_all_vertices(inst.graph, first) ? Verdict::yes : Verdict::no;
  const auto report = crossing_report(first, *inst.layout);
  checks.crossing_profile = report.per_path;
  checks.total_crossings = report.total;
  checks.total_ok = report.undefined_paths.empty() && report.total == (1 << k) - 1;
  checks.profile_ok = report.undefined_paths.empty() &&
                      report.per_path.size() == static_cast<std::size_t>(k + 1) &&
                      report.per_path[0] == 0;
  for (int i = 1; checks.profile_ok && i <= k; ++i) {
    checks.profile_ok = report.per_path[i] == (1 << (i - 1));
  }
  return checks;
}

Calibration calibrate_arc_rule(int k_max, const SolverHandle& solver,
                               const std::vector<ArcRule>& candidates,
                               const std::vector<S0Placement>& placements) {
  if (candidates.empty() || placements.empty()) {
    throw CalibrationError("no candidate arc rules to calibrate", {});
  }
  if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");
  std::vector<CandidateReport> report;
  for (S0Placement placement : placements) {
    std::vector<const ArcRule*> passing;
    for (const ArcRule& rule : candidates) {
      bool ok = true;
      for (int k = 1; k <= k_max; ++k) {
        CandidateReport entry{rule.identifier, placement, k, {}};
        try {
          entry.violations = check_instance(build_instance(k, rule, placement), solver).violations();
        } catch (const std::invalid_argument& e) {
          entry.violations.push_back(std::string("construction: ") + e.what());
        }
        ok = ok && entry.violations.empty();
        report.push_back(std::move(entry));
      }
      if (ok) passing.push_back(&rule);
    }
    if (passing.size() == 1) return Calibration{*passing.front(), placement, std::move(report)};
    if (passing.size() > 1) {
      throw CalibrationError("several arc rules pass for s0 placement " +
                                 std::string(to_string(placement)),
                             std::move(report));
    }
  }
  throw CalibrationError("no arc rule and s0 placement passes every check", std::move(report));
}

}  // namespace dpp
