#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dpp/grid.hpp"
#include "dpp/instance.hpp"
#include "dpp/solver.hpp"

namespace dpp {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kInstanceFormatVersion = 1;
inline constexpr int kSolutionFormatVersion = 1;

/// Canonical, versioned JSON text. Identical instances give identical bytes.
std::string serialize_instance(const Instance& inst);
Instance parse_instance(std::string_view text);

/// "sha256:" followed by the hex digest of serialize_instance(inst).
std::string instance_digest(const Instance& inst);

struct SolutionDocument {
  std::string instance_digest;
  SolveStatus status = SolveStatus::unsolvable;
  std::vector<Linkage> solutions;
  /// Crossing report of the first solution, when the instance has a layout.
  std::optional<CrossingReport> crossing;
  Verdict unique = Verdict::indeterminate;
  bool spanning = false;

  friend bool operator==(const SolutionDocument&, const SolutionDocument&) = default;
};

SolutionDocument make_solution_document(const Instance& inst, const SolveOutcome& outcome,
                                        SolveMode mode);
std::string serialize_solution(const SolutionDocument& doc);
SolutionDocument parse_solution(std::string_view text);
/// Throws ParseError when the document was not produced from `inst`.
void check_digest(const SolutionDocument& doc, const Instance& inst);

/// Plain edge list: "c" comment lines, a "p <tag> <n> <m>" header, and one
/// edge per line as "e u v" or "u v" with 1-based ids.
Graph parse_dimacs(std::string_view text);
std::string write_dimacs(const Graph& g);

/// Parses "1-5,2-6" (1-based, as in the edge list) into terminal pairs.
std::vector<TerminalPair> parse_pair_list(std::string_view text);

/// JSON instance or edge-list graph, detected from the first significant character.
Instance load_instance(const std::filesystem::path& file,
                       const std::vector<TerminalPair>& extra_pairs = {});

std::string read_text_file(const std::filesystem::path& file);
void write_text_file(const std::filesystem::path& file, std::string_view text);

}  // namespace dpp
