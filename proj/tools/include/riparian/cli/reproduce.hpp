#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace riparian::cli {

/// One compared value: what the reference source prints against what the
/// library computes.
struct CellCheck {
  std::string cell;
  std::string expected;
  std::string actual;
  std::string difference;
  bool ok = true;
  std::string note;
};

struct TargetReport {
  std::string target;
  std::vector<CellCheck> cells;
  /// File name -> contents, written when an output directory is given.
  std::vector<std::pair<std::string, std::string>> artifacts;
  double seconds = 0;

  bool passed() const;
  std::size_t mismatches() const;
};

const std::vector<std::string>& reproduce_targets();

/// Runs one target by name ("all" is expanded by run_reproduce).
TargetReport reproduce_target(const std::string& target);

/// Regenerates the requested targets, prints every cell comparison and a
/// summary, and writes artifacts to `out_dir` if given. Returns 0 iff every
/// cell matched, 1 otherwise.
int run_reproduce(const std::string& what, const std::optional<std::string>& out_dir, std::ostream& out);

}  // namespace riparian::cli
