#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twg/bracket.hpp"
#include "twg/crossings.hpp"
#include "twg/holonomy.hpp"
#include "twg/surface.hpp"

namespace twg {

// Scans run their pair loops either serially (reference implementation)
// or OpenMP-parallel; both produce identical reports.
enum class ExecMode { serial, parallel };

struct Violation {
  std::string code;    // machine-readable reason
  std::string x, y;    // witness pair, replayable through the CLI
  std::string detail;
};

struct ScanReport {
  std::string kind;
  std::string surface;
  int max_len = 0;
  long long pairs = 0;
  std::vector<Violation> violations;
  double wall_ms = 0;
  std::string fingerprint;
  std::string note;

  bool ok() const { return violations.empty(); }
  std::string to_json() const;
  std::string to_text() const;
  // <kind>_<surface>_L<n>.json under dir; returns the path
  std::string write(const std::string& dir) const;
};

ScanReport scan_conjecture(const SurfacePresentation& s, int max_len,
                           ExecMode mode = ExecMode::parallel);
ScanReport scan_counting(const SurfacePresentation& s, int max_len,
                         ExecMode mode = ExecMode::parallel);
ScanReport scan_center(const SurfacePresentation& s, int max_len,
                       ExecMode mode = ExecMode::parallel);
ScanReport scan_decomposition(const SurfacePresentation& s, int max_len,
                              ExecMode mode = ExecMode::parallel);
// Numeric suite: cosh residuals (base and twisted metrics where supported),
// twist-angle monotonicity, and the no-cancellation consequence for simple
// first arguments. Requires a geometric engine for the surface.
ScanReport verify_numerics(const SurfacePresentation& s, int max_len,
                           const std::optional<Holonomy>& holonomy,
                           ExecMode mode = ExecMode::parallel);

// Cross-engine agreement: combinatorial vs geometric brackets, directed and
// undirected, over all class pairs to max_len (parabolic classes skipped).
ScanReport scan_engine_agreement(const SurfacePresentation& s, int max_len,
                                 const std::optional<Holonomy>& holonomy,
                                 ExecMode mode = ExecMode::parallel);

int default_scan_length(const SurfacePresentation& s);

}  // namespace twg
