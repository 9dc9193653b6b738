// Times the serial reference path against the OpenMP path of each scan and
// checks that both produce identical reports.
#include <chrono>
#include <cstring>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "twg/scan.hpp"

using namespace twg;

namespace {

bool same_outcome(const ScanReport& a, const ScanReport& b) {
  if (a.violations.size() != b.violations.size()) return false;
  for (std::size_t i = 0; i < a.violations.size(); ++i) {
    const auto &va = a.violations[i], &vb = b.violations[i];
    if (va.code != vb.code || va.x != vb.x || va.y != vb.y || va.detail != vb.detail) return false;
  }
  return a.pairs == b.pairs;
}

}  // namespace

int main(int argc, char** argv) {
  int max_len = argc > 1 ? std::atoi(argv[1]) : 5;
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::cout << "scan benchmark: serial reference vs OpenMP (" << threads << " threads), max length "
            << max_len << "\n";

  using Runner = ScanReport (*)(const SurfacePresentation&, int, ExecMode);
  const std::pair<const char*, Runner> scans[] = {
      {"conjecture", scan_conjecture},
      {"counting", scan_counting},
      {"center", scan_center},
      {"decomposition", scan_decomposition},
  };
  int rc = 0;
  for (const char* surface : {"pants", "torus1"}) {
    const auto& s = SurfacePresentation::named(surface);
    for (const auto& [name, fn] : scans) {
      ScanReport serial = fn(s, max_len, ExecMode::serial);
      ScanReport parallel = fn(s, max_len, ExecMode::parallel);
      bool match = same_outcome(serial, parallel);
      double speedup = parallel.wall_ms > 0 ? serial.wall_ms / parallel.wall_ms : 0;
      std::printf("%-8s %-14s serial %9.1f ms   omp %9.1f ms   speedup %5.2fx   %s\n", surface,
                  name, serial.wall_ms, parallel.wall_ms, speedup,
                  match ? "identical reports" : "REPORTS DIFFER");
      if (!match) rc = 1;
    }
  }
  return rc;
}
