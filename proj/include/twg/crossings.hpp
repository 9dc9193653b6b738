#pragma once

#include <map>
#include <utility>
#include <vector>

#include "twg/holonomy.hpp"
#include "twg/lincomb.hpp"
#include "twg/linking.hpp"

namespace twg {

// One (x, y)-intersection point of the closed geodesics, tracked by its
// double-coset witness: Axis(x) crosses witness * Axis(y).
struct Crossing {
  Word witness;   // canonical double-coset representative
  double s = 0;   // position along Axis(root x), in [0, length)
  double phi = 0; // undirected angle in (0, pi), cosh-identity convention
  int sign = 0;   // intersection sign, calibrated to the bracket examples
};

struct CrossingSet {
  std::vector<Crossing> records;  // ordered records feeding the brackets
  long long physical = 0;         // crossings of the two geodesic images
  int radius = 0;                 // word-length radius certified by stability
};

// Exact minimal-length (then rank-lex) representative of <rx> g <ry>.
Word coset_canonical(const Word& g, const Word& rx, const Word& ry);

// Numeric ground truth for intersections and brackets under one metric.
// Caches the Cayley-ball enumeration per first curve; not thread-safe,
// use one engine per worker.
class CrossingEngine {
 public:
  explicit CrossingEngine(const Holonomy& rho);
  ~CrossingEngine();
  CrossingEngine(CrossingEngine&&) noexcept;
  CrossingEngine(const CrossingEngine&) = delete;
  CrossingEngine& operator=(const CrossingEngine&) = delete;

  const Holonomy& holonomy() const { return *rho_; }

  // Physical crossings of the geodesics of root(x) and root(y), certified
  // by radius stability; extra_radius widens the certified ball.
  CrossingSet crossings(const Word& x, const Word& y, int extra_radius = 0) const;

  // Geometry of one tracked crossing under this metric (fixed witness).
  Crossing at_witness(const Word& x, const Word& y, const Word& witness) const;

  DirectedComb goldman(const DirectedClass& x, const DirectedClass& y) const;
  UndirectedComb twg(const UndirectedClass& x, const UndirectedClass& y) const;

  // Relative residuals of the two cosh length identities at a crossing.
  std::pair<double, double> cosh_residuals(const Word& x, const Word& y, const Crossing& c) const;

  long long self_crossings(const UndirectedClass& x) const;
  IntersectionCount intersection_geom(const UndirectedClass& x, const UndirectedClass& y) const;

 private:
  struct Frame;    // x-conjugated picture: Axis(x) is the imaginary axis
  struct CandidateSet;
  const Frame& frame(const Word& rootx) const;
  const CandidateSet& candidates(const Frame& f, double reach, int radius) const;

  const Holonomy* rho_;
  mutable std::map<Word, Frame> frames_;
};

}  // namespace twg
