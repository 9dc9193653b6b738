#include "twg/crossings.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace twg {

namespace {

struct WordLess {
  bool operator()(const Word& a, const Word& b) const { return compare_words(a, b) < 0; }
};

Word reduced_mul(const Word& a, const Word& b) { return reduced_concat(a, b); }

}  // namespace

namespace {

// powers[k + radius] = word^(k), k in [-radius, radius]
std::vector<Word> power_table(const Word& w, int radius) {
  std::vector<Word> t(2 * radius + 1);
  t[radius] = Word{};
  for (int k = 1; k <= radius; ++k) {
    t[radius + k] = reduced_mul(t[radius + k - 1], w);
    t[radius - k] = reduced_mul(inverse(w), t[radius - k + 1]);
  }
  return t;
}

}  // namespace

Word coset_canonical(const Word& g, const Word& rx, const Word& ry) {
  // Exhaustive minimum over x^p g y^q. Large |p|, |q| cannot shorten the
  // product once the cancellations through g and through the periodic
  // overlap are exhausted; the window is widened whenever the minimum
  // lands on its boundary.
  auto better = [](const Word& a, const Word& b) { return compare_words(a, b) < 0; };
  const int lg = static_cast<int>(g.size());
  const int lsum = static_cast<int>(rx.size() + ry.size());
  int pr = (2 * lg + 2 * lsum + 8) / static_cast<int>(rx.size()) + 1;
  int qr = (2 * lg + 2 * lsum + 8) / static_cast<int>(ry.size()) + 1;
  for (;;) {
    auto xpow = power_table(rx, pr);
    auto ypow = power_table(ry, qr);
    Word best = g;
    int bp = 0, bq = 0;
    for (int p = -pr; p <= pr; ++p) {
      Word left = reduced_mul(xpow[static_cast<std::size_t>(p + pr)], g);
      for (int q = -qr; q <= qr; ++q) {
        Word w = reduced_mul(left, ypow[static_cast<std::size_t>(q + qr)]);
        if (better(w, best)) {
          best = std::move(w);
          bp = p;
          bq = q;
        }
      }
    }
    if (std::abs(bp) < pr && std::abs(bq) < qr) return best;
    pr *= 2;
    qr *= 2;
  }
}

// --- frames and candidate enumeration --------------------------------------

struct CrossingEngine::CandidateSet {
  std::vector<Word> words;
  std::vector<Mobius> mats;  // conjugated frame matrices
  double reach = 0;
  int radius = 0;
};

struct CrossingEngine::Frame {
  Word root;
  double length = 0;          // translation length of the root
  std::vector<Mobius> gens;   // conjugated generators
  std::vector<Mobius> inv;
  CandidateSet cands;

  Mobius evaluate(const Word& w) const {
    Mobius m;
    for (Letter l : w) m = m * (l > 0 ? gens[l - 1] : inv[-l - 1]);
    return m;
  }
};

CrossingEngine::CrossingEngine(const Holonomy& rho) : rho_(&rho) {}
CrossingEngine::~CrossingEngine() = default;
CrossingEngine::CrossingEngine(CrossingEngine&&) noexcept = default;

namespace {

// endpoints of the axis of m as projective directions
struct ProjAxis {
  double ru, rv, au, av;
};

ProjAxis proj_axis(const Mobius& m) {
  double tr = m.trace();
  double disc = tr * tr - 4;
  if (disc <= tol::classify) throw EngineError("axis of a non-hyperbolic element");
  double s = std::sqrt(disc);
  double lam1 = (tr + s) / 2, lam2 = (tr - s) / 2;
  auto evec = [&](double lam, double& u, double& v) {
    double u1 = m.b, v1 = lam - m.a;
    double u2 = lam - m.d, v2 = m.c;
    if (std::abs(u1) + std::abs(v1) >= std::abs(u2) + std::abs(v2)) {
      u = u1;
      v = v1;
    } else {
      u = u2;
      v = v2;
    }
    double n = std::hypot(u, v);
    u /= n;
    v /= n;
  };
  ProjAxis ax{};
  bool first_bigger = std::abs(lam1) > std::abs(lam2);
  evec(first_bigger ? lam2 : lam1, ax.ru, ax.rv);
  evec(first_bigger ? lam1 : lam2, ax.au, ax.av);
  return ax;
}

// distance from z to the imaginary axis and the projection parameter
inline void axis_coords(double x, double y, double& dist, double& t) {
  double r = std::hypot(x, y);
  dist = std::acosh(std::max(1.0, r / y));
  t = std::log(r);
}

// distance from i to the geodesic with finite endpoints p, q
double dist_i_to_geodesic(double p, double q) {
  // send (p, q) -> (0, inf) by T(z) = (z - p)/(z - q); then sinh d = |Re|/Im
  // T(i) = ((pq + 1) + i (p - q)) / (q^2 + 1)
  double tx = (p * q + 1.0) / (q * q + 1.0);
  double ty = (p - q) / (q * q + 1.0);
  if (ty < 0) ty = -ty;
  if (ty == 0) return 0;
  return std::asinh(std::abs(tx) / ty);
}

}  // namespace

const CrossingEngine::Frame& CrossingEngine::frame(const Word& rootx) const {
  auto it = frames_.find(rootx);
  if (it != frames_.end()) return it->second;

  Mobius mx = rho_->evaluate(rootx);
  if (classify(mx) != IsometryType::hyperbolic)
    throw EngineError("crossings: class " + word_to_string(rootx) +
                      " has no closed geodesic under this metric (trace " +
                      std::to_string(mx.trace()) + ")");
  ProjAxis ax = proj_axis(mx);
  // conjugate so that repelling -> 0, attracting -> inf, orientation kept
  double D = ax.ru * ax.av - ax.rv * ax.au;
  if (D < 0) {
    ax.au = -ax.au;
    ax.av = -ax.av;
    D = -D;
  }
  double s = std::sqrt(D);
  Mobius w{ax.av / s, -ax.au / s, ax.rv / s, -ax.ru / s};
  // rows (av, -au), (rv, -ru): w(att) = inf, w(rep) = 0

  Frame f;
  f.root = rootx;
  f.length = translation_length(mx);
  Mobius wi = w.inverse();
  for (int k = 0; k < rho_->surface().generators; ++k) {
    f.gens.push_back(w * rho_->generator(k) * wi);
    f.inv.push_back(f.gens.back().inverse());
  }
  return frames_.emplace(rootx, std::move(f)).first->second;
}

const CrossingEngine::CandidateSet& CrossingEngine::candidates(const Frame& f, double reach,
                                                               int radius) const {
  CandidateSet& cs = const_cast<Frame&>(f).cands;
  if (!cs.words.empty() && cs.reach >= reach && cs.radius >= radius) return cs;
  cs.words.clear();
  cs.mats.clear();
  // headroom so nearby follow-up queries reuse the enumeration
  cs.reach = std::max(cs.reach, reach + 1.0);
  cs.radius = std::max(cs.radius, radius + 4);

  const double expand_slack = 2.5;
  const double t_lo = -cs.reach - expand_slack;
  const double t_hi = f.length + cs.reach + expand_slack;
  const int n = static_cast<int>(f.gens.size());

  struct Node {
    Word w;
    Mobius m;
  };
  std::vector<Node> frontier{{Word{}, Mobius::identity()}};
  cs.words.push_back(Word{});
  cs.mats.push_back(Mobius::identity());
  for (int depth = 1; depth <= cs.radius && !frontier.empty(); ++depth) {
    std::vector<Node> next;
    for (const auto& node : frontier) {
      for (int k = 1; k <= n; ++k) {
        for (Letter l : {static_cast<Letter>(k), static_cast<Letter>(-k)}) {
          if (!node.w.empty() && node.w.back() == inverse(l)) continue;
          Mobius m = node.m * (l > 0 ? f.gens[k - 1] : f.inv[k - 1]);
          double zx = 0, zy = 1;  // orbit of i
          m.apply(zx, zy);
          double dist, t;
          axis_coords(zx, zy, dist, t);
          if (t < t_lo || t > t_hi) continue;
          if (dist > cs.reach + expand_slack) continue;
          Word w = node.w;
          w.push_back(l);
          if (dist <= cs.reach) {
            cs.words.push_back(w);
            cs.mats.push_back(m);
          }
          next.push_back({std::move(w), m});
        }
      }
    }
    frontier = std::move(next);
  }
  return cs;
}

// --- crossing computation ---------------------------------------------------

namespace {

struct RawCrossing {
  bool ok = false;
  double s = 0;     // log of the crossing height, before window reduction
  double phi = 0;
  int sign = 0;
  double rep = 0, att = 0;  // translate-axis endpoints
};

// crossing of the imaginary axis with the axis of the conjugated element C
RawCrossing raw_crossing(const Mobius& C) {
  RawCrossing out;
  double tr = C.trace();
  if (tr * tr - 4 <= tol::classify) return out;
  ProjAxis ax = proj_axis(C);
  // both endpoints must be finite and on opposite sides of 0
  if (std::abs(ax.rv) < tol::near_tangent || std::abs(ax.av) < tol::near_tangent) return out;
  double p = ax.ru / ax.rv;  // repelling
  double q = ax.au / ax.av;  // attracting
  out.rep = p;
  out.att = q;
  if (!(p * q < 0)) return out;
  double h = std::sqrt(-p * q);  // crossing point (0, h)
  double c = (p + q) / 2;
  // x-axis forward tangent is (0,1); translate tangent at (0,h) is
  // +-(h, c) for p<q / p>q
  double norm = std::hypot(h, c);
  double cosb = (p < q ? c : -c) / norm;
  cosb = std::clamp(cosb, -1.0, 1.0);
  if (std::abs(cosb) > 1.0 - tol::near_tangent)
    throw EngineError("near-tangent crossing: angle indeterminate");
  double beta = std::acos(cosb);
  // raw frame determinant sign is -tangent_x; calibrated global sign flips it
  int eps = p < q ? +1 : -1;
  out.ok = true;
  out.s = std::log(h);
  out.sign = eps;
  out.phi = eps > 0 ? beta : M_PI - beta;
  return out;
}

double window(double s, double len) {
  double r = std::fmod(s, len);
  if (r < 0) r += len;
  if (r > len - tol::s_snap) r = 0;  // snap the window boundary
  return r;
}

}  // namespace

CrossingSet CrossingEngine::crossings(const Word& x, const Word& y, int extra_radius) const {
  auto [rx, mx] = primitive_root(canonical_cyclic(x));
  auto [ry, my] = primitive_root(canonical_cyclic(y));
  (void)mx;
  (void)my;
  const Frame& f = frame(rx);
  Mobius my_conj = f.evaluate(ry);
  if (classify(my_conj) != IsometryType::hyperbolic)
    throw EngineError("crossings: class " + word_to_string(ry) +
                      " has no closed geodesic under this metric");
  double len_y = translation_length(my_conj);
  ProjAxis ay = proj_axis(my_conj);
  double d0 = 0;
  if (std::abs(ay.rv) > tol::near_tangent && std::abs(ay.av) > tol::near_tangent)
    d0 = dist_i_to_geodesic(ay.ru / ay.rv, ay.au / ay.av);
  const double reach = len_y / 2 + d0 + 3.0;

  const bool self_mode = UndirectedClass::of(rx) == UndirectedClass::of(ry);
  const Word rxi = inverse(rx);

  const int r0 = static_cast<int>(x.size() + y.size()) + 4;
  const int rcap = r0 + 12;
  int radius = r0 + extra_radius;

  auto enumerate_at = [&](int rad) {
    const CandidateSet& cands = candidates(f, reach, std::min(rad + 2, rcap));
    // group raw crossings by their geometry before the exact (and costly)
    // coset canonicalization: coset mates share the windowed position and,
    // modulo the x-translation used in the windowing, the axis endpoints
    struct Bucket {
      Word shortest;
      RawCrossing rc;
    };
    std::map<std::tuple<long long, long long, long long>, Bucket> buckets;
    for (std::size_t idx = 0; idx < cands.words.size(); ++idx) {
      if (static_cast<int>(cands.words[idx].size()) > rad) continue;
      RawCrossing rc = raw_crossing(cands.mats[idx] * my_conj * cands.mats[idx].inverse());
      if (!rc.ok) continue;
      auto key = std::make_tuple(std::llround(window(rc.s, f.length) * 1e7),
                                 std::llround(std::atan(rc.rep) * 1e9),
                                 std::llround(std::atan(rc.att) * 1e9));
      auto it = buckets.find(key);
      if (it == buckets.end())
        buckets.emplace(key, Bucket{cands.words[idx], rc});
      else if (cands.words[idx].size() < it->second.shortest.size())
        it->second.shortest = cands.words[idx];
    }
    // physical points found, keyed by canonical witness
    std::map<Word, RawCrossing, WordLess> found;
    std::set<Word, WordLess> rejected;
    for (auto& [bk, bucket] : buckets) {
      (void)bk;
      Word key = coset_canonical(bucket.shortest, rx, ry);
      if (found.count(key) || rejected.count(key)) continue;
      // coincident unoriented lifts never cross transversally
      Word conj = reduced_mul(reduced_mul(key, ry), inverse(key));
      if (conj == rx || conj == rxi) {
        rejected.insert(key);
        continue;
      }
      RawCrossing rc = bucket.rc;
      rc.s = window(rc.s, f.length);
      found.emplace(std::move(key), rc);
    }
    return found;
  };

  auto found = enumerate_at(radius);
  for (;;) {
    if (radius + 2 > rcap)
      throw EngineError("crossings: radius cap reached before the crossing set stabilized for (" +
                        word_to_string(x) + ", " + word_to_string(y) + ")");
    auto grown = enumerate_at(radius + 2);
    bool same = grown.size() == found.size() &&
                std::equal(grown.begin(), grown.end(), found.begin(),
                           [](const auto& a, const auto& b) { return a.first == b.first; });
    if (same) break;
    found = std::move(grown);
    radius += 2;
  }

  CrossingSet out;
  out.radius = radius;
  out.physical = 0;
  for (const auto& [key, rc] : found) {
    if (self_mode) {
      Word tkey = coset_canonical(inverse(key), rx, ry);
      // one physical point per unordered witness pair
      if (compare_words(tkey, key) < 0 && found.count(tkey)) continue;
      ++out.physical;
      out.records.push_back({key, rc.s, rc.phi, rc.sign});
      if (tkey == key) {
        // self-transposed point: the swapped arc pair contributes the
        // opposite sign at the same crossing (angle is exactly pi/2 there)
        out.records.push_back({key, rc.s, rc.phi, -rc.sign});
      } else {
        Mobius mg = f.evaluate(tkey);
        RawCrossing rc2 = raw_crossing(mg * my_conj * mg.inverse());
        if (!rc2.ok) throw EngineError("crossings: transposed witness lost the crossing");
        out.records.push_back({tkey, window(rc2.s, f.length), rc2.phi, rc2.sign});
      }
    } else {
      ++out.physical;
      out.records.push_back({key, rc.s, rc.phi, rc.sign});
    }
  }
  std::sort(out.records.begin(), out.records.end(), [](const Crossing& a, const Crossing& b) {
    if (std::abs(a.s - b.s) > tol::s_snap) return a.s < b.s;
    return compare_words(a.witness, b.witness) < 0;
  });
  return out;
}

Crossing CrossingEngine::at_witness(const Word& x, const Word& y, const Word& witness) const {
  auto [rx, mx] = primitive_root(canonical_cyclic(x));
  auto [ry, my] = primitive_root(canonical_cyclic(y));
  (void)mx;
  (void)my;
  const Frame& f = frame(rx);
  Mobius mg = f.evaluate(witness);
  RawCrossing rc = raw_crossing(mg * f.evaluate(ry) * mg.inverse());
  if (!rc.ok)
    throw EngineError("crossing disappeared for witness " + word_to_string(witness) +
                      " of pair (" + word_to_string(x) + ", " + word_to_string(y) + ")");
  return {witness, window(rc.s, f.length), rc.phi, rc.sign};
}

DirectedComb CrossingEngine::goldman(const DirectedClass& x, const DirectedClass& y) const {
  DirectedComb out;
  if (x.trivial() || y.trivial()) return out;
  auto [rx, mx] = primitive_root(x.word());
  auto [ry, my] = primitive_root(y.word());
  (void)rx;
  (void)ry;
  long long mult = static_cast<long long>(mx) * my;
  for (const Crossing& c : crossings(x.word(), y.word()).records) {
    Word term = reduced_mul(x.word(), reduced_mul(c.witness, reduced_mul(y.word(), inverse(c.witness))));
    out.add(DirectedClass::of(term), c.sign * mult);
  }
  return out;
}

UndirectedComb CrossingEngine::twg(const UndirectedClass& x, const UndirectedClass& y) const {
  UndirectedComb out;
  if (x.trivial() || y.trivial()) return out;
  auto [rx, mx] = primitive_root(x.word());
  auto [ry, my] = primitive_root(y.word());
  (void)rx;
  (void)ry;
  long long mult = static_cast<long long>(mx) * my;
  const Word& xw = x.word();
  const Word& yw = y.word();
  const Word yi = inverse(yw);
  for (const Crossing& c : crossings(xw, yw).records) {
    const Word gi = inverse(c.witness);
    UndirectedClass sm_dir = UndirectedClass::of(reduced_mul(xw, reduced_mul(c.witness, reduced_mul(yw, gi))));
    UndirectedClass sm_inv = UndirectedClass::of(reduced_mul(xw, reduced_mul(c.witness, reduced_mul(yi, gi))));
    if (c.sign > 0) {
      out.add(sm_dir, mult);
      out.add(sm_inv, -mult);
    } else {
      out.add(sm_inv, mult);
      out.add(sm_dir, -mult);
    }
  }
  return out;
}

std::pair<double, double> CrossingEngine::cosh_residuals(const Word& x, const Word& y,
                                                         const Crossing& c) const {
  double lx = rho_->length(x);
  double ly = rho_->length(y);
  const Word gi = inverse(c.witness);
  Word w_dir = reduced_mul(x, reduced_mul(c.witness, reduced_mul(y, gi)));
  Word w_inv = reduced_mul(x, reduced_mul(c.witness, reduced_mul(inverse(y), gi)));
  const Word& w0 = c.sign > 0 ? w_dir : w_inv;
  const Word& wi = c.sign > 0 ? w_inv : w_dir;
  double l0 = rho_->length(w0);
  double li = rho_->length(wi);
  double cc = std::cosh(lx / 2) * std::cosh(ly / 2);
  double ss = std::sinh(lx / 2) * std::sinh(ly / 2);
  double lhs0 = std::cosh(l0 / 2), lhsi = std::cosh(li / 2);
  double r0 = std::abs(lhs0 - (cc - ss * std::cos(c.phi))) / std::max(1.0, lhs0);
  double ri = std::abs(lhsi - (cc + ss * std::cos(c.phi))) / std::max(1.0, lhsi);
  return {r0, ri};
}

long long CrossingEngine::self_crossings(const UndirectedClass& x) const {
  if (x.trivial()) return 0;
  auto [root, exp] = primitive_root(x.word());
  (void)exp;
  return crossings(root, root).physical;
}

IntersectionCount CrossingEngine::intersection_geom(const UndirectedClass& x,
                                                    const UndirectedClass& y) const {
  if (x.trivial() || y.trivial()) return 0LL;
  auto [rx, mx] = primitive_root(x.word());
  auto [ry, my] = primitive_root(y.word());
  if (UndirectedClass::of(rx) == UndirectedClass::of(ry)) {
    if (self_crossings(UndirectedClass::of(rx)) == 0) return 0LL;
    return Unsupported{"powers of a common non-simple primitive"};
  }
  return crossings(rx, ry).physical * static_cast<long long>(mx) * my;
}

}  // namespace twg
