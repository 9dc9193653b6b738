#include "twg/scan.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "json.hpp"
#include "twg/twist.hpp"

namespace twg {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::vector<UndirectedClass> nontrivial_classes(const SurfacePresentation& s, int max_len) {
  std::vector<UndirectedClass> out;
  for (auto& c : enumerate_undirected(s, max_len))
    if (!c.trivial()) out.push_back(c);
  return out;
}

// Deterministic parallel map over [0, n): violations collected in index order.
template <typename Fn>
std::vector<Violation> run_pairs(long long n, ExecMode mode, Fn&& body) {
  std::vector<std::vector<Violation>> slots(static_cast<std::size_t>(n));
  if (mode == ExecMode::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (long long k = 0; k < n; ++k) body(k, slots[static_cast<std::size_t>(k)]);
  } else {
    for (long long k = 0; k < n; ++k) body(k, slots[static_cast<std::size_t>(k)]);
  }
  std::vector<Violation> out;
  for (auto& v : slots) out.insert(out.end(), v.begin(), v.end());
  return out;
}

std::string wts(const UndirectedClass& c) { return c.trivial() ? "1" : word_to_string(c.word()); }

std::string fingerprint(const SurfacePresentation& s, int max_len, const std::string& engine) {
  return "surface=" + s.name + ";maxlen=" + std::to_string(max_len) + ";engine=" + engine +
         ";order=canonical";
}

}  // namespace

int default_scan_length(const SurfacePresentation& s) {
  return s.generators <= 2 ? 6 : 4;
}

ScanReport scan_conjecture(const SurfacePresentation& s, int max_len, ExecMode mode) {
  auto t0 = Clock::now();
  ScanReport rep;
  rep.kind = "conjecture";
  rep.surface = s.name;
  rep.max_len = max_len;
  rep.fingerprint = fingerprint(s, max_len, "comb");
  rep.note = "classes enumerated as undirected canonical forms (post-dedup word length)";
  auto classes = nontrivial_classes(s, max_len);
  const long long n = static_cast<long long>(classes.size());
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  rep.pairs = static_cast<long long>(pairs.size());
  rep.violations = run_pairs(rep.pairs, mode, [&](long long k, std::vector<Violation>& out) {
    const auto& x = classes[pairs[static_cast<std::size_t>(k)].first];
    const auto& y = classes[pairs[static_cast<std::size_t>(k)].second];
    if (!twg_bracket(x, y, s).zero()) return;
    auto i = intersection_number_comb(x, y, s);
    if (std::holds_alternative<Unsupported>(i)) {
      out.push_back({"unsupported-intersection", wts(x), wts(y),
                     "bracket is zero but i(x,y) is outside the supported theory: " +
                         std::get<Unsupported>(i).reason});
      return;
    }
    if (std::get<long long>(i) != 0)
      out.push_back({"zero-bracket-crossing-pair", wts(x), wts(y),
                     "[x,y] = 0 but i(x,y) = " + std::to_string(std::get<long long>(i))});
  });
  rep.wall_ms = ms_since(t0);
  return rep;
}

ScanReport scan_counting(const SurfacePresentation& s, int max_len, ExecMode mode) {
  auto t0 = Clock::now();
  ScanReport rep;
  rep.kind = "counting";
  rep.surface = s.name;
  rep.max_len = max_len;
  rep.fingerprint = fingerprint(s, max_len, "comb");
  auto classes = nontrivial_classes(s, max_len);
  std::vector<const UndirectedClass*> simple;
  for (const auto& c : classes)
    if (is_simple(c, s)) simple.push_back(&c);
  std::vector<std::pair<const UndirectedClass*, const UndirectedClass*>> pairs;
  for (auto* x : simple)
    for (const auto& y : classes) pairs.emplace_back(x, &y);
  rep.pairs = static_cast<long long>(pairs.size());
  rep.violations = run_pairs(rep.pairs, mode, [&](long long k, std::vector<Violation>& out) {
    const auto& [xp, yp] = pairs[static_cast<std::size_t>(k)];
    const auto &x = *xp, &y = *yp;
    auto i = intersection_number_comb(x, y, s);
    if (std::holds_alternative<Unsupported>(i)) {
      out.push_back({"unsupported-intersection", wts(x), wts(y), std::get<Unsupported>(i).reason});
      return;
    }
    long long mult = twg_bracket(x, y, s).multiplicity();
    if (mult != 2 * std::get<long long>(i))
      out.push_back({"counting-mismatch", wts(x), wts(y),
                     "multiplicity " + std::to_string(mult) + " vs 2*i = " +
                         std::to_string(2 * std::get<long long>(i))});
  });
  rep.wall_ms = ms_since(t0);
  return rep;
}

ScanReport scan_center(const SurfacePresentation& s, int max_len, ExecMode mode) {
  auto t0 = Clock::now();
  ScanReport rep;
  rep.kind = "center";
  rep.surface = s.name;
  rep.max_len = max_len;
  rep.fingerprint = fingerprint(s, max_len, "comb");
  rep.note = "finite truncation: centrality tested against classes of length <= max_len only";
  auto all = enumerate_undirected(s, max_len);
  auto classes = nontrivial_classes(s, max_len);
  rep.pairs = static_cast<long long>(all.size());
  rep.violations = run_pairs(static_cast<long long>(all.size()), mode,
                             [&](long long k, std::vector<Violation>& out) {
    const auto& c = all[static_cast<std::size_t>(k)];
    bool finitely_central = true;
    for (const auto& y : classes)
      if (!twg_bracket(c, y, s).zero()) {
        finitely_central = false;
        break;
      }
    bool peripheral = is_peripheral(c, s);
    if (finitely_central && !peripheral)
      out.push_back({"central-but-not-peripheral", wts(c), "",
                     "finitely central to length " + std::to_string(max_len) +
                         " yet not a peripheral power"});
    if (!finitely_central && peripheral)
      out.push_back({"peripheral-not-central", wts(c), "",
                     "peripheral power with a nonzero bracket"});
  });
  rep.wall_ms = ms_since(t0);
  return rep;
}

ScanReport scan_decomposition(const SurfacePresentation& s, int max_len, ExecMode mode) {
  auto t0 = Clock::now();
  ScanReport rep;
  rep.kind = "decomposition";
  rep.surface = s.name;
  rep.max_len = max_len;
  rep.fingerprint = fingerprint(s, max_len, "comb");
  std::vector<UndirectedClass> interior;
  for (const auto& c : nontrivial_classes(s, max_len))
    if (!is_peripheral(c, s)) interior.push_back(c);
  const long long n = static_cast<long long>(interior.size());
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) pairs.emplace_back(i, j);
  rep.pairs = static_cast<long long>(pairs.size());
  rep.violations = run_pairs(rep.pairs, mode, [&](long long k, std::vector<Violation>& out) {
    const auto& x = interior[pairs[static_cast<std::size_t>(k)].first];
    const auto& y = interior[pairs[static_cast<std::size_t>(k)].second];
    auto twg = twg_bracket(x, y, s);
    for (const auto& [cls, coeff] : twg.terms()) {
      (void)coeff;
      if (cls.trivial() || is_peripheral(cls, s))
        out.push_back({"central-term", wts(x), wts(y),
                       "TWG term <" + wts(cls) + "> is trivial or peripheral"});
    }
    auto gold = goldman_bracket(x.lift(), y.lift(), s);
    for (const auto& [cls, coeff] : gold.terms()) {
      (void)coeff;
      UndirectedClass u = UndirectedClass::of(cls);
      if (u.trivial() || is_peripheral(u, s))
        out.push_back({"central-term-goldman", wts(x), wts(y),
                       "Goldman term <" + word_to_string(cls.word()) + "> is trivial or peripheral"});
    }
  });
  rep.wall_ms = ms_since(t0);
  return rep;
}

ScanReport verify_numerics(const SurfacePresentation& s, int max_len,
                           const std::optional<Holonomy>& holonomy, ExecMode mode) {
  auto t0 = Clock::now();
  ScanReport rep;
  rep.kind = "numerics";
  rep.surface = s.name;
  rep.max_len = max_len;
  rep.fingerprint = fingerprint(s, max_len, holonomy ? "geom(custom)" : "geom(standard)");
  Holonomy base = holonomy ? *holonomy : Holonomy::standard(s);
  const bool twistable = s.name == "torus1" || s.name == "sphere4";
  std::vector<double> twists = twistable ? std::vector<double>{-1.0, 0.5, 2.0} : std::vector<double>{};

  auto classes = nontrivial_classes(s, max_len);
  std::vector<const UndirectedClass*> usable;
  for (const auto& c : classes)
    if (classify(base.evaluate(c.word())) == IsometryType::hyperbolic) usable.push_back(&c);
  const long long n = static_cast<long long>(usable.size());
  rep.pairs = n * (n + 1) / 2;
  if (classes.size() != usable.size())
    rep.note = "classes without a closed geodesic (parabolic holonomy) are skipped";

  std::vector<Holonomy> twisted;
  for (double t : twists) twisted.push_back(twist(base, t));

  // one engine per first class: the Cayley-ball enumeration is shared
  // across all second classes
  rep.violations = run_pairs(n, mode, [&](long long i, std::vector<Violation>& out) {
    const auto& x = *usable[static_cast<std::size_t>(i)];
    CrossingEngine eng(base);
    std::vector<CrossingEngine> tengs(twisted.begin(), twisted.end());
    for (long long j = i; j < n; ++j) {
      const auto& y = *usable[static_cast<std::size_t>(j)];
      try {
        auto cs = eng.crossings(x.word(), y.word());
        for (const auto& c : cs.records) {
          auto [r0, ri] = eng.cosh_residuals(x.word(), y.word(), c);
          if (r0 > tol::residual || ri > tol::residual) {
            out.push_back({"cosh-residual", wts(x), wts(y),
                           "base metric witness " + word_to_string(c.witness) + ": r0 = " +
                               std::to_string(r0) + ", rinf = " + std::to_string(ri)});
            continue;
          }
          for (std::size_t ti = 0; ti < twisted.size(); ++ti) {
            Crossing tc = tengs[ti].at_witness(x.word(), y.word(), c.witness);
            auto [tr0, tri] = tengs[ti].cosh_residuals(x.word(), y.word(), tc);
            if (tr0 > tol::residual || tri > tol::residual)
              out.push_back({"cosh-residual-twisted", wts(x), wts(y),
                             "t = " + std::to_string(twists[ti]) + " witness " +
                                 word_to_string(c.witness) + ": r0 = " + std::to_string(tr0) +
                                 ", rinf = " + std::to_string(tri)});
          }
        }
        // no internal cancellation for simple first argument
        if (is_simple(x, s)) {
          auto [rx, mx] = primitive_root(x.word());
          auto [ry, my] = primitive_root(y.word());
          (void)rx;
          (void)ry;
          long long expect = 2LL * static_cast<long long>(cs.records.size()) * mx * my;
          long long mult = eng.twg(x, y).multiplicity();
          if (mult != expect)
            out.push_back({"cancellation", wts(x), wts(y),
                           "geometric TWG multiplicity " + std::to_string(mult) + " != " +
                               std::to_string(expect) + ": smoothing classes collided"});
        }
      } catch (const EngineError& e) {
        out.push_back({"engine-error", wts(x), wts(y), e.what()});
      }
    }
  });

  // twist-angle monotonicity for crossings with the twist curve
  if (twistable) {
    const std::vector<double> grid{-2, -1, 0, 1, 2};
    Word a{static_cast<Letter>(1)};
    for (const char* ystr : {"b", "ab", "abAb", "aB"}) {
      UndirectedClass y = UndirectedClass::of(ystr);
      ++rep.pairs;
      try {
        CrossingEngine eng(base);
        auto cs = eng.crossings(a, y.word());
        for (const auto& c : cs.records) {
          auto phis = angle_along_twist(base, y.word(), c, grid);
          for (std::size_t t = 1; t < phis.size(); ++t)
            if (!(phis[t] < phis[t - 1] - tol::angle_margin)) {
              rep.violations.push_back({"angle-not-decreasing", "a", ystr,
                                        "witness " + word_to_string(c.witness) + ": phi(" +
                                            std::to_string(grid[t]) + ") = " + std::to_string(phis[t]) +
                                            " !< phi(" + std::to_string(grid[t - 1]) + ") = " +
                                            std::to_string(phis[t - 1])});
              break;
            }
        }
      } catch (const EngineError& e) {
        rep.violations.push_back({"engine-error", "a", ystr, e.what()});
      }
    }
  }
  rep.wall_ms = ms_since(t0);
  return rep;
}

ScanReport scan_engine_agreement(const SurfacePresentation& s, int max_len,
                                 const std::optional<Holonomy>& holonomy, ExecMode mode) {
  auto t0 = Clock::now();
  ScanReport rep;
  rep.kind = "engine-agreement";
  rep.surface = s.name;
  rep.max_len = max_len;
  rep.fingerprint = fingerprint(s, max_len, holonomy ? "both(custom)" : "both(standard)");
  Holonomy base = holonomy ? *holonomy : Holonomy::standard(s);

  auto classes = nontrivial_classes(s, max_len);
  std::vector<const UndirectedClass*> usable;
  for (const auto& c : classes)
    if (classify(base.evaluate(c.word())) == IsometryType::hyperbolic) usable.push_back(&c);
  if (classes.size() != usable.size())
    rep.note = "classes without a closed geodesic (parabolic holonomy) are skipped";
  const long long n = static_cast<long long>(usable.size());
  rep.pairs = n * (n + 1) / 2;

  rep.violations = run_pairs(n, mode, [&](long long i, std::vector<Violation>& out) {
    const auto& x = *usable[static_cast<std::size_t>(i)];
    CrossingEngine eng(base);
    for (long long j = i; j < n; ++j) {
      const auto& y = *usable[static_cast<std::size_t>(j)];
      try {
        auto geom_u = eng.twg(x, y);
        auto comb_u = twg_bracket(x, y, s);
        if (geom_u != comb_u)
          out.push_back({"twg-disagreement", wts(x), wts(y),
                         "comb " + to_string(comb_u) + " vs geom " + to_string(geom_u)});
        auto geom_d = eng.goldman(x.lift(), y.lift());
        auto comb_d = goldman_bracket(x.lift(), y.lift(), s);
        if (geom_d != comb_d)
          out.push_back({"goldman-disagreement", wts(x), wts(y),
                         "comb " + to_string(comb_d) + " vs geom " + to_string(geom_d)});
      } catch (const EngineError& e) {
        out.push_back({"engine-error", wts(x), wts(y), e.what()});
      }
    }
  });
  rep.wall_ms = ms_since(t0);
  return rep;
}

// --- report output ----------------------------------------------------------

std::string ScanReport::to_json() const {
  nlohmann::json j;
  j["kind"] = kind;
  j["surface"] = surface;
  j["max_len"] = max_len;
  j["pairs"] = pairs;
  j["wall_ms"] = wall_ms;
  j["fingerprint"] = fingerprint;
  if (!note.empty()) j["note"] = note;
  j["violations"] = nlohmann::json::array();
  for (const auto& v : violations)
    j["violations"].push_back({{"code", v.code}, {"x", v.x}, {"y", v.y}, {"detail", v.detail}});
  return j.dump(2);
}

std::string ScanReport::to_text() const {
  std::ostringstream os;
  os << "scan " << kind << " on " << surface << ", max length " << max_len << "\n";
  os << "  pairs examined: " << pairs << "\n";
  if (!note.empty()) os << "  note: " << note << "\n";
  os << "  violations: " << violations.size() << "\n";
  for (const auto& v : violations)
    os << "    [" << v.code << "] x=" << v.x << (v.y.empty() ? "" : " y=" + v.y) << ": " << v.detail
       << "\n";
  os << "  wall time: " << wall_ms << " ms\n";
  return os.str();
}

std::string ScanReport::write(const std::string& dir) const {
  std::filesystem::create_directories(dir);
  std::string path = dir + "/" + kind + "_" + surface + "_L" + std::to_string(max_len) + ".json";
  std::ofstream out(path);
  out << to_json() << "\n";
  return path;
}

}  // namespace twg
