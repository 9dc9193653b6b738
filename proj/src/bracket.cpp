#include "twg/bracket.hpp"

#include <algorithm>

#include "json.hpp"

namespace twg {

DirectedComb goldman_bracket(const DirectedClass& x, const DirectedClass& y,
                             const SurfacePresentation& s) {
  DirectedComb out;
  if (x.trivial() || y.trivial()) return out;
  s.require_word(x.word());
  s.require_word(y.word());
  RibbonAtInfinity rib(s);
  for (const auto& [i, j, sign] : linked_pairs(x.word(), y.word(), rib))
    out.add(DirectedClass::of(reduced_concat(rotated(x.word(), i), rotated(y.word(), j))), sign);
  return out;
}

UndirectedComb twg_bracket(const UndirectedClass& x, const UndirectedClass& y,
                           const SurfacePresentation& s) {
  UndirectedComb out;
  if (x.trivial() || y.trivial()) return out;
  s.require_word(x.word());
  s.require_word(y.word());
  RibbonAtInfinity rib(s);
  const Word& xw = x.word();
  const Word& yw = y.word();
  const Word yi = inverse(yw);
  const std::size_t m = yw.size();
  for (const auto& [i, j, sign] : linked_pairs(xw, yw, rib)) {
    // the strand of y^-1 through the same intersection point
    std::size_t jp = (m - j) % m;
    UndirectedClass smooth_dir = UndirectedClass::of(reduced_concat(rotated(xw, i), rotated(yw, j)));
    UndirectedClass smooth_inv = UndirectedClass::of(reduced_concat(rotated(xw, i), rotated(yi, jp)));
    if (sign > 0) {
      out.add(smooth_dir, 1);
      out.add(smooth_inv, -1);
    } else {
      out.add(smooth_inv, 1);
      out.add(smooth_dir, -1);
    }
  }
  return out;
}

UndirectedComb u_map(const DirectedComb& c) {
  UndirectedComb out;
  for (const auto& [cls, k] : c.terms()) out.add(UndirectedClass::of(cls), k);
  return out;
}

UndirectedComb twg_from_goldman(const UndirectedClass& x, const UndirectedClass& y,
                                const SurfacePresentation& s) {
  DirectedClass a = x.lift(), b = y.lift();
  UndirectedComb out = u_map(goldman_bracket(a, b, s));
  out.add(u_map(goldman_bracket(a, b.reversed(), s)));
  return out;
}

DirectedComb goldman_bracket(const DirectedComb& x, const DirectedComb& y,
                             const SurfacePresentation& s) {
  DirectedComb out;
  for (const auto& [cx, kx] : x.terms())
    for (const auto& [cy, ky] : y.terms()) out.add(goldman_bracket(cx, cy, s), kx * ky);
  return out;
}

UndirectedComb twg_bracket(const UndirectedComb& x, const UndirectedComb& y,
                           const SurfacePresentation& s) {
  UndirectedComb out;
  for (const auto& [cx, kx] : x.terms())
    for (const auto& [cy, ky] : y.terms()) out.add(twg_bracket(cx, cy, s), kx * ky);
  return out;
}

UndirectedComb jacobi_sum(const UndirectedClass& x, const UndirectedClass& y,
                          const UndirectedClass& z, const SurfacePresentation& s) {
  UndirectedComb cx, cy, cz;
  cx.add(x, 1);
  cy.add(y, 1);
  cz.add(z, 1);
  UndirectedComb out = twg_bracket(twg_bracket(cx, cy, s), cz, s);
  out.add(twg_bracket(twg_bracket(cy, cz, s), cx, s));
  out.add(twg_bracket(twg_bracket(cz, cx, s), cy, s));
  return out;
}

// --- symmetric algebra ----------------------------------------------------

SymPoly SymPoly::scalar(long long k) {
  SymPoly p;
  p.add(Monomial{}, k);
  return p;
}

SymPoly SymPoly::variable(const UndirectedClass& c) {
  SymPoly p;
  p.add(Monomial{c}, 1);
  return p;
}

void SymPoly::add(Monomial m, long long k) {
  if (k == 0) return;
  std::sort(m.begin(), m.end());
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), k);
  } else if ((it->second += k) == 0) {
    terms_.erase(it);
  }
}

void SymPoly::add(const SymPoly& other, long long scale) {
  for (const auto& [m, k] : other.terms_) add(m, k * scale);
}

SymPoly SymPoly::operator*(const SymPoly& other) const {
  SymPoly out;
  for (const auto& [m1, k1] : terms_)
    for (const auto& [m2, k2] : other.terms_) {
      Monomial m = m1;
      m.insert(m.end(), m2.begin(), m2.end());
      out.add(std::move(m), k1 * k2);
    }
  return out;
}

std::string to_string(const SymPoly& p) {
  if (p.zero()) return "0";
  std::string out;
  for (const auto& [m, k] : p.terms()) {
    if (!out.empty()) out += ' ';
    out += k < 0 ? '-' : '+';
    long long a = k < 0 ? -k : k;
    if (a != 1 || m.empty()) out += std::to_string(a);
    for (const auto& c : m) {
      out += '<';
      out += c.trivial() ? "1" : word_to_string(c.word());
      out += '>';
    }
  }
  return out;
}

SymPoly poisson_bracket_sym(const SymPoly& p, const SymPoly& q, const SurfacePresentation& s) {
  SymPoly out;
  for (const auto& [m1, k1] : p.terms()) {
    for (const auto& [m2, k2] : q.terms()) {
      // Leibniz over every factor pair
      for (std::size_t i = 0; i < m1.size(); ++i) {
        for (std::size_t j = 0; j < m2.size(); ++j) {
          UndirectedComb br = twg_bracket(m1[i], m2[j], s);
          if (br.zero()) continue;
          SymPoly::Monomial rest;
          for (std::size_t t = 0; t < m1.size(); ++t)
            if (t != i) rest.push_back(m1[t]);
          for (std::size_t t = 0; t < m2.size(); ++t)
            if (t != j) rest.push_back(m2[t]);
          for (const auto& [cls, kb] : br.terms()) {
            SymPoly::Monomial m = rest;
            m.push_back(cls);
            out.add(std::move(m), k1 * k2 * kb);
          }
        }
      }
    }
  }
  return out;
}

// --- serialization --------------------------------------------------------

namespace {
template <typename ClassT>
std::string comb_json(const LinComb<ClassT>& lc) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [c, k] : lc.terms())
    arr.push_back({{"word", word_to_string(c.word())}, {"coeff", k}});
  return arr.dump();
}
}  // namespace

std::string lincomb_json(const UndirectedComb& lc) { return comb_json(lc); }
std::string lincomb_json(const DirectedComb& lc) { return comb_json(lc); }

}  // namespace twg
