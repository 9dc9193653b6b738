#pragma once

#include <map>
#include <string>
#include <vector>

#include "twg/words.hpp"

namespace twg {

// Sparse formal Z-linear combination of classes. Zero coefficients are
// never stored; iteration order is the canonical class order, so printed
// and serialized forms are byte-stable.
template <typename ClassT>
class LinComb {
 public:
  using Terms = std::map<ClassT, long long>;

  LinComb() = default;

  void add(const ClassT& c, long long k) {
    if (k == 0) return;
    auto it = terms_.find(c);
    if (it == terms_.end()) {
      terms_.emplace(c, k);
    } else if ((it->second += k) == 0) {
      terms_.erase(it);
    }
  }
  void add(const LinComb& other, long long scale = 1) {
    for (const auto& [c, k] : other.terms_) add(c, k * scale);
  }

  bool zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  long long coeff(const ClassT& c) const {
    auto it = terms_.find(c);
    return it == terms_.end() ? 0 : it->second;
  }
  // Sum of |coefficients|: the term count with multiplicity.
  long long multiplicity() const {
    long long m = 0;
    for (const auto& [c, k] : terms_) m += k < 0 ? -k : k;
    return m;
  }
  const Terms& terms() const { return terms_; }

  friend bool operator==(const LinComb&, const LinComb&) = default;
  friend LinComb operator+(LinComb a, const LinComb& b) { a.add(b); return a; }
  friend LinComb operator-(LinComb a, const LinComb& b) { a.add(b, -1); return a; }
  friend LinComb operator*(long long k, LinComb a) {
    LinComb out;
    for (const auto& [c, v] : a.terms_) out.add(c, v * k);
    return out;
  }

 private:
  Terms terms_;
};

using DirectedComb = LinComb<DirectedClass>;
using UndirectedComb = LinComb<UndirectedClass>;

// "+<baaBa> -<Baaba>", terms in canonical order; "0" when empty.
template <typename ClassT>
std::string to_string(const LinComb<ClassT>& lc) {
  if (lc.zero()) return "0";
  std::string out;
  for (const auto& [c, k] : lc.terms()) {
    if (!out.empty()) out += ' ';
    out += k < 0 ? '-' : '+';
    long long a = k < 0 ? -k : k;
    if (a != 1) out += std::to_string(a);
    out += '<';
    out += c.trivial() ? "1" : word_to_string(c.word());
    out += '>';
  }
  return out;
}

std::string lincomb_json(const UndirectedComb& lc);
std::string lincomb_json(const DirectedComb& lc);

// An element of the symmetric algebra over the undirected classes, in the
// sorted-monomial basis.
class SymPoly {
 public:
  using Monomial = std::vector<UndirectedClass>;  // kept sorted
  using Terms = std::map<Monomial, long long>;

  SymPoly() = default;
  static SymPoly scalar(long long k);
  static SymPoly variable(const UndirectedClass& c);

  void add(Monomial m, long long k);
  void add(const SymPoly& other, long long scale = 1);

  bool zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  friend bool operator==(const SymPoly&, const SymPoly&) = default;
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { a.add(b); return a; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { a.add(b, -1); return a; }
  SymPoly operator*(const SymPoly& other) const;

 private:
  Terms terms_;
};

std::string to_string(const SymPoly& p);

}  // namespace twg
