#include "twg/surface.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace twg {

void SurfacePresentation::require_word(const Word& w) const {
  for (Letter l : w)
    if (!valid_letter(l))
      throw std::invalid_argument("word uses letter '" + std::string(1, letter_to_char(l)) +
                                  "' outside the " + std::to_string(generators) +
                                  "-generator surface " + name);
}

SurfacePresentation SurfacePresentation::make(std::string name, int generators,
                                              std::string_view ribbon_str,
                                              int expected_boundaries) {
  SurfacePresentation s;
  s.name = std::move(name);
  s.generators = generators;
  s.expected_boundaries = expected_boundaries;
  s.ribbon = word_from_string(ribbon_str);
  if (static_cast<int>(s.ribbon.size()) != 2 * generators)
    throw std::invalid_argument("ribbon order must list all " + std::to_string(2 * generators) +
                                " letters");
  std::set<Letter> seen(s.ribbon.begin(), s.ribbon.end());
  if (static_cast<int>(seen.size()) != 2 * generators)
    throw std::invalid_argument("ribbon order repeats a letter");
  for (Letter l : s.ribbon)
    if (!s.valid_letter(l)) throw std::invalid_argument("ribbon letter out of range");
  s.peripheral = boundary_cycles(s);
  if (static_cast<int>(s.peripheral.size()) != expected_boundaries)
    throw std::invalid_argument("surface " + s.name + ": ribbon order yields " +
                                std::to_string(s.peripheral.size()) + " boundary cycles, expected " +
                                std::to_string(expected_boundaries));
  return s;
}

std::vector<UndirectedClass> boundary_cycles(const SurfacePresentation& s) {
  // successor in the ribbon cyclic order
  auto succ = [&](Letter l) {
    auto it = std::find(s.ribbon.begin(), s.ribbon.end(), l);
    if (it == s.ribbon.end()) throw std::invalid_argument("malformed ribbon order");
    ++it;
    return it == s.ribbon.end() ? s.ribbon.front() : *it;
  };
  std::set<Letter> todo(s.ribbon.begin(), s.ribbon.end());
  std::vector<UndirectedClass> out;
  std::size_t traversals = 0;
  while (!todo.empty()) {
    Letter start = *todo.begin();
    Word walk;
    Letter l = start;
    do {
      walk.push_back(l);
      todo.erase(l);
      l = succ(inverse(l));
    } while (l != start);
    traversals += walk.size();
    out.push_back(UndirectedClass::of(walk));
  }
  if (traversals != s.ribbon.size()) throw std::logic_error("boundary walk miscount");
  std::sort(out.begin(), out.end());
  return out;
}

bool is_peripheral(const UndirectedClass& c, const SurfacePresentation& s) {
  if (c.trivial()) return true;
  for (const auto& p : s.peripheral) {
    if (c.length() % p.length() != 0) continue;
    int m = static_cast<int>(c.length() / p.length());
    if (UndirectedClass::of(power(p.word(), m)) == c) return true;
  }
  return false;
}

namespace {

template <typename Fn>
void walk_cyclic_strings(int n, int max_len, Fn&& emit) {
  // depth-first over reduced strings; cyclically-reduced filter at emission
  Word w;
  auto rec = [&](auto&& self) -> void {
    if (!w.empty() && (w.size() < 2 || w.front() != inverse(w.back()))) emit(w);
    if (static_cast<int>(w.size()) == max_len) return;
    for (int k = 1; k <= n; ++k) {
      for (Letter l : {static_cast<Letter>(k), static_cast<Letter>(-k)}) {
        if (!w.empty() && w.back() == inverse(l)) continue;
        w.push_back(l);
        self(self);
        w.pop_back();
      }
    }
  };
  rec(rec);
}

}  // namespace

std::vector<UndirectedClass> enumerate_undirected(const SurfacePresentation& s, int max_len) {
  std::set<UndirectedClass> seen;
  seen.insert(UndirectedClass());
  walk_cyclic_strings(s.generators, max_len,
                      [&](const Word& w) { seen.insert(UndirectedClass::of(w)); });
  return {seen.begin(), seen.end()};
}

std::vector<DirectedClass> enumerate_directed(const SurfacePresentation& s, int max_len) {
  std::set<DirectedClass> seen;
  seen.insert(DirectedClass());
  walk_cyclic_strings(s.generators, max_len,
                      [&](const Word& w) { seen.insert(DirectedClass::of(w)); });
  return {seen.begin(), seen.end()};
}

SurfacePresentation SurfacePresentation::from_json_text(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  std::string ribbon;
  for (const auto& item : j.at("ribbon")) ribbon += item.get<std::string>();
  return make(j.at("name").get<std::string>(),
              static_cast<int>(j.at("generators").size()), ribbon,
              j.at("expected_boundaries").get<int>());
}

SurfacePresentation SurfacePresentation::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open surface config: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

const SurfacePresentation& SurfacePresentation::pants() {
  static const SurfacePresentation s = make("pants", 2, "aAbB", 3);
  return s;
}

const SurfacePresentation& SurfacePresentation::punctured_torus() {
  static const SurfacePresentation s = make("torus1", 2, "abAB", 1);
  return s;
}

const SurfacePresentation& SurfacePresentation::four_holed_sphere() {
  static const SurfacePresentation s = make("sphere4", 3, "aAbBcC", 4);
  return s;
}

const SurfacePresentation& SurfacePresentation::punctured_genus_two() {
  // Ribbon order chosen so the single boundary walk spells abABcdCD.
  static const SurfacePresentation s = make("genus2-1", 4, "aBAbcDCd", 1);
  return s;
}

const SurfacePresentation& SurfacePresentation::named(const std::string& name) {
  if (name == "pants") return pants();
  if (name == "torus1") return punctured_torus();
  if (name == "sphere4") return four_holed_sphere();
  if (name == "genus2-1") return punctured_genus_two();
  throw std::invalid_argument("unknown surface '" + name +
                              "' (shipped: pants, torus1, sphere4, genus2-1)");
}

}  // namespace twg
