#pragma once

#include <string>
#include <vector>

#include "twg/words.hpp"

namespace twg {

// A surface with free fundamental group F_n, presented as a one-vertex
// ribbon graph: the cyclic order of the 2n edge-ends at the spine vertex
// determines the topology and the boundary walks.
struct SurfacePresentation {
  std::string name;
  int generators = 0;
  std::vector<Letter> ribbon;                 // all 2n letters, cyclic order
  std::vector<UndirectedClass> peripheral;    // derived boundary classes
  int expected_boundaries = 0;

  // Builds and validates: ribbon must contain each of the 2n letters once,
  // and the fatgraph boundary walk must produce expected_boundaries cycles.
  static SurfacePresentation make(std::string name, int generators,
                                  std::string_view ribbon, int expected_boundaries);
  static SurfacePresentation from_json_file(const std::string& path);
  static SurfacePresentation from_json_text(const std::string& text);

  // Shipped surfaces.
  static const SurfacePresentation& pants();
  static const SurfacePresentation& punctured_torus();
  static const SurfacePresentation& four_holed_sphere();
  static const SurfacePresentation& punctured_genus_two();
  // Lookup by name ("pants", "torus1", "sphere4", "genus2-1"); throws on unknown.
  static const SurfacePresentation& named(const std::string& name);

  bool valid_letter(Letter l) const { return l != 0 && l >= -generators && l <= generators; }
  void require_word(const Word& w) const;  // throws if any letter out of range
};

// Boundary walks of the ribbon graph: orbits of l -> succ(l^-1) in the
// ribbon cyclic order, one undirected class per boundary component.
std::vector<UndirectedClass> boundary_cycles(const SurfacePresentation& s);

// True iff c is trivial or a positive power of a peripheral class.
bool is_peripheral(const UndirectedClass& c, const SurfacePresentation& s);

// All distinct canonical classes of cyclic length <= max_len, sorted
// (length-lexicographic), trivial class included.
std::vector<UndirectedClass> enumerate_undirected(const SurfacePresentation& s, int max_len);
std::vector<DirectedClass> enumerate_directed(const SurfacePresentation& s, int max_len);

}  // namespace twg
