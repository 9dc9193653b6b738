#pragma once

#include <string>
#include <variant>
#include <vector>

#include "twg/rays.hpp"
#include "twg/surface.hpp"

namespace twg {

// One combinatorial intersection point: positions i in x and j in y whose
// strand germs at the base vertex separate each other on the circle at
// infinity, counted once per crossing of the two lifts.
struct LinkedPair {
  std::size_t i = 0;
  std::size_t j = 0;
  int sign = 0;
};

// 0 when unlinked, otherwise the crossing sign. Antisymmetric by
// construction: linked(x,i,y,j) == -linked(y,j,x,i).
int linked(const Word& x, std::size_t i, const Word& y, std::size_t j,
           const RibbonAtInfinity& rib);

std::vector<LinkedPair> linked_pairs(const Word& x, const Word& y, const RibbonAtInfinity& rib);

// Geometric intersection number, combinatorial engine. Distinct powers of
// a common non-simple primitive are outside the supported theory.
struct Unsupported {
  std::string reason;
};
using IntersectionCount = std::variant<long long, Unsupported>;

IntersectionCount intersection_number_comb(const UndirectedClass& x, const UndirectedClass& y,
                                           const SurfacePresentation& s);

long long self_intersection_comb(const UndirectedClass& x, const SurfacePresentation& s);
bool is_simple(const UndirectedClass& x, const SurfacePresentation& s);

}  // namespace twg
