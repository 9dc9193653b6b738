#include "twg/linking.hpp"

#include <variant>

namespace twg {

int linked(const Word& x, std::size_t i, const Word& y, std::size_t j,
           const RibbonAtInfinity& rib) {
  if (x.empty() || y.empty()) return 0;
  auto [Ap, Am] = rays_at(x, i % x.size());
  auto [Bp, Bm] = rays_at(y, j % y.size());
  // degenerate strands: some pair of ends coincides exactly when the two
  // lifts share a half-line, never a transversal crossing
  if (ray_equal(Ap, Bp) || ray_equal(Am, Bm) || ray_equal(Ap, Bm) || ray_equal(Am, Bp)) return 0;
  int o1 = rib.cyclic_order3(Am, Bm, Ap);
  int o2 = rib.cyclic_order3(Am, Bp, Ap);
  if (o1 == o2) return 0;  // ends do not separate
  // One position pair per crossing of the two lifts. The lifts share a
  // segment of vertices through the base vertex; every rule below depends
  // only on data symmetric under swapping the two strands, so
  // linked(x,i,y,j) = -linked(y,j,x,i) holds pairwise.
  std::size_t fwd_same = common_prefix(Ap, Bp);
  std::size_t bwd_same = common_prefix(Am, Bm);
  if (fwd_same > 0 || bwd_same > 0) {
    // strands run together in the same direction: count at the segment start
    if (bwd_same != 0) return 0;
  } else {
    // opposite directions (or a single shared vertex): count at the segment
    // midpoint; for odd-length segments the midpoint is an edge, and the
    // crossing goes to its end with the generator-labeled outgoing edge
    std::size_t fwd_opp = common_prefix(Ap, Bm);
    std::size_t bwd_opp = common_prefix(Am, Bp);
    std::size_t q = fwd_opp + bwd_opp;
    if (q % 2 == 0) {
      if (bwd_opp != q / 2) return 0;
    } else if (bwd_opp == q / 2) {
      if (Ap.at(0) < 0) return 0;  // middle edge lies forward
    } else if (bwd_opp == q / 2 + 1) {
      if (Am.at(0) < 0) return 0;  // middle edge lies backward
    } else {
      return 0;
    }
  }
  return o1;
}

std::vector<LinkedPair> linked_pairs(const Word& x, const Word& y, const RibbonAtInfinity& rib) {
  std::vector<LinkedPair> out;
  if (x.empty() || y.empty()) return out;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j)
      if (int s = linked(x, i, y, j, rib); s != 0) out.push_back({i, j, s});
  return out;
}

long long self_intersection_comb(const UndirectedClass& x, const SurfacePresentation& s) {
  if (x.trivial()) return 0;
  auto [root, exp] = primitive_root(x.word());
  RibbonAtInfinity rib(s);
  long long count = 0;
  for (std::size_t i = 0; i < root.size(); ++i)
    for (std::size_t j = i + 1; j < root.size(); ++j)
      if (linked(root, i, root, j, rib) != 0) ++count;
  return count;
}

bool is_simple(const UndirectedClass& x, const SurfacePresentation& s) {
  if (x.trivial()) return true;
  auto [root, exp] = primitive_root(x.word());
  if (exp > 1) return is_peripheral(x, s);  // a proper power is taut only around a boundary
  return self_intersection_comb(x, s) == 0;
}

IntersectionCount intersection_number_comb(const UndirectedClass& x, const UndirectedClass& y,
                                           const SurfacePresentation& s) {
  if (x.trivial() || y.trivial()) return 0LL;
  s.require_word(x.word());
  s.require_word(y.word());
  auto [rx, mx] = primitive_root(x.word());
  auto [ry, my] = primitive_root(y.word());
  UndirectedClass rxu = UndirectedClass::of(rx), ryu = UndirectedClass::of(ry);
  if (rxu == ryu) {
    // powers of one primitive: disjoint parallel copies exist iff it is simple
    if (self_intersection_comb(rxu, s) == 0) return 0LL;
    return Unsupported{"powers of a common non-simple primitive"};
  }
  RibbonAtInfinity rib(s);
  long long count = 0;
  for (std::size_t i = 0; i < rx.size(); ++i)
    for (std::size_t j = 0; j < ry.size(); ++j)
      if (linked(rx, i, ry, j, rib) != 0) ++count;
  return count * mx * my;
}

}  // namespace twg
