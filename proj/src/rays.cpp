#include "twg/rays.hpp"

#include <stdexcept>

namespace twg {

std::size_t ray_compare_depth(const Ray& a, const Ray& b) {
  return a.period_length() + b.period_length();
}

bool ray_equal(const Ray& a, const Ray& b) {
  const std::size_t depth = ray_compare_depth(a, b);
  for (std::size_t k = 0; k < depth; ++k)
    if (a.at(k) != b.at(k)) return false;
  return true;
}

std::size_t common_prefix(const Ray& a, const Ray& b) {
  const std::size_t depth = ray_compare_depth(a, b);
  for (std::size_t k = 0; k < depth; ++k)
    if (a.at(k) != b.at(k)) return k;
  return depth;
}

RibbonAtInfinity::RibbonAtInfinity(const SurfacePresentation& s) {
  count_ = static_cast<int>(s.ribbon.size());
  pos_.fill(-1);
  for (int i = 0; i < count_; ++i) pos_[s.ribbon[i] + kMaxGenerators] = i;
}

int RibbonAtInfinity::orient_letters(Letter l1, Letter l2, Letter l3) const {
  int p1 = pos_[l1 + kMaxGenerators];
  int p2 = pos_[l2 + kMaxGenerators];
  int p3 = pos_[l3 + kMaxGenerators];
  int d2 = (p2 - p1 + count_) % count_;
  int d3 = (p3 - p1 + count_) % count_;
  return d2 < d3 ? 1 : -1;
}

int RibbonAtInfinity::cyclic_order3(const Ray& r1, const Ray& r2, const Ray& r3) const {
  Ray a = r1, b = r2, c = r3;
  // generous bound: beyond it some pair of rays must be equal
  const std::size_t bound =
      2 * (a.period_length() + b.period_length() + c.period_length()) + 4;
  for (std::size_t step = 0; step < bound; ++step) {
    Letter la = a.at(0), lb = b.at(0), lc = c.at(0);
    if (la == lb && lb == lc) {  // common prefix: descend
      a = a.advanced(1);
      b = b.advanced(1);
      c = c.advanced(1);
      continue;
    }
    if (la != lb && lb != lc && la != lc) return orient_letters(la, lb, lc);
    // exactly two agree; rotate the triple (cyclic invariance) so the
    // agreeing pair is (a, b) and c holds the reference side
    if (lb == lc) {
      Ray t = a; a = b; b = c; c = t;           // (b, c, a)
      la = a.at(0); lb = b.at(0);
    } else if (la == lc) {
      Ray t = c; c = b; b = a; a = t;           // (c, a, b)
      la = a.at(0); lb = b.at(0);
    }
    // two-ray descent into the common subtree; every end outside the
    // subtree, the reference side included, is seen through the back edge
    Ray u = a.advanced(1), v = b.advanced(1);
    Letter back = inverse(la);
    const std::size_t bound2 = u.period_length() + v.period_length() + 2;
    for (std::size_t k = 0; k <= bound2; ++k) {
      Letter lu = u.at(0), lv = v.at(0);
      if (lu != lv) return orient_letters(lu, lv, back);
      back = inverse(lu);
      u = u.advanced(1);
      v = v.advanced(1);
    }
    throw std::invalid_argument("cyclic_order3: coincident endpoints");
  }
  throw std::invalid_argument("cyclic_order3: coincident endpoints");
}

std::pair<Ray, Ray> rays_at(const Word& x, std::size_t i) {
  if (x.empty()) throw std::invalid_argument("rays_at: empty word");
  const std::size_t m = x.size();
  Ray forward(x, i);
  Ray backward(inverse(x), (m - (i % m)) % m);
  return {forward, backward};
}

}  // namespace twg
