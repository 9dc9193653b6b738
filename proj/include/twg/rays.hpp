#pragma once

#include <array>
#include <utility>

#include "twg/surface.hpp"
#include "twg/words.hpp"

namespace twg {

// One end of the free group: the eventually periodic infinite reduced word
// read along a half-line of a curve lift through the base vertex.
class Ray {
 public:
  Ray() = default;
  Ray(Word period, std::size_t phase) : period_(std::move(period)), phase_(phase % period_.size()) {}

  Letter at(std::size_t k) const { return period_[(phase_ + k) % period_.size()]; }
  std::size_t period_length() const { return period_.size(); }
  Ray advanced(std::size_t k) const { return Ray(period_, phase_ + k); }

 private:
  Word period_;
  std::size_t phase_ = 0;
};

// Comparison depth that certifies equality of two periodic rays (Fine-Wilf).
std::size_t ray_compare_depth(const Ray& a, const Ray& b);
bool ray_equal(const Ray& a, const Ray& b);
// Length of the common prefix, capped at the Fine-Wilf depth.
std::size_t common_prefix(const Ray& a, const Ray& b);

// The circle at infinity of the surface's universal cover, modeled on the
// planar tree over the one-vertex ribbon graph.
class RibbonAtInfinity {
 public:
  explicit RibbonAtInfinity(const SurfacePresentation& s);

  // +1 if walking the ribbon cycle from l1 reaches l2 before l3.
  int orient_letters(Letter l1, Letter l2, Letter l3) const;

  // Circular orientation of three pairwise distinct ends.
  // Throws std::invalid_argument on coincident ends.
  int cyclic_order3(const Ray& r1, const Ray& r2, const Ray& r3) const;

 private:
  std::array<int, 2 * kMaxGenerators + 1> pos_{};  // letter -> ribbon position
  int count_ = 0;
};

// The forward and backward half-lines of the lift of x through the base
// vertex at position i: forward reads rotated(x, i) repeated, backward the
// matching rotation of x^-1.
std::pair<Ray, Ray> rays_at(const Word& x, std::size_t i);

}  // namespace twg
