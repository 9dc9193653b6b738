#pragma once

#include <stdexcept>
#include <string>

#include "twg/words.hpp"

namespace twg {

// Shared numeric policy of the hyperbolic engine.
namespace tol {
inline constexpr double det = 1e-12;         // |ad - bc - 1| bound
inline constexpr double classify = 1e-9;     // |trace| - 2 margin for types
inline constexpr double endpoint = 1e-9;     // axis endpoint separation
inline constexpr double s_snap = 1e-9;       // window boundary snapping
inline constexpr double residual = 1e-8;     // cosh identity contract
inline constexpr double angle_margin = 1e-6; // strict monotonicity margin
inline constexpr double near_tangent = 1e-10;
}  // namespace tol

struct EngineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class IsometryType { hyperbolic, parabolic, elliptic };

// Real Mobius transformation of the upper half-plane, unit determinant.
struct Mobius {
  double a = 1, b = 0, c = 0, d = 1;

  static Mobius identity() { return {}; }
  // Normalizes to det 1; throws on det <= 0 or a degenerate matrix.
  static Mobius from_rows(double a, double b, double c, double d);

  double trace() const { return a + d; }
  double det() const { return a * d - b * c; }
  Mobius inverse() const { return {d, -b, -c, a}; }
  friend Mobius operator*(const Mobius& m, const Mobius& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
            m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
  }

  // Action on the upper half-plane, z = (x, y), y > 0.
  void apply(double& x, double& y) const;
};

IsometryType classify(const Mobius& m);

// 2*arccosh(|tr|/2); throws EngineError unless hyperbolic.
double translation_length(const Mobius& m);

// A boundary point of the upper half-plane as a projective direction.
struct BoundaryPoint {
  double u = 0, v = 0;  // point u/v on R u {inf}
  bool finite() const;
  double value() const { return u / v; }  // only when finite()
};

// Orientation of three boundary points (counterclockwise positive).
int orient(const BoundaryPoint& p1, const BoundaryPoint& p2, const BoundaryPoint& p3);

// Oriented invariant geodesic of a hyperbolic isometry.
struct Axis {
  BoundaryPoint repelling;
  BoundaryPoint attracting;
  double length = 0;
};

Axis axis(const Mobius& m);  // throws EngineError unless hyperbolic

// True iff the endpoint pairs interleave on the boundary circle; throws
// EngineError("indeterminate") when endpoints nearly coincide.
bool axes_cross(const Axis& a1, const Axis& a2);

// The matrix sharing m's axis with translation length |t|, translating
// toward the attracting (t > 0) or repelling (t < 0) end of m.
Mobius fractional_along_axis(const Mobius& m, double t);

}  // namespace twg
