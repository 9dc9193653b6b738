#include "twg/mobius.hpp"

#include <cmath>

namespace twg {

Mobius Mobius::from_rows(double a, double b, double c, double d) {
  double det = a * d - b * c;
  if (!(det > 0))
    throw EngineError("matrix must have positive determinant (orientation preserving)");
  double s = std::sqrt(det);
  Mobius m{a / s, b / s, c / s, d / s};
  if (std::abs(m.det() - 1.0) > tol::det) throw EngineError("matrix normalization failed");
  return m;
}

void Mobius::apply(double& x, double& y) const {
  // (a z + b) / (c z + d) on z = x + iy
  double px = a * x + b, py = a * y;
  double qx = c * x + d, qy = c * y;
  double n = qx * qx + qy * qy;
  double rx = (px * qx + py * qy) / n;
  double ry = (py * qx - px * qy) / n;
  x = rx;
  y = ry;
}

IsometryType classify(const Mobius& m) {
  double t = std::abs(m.trace());
  if (t > 2 + tol::classify) return IsometryType::hyperbolic;
  if (t >= 2 - tol::classify) return IsometryType::parabolic;
  return IsometryType::elliptic;
}

double translation_length(const Mobius& m) {
  if (classify(m) != IsometryType::hyperbolic)
    throw EngineError("translation length undefined: element is not hyperbolic (trace " +
                      std::to_string(m.trace()) + ")");
  return 2.0 * std::acosh(std::abs(m.trace()) / 2.0);
}

bool BoundaryPoint::finite() const { return std::abs(v) > tol::near_tangent * std::abs(u); }

namespace {
double pdet(const BoundaryPoint& p, const BoundaryPoint& q) { return p.u * q.v - q.u * p.v; }
}  // namespace

int orient(const BoundaryPoint& p1, const BoundaryPoint& p2, const BoundaryPoint& p3) {
  double s = pdet(p1, p2) * pdet(p2, p3) * pdet(p3, p1);
  return s > 0 ? 1 : -1;
}

Axis axis(const Mobius& m) {
  double len = translation_length(m);
  double tr = m.trace();
  double disc = tr * tr - 4;
  double s = std::sqrt(disc);
  double lam1 = (tr + s) / 2, lam2 = (tr - s) / 2;
  auto evec = [&](double lam) {
    // eigenvector rows: (a - lam, b) and (c, d - lam)
    BoundaryPoint v1{m.b, lam - m.a}, v2{lam - m.d, m.c};
    BoundaryPoint v = std::abs(v1.u) + std::abs(v1.v) >= std::abs(v2.u) + std::abs(v2.v) ? v1 : v2;
    double n = std::hypot(v.u, v.v);
    return BoundaryPoint{v.u / n, v.v / n};
  };
  double att_lam = std::abs(lam1) > std::abs(lam2) ? lam1 : lam2;
  double rep_lam = std::abs(lam1) > std::abs(lam2) ? lam2 : lam1;
  return Axis{evec(rep_lam), evec(att_lam), len};
}

bool axes_cross(const Axis& a1, const Axis& a2) {
  const BoundaryPoint* pts[4] = {&a1.repelling, &a1.attracting, &a2.repelling, &a2.attracting};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (std::abs(pdet(*pts[i], *pts[j])) < tol::endpoint) {
        if ((i < 2) == (j < 2)) throw EngineError("degenerate axis: endpoints coincide");
        return false;  // shared endpoint between the two axes: no transversal crossing
      }
  int o1 = orient(a1.repelling, a2.repelling, a1.attracting);
  int o2 = orient(a1.repelling, a2.attracting, a1.attracting);
  return o1 != o2;
}

Mobius fractional_along_axis(const Mobius& m, double t) {
  Axis ax = axis(m);
  // columns: attracting and repelling eigen-directions
  double au = ax.attracting.u, av = ax.attracting.v;
  double ru = ax.repelling.u, rv = ax.repelling.v;
  double det = au * rv - ru * av;
  double e = std::exp(t / 2), ei = std::exp(-t / 2);
  // V diag(e, ei) V^-1 with V = [att | rep]
  double a = (au * e * rv - ru * ei * av) / det;
  double b = (-au * e * ru + ru * ei * au) / det;
  double c = (av * e * rv - rv * ei * av) / det;
  double d = (-av * e * ru + rv * ei * au) / det;
  return Mobius{a, b, c, d};
}

}  // namespace twg
