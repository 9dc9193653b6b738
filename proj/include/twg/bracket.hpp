#pragma once

#include "twg/lincomb.hpp"
#include "twg/linking.hpp"
#include "twg/surface.hpp"

namespace twg {

// Goldman bracket of directed classes: sum over combinatorial intersection
// points of sign * <loop product>.
DirectedComb goldman_bracket(const DirectedClass& x, const DirectedClass& y,
                             const SurfacePresentation& s);

// TWG bracket of undirected classes: 0-smoothing minus infinity-smoothing
// at every intersection point.
UndirectedComb twg_bracket(const UndirectedClass& x, const UndirectedClass& y,
                           const SurfacePresentation& s);

// The same bracket through the direction-forgetting map applied to
// [lift(x), lift(y)] + [lift(x), lift(y)^-1]; equals twg_bracket.
UndirectedComb twg_from_goldman(const UndirectedClass& x, const UndirectedClass& y,
                                const SurfacePresentation& s);

UndirectedComb u_map(const DirectedComb& c);

// Bilinear extensions.
DirectedComb goldman_bracket(const DirectedComb& x, const DirectedComb& y,
                             const SurfacePresentation& s);
UndirectedComb twg_bracket(const UndirectedComb& x, const UndirectedComb& y,
                           const SurfacePresentation& s);

// [[x,y],z] + [[y,z],x] + [[z,x],y]; identically zero.
UndirectedComb jacobi_sum(const UndirectedClass& x, const UndirectedClass& y,
                          const UndirectedClass& z, const SurfacePresentation& s);

// Poisson bracket on the symmetric algebra, extended by the Leibniz rule.
SymPoly poisson_bracket_sym(const SymPoly& p, const SymPoly& q, const SurfacePresentation& s);

}  // namespace twg
