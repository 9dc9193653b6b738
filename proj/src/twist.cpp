#include "twg/twist.hpp"

namespace twg {

Holonomy twist(const Holonomy& rho, double t) {
  const auto& s = rho.surface();
  if (s.name != "torus1" && s.name != "sphere4")
    throw EngineError("twist deformation supported on torus1 and sphere4 only (along a)");
  // E_t shares the axis of rho(a); negative parameter realizes the left
  // twist convention (angles decrease as t grows)
  Mobius e = fractional_along_axis(rho.generator(0), -t);
  std::vector<Mobius> gens;
  gens.push_back(rho.generator(0));
  gens.push_back(e * rho.generator(1));
  for (int k = 2; k < s.generators; ++k) gens.push_back(rho.generator(k));
  return Holonomy(s, std::move(gens));
}

std::vector<double> angle_along_twist(const Holonomy& rho, const Word& y, const Crossing& c,
                                      const std::vector<double>& t_grid) {
  Word a{static_cast<Letter>(1)};
  std::vector<double> out;
  out.reserve(t_grid.size());
  for (double t : t_grid) {
    Holonomy rt = twist(rho, t);
    CrossingEngine eng(rt);
    out.push_back(eng.at_witness(a, y, c.witness).phi);
  }
  return out;
}

}  // namespace twg
