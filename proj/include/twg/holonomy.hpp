#pragma once

#include <optional>
#include <vector>

#include "twg/mobius.hpp"
#include "twg/surface.hpp"

namespace twg {

// A discrete faithful representation of the surface group: one matrix per
// generator, a point of Teichmueller space.
class Holonomy {
 public:
  Holonomy(const SurfacePresentation& surface, std::vector<Mobius> generators);

  static Holonomy from_json_file(const SurfacePresentation& s, const std::string& path);
  static Holonomy from_json_text(const SurfacePresentation& s, const std::string& text);

  // Shipped metrics; throws EngineError for surfaces without one.
  static Holonomy standard(const SurfacePresentation& s);
  static bool has_standard(const SurfacePresentation& s);

  const SurfacePresentation& surface() const { return *surface_; }
  const Mobius& generator(int k) const { return gens_[k]; }

  Mobius evaluate(const Word& w) const;
  double length(const Word& w) const { return translation_length(evaluate(w)); }
  bool hyperbolic(const Word& w) const { return classify(evaluate(w)) == IsometryType::hyperbolic; }

  // Checks generator types and peripheral classes: punctures parabolic,
  // boundary classes hyperbolic. Throws EngineError on violation.
  void validate(bool punctures) const;

 private:
  const SurfacePresentation* surface_;
  std::vector<Mobius> gens_;
  std::vector<Mobius> inv_;
};

}  // namespace twg
