#include "twg/holonomy.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace twg {

Holonomy::Holonomy(const SurfacePresentation& surface, std::vector<Mobius> generators)
    : surface_(&surface), gens_(std::move(generators)) {
  if (static_cast<int>(gens_.size()) != surface.generators)
    throw EngineError("holonomy: generator count mismatch for " + surface.name);
  for (const auto& g : gens_) {
    if (std::abs(g.det() - 1.0) > tol::det) throw EngineError("holonomy: non-unimodular generator");
    if (classify(g) != IsometryType::hyperbolic)
      throw EngineError("holonomy: generator image must be hyperbolic");
    inv_.push_back(g.inverse());
  }
}

Mobius Holonomy::evaluate(const Word& w) const {
  Mobius m;
  for (Letter l : w) m = m * (l > 0 ? gens_[l - 1] : inv_[-l - 1]);
  return m;
}

void Holonomy::validate(bool punctures) const {
  for (const auto& p : surface_->peripheral) {
    Mobius m = evaluate(p.word());
    if (punctures) {
      if (std::abs(std::abs(m.trace()) - 2.0) > tol::classify)
        throw EngineError("peripheral class " + word_to_string(p.word()) +
                          " is not parabolic: trace " + std::to_string(m.trace()));
    } else {
      if (classify(m) != IsometryType::hyperbolic)
        throw EngineError("peripheral class " + word_to_string(p.word()) +
                          " is not hyperbolic: trace " + std::to_string(m.trace()));
    }
  }
}

Holonomy Holonomy::standard(const SurfacePresentation& s) {
  if (s.name == "torus1") {
    Holonomy h(s, {Mobius::from_rows(1, 1, 1, 2), Mobius::from_rows(1, -1, -1, 2)});
    // traces 3, 3, 3 and parabolic commutator, checked at load
    for (const char* w : {"a", "b", "ab"})
      if (std::abs(h.evaluate(word_from_string(w)).trace() - 3.0) > tol::classify)
        throw EngineError("torus1 standard holonomy trace check failed");
    if (std::abs(h.evaluate(word_from_string("abAB")).trace() + 2.0) > tol::classify)
      throw EngineError("torus1 standard holonomy: commutator is not parabolic");
    h.validate(true);
    return h;
  }
  if (s.name == "pants") {
    // trace coordinates (x, y, z) = (-3, -3, -3); classical three-holed
    // sphere discreteness criterion: all three boundary traces <= -2
    const double x = -3, y = -3, z = -3;
    const double zeta = (z - std::sqrt(z * z - 4)) / 2;
    Holonomy h(s, {Mobius::from_rows(x, 1, -1, 0), Mobius::from_rows(0, -zeta, 1 / zeta, y)});
    for (const char* w : {"a", "b", "ab"})
      if (std::abs(h.evaluate(word_from_string(w)).trace() - (-3.0)) > tol::classify)
        throw EngineError("pants standard holonomy trace check failed");
    h.validate(false);
    return h;
  }
  throw EngineError("no standard holonomy shipped for surface '" + s.name +
                    "'; supply one with --holonomy");
}

bool Holonomy::has_standard(const SurfacePresentation& s) {
  return s.name == "torus1" || s.name == "pants";
}

Holonomy Holonomy::from_json_text(const SurfacePresentation& s, const std::string& text) {
  auto j = nlohmann::json::parse(text);
  if (j.contains("surface") && j.at("surface").get<std::string>() != s.name)
    throw EngineError("holonomy config is for surface '" +
                      j.at("surface").get<std::string>() + "', expected '" + s.name + "'");
  std::vector<Mobius> gens;
  const auto& mats = j.at("matrices");
  for (int k = 1; k <= s.generators; ++k) {
    std::string key(1, letter_to_char(static_cast<Letter>(k)));
    const auto& m = mats.at(key);
    gens.push_back(Mobius::from_rows(m.at(0).at(0), m.at(0).at(1), m.at(1).at(0), m.at(1).at(1)));
  }
  Holonomy h(s, std::move(gens));
  if (j.contains("peripheral_checks")) {
    for (const auto& chk : j.at("peripheral_checks")) {
      Mobius m = h.evaluate(word_from_string(chk.at("word").get<std::string>()));
      std::string type = chk.at("type").get<std::string>();
      if (type == "parabolic") {
        if (std::abs(std::abs(m.trace()) - 2.0) > tol::classify)
          throw EngineError("peripheral check failed: " + chk.at("word").get<std::string>() +
                            " not parabolic");
      } else if (type == "hyperbolic") {
        if (classify(m) != IsometryType::hyperbolic)
          throw EngineError("peripheral check failed: " + chk.at("word").get<std::string>() +
                            " not hyperbolic");
      } else {
        throw EngineError("peripheral check type must be parabolic or hyperbolic");
      }
      if (chk.contains("trace") && !chk.at("trace").is_null()) {
        if (std::abs(m.trace() - chk.at("trace").get<double>()) > tol::classify)
          throw EngineError("peripheral trace check failed for " +
                            chk.at("word").get<std::string>());
      }
    }
  }
  return h;
}

Holonomy Holonomy::from_json_file(const SurfacePresentation& s, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw EngineError("cannot open holonomy config: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(s, ss.str());
}

}  // namespace twg
