#pragma once

#include <string>

#include "mckay3d/ct.hpp"
#include "mckay3d/recipe.hpp"

namespace mckay3d {

// Picture of the junior simplex as an equilateral triangle: the
// triangulation, the edge/vertex markings, and — for a nontrivial chi — the
// per-character subdivision areas as fills.  chi = 0 draws the plain marked
// triangulation.  Display-only; coordinates are floating point here.
std::string render_svg(const CT& ct, const Recipe& recipe, int chi);
std::string render_tikz(const CT& ct, const Recipe& recipe, int chi);

}  // namespace mckay3d
