#pragma once

#include <string>
#include <string_view>

#include "coskel/polytopes.hpp"

namespace coskel {

// Mini-language for naming polytope types:
//   polygon:M                     convex M-gon, M >= 3
//   simplex:N                     simplex with N facets, N >= 2
//   product:(SPEC,SPEC,...)       product; factors are polygons or simplices
//   wedge:R,N                     wedge of an R-gon with a simplex on N facets
// Throws input_error with the offending position on malformed input.
PolytopeType parse_polytope_spec(std::string_view text);

// Canonical rendering; parse(render(p)) == p.
std::string render_polytope_spec(const PolytopeType& p);

} // namespace coskel
