#pragma once

#include "pencilgit/wall.hpp"

namespace pencilgit {

/// Pencil text syntax:
///   "f=[a0,a1,a2,a3];g=[b0,b1,b2,b3]"
///   "plucker=[p01,p02,p03,p12,p13,p23]"   (must satisfy the quadric)
///   "wall:<rho>"  with rho an element or "inf"
///   "rep:<label>" with label in {Z1, Z2_0, Z2_1, Z2_2, Z3_1, Z3_2}
Pencil parse_pencil(const FieldPtr& k, const std::string& text);

WallParam parse_wall_param(const FieldPtr& k, const std::string& text);

} // namespace pencilgit
