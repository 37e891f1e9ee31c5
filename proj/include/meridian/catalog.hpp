#pragma once

#include <string>
#include <vector>

#include "meridian/curve_group.hpp"
#include "meridian/pipeline.hpp"

namespace meridian {

/// Degree-4 curve with three cusps (x^2y^2 + y^2z^2 + z^2x^2 - 2xyz(x+y+z) = 0),
/// the classical curve whose complement group is the binary dihedral group of
/// order 12. Stored in the standard dicyclic presentation
/// <x, y | x^6, x^3 y^-2, y^-1 x y x> with linking x -> 2, y -> 1.
CurveGroup three_cuspidal_quartic();

/// Sextic with six cusps lying on a conic; complement group is the free
/// product Z/2 * Z/3: <a, b | a^2, b^3>, linking a -> 3, b -> 2.
CurveGroup zariski_sextic_conic();

/// Sextic with six cusps not on any conic; complement group is cyclic of
/// order 6: <m | m^6>, linking m -> 1.
CurveGroup zariski_sextic_generic();

struct CatalogEntry {
  std::string name;
  std::string description;
  CurveGroup group;
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry* catalog_find(std::string_view name);

}  // namespace meridian
