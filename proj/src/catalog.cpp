#include "meridian/catalog.hpp"

namespace meridian {

CurveGroup three_cuspidal_quartic() {
  const Word x = Word::generator(0);
  const Word y = Word::generator(1);
  Presentation p({"x", "y"},
                 {x.pow(6), x.pow(3) * y.pow(-2), y.inverse() * x * y * x});
  return make_curve_group(std::move(p), 4, {2, 1});
}

CurveGroup zariski_sextic_conic() {
  const Word a = Word::generator(0);
  const Word b = Word::generator(1);
  Presentation p({"a", "b"}, {a.pow(2), b.pow(3)});
  return make_curve_group(std::move(p), 6, {3, 2});
}

CurveGroup zariski_sextic_generic() {
  Presentation p({"m"}, {Word::generator(0).pow(6)});
  return make_curve_group(std::move(p), 6, {1});
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"quartic",
       "three-cuspidal quartic x^2y^2 + y^2z^2 + z^2x^2 - 2xyz(x+y+z) = 0; "
       "complement group is the binary dihedral (dicyclic) group of order 12",
       three_cuspidal_quartic()},
      {"sextic-conic",
       "sextic with six cusps lying on a conic; complement group is the free "
       "product Z/2 * Z/3",
       zariski_sextic_conic()},
      {"sextic-generic",
       "sextic with six cusps not on any conic; complement group is cyclic of "
       "order 6",
       zariski_sextic_generic()},
  };
  return entries;
}

const CatalogEntry* catalog_find(std::string_view name) {
  for (const CatalogEntry& e : catalog_entries()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

}  // namespace meridian
