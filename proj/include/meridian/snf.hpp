#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "meridian/intmatrix.hpp"
#include "meridian/presentation.hpp"

namespace meridian {

/// Smith decomposition D = U * A * V with U, V unimodular and D diagonal with
/// d1 | d2 | ... , all di >= 0.
struct SNFResult {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
};

SNFResult smith_normal_form(const IntMatrix& a);

/// Invariants of a finitely generated abelian group: free rank plus the
/// elementary divisor chain (entries >= 2, each dividing the next).
struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;

  /// Group order, or nullopt when infinite (free rank > 0).
  std::optional<Int> group_order() const;
  std::string to_string() const;

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Relator-exponent-sum matrix, relators x generators.
IntMatrix relation_matrix(const Presentation& p);

/// H1 of the presented group: cokernel invariants of the relation matrix.
AbelianInvariants abelianization(const Presentation& p);

/// True iff gen -> values[gen] defines a homomorphism to Z/modulus, i.e. every
/// relator's weighted exponent sum vanishes mod modulus.
bool hom_to_cyclic_consistent(const Presentation& p, std::span<const long long> values,
                              long long modulus);

}  // namespace meridian
