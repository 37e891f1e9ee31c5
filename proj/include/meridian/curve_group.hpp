#pragma once

#include <string>
#include <vector>

#include "meridian/dsl.hpp"
#include "meridian/presentation.hpp"

namespace meridian {

/// A presented curve-complement group with its degree and per-generator
/// linking values in Z/degree. Valid when the linking assignment is a
/// homomorphism to Z/degree (every relator has weighted exponent sum 0) and is
/// surjective (gcd of the degree and all values is 1).
struct CurveGroup {
  Presentation presentation;
  long long degree = 1;
  std::vector<long long> linking;
};

struct LinkingReport {
  bool ok = true;
  std::string message;
};

/// Confirms both CurveGroup invariants; the report names the offending
/// relator or the gcd obstruction.
LinkingReport validate_linking(const CurveGroup& cg);

/// Normalizes linking residues into [0, degree). Does not validate.
CurveGroup make_curve_group(Presentation p, long long degree, std::vector<long long> linking);

/// From parsed DSL; requires a `group d=` header and a valid linking map.
CurveGroup curve_group_from_parsed(const ParsedGroup& parsed);

std::string serialize(const CurveGroup& cg);

/// The direct product Z x G presented by adjoining a central generator t:
/// relators are the base relators plus one commutator t g t^-1 g^-1 per base
/// generator. The degree-d linking assignment extends by t -> -1.
struct ExtendedGroup {
  Presentation presentation;  // generator 0 is t
  CurveGroup base;
  std::string t_name;

  /// Values of the extended linking assignment: t -> d-1, g -> linking(g).
  std::vector<long long> linking_assignment() const;
};

ExtendedGroup extended_group(const CurveGroup& cg);

}  // namespace meridian
