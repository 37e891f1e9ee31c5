#pragma once

#include "meridian/curve_group.hpp"
#include "meridian/schreier.hpp"

namespace meridian {

/// Coset table of the kernel of the extended linking assignment inside the
/// extended group, built arithmetically rather than by enumeration: cosets
/// are the residues j in Z/d (coset 0 is the kernel), t acts by j -> j-1 and
/// each base generator by j -> j + linking(g). Exactly d cosets.
CosetTable kernel_coset_table(const ExtendedGroup& eg);

/// Presentation of the kernel of the extended linking assignment: the group
/// of the affine complement (curve plus a transverse line removed).
Presentation affine_group(const CurveGroup& cg, long long tietze_budget = kDefaultTietzeBudget);

/// The pull-back construction: the kernel of the extended linking assignment
/// with the central element t^d killed in its k-th power. Degree becomes k*d;
/// each surviving Schreier generator carries linking value equal to its
/// t-exponent sum mod k*d.
CurveGroup pullback_group(const CurveGroup& cg, long long k,
                          long long tietze_budget = kDefaultTietzeBudget);

/// Quotient by the cyclic central subgroup generated by w: appends w as a
/// relator. The caller asserts that w is central; that property is not
/// machine-checked.
Presentation cokernel_of_central(const Presentation& p, const Word& w);

/// Group of the complement of the (p,q,k) torus-type curve of degree p*q*k:
/// <a, b, c | a^q = b^p = c, c^k = 1> with linking a -> p, b -> q, c -> p*q.
/// Requires gcd(p, q) = 1.
CurveGroup torus_curve_group(long long p, long long q, long long k);

}  // namespace meridian
