#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "meridian/curve_group.hpp"
#include "meridian/finite_target.hpp"
#include "meridian/snf.hpp"
#include "meridian/todd_coxeter.hpp"

namespace meridian {

/// Exact number of homomorphisms from the presented group into the target,
/// including the trivial one. Exhaustive search over generator-image tuples
/// with relator pruning after each assignment. Target order capped at 120.
std::uint64_t count_homs(const Presentation& p, const FiniteTarget& t);

/// Checked homomorphism whose generator images contain a non-commuting pair.
struct NonAbelianWitness {
  std::string target_name;
  std::vector<std::string> images;          // per generator, target element names
  std::pair<int, int> noncommuting_pair;    // generator indices
};

/// Abelian / NonAbelian verdicts are proofs; Unknown is an acceptable
/// outcome, never a guess.
struct Certificate {
  enum class Verdict { Abelian, NonAbelian, Unknown };
  Verdict verdict = Verdict::Unknown;
  std::optional<NonAbelianWitness> witness;

  std::string verdict_string() const;
};

/// First homomorphism (in deterministic search order) with non-commuting
/// generator images, if any.
std::optional<NonAbelianWitness> find_noncommuting_hom(const Presentation& p,
                                                       const FiniteTarget& t);

/// NonAbelian when a witness exists in one of the targets (or, for groups
/// enumerated to order <= 120, in their own regular representation); Abelian
/// when the enumerated order equals the order of the abelianization; Unknown
/// otherwise.
Certificate certify(const Presentation& p, EnumerationLimits limits = {},
                    std::span<const FiniteTarget> targets = default_certify_targets());

std::span<const FiniteTarget> default_certify_targets();

struct GroupSummary {
  std::optional<std::uint64_t> order;
  AbelianInvariants abelianization;
  std::vector<std::pair<std::string, std::uint64_t>> hom_counts;
  Certificate certificate;
};

struct PairSeparation {
  long long k = 1;
  GroupSummary group1;
  GroupSummary group2;
  bool separated = false;
  std::string separator;  // first differing invariant, empty when not separated
};

inline EnumerationLimits separation_default_limits() { return {50'000, 10'000'000}; }

/// For each k: pull both curve groups back, tabulate hom-count vectors into
/// S3, S4, Dic12, Q8 plus certificates, and declare separation when any
/// invariant differs.
std::vector<PairSeparation> separation_report(const CurveGroup& cg1, const CurveGroup& cg2,
                                              std::span<const long long> ks,
                                              EnumerationLimits limits =
                                                  separation_default_limits());

}  // namespace meridian
