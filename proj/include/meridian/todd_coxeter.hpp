#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>

#include "meridian/coset_table.hpp"

namespace meridian {

struct EnumerationStats {
  std::uint64_t cosets_defined = 0;
  std::uint64_t live = 0;
  std::uint64_t collapses = 0;
  std::uint64_t steps = 0;
};

/// Resource exhaustion is a result, not an error: it never asserts that the
/// index is infinite.
struct Exhausted {
  EnumerationStats stats;
};

using EnumerationResult = std::variant<CosetTable, Exhausted>;

/// HLT-style coset enumeration with immediate coincidence processing. On
/// success the table is complete, standardized, and its size is the index of
/// the subgroup generated by subgroup_gens. Deterministic for fixed inputs.
EnumerationResult enumerate_cosets(const Presentation& p, std::span<const Word> subgroup_gens,
                                   EnumerationLimits limits = {});

/// Order of the presented group via enumeration over the trivial subgroup;
/// nullopt when the limits are exhausted.
std::optional<std::uint64_t> group_order(const Presentation& p, EnumerationLimits limits = {});

}  // namespace meridian
