#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "meridian/presentation.hpp"

namespace meridian {

struct EnumerationLimits {
  std::uint64_t max_cosets = 1'000'000;
  std::uint64_t max_steps = 100'000'000;
};

/// Complete right-action table of signed generators on cosets. Coset 0 is the
/// subgroup itself. Columns come in pairs: column(gen,+) = 2*gen,
/// column(gen,-) = 2*gen + 1.
class CosetTable {
 public:
  CosetTable() = default;
  CosetTable(std::size_t cosets, std::size_t generators)
      : n_(cosets), g_(generators), act_(cosets * generators * 2, -1) {}

  std::size_t coset_count() const { return n_; }
  std::size_t generator_count() const { return g_; }

  static std::size_t column(Letter l) {
    return 2 * static_cast<std::size_t>(l.gen) + (l.sign < 0 ? 1 : 0);
  }

  std::int32_t at(std::size_t coset, Letter l) const { return act_[coset * 2 * g_ + column(l)]; }
  std::int32_t at_col(std::size_t coset, std::size_t col) const {
    return act_[coset * 2 * g_ + col];
  }

  /// Sets coset.l = target and target.l^-1 = coset.
  void set(std::size_t coset, Letter l, std::int32_t target);

  /// Endpoint of tracing w from start; -1 if an entry is undefined.
  std::int32_t trace(std::size_t start, const Word& w) const;

  bool complete() const;

  /// BFS renumbering from coset 0 over columns in order; canonical for a
  /// given subgroup.
  CosetTable standardized() const;

  struct CheckReport {
    bool ok = true;
    std::string message;
  };

  /// Independent verification of all table invariants: completeness, mutually
  /// inverse generator actions, every relator closing at every coset, every
  /// subgroup generator fixing coset 0.
  CheckReport check(const Presentation& p, std::span<const Word> subgroup_gens = {}) const;

  friend bool operator==(const CosetTable&, const CosetTable&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t g_ = 0;
  std::vector<std::int32_t> act_;
};

}  // namespace meridian
