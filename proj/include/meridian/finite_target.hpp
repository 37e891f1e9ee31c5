#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "meridian/coset_table.hpp"

namespace meridian {

/// A small finite group given by its full multiplication table, used as the
/// codomain of homomorphism searches. Element 0 is the identity. Construction
/// verifies the group axioms outright (the tables here are tiny).
class FiniteTarget {
 public:
  static FiniteTarget from_table(std::string name, std::vector<std::string> element_names,
                                 std::vector<int> table);
  /// Closes degree <= 8 permutation generators under composition.
  static FiniteTarget from_permutations(std::string name, int degree,
                                        const std::vector<std::vector<int>>& generators);
  static FiniteTarget cyclic(int n);
  static FiniteTarget symmetric(int n);
  static FiniteTarget quaternion8();
  static FiniteTarget dicyclic12();
  static FiniteTarget direct_product(const FiniteTarget& a, const FiniteTarget& b);

  const std::string& name() const { return name_; }
  std::size_t order() const { return names_.size(); }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order() + b]; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  bool commute(int a, int b) const { return mul(a, b) == mul(b, a); }
  const std::string& element_name(int i) const { return names_[static_cast<std::size_t>(i)]; }

  /// S3, S4, Dic12, Q8, Z2..Z12 (the groups that separate everything in the
  /// curve catalog).
  static const std::vector<FiniteTarget>& builtins();
  static std::optional<FiniteTarget> by_name(std::string_view name);

 private:
  FiniteTarget() = default;
  void finalize();  // inverse table + axiom verification

  std::string name_;
  std::vector<std::string> names_;
  std::vector<int> table_;
  std::vector<int> inverse_;
};

/// The regular representation of the group whose trivial-subgroup coset table
/// is given: elements are cosets, products read off by tracing transversal
/// words. Independent route to a multiplication table for cross-checks.
FiniteTarget regular_representation(std::string name, const Presentation& p,
                                    const CosetTable& table);

}  // namespace meridian
