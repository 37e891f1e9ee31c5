#pragma once

#include <utility>
#include <vector>

#include "meridian/coset_table.hpp"
#include "meridian/tietze.hpp"

namespace meridian {

/// Schreier transversal plus the subgroup-generator index of every table
/// slot. A slot (coset, generator) is trivial (-1) iff transversal[coset] * g
/// freely equals transversal[coset * g]; the nontrivial slots carry the
/// Schreier generators transversal[c] * g * transversal[c*g]^-1.
struct SchreierData {
  std::vector<Word> transversal;
  std::vector<std::vector<int>> sgen_at;          // [coset][gen] -> id or -1
  std::vector<Word> sgen_words;                   // id -> word over parent generators
  std::vector<std::pair<int, int>> sgen_slots;    // id -> (coset, gen)
};

/// Breadth-first transversal over positive generator letters in generator
/// order, starting at coset 0; prefix-closed and deterministic. Requires a
/// complete table.
SchreierData schreier_transversal(const CosetTable& t);

/// Rewrites a parent-group word that stabilizes `start` into a word over the
/// Schreier generators.
Word schreier_rewrite(const Word& w, std::size_t start, const CosetTable& t,
                      const SchreierData& s);

/// Unsimplified subgroup presentation: generators u0, u1, ... for the
/// nontrivial slots, relators the rewrites of each parent relator from each
/// coset in (coset, relator) order.
Presentation schreier_presentation_raw(const Presentation& p, const CosetTable& t,
                                       const SchreierData& s);

/// Presentation of the subgroup whose coset table is t, passed through
/// tietze_simplify.
Presentation subgroup_presentation(const Presentation& p, const CosetTable& t,
                                   long long tietze_budget = kDefaultTietzeBudget);

}  // namespace meridian
