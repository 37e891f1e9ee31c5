#include "meridian/schreier.hpp"

#include <stdexcept>

namespace meridian {

SchreierData schreier_transversal(const CosetTable& t) {
  if (!t.complete()) throw std::invalid_argument("coset table must be complete");
  const std::size_t n = t.coset_count();
  const std::size_t g = t.generator_count();

  SchreierData out;
  out.transversal.assign(n, Word());
  std::vector<bool> visited(n, false);
  visited[0] = true;
  std::vector<std::int32_t> bfs{0};
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    const std::size_t c = static_cast<std::size_t>(bfs[head]);
    for (std::int32_t gen = 0; gen < static_cast<std::int32_t>(g); ++gen) {
      const std::int32_t d = t.at(c, Letter{gen, 1});
      if (!visited[static_cast<std::size_t>(d)]) {
        visited[static_cast<std::size_t>(d)] = true;
        out.transversal[static_cast<std::size_t>(d)] =
            out.transversal[c] * Word::generator(gen);
        bfs.push_back(d);
      }
    }
  }
  if (bfs.size() != n) {
    // Positive letters act by permutations on a finite complete table, so the
    // whole table is reachable from coset 0.
    throw std::logic_error("positive-letter BFS did not reach every coset");
  }

  out.sgen_at.assign(n, std::vector<int>(g, -1));
  for (std::size_t c = 0; c < n; ++c) {
    for (std::int32_t gen = 0; gen < static_cast<std::int32_t>(g); ++gen) {
      const std::size_t d = static_cast<std::size_t>(t.at(c, Letter{gen, 1}));
      const Word forward = free_reduce(out.transversal[c] * Word::generator(gen));
      if (forward == out.transversal[d]) continue;  // tree edge
      const int id = static_cast<int>(out.sgen_words.size());
      out.sgen_at[c][static_cast<std::size_t>(gen)] = id;
      out.sgen_words.push_back(free_reduce(forward * out.transversal[d].inverse()));
      out.sgen_slots.emplace_back(static_cast<int>(c), static_cast<int>(gen));
    }
  }
  return out;
}

Word schreier_rewrite(const Word& w, std::size_t start, const CosetTable& t,
                      const SchreierData& s) {
  std::vector<Letter> out;
  std::size_t c = start;
  for (const Letter& l : w) {
    const std::size_t d = static_cast<std::size_t>(t.at(c, l));
    if (l.sign > 0) {
      const int id = s.sgen_at[c][static_cast<std::size_t>(l.gen)];
      if (id >= 0) out.push_back(Letter{id, 1});
    } else {
      const int id = s.sgen_at[d][static_cast<std::size_t>(l.gen)];
      if (id >= 0) out.push_back(Letter{id, -1});
    }
    c = d;
  }
  if (c != start) {
    throw std::invalid_argument("word does not lie in the subgroup of the start coset");
  }
  return free_reduce(Word(std::move(out)));
}

Presentation schreier_presentation_raw(const Presentation& p, const CosetTable& t,
                                       const SchreierData& s) {
  std::vector<std::string> names;
  names.reserve(s.sgen_words.size());
  for (std::size_t i = 0; i < s.sgen_words.size(); ++i) {
    names.push_back("u" + std::to_string(i));
  }
  std::vector<Word> relators;
  relators.reserve(t.coset_count() * p.relators().size());
  for (std::size_t c = 0; c < t.coset_count(); ++c) {
    for (const Word& r : p.relators()) {
      relators.push_back(schreier_rewrite(r, c, t, s));
    }
  }
  return Presentation(std::move(names), std::move(relators));
}

Presentation subgroup_presentation(const Presentation& p, const CosetTable& t,
                                   long long tietze_budget) {
  const SchreierData s = schreier_transversal(t);
  return tietze_simplify(schreier_presentation_raw(p, t, s), tietze_budget);
}

}  // namespace meridian
