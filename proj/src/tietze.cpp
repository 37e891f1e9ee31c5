#include "meridian/tietze.hpp"

#include <set>
#include <stdexcept>

namespace meridian {

namespace {

struct Simplifier {
  std::vector<std::string> gens;
  std::vector<Word> rels;  // cyclically reduced, non-empty
  long long moves = 0;
  long long budget;

  explicit Simplifier(const Presentation& p, long long budget_)
      : gens(p.generators()), rels(p.relators()), budget(budget_) {}

  bool spent() const { return moves >= budget; }

  bool drop_trivial_and_duplicates() {
    std::set<Word> seen;
    std::vector<Word> kept;
    kept.reserve(rels.size());
    bool changed = false;
    for (const Word& r : rels) {
      if (spent()) {
        kept.push_back(r);
        continue;
      }
      Word canon = relator_canonical(r);
      if (canon.empty() || !seen.insert(std::move(canon)).second) {
        ++moves;
        changed = true;
        continue;
      }
      kept.push_back(r);
    }
    rels = std::move(kept);
    return changed;
  }

  // Substitute gen := replacement in every relator, then delete the generator.
  void eliminate(std::int32_t gen, const Word& replacement) {
    const Word repl_inv = replacement.inverse();
    for (Word& r : rels) {
      std::vector<Letter> out;
      out.reserve(r.size());
      for (const Letter& l : r) {
        if (l.gen != gen) {
          out.push_back(l);
          continue;
        }
        const Word& repl = l.sign > 0 ? replacement : repl_inv;
        out.insert(out.end(), repl.begin(), repl.end());
      }
      r = cyclic_reduce(Word(std::move(out)));
    }
    gens.erase(gens.begin() + gen);
    for (Word& r : rels) {
      std::vector<Letter> out;
      out.reserve(r.size());
      for (Letter l : r) {
        if (l.gen > gen) --l.gen;
        out.push_back(l);
      }
      r = Word(std::move(out));
    }
    std::vector<Word> kept;
    kept.reserve(rels.size());
    for (Word& r : rels) {
      if (!r.empty()) kept.push_back(std::move(r));
    }
    rels = std::move(kept);
  }

  // First relator of length <= 2 that defines a generator; the higher-indexed
  // generator of a two-letter relator is the one removed.
  bool try_eliminate_generator() {
    for (const Word& r : rels) {
      if (r.size() == 1) {
        ++moves;
        eliminate(r[0].gen, Word());
        return true;
      }
      if (r.size() == 2 && r[0].gen != r[1].gen) {
        const Letter a = r[0], b = r[1];
        const Letter victim = a.gen > b.gen ? a : b;
        const Letter other = a.gen > b.gen ? b : a;
        // victim^s * other^t = 1 up to rotation, so victim = other^(-t*s).
        const Letter image{other.gen, static_cast<std::int8_t>(-other.sign * victim.sign)};
        ++moves;
        eliminate(victim.gen, Word({image}));
        return true;
      }
    }
    return false;
  }

  static Word rotation(const Word& w, std::size_t s) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out.push_back(w[(s + i) % w.size()]);
    return Word(std::move(out));
  }

  // Matches prefix u (length take) of m against the cyclic word r at offset.
  static bool matches_at(const Word& r, std::size_t offset, const Word& m, std::size_t take) {
    for (std::size_t i = 0; i < take; ++i) {
      if (r[(offset + i) % r.size()] != m[i]) return false;
    }
    return true;
  }

  // Replace a majority piece of one relator with the shorter complement of
  // another. Applies the first strictly shortening rewrite found.
  bool try_substitution() {
    for (std::size_t i = 0; i < rels.size(); ++i) {
      const Word& r = rels[i];
      for (std::size_t j = 0; j < rels.size(); ++j) {
        if (j == i) continue;
        const Word& s = rels[j];
        const std::size_t h = s.size();
        if (h > r.size()) continue;
        const Word s_inv = s.inverse();
        for (const Word* base : {&s, &s_inv}) {
          for (std::size_t rot = 0; rot < h; ++rot) {
            const Word m = rotation(*base, rot);
            const std::size_t max_take = h < r.size() ? h : r.size();
            for (std::size_t take = max_take; take * 2 > h; --take) {
              for (std::size_t offset = 0; offset < r.size(); ++offset) {
                if (!matches_at(r, offset, m, take)) continue;
                // r ~ u w with u = prefix of m; m = u v implies u = v^-1.
                std::vector<Letter> repl;
                for (std::size_t x = take; x < h; ++x) repl.push_back(m[x]);
                Word v(std::move(repl));
                std::vector<Letter> rest;
                for (std::size_t x = take; x < r.size(); ++x) {
                  rest.push_back(r[(offset + x) % r.size()]);
                }
                Word candidate = cyclic_reduce(v.inverse() * Word(std::move(rest)));
                if (candidate.size() < r.size()) {
                  ++moves;
                  if (candidate.empty()) {
                    rels.erase(rels.begin() + i);
                  } else {
                    rels[i] = std::move(candidate);
                  }
                  return true;
                }
              }
            }
          }
        }
      }
    }
    return false;
  }

  Presentation run() {
    bool progress = true;
    while (progress && !spent()) {
      progress = drop_trivial_and_duplicates();
      if (spent()) break;
      if (try_eliminate_generator()) {
        progress = true;
        continue;
      }
      if (try_substitution()) {
        progress = true;
        continue;
      }
    }
    return Presentation(std::move(gens), std::move(rels));
  }
};

}  // namespace

Presentation tietze_simplify(const Presentation& p, long long budget) {
  if (budget <= 0) throw std::invalid_argument("tietze budget must be positive");
  return Simplifier(p, budget).run();
}

}  // namespace meridian
