#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace meridian {

/// One signed generator symbol: generator index and exponent sign (+1 or -1).
struct Letter {
  std::int32_t gen = 0;
  std::int8_t sign = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

inline Letter inverse(Letter l) {
  return {l.gen, static_cast<std::int8_t>(-l.sign)};
}

/// A word over a generator alphabet: a flat sequence of signed letters.
/// Words are not reduced automatically; presentations and every pipeline
/// output store freely reduced words only.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static Word generator(std::int32_t gen, int sign = 1) {
    return Word({Letter{gen, static_cast<std::int8_t>(sign < 0 ? -1 : 1)}});
  }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  void push_back(Letter l) { letters_.push_back(l); }

  Word inverse() const;
  /// w^k; negative k takes powers of the inverse, k = 0 gives the empty word.
  Word pow(long long k) const;

  /// Largest generator index mentioned, or -1 for the empty word.
  std::int32_t max_gen() const;
  long long exponent_sum(std::int32_t gen) const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// The unique freely reduced form: cancels adjacent x x^-1 pairs. Idempotent.
Word free_reduce(const Word& w);

/// Shortest cyclic conjugate: free-reduces, then strips mutually inverse
/// first/last letters.
Word cyclic_reduce(const Word& w);

bool is_freely_reduced(const Word& w);

/// Canonical representative of a relator under cyclic rotation and inversion:
/// the lexicographic minimum over all rotations of the cyclically reduced word
/// and of its inverse. Two words are the same relator iff the canonical forms
/// are equal.
Word relator_canonical(const Word& w);

}  // namespace meridian
