#include "meridian/word.hpp"

#include <algorithm>

namespace meridian {

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.push_back(meridian::inverse(*it));
  }
  return Word(std::move(out));
}

Word Word::pow(long long k) const {
  const Word base = k < 0 ? inverse() : *this;
  const unsigned long long n = k < 0 ? static_cast<unsigned long long>(-k)
                                     : static_cast<unsigned long long>(k);
  std::vector<Letter> out;
  out.reserve(letters_.size() * n);
  for (unsigned long long i = 0; i < n; ++i) {
    out.insert(out.end(), base.letters_.begin(), base.letters_.end());
  }
  return Word(std::move(out));
}

std::int32_t Word::max_gen() const {
  std::int32_t m = -1;
  for (const Letter& l : letters_) m = std::max(m, l.gen);
  return m;
}

long long Word::exponent_sum(std::int32_t gen) const {
  long long s = 0;
  for (const Letter& l : letters_) {
    if (l.gen == gen) s += l.sign;
  }
  return s;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.letters_.begin(), a.letters_.end());
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(out));
}

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const Letter& l : w) {
    if (!stack.empty() && stack.back() == inverse(l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(std::move(stack));
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  const auto& ls = r.letters();
  while (hi - lo >= 2 && ls[lo] == inverse(ls[hi - 1])) {
    ++lo;
    --hi;
  }
  return Word(std::vector<Letter>(ls.begin() + lo, ls.begin() + hi));
}

bool is_freely_reduced(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] == inverse(w[i + 1])) return false;
  }
  return true;
}

Word relator_canonical(const Word& w) {
  Word c = cyclic_reduce(w);
  if (c.empty()) return c;
  const std::size_t n = c.size();
  auto rotation = [n](const Word& v, std::size_t s) {
    std::vector<Letter> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(v[(s + i) % n]);
    return Word(std::move(out));
  };
  Word best = rotation(c, 0);
  const Word ci = c.inverse();
  for (std::size_t s = 0; s < n; ++s) {
    for (const Word* v : {&c, &ci}) {
      Word cand = rotation(*v, s);
      if (cand < best) best = std::move(cand);
    }
  }
  return best;
}

}  // namespace meridian
