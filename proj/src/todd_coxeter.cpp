#include "meridian/todd_coxeter.hpp"

#include <deque>
#include <stdexcept>

namespace meridian {

namespace {

std::size_t column(Letter l) { return CosetTable::column(l); }
std::size_t inverse_column(std::size_t col) { return col ^ 1u; }

class Enumerator {
 public:
  Enumerator(const Presentation& p, std::span<const Word> subgroup_gens,
             EnumerationLimits limits)
      : presentation_(p), limits_(limits), width_(2 * p.generator_count()) {
    subgroup_gens_.reserve(subgroup_gens.size());
    for (const Word& w : subgroup_gens) {
      if (w.max_gen() >= static_cast<std::int32_t>(p.generator_count())) {
        throw std::invalid_argument("subgroup generator mentions unknown generator index");
      }
      subgroup_gens_.push_back(free_reduce(w));
    }
  }

  EnumerationResult run() {
    new_coset();
    for (const Word& w : subgroup_gens_) {
      scan_and_fill(0, w);
      if (exhausted_) return Exhausted{stats()};
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (!alive(static_cast<std::int32_t>(i))) continue;
      const std::int32_t c = static_cast<std::int32_t>(i);
      for (const Word& r : presentation_.relators()) {
        if (!alive(c)) break;
        scan_and_fill(c, r);
        if (exhausted_) return Exhausted{stats()};
      }
      if (!alive(c)) continue;
      for (std::size_t col = 0; col < width_; ++col) {
        if (lookup(c, col) >= 0) continue;
        const std::int32_t d = new_coset();
        if (exhausted_) return Exhausted{stats()};
        rows_[i][col] = d;
        rows_[static_cast<std::size_t>(d)][inverse_column(col)] = c;
      }
    }
    return finish();
  }

 private:
  EnumerationStats stats() const {
    return {static_cast<std::uint64_t>(rows_.size()), live_, collapses_, steps_};
  }

  bool alive(std::int32_t c) const { return parent_[static_cast<std::size_t>(c)] == c; }

  std::int32_t find(std::int32_t c) {
    while (parent_[static_cast<std::size_t>(c)] != c) {
      parent_[static_cast<std::size_t>(c)] =
          parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(c)])];
      c = parent_[static_cast<std::size_t>(c)];
    }
    return c;
  }

  std::int32_t lookup(std::int32_t c, std::size_t col) {
    const std::int32_t t = rows_[static_cast<std::size_t>(c)][col];
    return t < 0 ? -1 : find(t);
  }

  std::int32_t new_coset() {
    if (rows_.size() >= limits_.max_cosets) {
      exhausted_ = true;
      return -1;
    }
    rows_.emplace_back(width_, -1);
    parent_.push_back(static_cast<std::int32_t>(rows_.size() - 1));
    ++live_;
    return static_cast<std::int32_t>(rows_.size() - 1);
  }

  bool step() {
    if (++steps_ > limits_.max_steps) {
      exhausted_ = true;
      return false;
    }
    return true;
  }

  // a.col = b for live representatives a, b; conflicting entries are queued
  // as coincidences rather than overwritten.
  void install(std::int32_t a, std::size_t col, std::int32_t b) {
    const std::int32_t cur = lookup(a, col);
    if (cur < 0) {
      rows_[static_cast<std::size_t>(a)][col] = b;
    } else if (cur != b) {
      pending_.emplace_back(cur, b);
    }
    const std::int32_t rev = lookup(b, inverse_column(col));
    if (rev < 0) {
      rows_[static_cast<std::size_t>(b)][inverse_column(col)] = a;
    } else if (rev != a) {
      pending_.emplace_back(rev, a);
    }
  }

  void process_pending() {
    while (!pending_.empty()) {
      auto [x, y] = pending_.front();
      pending_.pop_front();
      x = find(x);
      y = find(y);
      if (x == y) continue;
      if (x > y) std::swap(x, y);  // smallest index survives
      parent_[static_cast<std::size_t>(y)] = x;
      ++collapses_;
      --live_;
      for (std::size_t col = 0; col < width_; ++col) {
        const std::int32_t t = rows_[static_cast<std::size_t>(y)][col];
        if (t >= 0) install(x, col, find(t));
      }
    }
  }

  void coincide(std::int32_t a, std::int32_t b) {
    pending_.emplace_back(a, b);
    process_pending();
  }

  void scan_and_fill(std::int32_t start, const Word& w) {
    if (w.empty()) return;
    for (;;) {
      std::int32_t c = find(start);
      std::int32_t f = c;
      std::size_t fi = 0;
      std::int32_t b = c;
      std::size_t bi = w.size();
      for (;;) {
        while (fi < bi) {
          const std::int32_t t = lookup(f, column(w[fi]));
          if (t < 0) break;
          if (!step()) return;
          f = t;
          ++fi;
        }
        if (fi == bi) {
          if (f != b) {
            coincide(f, b);
            break;  // rescan to confirm closure under the merged table
          }
          return;
        }
        while (bi > fi) {
          const std::int32_t t = lookup(b, column(inverse(w[bi - 1])));
          if (t < 0) break;
          if (!step()) return;
          b = t;
          --bi;
        }
        if (fi == bi) {
          if (f != b) {
            coincide(f, b);
            break;
          }
          return;
        }
        if (bi == fi + 1) {
          install(f, column(w[fi]), b);
          process_pending();
          break;  // deduction may have cascaded; rescan
        }
        const std::int32_t d = new_coset();
        if (exhausted_) return;
        rows_[static_cast<std::size_t>(f)][column(w[fi])] = d;
        rows_[static_cast<std::size_t>(d)][inverse_column(column(w[fi]))] = f;
        if (!step()) return;
        f = d;
        ++fi;
      }
      start = find(start);
    }
  }

  EnumerationResult finish() {
    std::vector<std::int32_t> index_of(rows_.size(), -1);
    std::size_t live_count = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (alive(static_cast<std::int32_t>(i))) {
        index_of[i] = static_cast<std::int32_t>(live_count++);
      }
    }
    CosetTable table(live_count, presentation_.generator_count());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (index_of[i] < 0) continue;
      for (std::int32_t gen = 0; gen < static_cast<std::int32_t>(presentation_.generator_count());
           ++gen) {
        for (int sign : {1, -1}) {
          const Letter l{gen, static_cast<std::int8_t>(sign)};
          const std::int32_t t = lookup(static_cast<std::int32_t>(i), column(l));
          if (t < 0) throw std::logic_error("incomplete table at finish");
          table.set(static_cast<std::size_t>(index_of[i]), l,
                    index_of[static_cast<std::size_t>(t)]);
        }
      }
    }
    return table.standardized();
  }

  const Presentation& presentation_;
  EnumerationLimits limits_;
  std::size_t width_;
  std::vector<Word> subgroup_gens_;
  std::vector<std::vector<std::int32_t>> rows_;
  std::vector<std::int32_t> parent_;
  std::deque<std::pair<std::int32_t, std::int32_t>> pending_;
  std::uint64_t live_ = 0;
  std::uint64_t collapses_ = 0;
  std::uint64_t steps_ = 0;
  bool exhausted_ = false;
};

}  // namespace

EnumerationResult enumerate_cosets(const Presentation& p, std::span<const Word> subgroup_gens,
                                   EnumerationLimits limits) {
  if (limits.max_cosets == 0 || limits.max_steps == 0) {
    throw std::invalid_argument("enumeration limits must be positive");
  }
  return Enumerator(p, subgroup_gens, limits).run();
}

std::optional<std::uint64_t> group_order(const Presentation& p, EnumerationLimits limits) {
  EnumerationResult res = enumerate_cosets(p, {}, limits);
  if (const auto* table = std::get_if<CosetTable>(&res)) {
    return table->coset_count();
  }
  return std::nullopt;
}

}  // namespace meridian
