#include "meridian/coset_table.hpp"

#include <sstream>
#include <stdexcept>

#include "meridian/dsl.hpp"

namespace meridian {

void CosetTable::set(std::size_t coset, Letter l, std::int32_t target) {
  act_[coset * 2 * g_ + column(l)] = target;
  act_[static_cast<std::size_t>(target) * 2 * g_ + column(inverse(l))] =
      static_cast<std::int32_t>(coset);
}

std::int32_t CosetTable::trace(std::size_t start, const Word& w) const {
  std::int32_t c = static_cast<std::int32_t>(start);
  for (const Letter& l : w) {
    c = at(static_cast<std::size_t>(c), l);
    if (c < 0) return -1;
  }
  return c;
}

bool CosetTable::complete() const {
  for (std::int32_t e : act_) {
    if (e < 0 || static_cast<std::size_t>(e) >= n_) return false;
  }
  return true;
}

CosetTable CosetTable::standardized() const {
  std::vector<std::int32_t> order(n_, -1);
  std::vector<std::int32_t> bfs;
  bfs.reserve(n_);
  order[0] = 0;
  bfs.push_back(0);
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    const std::size_t c = static_cast<std::size_t>(bfs[head]);
    for (std::size_t col = 0; col < 2 * g_; ++col) {
      const std::int32_t d = at_col(c, col);
      if (d >= 0 && order[static_cast<std::size_t>(d)] < 0) {
        order[static_cast<std::size_t>(d)] = static_cast<std::int32_t>(bfs.size());
        bfs.push_back(d);
      }
    }
  }
  if (bfs.size() != n_) {
    throw std::logic_error("coset table is not connected");
  }
  CosetTable out(n_, g_);
  for (std::size_t c = 0; c < n_; ++c) {
    for (std::size_t col = 0; col < 2 * g_; ++col) {
      const std::int32_t d = at_col(c, col);
      out.act_[static_cast<std::size_t>(order[c]) * 2 * g_ + col] =
          d < 0 ? -1 : order[static_cast<std::size_t>(d)];
    }
  }
  return out;
}

CosetTable::CheckReport CosetTable::check(const Presentation& p,
                                          std::span<const Word> subgroup_gens) const {
  auto fail = [](std::string msg) { return CheckReport{false, std::move(msg)}; };
  if (p.generator_count() != g_) return fail("generator count mismatch");
  if (n_ == 0) return fail("empty table");
  if (!complete()) return fail("table has undefined entries");
  for (std::size_t c = 0; c < n_; ++c) {
    for (std::int32_t gen = 0; gen < static_cast<std::int32_t>(g_); ++gen) {
      const std::int32_t fwd = at(c, Letter{gen, 1});
      if (at(static_cast<std::size_t>(fwd), Letter{gen, -1}) != static_cast<std::int32_t>(c)) {
        std::ostringstream msg;
        msg << "actions of generator " << gen << " are not mutually inverse at coset " << c;
        return fail(msg.str());
      }
      const std::int32_t bwd = at(c, Letter{gen, -1});
      if (at(static_cast<std::size_t>(bwd), Letter{gen, 1}) != static_cast<std::int32_t>(c)) {
        std::ostringstream msg;
        msg << "actions of generator " << gen << " are not mutually inverse at coset " << c;
        return fail(msg.str());
      }
    }
  }
  for (std::size_t ri = 0; ri < p.relators().size(); ++ri) {
    for (std::size_t c = 0; c < n_; ++c) {
      if (trace(c, p.relators()[ri]) != static_cast<std::int32_t>(c)) {
        std::ostringstream msg;
        msg << "relator " << format_word(p.relators()[ri], p.generators())
            << " does not close at coset " << c;
        return fail(msg.str());
      }
    }
  }
  for (const Word& w : subgroup_gens) {
    if (trace(0, w) != 0) {
      return fail("subgroup generator " + format_word(w, p.generators()) +
                  " does not fix coset 0");
    }
  }
  return {};
}

}  // namespace meridian
