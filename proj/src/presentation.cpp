#include "meridian/presentation.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace meridian {

Presentation::Presentation(std::vector<std::string> generators,
                           std::vector<Word> relators)
    : generators_(std::move(generators)) {
  std::unordered_set<std::string_view> seen;
  for (const std::string& g : generators_) {
    if (g.empty()) throw std::invalid_argument("empty generator name");
    if (!seen.insert(g).second) {
      throw std::invalid_argument("duplicate generator name: " + g);
    }
  }
  const auto n = static_cast<std::int32_t>(generators_.size());
  relators_.reserve(relators.size());
  for (const Word& w : relators) {
    if (w.max_gen() >= n) {
      throw std::invalid_argument("relator mentions unknown generator index");
    }
    Word r = cyclic_reduce(w);
    if (!r.empty()) relators_.push_back(std::move(r));
  }
}

int Presentation::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

std::size_t Presentation::total_relator_length() const {
  std::size_t total = 0;
  for (const Word& r : relators_) total += r.size();
  return total;
}

bool Presentation::same_relators(const Presentation& other) const {
  auto canon = [](const std::vector<Word>& rels) {
    std::vector<Word> c;
    c.reserve(rels.size());
    for (const Word& r : rels) c.push_back(relator_canonical(r));
    std::sort(c.begin(), c.end());
    return c;
  };
  return canon(relators_) == canon(other.relators_);
}

}  // namespace meridian
