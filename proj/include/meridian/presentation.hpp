#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "meridian/word.hpp"

namespace meridian {

/// A finite presentation: named generators plus relator words. Relators are
/// stored freely and cyclically reduced; empty relators are dropped. Generator
/// names are unique.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::vector<std::string> generators, std::vector<Word> relators);

  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }
  std::size_t generator_count() const { return generators_.size(); }

  /// Index of a named generator, or -1.
  int generator_index(std::string_view name) const;

  std::size_t total_relator_length() const;

  /// Relator multisets compared up to cyclic rotation and inversion.
  bool same_relators(const Presentation& other) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
};

}  // namespace meridian
