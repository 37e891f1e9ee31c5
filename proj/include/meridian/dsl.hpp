#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "meridian/presentation.hpp"

namespace meridian {

/// Parse failure with 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, int line, int column)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Result of parsing the group DSL. `degree` and `linking` are present iff the
/// input carried a `group d=` header; linking values are reduced into [0, d)
/// and aligned with the presentation's generator order.
struct ParsedGroup {
  Presentation presentation;
  std::optional<long long> degree;
  std::vector<long long> linking;
};

/// Line-oriented grammar, '#' starts a comment:
///   group d=<int>          (optional; requires lk lines)
///   gens <name> ...
///   lk <name>=<int> ...    (required iff group line present; every generator)
///   rel <word>             (word tokens: name, name^k, name^-k)
ParsedGroup parse_group(std::string_view text);

std::string format_word(const Word& w, std::span<const std::string> names);

std::string serialize(const Presentation& p);

}  // namespace meridian
