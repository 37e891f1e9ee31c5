#include "meridian/dsl.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace meridian {

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct Cursor {
  std::string_view s;
  int line;
  std::size_t pos = 0;

  int column() const { return static_cast<int>(pos) + 1; }
  bool done() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }

  void skip_ws() {
    while (!done() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line, column());
  }

  std::string_view name() {
    if (done() || !is_name_start(peek())) fail("expected identifier");
    std::size_t start = pos;
    while (!done() && is_name_char(peek())) ++pos;
    return s.substr(start, pos - start);
  }

  long long integer() {
    std::size_t start = pos;
    if (!done() && (peek() == '-' || peek() == '+')) ++pos;
    std::size_t digits = pos;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
    if (pos == digits) fail("expected integer");
    return std::stoll(std::string(s.substr(start, pos - start)));
  }

  void expect(char c) {
    if (done() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }
};

struct RawRelator {
  // (generator name, exponent) tokens with positions for error reporting
  std::vector<std::tuple<std::string, long long, int, int>> tokens;
};

}  // namespace

ParsedGroup parse_group(std::string_view text) {
  std::optional<long long> degree;
  int degree_line = 0;
  std::vector<std::string> gens;
  std::map<std::string, long long, std::less<>> linking_by_name;
  std::vector<RawRelator> raw_relators;

  int line_no = 0;
  std::size_t at = 0;
  while (at <= text.size()) {
    std::size_t eol = text.find('\n', at);
    std::string_view full_line =
        text.substr(at, eol == std::string_view::npos ? std::string_view::npos : eol - at);
    at = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    std::string_view body = full_line.substr(0, full_line.find('#'));
    Cursor cur{body, line_no};
    cur.skip_ws();
    if (cur.done()) continue;

    std::string_view keyword = cur.name();
    cur.skip_ws();
    if (keyword == "group") {
      if (degree) cur.fail("duplicate group line");
      std::string_view key = cur.name();
      if (key != "d") cur.fail("expected d=<degree>");
      cur.expect('=');
      long long d = cur.integer();
      if (d < 1) cur.fail("degree must be positive");
      degree = d;
      degree_line = line_no;
    } else if (keyword == "gens") {
      if (cur.done()) cur.fail("expected generator names");
      while (!cur.done()) {
        int col = cur.column();
        std::string g(cur.name());
        for (const std::string& existing : gens) {
          if (existing == g) throw ParseError("duplicate generator: " + g, line_no, col);
        }
        gens.push_back(std::move(g));
        cur.skip_ws();
      }
    } else if (keyword == "lk") {
      if (!degree) cur.fail("lk line requires a preceding group d= line");
      if (cur.done()) cur.fail("expected name=value assignments");
      while (!cur.done()) {
        int col = cur.column();
        std::string g(cur.name());
        cur.expect('=');
        long long v = cur.integer();
        if (linking_by_name.count(g)) {
          throw ParseError("duplicate linking value for generator: " + g, line_no, col);
        }
        linking_by_name.emplace(std::move(g), v);
        cur.skip_ws();
      }
    } else if (keyword == "rel") {
      RawRelator rel;
      if (cur.done()) cur.fail("expected a word");
      while (!cur.done()) {
        int col = cur.column();
        std::string g(cur.name());
        long long exponent = 1;
        if (!cur.done() && cur.peek() == '^') {
          ++cur.pos;
          exponent = cur.integer();
        }
        rel.tokens.emplace_back(std::move(g), exponent, line_no, col);
        cur.skip_ws();
      }
      raw_relators.push_back(std::move(rel));
    } else {
      throw ParseError("unknown directive: " + std::string(keyword), line_no, 1);
    }
  }

  auto gen_index = [&gens](std::string_view name) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i] == name) return static_cast<int>(i);
    }
    return -1;
  };

  std::vector<Word> relators;
  relators.reserve(raw_relators.size());
  for (const RawRelator& rel : raw_relators) {
    std::vector<Letter> letters;
    for (const auto& [name, exponent, line, col] : rel.tokens) {
      int idx = gen_index(name);
      if (idx < 0) throw ParseError("unknown generator in relator: " + name, line, col);
      const std::int8_t sign = exponent < 0 ? -1 : 1;
      const long long count = exponent < 0 ? -exponent : exponent;
      for (long long i = 0; i < count; ++i) {
        letters.push_back(Letter{idx, sign});
      }
    }
    relators.emplace_back(std::move(letters));
  }

  ParsedGroup out;
  out.presentation = Presentation(std::move(gens), std::move(relators));
  if (degree) {
    out.degree = degree;
    out.linking.reserve(out.presentation.generator_count());
    for (const std::string& g : out.presentation.generators()) {
      auto it = linking_by_name.find(g);
      if (it == linking_by_name.end()) {
        throw ParseError("missing linking value for generator: " + g, degree_line, 1);
      }
      long long v = it->second % *degree;
      if (v < 0) v += *degree;
      out.linking.push_back(v);
      linking_by_name.erase(it);
    }
    if (!linking_by_name.empty()) {
      throw ParseError("linking value for unknown generator: " + linking_by_name.begin()->first,
                       degree_line, 1);
    }
  } else if (!linking_by_name.empty()) {
    throw ParseError("lk line requires a group d= line", 1, 1);
  }
  return out;
}

std::string format_word(const Word& w, std::span<const std::string> names) {
  std::ostringstream out;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const long long run = static_cast<long long>(j - i) * w[i].sign;
    if (!first) out << ' ';
    first = false;
    out << names[static_cast<std::size_t>(w[i].gen)];
    if (run != 1) out << '^' << run;
    i = j;
  }
  return out.str();
}

std::string serialize(const Presentation& p) {
  std::ostringstream out;
  if (p.generator_count() > 0) {
    out << "gens";
    for (const std::string& g : p.generators()) out << ' ' << g;
    out << '\n';
  }
  for (const Word& r : p.relators()) {
    out << "rel " << format_word(r, p.generators()) << '\n';
  }
  return out.str();
}

}  // namespace meridian
