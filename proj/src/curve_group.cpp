#include "meridian/curve_group.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "meridian/snf.hpp"

namespace meridian {

LinkingReport validate_linking(const CurveGroup& cg) {
  if (cg.degree < 1) return {false, "degree must be positive"};
  if (cg.linking.size() != cg.presentation.generator_count()) {
    return {false, "one linking value per generator required"};
  }
  for (long long v : cg.linking) {
    if (v < 0 || v >= cg.degree) {
      return {false, "linking value out of range [0, degree)"};
    }
  }
  for (const Word& r : cg.presentation.relators()) {
    long long weight = 0;
    for (const Letter& l : r) {
      weight = (weight + l.sign * cg.linking[static_cast<std::size_t>(l.gen)]) % cg.degree;
    }
    weight = (weight % cg.degree + cg.degree) % cg.degree;
    if (weight != 0) {
      std::ostringstream msg;
      msg << "relator " << format_word(r, cg.presentation.generators())
          << " has linking weight " << weight << " mod " << cg.degree;
      return {false, msg.str()};
    }
  }
  long long g = cg.degree;
  for (long long v : cg.linking) g = std::gcd(g, v);
  if (g != 1) {
    std::ostringstream msg;
    msg << "linking values are not surjective onto Z/" << cg.degree
        << ": common divisor " << g;
    return {false, msg.str()};
  }
  return {};
}

CurveGroup make_curve_group(Presentation p, long long degree, std::vector<long long> linking) {
  if (degree < 1) throw std::invalid_argument("degree must be positive");
  for (long long& v : linking) {
    v %= degree;
    if (v < 0) v += degree;
  }
  return CurveGroup{std::move(p), degree, std::move(linking)};
}

CurveGroup curve_group_from_parsed(const ParsedGroup& parsed) {
  if (!parsed.degree) {
    throw std::invalid_argument("input has no group d= header");
  }
  CurveGroup cg = make_curve_group(parsed.presentation, *parsed.degree, parsed.linking);
  const LinkingReport report = validate_linking(cg);
  if (!report.ok) throw std::invalid_argument(report.message);
  return cg;
}

std::string serialize(const CurveGroup& cg) {
  std::ostringstream out;
  out << "group d=" << cg.degree << '\n';
  if (cg.presentation.generator_count() > 0) {
    out << "gens";
    for (const std::string& g : cg.presentation.generators()) out << ' ' << g;
    out << '\n';
    out << "lk";
    for (std::size_t i = 0; i < cg.linking.size(); ++i) {
      out << ' ' << cg.presentation.generators()[i] << '=' << cg.linking[i];
    }
    out << '\n';
  }
  for (const Word& r : cg.presentation.relators()) {
    out << "rel " << format_word(r, cg.presentation.generators()) << '\n';
  }
  return out.str();
}

std::vector<long long> ExtendedGroup::linking_assignment() const {
  std::vector<long long> values;
  values.reserve(1 + base.linking.size());
  values.push_back(base.degree - 1);
  values.insert(values.end(), base.linking.begin(), base.linking.end());
  return values;
}

ExtendedGroup extended_group(const CurveGroup& cg) {
  const LinkingReport report = validate_linking(cg);
  if (!report.ok) throw std::invalid_argument("invalid CurveGroup: " + report.message);

  std::string t_name = "t";
  while (cg.presentation.generator_index(t_name) >= 0) t_name += '_';

  std::vector<std::string> gens;
  gens.reserve(1 + cg.presentation.generator_count());
  gens.push_back(t_name);
  gens.insert(gens.end(), cg.presentation.generators().begin(),
              cg.presentation.generators().end());

  std::vector<Word> relators;
  relators.reserve(cg.presentation.relators().size() + cg.presentation.generator_count());
  for (const Word& r : cg.presentation.relators()) {
    std::vector<Letter> shifted;
    shifted.reserve(r.size());
    for (Letter l : r) {
      ++l.gen;
      shifted.push_back(l);
    }
    relators.emplace_back(std::move(shifted));
  }
  for (std::int32_t g = 1; g <= static_cast<std::int32_t>(cg.presentation.generator_count());
       ++g) {
    relators.push_back(Word({Letter{0, 1}, Letter{g, 1}, Letter{0, -1}, Letter{g, -1}}));
  }
  return ExtendedGroup{Presentation(std::move(gens), std::move(relators)), cg,
                       std::move(t_name)};
}

}  // namespace meridian
