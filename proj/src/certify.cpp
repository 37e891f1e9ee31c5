#include "meridian/certify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "meridian/pipeline.hpp"

namespace meridian {

namespace {

// Exhaustive generator-image search. Generators are reordered greedily so
// that relators become fully assigned as early as possible; images are
// enumerated in target-element order, and every relator is checked as soon as
// its support is complete.
class HomSearch {
 public:
  HomSearch(const Presentation& p, const FiniteTarget& t) : p_(p), t_(t) {
    const std::size_t n = p.generator_count();
    std::vector<std::vector<int>> support(p.relators().size());
    for (std::size_t ri = 0; ri < p.relators().size(); ++ri) {
      std::vector<bool> seen(n, false);
      for (const Letter& l : p.relators()[ri]) {
        if (!seen[static_cast<std::size_t>(l.gen)]) {
          seen[static_cast<std::size_t>(l.gen)] = true;
          support[ri].push_back(l.gen);
        }
      }
    }

    std::vector<bool> chosen(n, false);
    std::vector<bool> done(p.relators().size(), false);
    level_of_gen_.assign(n, -1);
    relators_at_level_.assign(n, {});
    for (std::size_t level = 0; level < n; ++level) {
      int best = -1;
      long long best_completed = -1;
      long long best_occurrences = -1;
      for (std::size_t g = 0; g < n; ++g) {
        if (chosen[g]) continue;
        long long completed = 0;
        long long occurrences = 0;
        for (std::size_t ri = 0; ri < support.size(); ++ri) {
          if (done[ri]) continue;
          bool complete = true;
          bool mentions = false;
          for (int sg : support[ri]) {
            if (sg == static_cast<int>(g)) {
              mentions = true;
            } else if (!chosen[static_cast<std::size_t>(sg)]) {
              complete = false;
            }
          }
          if (mentions) {
            ++occurrences;
            if (complete) ++completed;
          }
        }
        if (completed > best_completed ||
            (completed == best_completed && occurrences > best_occurrences)) {
          best = static_cast<int>(g);
          best_completed = completed;
          best_occurrences = occurrences;
        }
      }
      chosen[static_cast<std::size_t>(best)] = true;
      level_of_gen_[static_cast<std::size_t>(best)] = static_cast<int>(level);
      for (std::size_t ri = 0; ri < support.size(); ++ri) {
        if (done[ri]) continue;
        bool complete = true;
        for (int sg : support[ri]) {
          if (!chosen[static_cast<std::size_t>(sg)]) {
            complete = false;
            break;
          }
        }
        if (complete) {
          done[ri] = true;
          relators_at_level_[level].push_back(static_cast<int>(ri));
        }
      }
    }
    images_by_level_.assign(n, 0);
  }

  std::uint64_t count() {
    std::uint64_t total = 0;
    dfs(0, [&total](const HomSearch&) {
      ++total;
      return false;
    });
    return total;
  }

  std::optional<NonAbelianWitness> find_noncommuting() {
    std::optional<NonAbelianWitness> found;
    dfs(0, [&found, this](const HomSearch&) {
      const std::size_t n = p_.generator_count();
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          const int a = image_of_gen(static_cast<int>(i));
          const int b = image_of_gen(static_cast<int>(j));
          if (!t_.commute(a, b)) {
            NonAbelianWitness w;
            w.target_name = t_.name();
            for (std::size_t g = 0; g < n; ++g) {
              w.images.push_back(t_.element_name(image_of_gen(static_cast<int>(g))));
            }
            w.noncommuting_pair = {static_cast<int>(i), static_cast<int>(j)};
            found = std::move(w);
            return true;
          }
        }
      }
      return false;
    });
    return found;
  }

 private:
  int image_of_gen(int gen) const {
    return images_by_level_[static_cast<std::size_t>(level_of_gen_[static_cast<std::size_t>(gen)])];
  }

  bool relator_holds(int ri) const {
    int acc = 0;
    for (const Letter& l : p_.relators()[static_cast<std::size_t>(ri)]) {
      int img = image_of_gen(l.gen);
      if (l.sign < 0) img = t_.inv(img);
      acc = t_.mul(acc, img);
    }
    return acc == 0;
  }

  // Visit every homomorphism; the visitor returns true to stop the search.
  template <typename Visitor>
  bool dfs(std::size_t level, Visitor&& visit) {
    if (level == p_.generator_count()) {
      return visit(*this);
    }
    for (int img = 0; img < static_cast<int>(t_.order()); ++img) {
      images_by_level_[level] = img;
      bool ok = true;
      for (int ri : relators_at_level_[level]) {
        if (!relator_holds(ri)) {
          ok = false;
          break;
        }
      }
      if (ok && dfs(level + 1, visit)) return true;
    }
    return false;
  }

  const Presentation& p_;
  const FiniteTarget& t_;
  std::vector<int> level_of_gen_;
  std::vector<std::vector<int>> relators_at_level_;
  std::vector<int> images_by_level_;
};

}  // namespace

std::uint64_t count_homs(const Presentation& p, const FiniteTarget& t) {
  if (t.order() > 120) throw std::invalid_argument("target too large (order > 120)");
  if (p.generator_count() == 0) return 1;
  return HomSearch(p, t).count();
}

std::optional<NonAbelianWitness> find_noncommuting_hom(const Presentation& p,
                                                       const FiniteTarget& t) {
  if (t.order() > 120) throw std::invalid_argument("target too large (order > 120)");
  if (p.generator_count() < 2) return std::nullopt;
  return HomSearch(p, t).find_noncommuting();
}

std::string Certificate::verdict_string() const {
  switch (verdict) {
    case Verdict::Abelian:
      return "Abelian";
    case Verdict::NonAbelian:
      return "NonAbelian";
    default:
      return "Unknown";
  }
}

std::span<const FiniteTarget> default_certify_targets() {
  static const std::vector<FiniteTarget> targets = {
      FiniteTarget::symmetric(3), FiniteTarget::symmetric(4), FiniteTarget::dicyclic12(),
      FiniteTarget::quaternion8()};
  return targets;
}

Certificate certify(const Presentation& p, EnumerationLimits limits,
                    std::span<const FiniteTarget> targets) {
  for (const FiniteTarget& t : targets) {
    if (auto witness = find_noncommuting_hom(p, t)) {
      return Certificate{Certificate::Verdict::NonAbelian, std::move(witness)};
    }
  }
  EnumerationResult res = enumerate_cosets(p, {}, limits);
  if (const auto* table = std::get_if<CosetTable>(&res)) {
    const std::uint64_t n = table->coset_count();
    const AbelianInvariants ab = abelianization(p);
    if (const auto ab_order = ab.group_order(); ab_order && *ab_order == Int(n)) {
      return Certificate{Certificate::Verdict::Abelian, std::nullopt};
    }
    if (n <= 120) {
      // Finite with |G| != |H1|, hence non-abelian: its own regular
      // representation supplies the witness.
      const FiniteTarget reg = regular_representation("regular(" + std::to_string(n) + ")", p,
                                                      *table);
      std::vector<int> images;
      images.reserve(p.generator_count());
      for (std::int32_t g = 0; g < static_cast<std::int32_t>(p.generator_count()); ++g) {
        images.push_back(table->at(0, Letter{g, 1}));
      }
      for (std::size_t i = 0; i < images.size(); ++i) {
        for (std::size_t j = i + 1; j < images.size(); ++j) {
          if (!reg.commute(images[i], images[j])) {
            NonAbelianWitness w;
            w.target_name = reg.name();
            for (int img : images) w.images.push_back(reg.element_name(img));
            w.noncommuting_pair = {static_cast<int>(i), static_cast<int>(j)};
            return Certificate{Certificate::Verdict::NonAbelian, std::move(w)};
          }
        }
      }
      // Unreachable for a correct enumeration: finite with |G| != |H1| forces
      // a non-commuting generator pair in the regular representation.
      return Certificate{Certificate::Verdict::Unknown, std::nullopt};
    }
  }
  return Certificate{Certificate::Verdict::Unknown, std::nullopt};
}

namespace {

GroupSummary summarize(const Presentation& p, std::span<const FiniteTarget> targets,
                       EnumerationLimits limits) {
  GroupSummary s;
  s.order = group_order(p, limits);
  s.abelianization = abelianization(p);
  for (const FiniteTarget& t : targets) {
    s.hom_counts.emplace_back(t.name(), count_homs(p, t));
  }
  s.certificate = certify(p, limits, targets);
  return s;
}

}  // namespace

std::vector<PairSeparation> separation_report(const CurveGroup& cg1, const CurveGroup& cg2,
                                              std::span<const long long> ks,
                                              EnumerationLimits limits) {
  for (const CurveGroup* cg : {&cg1, &cg2}) {
    const LinkingReport report = validate_linking(*cg);
    if (!report.ok) throw std::invalid_argument("invalid CurveGroup: " + report.message);
  }
  const std::span<const FiniteTarget> targets = default_certify_targets();
  std::vector<PairSeparation> out;
  out.reserve(ks.size());
  for (long long k : ks) {
    PairSeparation entry;
    entry.k = k;
    entry.group1 = summarize(pullback_group(cg1, k).presentation, targets, limits);
    entry.group2 = summarize(pullback_group(cg2, k).presentation, targets, limits);

    std::ostringstream why;
    for (std::size_t i = 0; i < targets.size(); ++i) {
      const auto& [name, c1] = entry.group1.hom_counts[i];
      const std::uint64_t c2 = entry.group2.hom_counts[i].second;
      if (c1 != c2) {
        why << "hom-count(" << name << "): " << c1 << " vs " << c2;
        break;
      }
    }
    const auto v1 = entry.group1.certificate.verdict;
    const auto v2 = entry.group2.certificate.verdict;
    if (why.str().empty() && v1 != Certificate::Verdict::Unknown &&
        v2 != Certificate::Verdict::Unknown && v1 != v2) {
      why << "certificate: " << entry.group1.certificate.verdict_string() << " vs "
          << entry.group2.certificate.verdict_string();
    }
    if (why.str().empty() && entry.group1.order && entry.group2.order &&
        *entry.group1.order != *entry.group2.order) {
      why << "order: " << *entry.group1.order << " vs " << *entry.group2.order;
    }
    if (why.str().empty() && !(entry.group1.abelianization == entry.group2.abelianization)) {
      why << "abelianization: " << entry.group1.abelianization.to_string() << " vs "
          << entry.group2.abelianization.to_string();
    }
    entry.separator = why.str();
    entry.separated = !entry.separator.empty();
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace meridian
