#include "meridian/pipeline.hpp"

#include <numeric>
#include <stdexcept>

namespace meridian {

CosetTable kernel_coset_table(const ExtendedGroup& eg) {
  const long long d = eg.base.degree;
  const std::size_t gens = eg.presentation.generator_count();
  const std::vector<long long> values = eg.linking_assignment();
  CosetTable table(static_cast<std::size_t>(d), gens);
  for (long long j = 0; j < d; ++j) {
    for (std::int32_t g = 0; g < static_cast<std::int32_t>(gens); ++g) {
      const long long target = (j + values[static_cast<std::size_t>(g)]) % d;
      table.set(static_cast<std::size_t>(j), Letter{g, 1}, static_cast<std::int32_t>(target));
    }
  }
  return table;
}

Presentation affine_group(const CurveGroup& cg, long long tietze_budget) {
  const ExtendedGroup eg = extended_group(cg);
  return subgroup_presentation(eg.presentation, kernel_coset_table(eg), tietze_budget);
}

CurveGroup pullback_group(const CurveGroup& cg, long long k, long long tietze_budget) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const ExtendedGroup eg = extended_group(cg);
  const CosetTable kernel = kernel_coset_table(eg);
  const SchreierData schreier = schreier_transversal(kernel);
  Presentation raw = schreier_presentation_raw(eg.presentation, kernel, schreier);

  // t^d lies in the kernel; killing its k-th power is exactly the quotient by
  // the central subgroup generated by t^(k*d).
  const Word t_to_d = Word::generator(0).pow(cg.degree);
  const Word central = schreier_rewrite(t_to_d, 0, kernel, schreier);
  std::vector<Word> relators = raw.relators();
  relators.push_back(central.pow(k));
  raw = Presentation(raw.generators(), std::move(relators));

  const Presentation simplified = tietze_simplify(raw, tietze_budget);

  const long long new_degree = k * cg.degree;
  std::vector<long long> linking;
  linking.reserve(simplified.generator_count());
  for (const std::string& name : simplified.generators()) {
    const int raw_index = raw.generator_index(name);
    if (raw_index < 0) throw std::logic_error("simplified generator lost its provenance");
    long long nu = schreier.sgen_words[static_cast<std::size_t>(raw_index)].exponent_sum(0);
    nu %= new_degree;
    if (nu < 0) nu += new_degree;
    linking.push_back(nu);
  }

  CurveGroup out{simplified, new_degree, std::move(linking)};
  const LinkingReport report = validate_linking(out);
  if (!report.ok) {
    throw std::logic_error("pull-back produced an invalid CurveGroup: " + report.message);
  }
  return out;
}

Presentation cokernel_of_central(const Presentation& p, const Word& w) {
  if (w.max_gen() >= static_cast<std::int32_t>(p.generator_count())) {
    throw std::invalid_argument("word mentions unknown generator index");
  }
  std::vector<Word> relators = p.relators();
  relators.push_back(w);
  return Presentation(p.generators(), std::move(relators));
}

CurveGroup torus_curve_group(long long p, long long q, long long k) {
  if (p < 1 || q < 1 || k < 1) throw std::invalid_argument("p, q, k must be positive");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("p and q must be coprime");

  const Presentation base(
      {"a", "b", "c"},
      {Word::generator(0).pow(q) * Word::generator(2, -1),
       Word::generator(1).pow(p) * Word::generator(2, -1)});
  const Presentation pres = cokernel_of_central(base, Word::generator(2).pow(k));

  const long long degree = p * q * k;
  CurveGroup out = make_curve_group(pres, degree, {p, q, p * q});
  const LinkingReport report = validate_linking(out);
  if (!report.ok) {
    throw std::logic_error("torus curve group failed validation: " + report.message);
  }
  return out;
}

}  // namespace meridian
