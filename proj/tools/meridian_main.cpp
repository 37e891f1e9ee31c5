// Command-line front end: parse group DSL files, run the curve-complement
// pipelines, and emit text or JSON reports.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "meridian/catalog.hpp"
#include "meridian/certify.hpp"
#include "meridian/dsl.hpp"
#include "meridian/pipeline.hpp"
#include "meridian/schreier.hpp"
#include "meridian/snf.hpp"
#include "meridian/todd_coxeter.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitExhausted = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  meridian::EnumerationLimits limits;
  bool json() const { return format == "json"; }
};

meridian::ParsedGroup load_input(const std::string& spec) {
  using namespace meridian;
  if (spec.rfind("catalog:", 0) == 0) {
    const CatalogEntry* entry = catalog_find(spec.substr(8));
    if (entry == nullptr) {
      throw InputError("unknown catalog entry: " + spec.substr(8));
    }
    ParsedGroup parsed;
    parsed.presentation = entry->group.presentation;
    parsed.degree = entry->group.degree;
    parsed.linking = entry->group.linking;
    return parsed;
  }
  std::string text;
  if (spec == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream file(spec);
    if (!file) throw InputError("cannot open input file: " + spec);
    std::ostringstream buf;
    buf << file.rdbuf();
    text = buf.str();
  }
  try {
    return parse_group(text);
  } catch (const ParseError& e) {
    throw InputError(spec + ": " + e.what());
  }
}

meridian::CurveGroup load_curve_group(const std::string& spec) {
  const meridian::ParsedGroup parsed = load_input(spec);
  try {
    return meridian::curve_group_from_parsed(parsed);
  } catch (const std::invalid_argument& e) {
    throw InputError(spec + ": " + e.what());
  }
}

std::vector<long long> parse_k_list(const std::string& csv) {
  std::vector<long long> ks;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      const long long k = std::stoll(item);
      if (k < 1) throw InputError("k must be >= 1");
      ks.push_back(k);
    } catch (const std::logic_error&) {
      throw InputError("bad k value: " + item);
    }
  }
  if (ks.empty()) throw InputError("empty k list");
  return ks;
}

std::vector<meridian::FiniteTarget> parse_targets(const std::string& csv) {
  std::vector<meridian::FiniteTarget> targets;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto t = meridian::FiniteTarget::by_name(item);
    if (!t) throw InputError("unknown target: " + item);
    targets.push_back(std::move(*t));
  }
  if (targets.empty()) throw InputError("empty target list");
  return targets;
}

json abelianization_json(const meridian::AbelianInvariants& ab) {
  json torsion = json::array();
  for (const meridian::Int& t : ab.torsion) {
    torsion.push_back(t.str());
  }
  return json{{"rank", ab.free_rank}, {"torsion", torsion}, {"pretty", ab.to_string()}};
}

std::string abelianization_text(const meridian::AbelianInvariants& ab) {
  std::ostringstream out;
  out << ab.to_string() << " (rank " << ab.free_rank << ", torsion [";
  for (std::size_t i = 0; i < ab.torsion.size(); ++i) {
    if (i) out << ' ';
    out << ab.torsion[i];
  }
  out << "])";
  return out.str();
}

json certificate_json(const meridian::Certificate& cert,
                      const meridian::Presentation& p) {
  json j{{"verdict", cert.verdict_string()}};
  if (cert.witness) {
    j["target"] = cert.witness->target_name;
    json images = json::object();
    for (std::size_t i = 0; i < cert.witness->images.size(); ++i) {
      images[p.generators()[i]] = cert.witness->images[i];
    }
    j["witness"] = images;
    j["noncommuting"] = json::array({p.generators()[static_cast<std::size_t>(
                                         cert.witness->noncommuting_pair.first)],
                                     p.generators()[static_cast<std::size_t>(
                                         cert.witness->noncommuting_pair.second)]});
  }
  return j;
}

std::string certificate_text(const meridian::Certificate& cert,
                             const meridian::Presentation& p) {
  if (cert.verdict != meridian::Certificate::Verdict::NonAbelian || !cert.witness) {
    return cert.verdict_string();
  }
  std::ostringstream out;
  out << "NonAbelian (witness in " << cert.witness->target_name << ":";
  for (std::size_t i = 0; i < cert.witness->images.size(); ++i) {
    out << (i ? ", " : " ") << p.generators()[i] << " -> " << cert.witness->images[i];
  }
  out << ")";
  return out.str();
}

int run_abelianize(const std::string& input, const Options& opt) {
  const meridian::ParsedGroup parsed = load_input(input);
  const meridian::AbelianInvariants ab = meridian::abelianization(parsed.presentation);
  if (opt.json()) {
    json j{{"schema", 1}, {"command", "abelianize"}};
    j["abelianization"] = abelianization_json(ab);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "abelianization: " << abelianization_text(ab) << '\n';
  }
  return kExitOk;
}

int run_order(const std::string& input, const Options& opt, bool dump_table) {
  using namespace meridian;
  const ParsedGroup parsed = load_input(input);
  EnumerationResult res = enumerate_cosets(parsed.presentation, {}, opt.limits);
  if (const auto* table = std::get_if<CosetTable>(&res)) {
    if (opt.json()) {
      json j{{"schema", 1},
             {"command", "order"},
             {"result", "finite"},
             {"order", table->coset_count()}};
      if (dump_table) {
        json rows = json::array();
        for (std::size_t c = 0; c < table->coset_count(); ++c) {
          json row = json::array();
          for (std::size_t col = 0; col < 2 * table->generator_count(); ++col) {
            row.push_back(table->at_col(c, col) + 1);  // cosets numbered from 1
          }
          rows.push_back(row);
        }
        j["cosets"] = table->coset_count();
        j["action"] = rows;
      }
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << "Finite(" << table->coset_count() << ")\n";
    }
    return kExitOk;
  }
  const auto& ex = std::get<Exhausted>(res);
  if (opt.json()) {
    json j{{"schema", 1},
           {"command", "order"},
           {"result", "unknown"},
           {"cosets_defined", ex.stats.cosets_defined},
           {"collapses", ex.stats.collapses},
           {"steps", ex.stats.steps}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "Unknown (exhausted: " << ex.stats.cosets_defined << " cosets defined, "
              << ex.stats.collapses << " collapses, " << ex.stats.steps << " steps)\n";
  }
  return kExitExhausted;
}

int run_certify(const std::string& input, const Options& opt,
                const std::vector<meridian::FiniteTarget>& targets) {
  using namespace meridian;
  const ParsedGroup parsed = load_input(input);
  std::span<const FiniteTarget> span =
      targets.empty() ? default_certify_targets() : std::span<const FiniteTarget>(targets);
  const Certificate cert = certify(parsed.presentation, opt.limits, span);
  if (opt.json()) {
    json j{{"schema", 1}, {"command", "certify"}};
    j["certificate"] = certificate_json(cert, parsed.presentation);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << certificate_text(cert, parsed.presentation) << '\n';
  }
  return kExitOk;
}

int run_homcount(const std::string& input, const Options& opt,
                 const std::vector<meridian::FiniteTarget>& targets) {
  using namespace meridian;
  const ParsedGroup parsed = load_input(input);
  std::vector<FiniteTarget> chosen = targets;
  if (chosen.empty()) {
    for (const FiniteTarget& t : default_certify_targets()) chosen.push_back(t);
  }
  if (opt.json()) {
    json counts = json::object();
    for (const FiniteTarget& t : chosen) {
      counts[t.name()] = count_homs(parsed.presentation, t);
    }
    json j{{"schema", 1}, {"command", "homcount"}, {"counts", counts}};
    std::cout << j.dump(2) << '\n';
  } else {
    for (const FiniteTarget& t : chosen) {
      std::cout << t.name() << ": " << count_homs(parsed.presentation, t) << '\n';
    }
  }
  return kExitOk;
}

int run_affine(const std::string& input, const Options& opt) {
  using namespace meridian;
  const CurveGroup cg = load_curve_group(input);
  const Presentation aff = affine_group(cg);
  if (opt.json()) {
    json j{{"schema", 1},
           {"command", "affine"},
           {"generators", aff.generator_count()},
           {"dsl", serialize(aff)}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << serialize(aff);
  }
  return kExitOk;
}

int run_pullback(const std::string& input, long long k, const Options& opt) {
  using namespace meridian;
  const CurveGroup cg = load_curve_group(input);
  const CurveGroup out = pullback_group(cg, k);
  if (opt.json()) {
    json j{{"schema", 1},
           {"command", "pullback"},
           {"k", k},
           {"degree", out.degree},
           {"dsl", serialize(out)}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << serialize(out);
  }
  return kExitOk;
}

json summary_json(const meridian::GroupSummary& s) {
  json homcounts = json::object();
  for (const auto& [name, count] : s.hom_counts) homcounts[name] = count;
  json j;
  if (s.order) {
    j["order"] = *s.order;
  } else {
    j["order"] = "unknown";
  }
  j["abelianization"] = abelianization_json(s.abelianization);
  j["homcounts"] = homcounts;
  j["verdict"] = s.certificate.verdict_string();
  return j;
}

void summary_text(std::ostream& out, const std::string& label,
                  const meridian::GroupSummary& s) {
  out << "  " << label << ": order=";
  if (s.order) {
    out << *s.order;
  } else {
    out << "unknown";
  }
  out << " abelianization=" << s.abelianization.to_string();
  for (const auto& [name, count] : s.hom_counts) {
    out << " hom(" << name << ")=" << count;
  }
  out << " verdict=" << s.certificate.verdict_string() << '\n';
}

int run_pair_report(const std::string& input1, const std::string& input2,
                    const std::string& k_csv, const Options& opt) {
  using namespace meridian;
  const CurveGroup cg1 = load_curve_group(input1);
  const CurveGroup cg2 = load_curve_group(input2);
  const std::vector<long long> ks = parse_k_list(k_csv);
  const std::vector<PairSeparation> reports = separation_report(cg1, cg2, ks, opt.limits);
  if (opt.json()) {
    json arr = json::array();
    for (const PairSeparation& r : reports) {
      arr.push_back(json{{"k", r.k},
                         {"group1", summary_json(r.group1)},
                         {"group2", summary_json(r.group2)},
                         {"separated", r.separated},
                         {"separator", r.separator}});
    }
    json j{{"schema", 1}, {"command", "pair-report"}, {"reports", arr}};
    std::cout << j.dump(2) << '\n';
  } else {
    for (const PairSeparation& r : reports) {
      std::cout << "k=" << r.k << ": "
                << (r.separated ? "SEPARATED (" + r.separator + ")" : "not separated") << '\n';
      summary_text(std::cout, "group1", r.group1);
      summary_text(std::cout, "group2", r.group2);
    }
  }
  return kExitOk;
}

int run_catalog(const std::string& action, const std::string& name, const Options& opt) {
  using namespace meridian;
  if (action == "list") {
    if (opt.json()) {
      json arr = json::array();
      for (const CatalogEntry& e : catalog_entries()) {
        arr.push_back(json{{"name", e.name}, {"description", e.description}});
      }
      json j{{"schema", 1}, {"command", "catalog"}, {"entries", arr}};
      std::cout << j.dump(2) << '\n';
    } else {
      for (const CatalogEntry& e : catalog_entries()) {
        std::cout << e.name << " - " << e.description << '\n';
      }
    }
    return kExitOk;
  }
  if (action == "show") {
    const CatalogEntry* entry = catalog_find(name);
    if (entry == nullptr) throw InputError("unknown catalog entry: " + name);
    if (opt.json()) {
      json j{{"schema", 1},
             {"command", "catalog"},
             {"name", entry->name},
             {"description", entry->description},
             {"degree", entry->group.degree},
             {"dsl", serialize(entry->group)}};
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << "# " << entry->description << '\n' << serialize(entry->group);
    }
    return kExitOk;
  }
  throw InputError("catalog action must be 'list' or 'show'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fundamental groups of plane-curve complements: pull-backs, "
               "affine parts, and separation certificates"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("MERIDIAN_MAX_COSETS")) {
    opt.limits.max_cosets = std::strtoull(env, nullptr, 10);
    if (opt.limits.max_cosets == 0) opt.limits.max_cosets = 1;
  }

  std::string input, input2, k_csv = "1", targets_csv;
  long long k = 1;
  bool dump_table = false;
  std::string catalog_action, catalog_name;

  auto add_common = [&opt](CLI::App* cmd) {
    cmd->add_option("--output-format", opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--max-cosets", opt.limits.max_cosets, "coset limit for enumerations");
    cmd->add_option("--max-steps", opt.limits.max_steps, "step limit for enumerations");
  };

  CLI::App* abelianize = app.add_subcommand("abelianize", "abelian invariants of a presentation");
  abelianize->add_option("input", input, "DSL file, '-' for stdin, or catalog:<name>")
      ->required();
  add_common(abelianize);

  CLI::App* order = app.add_subcommand("order", "group order by coset enumeration");
  order->add_option("input", input)->required();
  order->add_flag("--table", dump_table, "include the coset table in JSON output");
  add_common(order);

  CLI::App* certify_cmd = app.add_subcommand("certify", "abelian / non-abelian certificate");
  certify_cmd->add_option("input", input)->required();
  certify_cmd->add_option("--targets", targets_csv, "comma-separated target names");
  add_common(certify_cmd);

  CLI::App* homcount = app.add_subcommand("homcount", "count homomorphisms into finite targets");
  homcount->add_option("input", input)->required();
  homcount->add_option("--targets", targets_csv, "comma-separated target names");
  add_common(homcount);

  CLI::App* affine = app.add_subcommand("affine", "group of the affine complement");
  affine->add_option("input", input)->required();
  add_common(affine);

  CLI::App* pullback = app.add_subcommand("pullback", "pull-back curve group");
  pullback->add_option("input", input)->required();
  pullback->add_option("--k", k, "covering parameter")->check(CLI::PositiveNumber);
  add_common(pullback);

  CLI::App* pair = app.add_subcommand("pair-report", "separation report for two curve groups");
  pair->add_option("input1", input)->required();
  pair->add_option("input2", input2)->required();
  pair->add_option("--k", k_csv, "comma-separated k values");
  add_common(pair);

  CLI::App* catalog = app.add_subcommand("catalog", "built-in curve groups");
  catalog->add_option("action", catalog_action, "list or show")->required();
  catalog->add_option("name", catalog_name, "entry name for 'show'");
  add_common(catalog);

  CLI11_PARSE(app, argc, argv);

  try {
    if (abelianize->parsed()) return run_abelianize(input, opt);
    if (order->parsed()) return run_order(input, opt, dump_table);
    if (certify_cmd->parsed()) {
      return run_certify(input, opt,
                         targets_csv.empty() ? std::vector<meridian::FiniteTarget>{}
                                             : parse_targets(targets_csv));
    }
    if (homcount->parsed()) {
      return run_homcount(input, opt,
                          targets_csv.empty() ? std::vector<meridian::FiniteTarget>{}
                                              : parse_targets(targets_csv));
    }
    if (affine->parsed()) return run_affine(input, opt);
    if (pullback->parsed()) return run_pullback(input, k, opt);
    if (pair->parsed()) return run_pair_report(input, input2, k_csv, opt);
    if (catalog->parsed()) return run_catalog(catalog_action, catalog_name, opt);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitOk;
}
