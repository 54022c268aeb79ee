#ifndef HYPERTORIC_CLI_CORE_HPP
#define HYPERTORIC_CLI_CORE_HPP

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hypertoric/algebra.hpp"
#include "hypertoric/config.hpp"
#include "hypertoric/lattice.hpp"
#include "hypertoric/modules.hpp"
#include "hypertoric/parse.hpp"
#include "hypertoric/quiver.hpp"

namespace hypertoric::cli {

// Every command produces a column-named table; TSV and JSON emit the same
// cells.  Exit codes: 0 success, 1 validation error, 2 computation-domain
// error.

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

namespace detail {

inline std::string render_tsv(const Table& table) {
  std::ostringstream os;
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "\t" : "") << row[i];
    os << "\n";
  }
  return os.str();
}

inline std::string render_json(const Table& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json obj;
    for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i)
      obj[table.columns[i]] = row[i];
    rows.push_back(std::move(obj));
  }
  return rows.dump(2) + "\n";
}

inline IntVec parse_int_list(const std::string& text) {
  IntVec out;
  if (text.empty()) return out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    out.push_back(std::stoll(item, &used));
    while (used < item.size()) {
      if (!std::isspace(static_cast<unsigned char>(item[used])))
        throw std::invalid_argument("bad integer list entry '" + item + "'");
      ++used;
    }
  }
  return out;
}

inline std::vector<IntVec> parse_functional_list(const std::string& text) {
  std::vector<IntVec> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ';')) out.push_back(parse_int_list(item));
  return out;
}

inline std::string join_ints(const IntVec& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

inline std::string join_set(const std::set<int>& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int i : s) {
    os << (first ? "" : ",") << i;
    first = false;
  }
  os << "}";
  return os.str();
}

inline std::string rational_list(const std::vector<Rational>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << to_string(v[i]);
  return os.str();
}

inline std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(rational_from_string(item));
  return out;
}

}  // namespace detail

struct Options {
  std::string config_path;
  bool json = false;
  Int box = 4;
  Int max_degree = 10;
  std::optional<std::uint64_t> seed;
  std::string chi_override;

  std::optional<TheoryConfig> config;

  const TheoryConfig& need_config() const {
    if (!config) throw std::invalid_argument("this command requires --config");
    return *config;
  }

  IntVec need_chi() const {
    const auto& cfg = need_config();
    if (!chi_override.empty()) {
      IntVec chi = detail::parse_int_list(chi_override);
      if (static_cast<int>(chi.size()) != cfg.datum->k())
        throw std::invalid_argument("--chi must have length k");
      return chi;
    }
    if (!cfg.chi) throw std::invalid_argument("no chi in config; pass --chi");
    return *cfg.chi;
  }
};

namespace detail {

inline Table cmd_algebra_binary(const Options& opt, const std::string& a_text,
                                const std::string& b_text, bool comm) {
  const auto& cfg = opt.need_config();
  auto a = parse_element(cfg.datum, a_text);
  auto b = parse_element(cfg.datum, b_text);
  auto result = comm ? commutator(a, b) : multiply(a, b);
  return Table{{"element"}, {{result.to_string()}}};
}

inline Table cmd_algebra_fourier(const Options& opt, const std::string& a_text) {
  const auto& cfg = opt.need_config();
  auto image = fourier_transform(parse_element(cfg.datum, a_text), cfg.alpha);
  return Table{{"element"}, {{image.to_string()}}};
}

inline Table cmd_module_act(const Options& opt, const std::string& a_text,
                            const std::string& sigma_text) {
  const auto& cfg = opt.need_config();
  const IntVec sigma = parse_int_list(sigma_text);
  if (static_cast<int>(sigma.size()) != cfg.datum->k())
    throw std::invalid_argument("--sigma must have length k");
  auto a = parse_element(cfg.datum, a_text);
  auto sig = cfg.signature();
  auto image = act(a, basis_vector(sig, sigma));
  Table table{{"weight", "coefficient"}, {}};
  for (const auto& [key, coeff] : image.entries())
    table.rows.push_back({join_ints(key), coeff.to_string()});
  return table;
}

inline Table cmd_module_support(const Options& opt) {
  const auto& cfg = opt.need_config();
  Table table{{"sigma"}, {}};
  for (const auto& p : enumerate_support(support_polytope(cfg.signature()), opt.box))
    table.rows.push_back({join_ints(p)});
  return table;
}

inline Table cmd_module_classify(const Options& opt) {
  const auto& cfg = opt.need_config();
  auto sig = cfg.signature();
  auto res = classify(sig, opt.need_chi());
  Table table{{"label", "in_O", "verma", "sigma_max", "simple_probe"}, {}};
  table.rows.push_back({to_string(res.label),
                        std::string("in_O=") + (res.in_category_o ? "true" : "false"),
                        "verma=" + to_string(res.verma_status),
                        "sigma_max=" + (res.sigma_max ? join_ints(*res.sigma_max) : std::string("-")),
                        std::string("simple_probe=") +
                            (simplicity_probe(sig, opt.box) ? "true" : "false")});
  return table;
}

inline Table cmd_module_character(const Options& opt) {
  const auto& cfg = opt.need_config();
  Table table{{"degree", "rank"}, {}};
  for (const auto& [d, rank] : character_series(cfg.signature(), opt.need_chi(), opt.max_degree))
    table.rows.push_back({std::to_string(d), std::to_string(rank)});
  return table;
}

inline Table cmd_module_hikita(const Options& opt) {
  const auto& cfg = opt.need_config();
  Table table{{"S", "sigma_max", "i", "eigenvalue"}, {}};
  for (const auto& row : hikita_fixed_point_table(cfg.datum, cfg.alpha, cfg.mu, opt.need_chi()))
    for (const auto& [i, value] : row.table)
      table.rows.push_back({join_set(row.s), join_ints(row.sigma_max), std::to_string(i),
                            value.to_string()});
  return table;
}

inline Table cmd_quiver_fixed(const Options& opt, int type_a_n, const std::string& functionals) {
  std::optional<WeightSystem> ws;
  if (type_a_n > 0)
    ws = type_a_weight_system(type_a_n);
  else if (!functionals.empty()) {
    auto gammas = parse_functional_list(functionals);
    if (gammas.empty()) throw std::invalid_argument("--functionals is empty");
    ws = WeightSystem(static_cast<int>(gammas.front().size()), gammas);
  } else {
    throw std::invalid_argument("quiver-fixed needs --type-a or --functionals");
  }
  Table table{{"mu"}, {}};
  for (const auto& mu : torus_fixed_points(*ws, opt.box)) table.rows.push_back({join_ints(mu)});
  return table;
}

inline Table cmd_quiver_gt(const Options&, int n, const std::string& degrees_text) {
  const IntVec degrees = parse_int_list(degrees_text);
  Table table{{"pattern"}, {}};
  for (const auto& p : gt_patterns(n, degrees)) {
    std::ostringstream os;
    for (std::size_t i = 0; i < p.rows.size(); ++i) os << (i ? "|" : "") << join_ints(p.rows[i]);
    table.rows.push_back({os.str()});
  }
  return table;
}

inline Table cmd_quiver_spaltenstein(const Options&, const std::string& mu_text,
                                     std::optional<Int> r) {
  const IntVec mu = parse_int_list(mu_text);
  Table table{{"r", "count"}, {}};
  if (r) {
    table.rows.push_back({std::to_string(*r), std::to_string(spaltenstein_fixed_count(mu, *r))});
    return table;
  }
  Int total = 0;
  for (Int part : mu) total += part;
  Int sum = 0;
  for (Int rr = 0; rr <= total; ++rr) {
    const Int c = spaltenstein_fixed_count(mu, rr);
    sum += c;
    table.rows.push_back({std::to_string(rr), std::to_string(c)});
  }
  table.rows.push_back({"total", std::to_string(sum)});
  table.rows.push_back({"predicted", std::to_string(predicted_dimension(mu).dimension)});
  return table;
}

inline Table cmd_quiver_drinfeld(const Options&, const std::string& roots_text,
                                 const std::string& mu_text) {
  const auto roots = parse_rational_list(roots_text);
  const IntVec mu = parse_int_list(mu_text);
  auto d = drinfeld_polynomial(roots, mu);
  Table table{{"field", "value"}, {}};
  table.rows.push_back({"P", d.polynomial.to_string()});
  for (std::size_t i = 0; i < d.strings.strings.size(); ++i) {
    const auto& s = d.strings.strings[i];
    std::ostringstream os;
    os << "{";
    for (Int j = 0; j < s.length; ++j) os << (j ? "," : "") << to_string(s.start + make_rational(j));
    os << "}";
    table.rows.push_back({"S" + std::to_string(i + 1), os.str()});
  }
  table.rows.push_back({"general_position", general_position(d.strings) ? "true" : "false"});
  table.rows.push_back(
      {"predicted_dimension", std::to_string(predicted_dimension(mu).dimension)});
  return table;
}

inline Table cmd_quiver_count(const Options&, const std::string& mu_text, Int r,
                              const std::string& q_text) {
  const IntVec mu = parse_int_list(mu_text);
  IntVec qs = q_text.empty() ? IntVec{2, 3, 4, 5} : parse_int_list(q_text);
  Table table{{"field", "value"}, {}};
  std::vector<std::pair<Int, Int>> sampled;
  for (Int q : qs) {
    const Int c = invariant_subspace_count(static_cast<int>(q), mu, r);
    sampled.emplace_back(q, c);
    table.rows.push_back({"q=" + std::to_string(q), std::to_string(c)});
  }
  const Int fixed = spaltenstein_fixed_count(mu, r);
  table.rows.push_back({"fixed_count", std::to_string(fixed)});
  auto fit = lagrange_fit(sampled);
  table.rows.push_back({"fit", fit.to_string()});
  auto with_euler = sampled;
  with_euler.emplace_back(1, fixed);
  table.rows.push_back(
      {"integer_consistent", integer_polynomial_consistent(with_euler) ? "true" : "false"});
  return table;
}

inline Table cmd_check_relations(const Options& opt, Int trials) {
  const auto& cfg = opt.need_config();
  if (!opt.seed) throw std::invalid_argument("check-relations requires --seed");
  const auto& datum = cfg.datum;
  const int n = datum->n();
  const int k = datum->k();
  std::mt19937_64 rng(*opt.seed);
  std::uniform_int_distribution<Int> lam(-opt.box, opt.box);
  std::uniform_int_distribution<int> var(0, n);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> pick(1, n);
  std::uniform_int_distribution<int> pm(0, 1);

  auto random_poly = [&] {
    GTPoly p(n);
    for (int t = 0; t < 2; ++t) {
      GTPoly term = GTPoly::constant(n, make_rational(coeff(rng)));
      for (int j = 0; j < 2; ++j) {
        const int v = var(rng);
        term = term * (v == 0 ? GTPoly::hbar(n) : GTPoly::x(n, v));
      }
      p += term;
    }
    if (p.is_zero()) p = GTPoly::constant(n, 1);
    return p;
  };
  auto random_element = [&] {
    IntVec lambda(static_cast<std::size_t>(k));
    for (auto& v : lambda) v = lam(rng);
    return AlgebraElement::monomial(datum, lambda, random_poly());
  };

  Int passed = 0;
  std::ostringstream failures;
  for (Int t = 0; t < trials; ++t) {
    bool ok = true;
    // Hamiltonian relation.
    IntVec lambda(static_cast<std::size_t>(k));
    for (auto& v : lambda) v = lam(rng);
    const int i = pick(rng);
    auto xi = AlgebraElement::gt(datum, GTPoly::x(n, i));
    auto r = monopole(datum, lambda);
    auto hr = multiply(
        AlgebraElement::gt(datum, GTPoly::hbar(n) * make_rational(datum->restrict_weight(i, lambda))),
        r);
    if (commutator(xi, r) != hr) {
      ok = false;
      failures << "FAIL trial " << t << ": commutation\n";
    }
    // Associativity.
    auto a = random_element();
    auto b = random_element();
    auto c = random_element();
    if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c))) {
      ok = false;
      failures << "FAIL trial " << t << ": associativity\n";
    }
    // Module law on the configured signature.
    ModuleSignature sig(datum, cfg.alpha, cfg.s, cfg.mu, pm(rng) ? Flavor::Big : Flavor::Small);
    IntVec sigma(static_cast<std::size_t>(k));
    for (auto& v : sigma) v = lam(rng);
    auto vec = basis_vector(sig, sigma);
    if (!vec.is_zero() && act(multiply(a, b), vec) != act(a, act(b, vec))) {
      ok = false;
      failures << "FAIL trial " << t << ": module law\n";
    }
    if (ok) ++passed;
  }
  Table table{{"result"}, {}};
  if (passed != trials) table.rows.push_back({failures.str()});
  table.rows.push_back({"OK " + std::to_string(passed) + "/" + std::to_string(trials)});
  if (passed != trials) throw std::domain_error(render_tsv(table));
  return table;
}

}  // namespace detail

inline CommandResult run_command(std::vector<std::string> args) {
  CLI::App app{"Hypertoric enveloping algebra workbench: exact Coulomb-branch "
               "algebra, Springer-fibre weight modules, and quiver fixed-point "
               "combinatorics"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--config", opt.config_path, "theory configuration (JSON)");
  app.add_flag("--json", opt.json, "emit JSON instead of TSV");
  app.add_option("--box", opt.box, "L-infinity box radius for enumerations (default 4)");
  app.add_option("--max-degree", opt.max_degree, "top degree for character series (default 10)");
  std::uint64_t seed_value = 0;
  auto* seed_opt = app.add_option("--seed", seed_value, "seed for randomized checks");
  app.add_option("--chi", opt.chi_override, "character c1,...,ck (overrides config)");

  std::string a_text, b_text, sigma_text, functionals, degrees_text, mu_text, roots_text, q_text;
  int type_a_n = 0;
  int gt_n = 0;
  Int r_value = 0;
  Int trials = 50;
  bool r_given = false;

  auto* mul = app.add_subcommand("algebra-mul", "product a*b; columns: element");
  mul->add_option("--a", a_text)->required();
  mul->add_option("--b", b_text)->required();
  auto* comm = app.add_subcommand("algebra-comm", "commutator [a,b]; columns: element");
  comm->add_option("--a", a_text)->required();
  comm->add_option("--b", b_text)->required();
  auto* fourier = app.add_subcommand("algebra-fourier",
                                     "Fourier transform of a for the config's alpha; columns: element");
  fourier->add_option("--a", a_text)->required();
  auto* mact = app.add_subcommand("module-act", "act on |sigma>; columns: weight, coefficient");
  mact->add_option("--a", a_text)->required();
  mact->add_option("--sigma", sigma_text)->required();
  app.add_subcommand("module-support", "boxed support lattice points; columns: sigma");
  app.add_subcommand("module-classify",
                     "boundary type; columns: label, in_O, verma, sigma_max, simple_probe");
  app.add_subcommand("module-character", "weight-space ranks by degree; columns: degree, rank");
  app.add_subcommand("module-hikita",
                     "highest-weight tables of category-O exceptional subsets; "
                     "columns: S, sigma_max, i, eigenvalue");
  auto* qfix = app.add_subcommand("quiver-fixed", "boxed torus fixed points; columns: mu");
  qfix->add_option("--type-a", type_a_n, "type-A chain with n nodes");
  qfix->add_option("--functionals", functionals, "weights as 'a,b;c,d;...'");
  auto* qgt = app.add_subcommand("quiver-gt", "Gelfand-Tsetlin patterns; columns: pattern");
  qgt->add_option("--gt-n", gt_n)->required();
  qgt->add_option("--degrees", degrees_text)->required();
  auto* qsp = app.add_subcommand("quiver-spaltenstein",
                                 "fixed-point counts per codimension; columns: r, count");
  qsp->add_option("--mu", mu_text)->required();
  auto* r_opt = qsp->add_option("--r", r_value);
  auto* qdr = app.add_subcommand("quiver-drinfeld",
                                 "Drinfeld polynomial and root strings; columns: field, value");
  qdr->add_option("--roots", roots_text)->required();
  qdr->add_option("--mu", mu_text)->required();
  auto* qct = app.add_subcommand("quiver-count",
                                 "invariant-subspace counts over F_q; columns: field, value");
  qct->add_option("--mu", mu_text)->required();
  qct->add_option("--r", r_value)->required();
  qct->add_option("--q", q_text, "prime powers, default 2,3,4,5");
  auto* chk = app.add_subcommand("check-relations",
                                 "seeded randomized relation/associativity/module checks");
  chk->add_option("--trials", trials);

  CommandResult result;
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream os;
    os << app.help();
    result.out = os.str();
    return result;
  } catch (const CLI::ParseError& e) {
    result.err = std::string(e.what()) + "\n";
    result.exit_code = 1;
    return result;
  }
  if (seed_opt->count() > 0) opt.seed = seed_value;
  r_given = r_opt->count() > 0;

  try {
    if (!opt.config_path.empty()) opt.config = load_config(opt.config_path);
    Table table;
    if (mul->parsed())
      table = detail::cmd_algebra_binary(opt, a_text, b_text, false);
    else if (comm->parsed())
      table = detail::cmd_algebra_binary(opt, a_text, b_text, true);
    else if (fourier->parsed())
      table = detail::cmd_algebra_fourier(opt, a_text);
    else if (mact->parsed())
      table = detail::cmd_module_act(opt, a_text, sigma_text);
    else if (app.got_subcommand("module-support"))
      table = detail::cmd_module_support(opt);
    else if (app.got_subcommand("module-classify"))
      table = detail::cmd_module_classify(opt);
    else if (app.got_subcommand("module-character"))
      table = detail::cmd_module_character(opt);
    else if (app.got_subcommand("module-hikita"))
      table = detail::cmd_module_hikita(opt);
    else if (qfix->parsed())
      table = detail::cmd_quiver_fixed(opt, type_a_n, functionals);
    else if (qgt->parsed())
      table = detail::cmd_quiver_gt(opt, gt_n, degrees_text);
    else if (qsp->parsed())
      table = detail::cmd_quiver_spaltenstein(opt, mu_text,
                                              r_given ? std::optional<Int>(r_value) : std::nullopt);
    else if (qdr->parsed())
      table = detail::cmd_quiver_drinfeld(opt, roots_text, mu_text);
    else if (qct->parsed())
      table = detail::cmd_quiver_count(opt, mu_text, r_value, q_text);
    else if (chk->parsed())
      table = detail::cmd_check_relations(opt, trials);
    result.out = opt.json ? detail::render_json(table) : detail::render_tsv(table);
  } catch (const std::domain_error& e) {
    result.err = std::string(e.what()) + "\n";
    result.exit_code = 2;
  } catch (const std::exception& e) {
    result.err = std::string(e.what()) + "\n";
    result.exit_code = 1;
  }
  return result;
}

}  // namespace hypertoric::cli

#endif
