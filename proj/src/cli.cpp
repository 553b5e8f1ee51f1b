#include "catsys/cli.hpp"

#include <CLI11.hpp>

#include <array>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "catsys/complex_io.hpp"
#include "catsys/errors.hpp"
#include "catsys/exchange_graph.hpp"
#include "catsys/milnor.hpp"
#include "catsys/ratio_search.hpp"
#include "catsys/symmetry.hpp"

namespace catsys::cli {

using nlohmann::json;

namespace {

constexpr std::array<std::pair<Command, std::string_view>, 10> kCommands{{
    {Command::Roots, "roots"},
    {Command::Identity, "identity"},
    {Command::Volume, "volume"},
    {Command::Systole, "systole"},
    {Command::Inequality, "inequality"},
    {Command::Sample, "sample"},
    {Command::Optimize, "optimize"},
    {Command::TiltGraph, "tilt-graph"},
    {Command::Milnor, "milnor"},
    {Command::Correspond, "correspond"},
}};

bool needs_ade(Command c) { return c != Command::Milnor && c != Command::Correspond; }

bool needs_charge(Command c) { return c == Command::Volume || c == Command::Systole || c == Command::Inequality; }

json rational_json(const Rational& q) { return {{"exact", to_string(q)}, {"value", q.convert_to<double>()}}; }

json charge_json(const CentralCharge& z) { return format_complex_list(z.values); }

json input_echo(const RunConfig& cfg) {
  json in;
  in["command"] = command_name(cfg.command);
  if (cfg.ade) {
    in["family"] = std::string(1, family_letter(cfg.ade->family()));
    in["rank"] = cfg.ade->rank();
  }
  if (cfg.charge) in["charge"] = charge_json(*cfg.charge);
  if (cfg.points) in["points"] = format_complex_list(*cfg.points);
  if (cfg.poly) in["poly"] = format_complex_list(*cfg.poly);
  if (cfg.ordering) in["ordering"] = *cfg.ordering;
  switch (cfg.command) {
    case Command::Sample:
      in["seed"] = cfg.seed;
      in["count"] = cfg.count;
      break;
    case Command::Optimize:
      in["seed"] = cfg.seed;
      in["restarts"] = cfg.restarts;
      break;
    case Command::TiltGraph:
      in["depth"] = cfg.depth;
      break;
    case Command::Milnor:
    case Command::Correspond:
      in["correspond"] = cfg.correspond || cfg.command == Command::Correspond;
      break;
    default:
      break;
  }
  return in;
}

std::string render_value(const json& v) {
  if (v.is_number_float()) return format_double(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// key: value per top-level result field
std::string render_generic(const json& doc) {
  std::ostringstream os;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (it.key() == "schema_version" || it.key() == "input" || it.key() == "command") continue;
    if (it.value().is_object()) {
      for (auto sub = it.value().begin(); sub != it.value().end(); ++sub)
        os << it.key() << '.' << sub.key() << ": " << render_value(sub.value()) << '\n';
    } else {
      os << it.key() << ": " << render_value(it.value()) << '\n';
    }
  }
  return os.str();
}

std::string render_roots(const RootSystem& rs) {
  std::ostringstream os;
  const std::size_t n = rs.rank();
  os << "type: " << rs.ade.name() << "\ncoxeter: " << rs.coxeter << "\ncartan:\n";
  for (std::size_t i = 0; i < n; ++i) {
    os << ' ';
    for (std::size_t j = 0; j < n; ++j) os << ' ' << (rs.cartan(i, j) >= 0 ? " " : "") << rs.cartan(i, j);
    os << '\n';
  }
  os << "cartan_inverse:\n";
  for (std::size_t i = 0; i < n; ++i) {
    os << ' ';
    for (std::size_t j = 0; j < n; ++j) os << ' ' << to_string(rs.cartan_inv(i, j));
    os << '\n';
  }
  os << "positive_roots: " << rs.positive_roots.size() << '\n';
  for (const auto& r : rs.positive_roots) os << "  " << to_string(r) << '\n';
  return os.str();
}

void report_roots(const RunConfig& cfg, Report& rep) {
  const RootSystem rs = build_root_system(*cfg.ade);
  const std::size_t n = rs.rank();
  json cartan = json::array(), inv = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array(), irow = json::array();
    for (std::size_t j = 0; j < n; ++j) {
      row.push_back(rs.cartan(i, j));
      irow.push_back(to_string(rs.cartan_inv(i, j)));
    }
    cartan.push_back(row);
    inv.push_back(irow);
  }
  rep.json["type"] = rs.ade.name();
  rep.json["coxeter"] = rs.coxeter;
  rep.json["cartan"] = cartan;
  rep.json["cartan_inverse"] = inv;
  rep.json["positive_root_count"] = rs.positive_roots.size();
  rep.json["closed_form_count"] = closed_form_root_count(rs.ade);
  rep.json["positive_roots"] = rs.positive_roots;
  rep.property_ok = rs.positive_roots.size() == closed_form_root_count(rs.ade);
  rep.human = render_roots(rs);
}

void report_identity(const RunConfig& cfg, Report& rep) {
  const RootSystem rs = build_root_system(*cfg.ade);
  const IdentityReport id = verify_volume_identity(rs);
  json failures = json::array();
  for (const auto& f : id.failures)
    failures.push_back({{"i", f.i + 1}, {"j", f.j + 1}, {"inverse_entry", to_string(f.inverse_entry)}, {"root_sum", to_string(f.root_sum)}});
  rep.json["pass"] = id.pass;
  rep.json["pairs_checked"] = id.pairs_checked;
  rep.json["failures"] = failures;
  rep.property_ok = id.pass;
}

void report_volume(const RunConfig& cfg, Report& rep) {
  const RootSystem rs = build_root_system(*cfg.ade);
  const double by_roots = volume_roots(rs, *cfg.charge);
  const double by_basis = volume_basis(rs, *cfg.charge);
  const double gap = std::abs(by_basis - by_roots) / std::max(1.0, by_roots);
  rep.json["volume_basis"] = by_basis;
  rep.json["volume_roots"] = by_roots;
  rep.json["relative_gap"] = gap;
  rep.json["heart_membership"] = heart_membership(*cfg.charge);
  rep.property_ok = gap <= tolerance::kCrossFormula;
}

void report_systole(const RunConfig& cfg, Report& rep) {
  const RootSystem rs = build_root_system(*cfg.ade);
  rep.json["sys_lower"] = systole_lower(rs, *cfg.charge);
  rep.json["sys_upper"] = systole_upper(rs, *cfg.charge);
  rep.json["heart_membership"] = heart_membership(*cfg.charge);
}

void report_inequality(const RunConfig& cfg, Report& rep) {
  const RootSystem rs = build_root_system(*cfg.ade);
  const SystolicReport r = check_inequality(rs, *cfg.charge);
  rep.json["sys_lower"] = r.sys_lower;
  rep.json["sys_upper"] = r.sys_upper;
  rep.json["volume"] = r.volume;
  rep.json["ratio_upper"] = r.ratio_upper;
  rep.json["bound"] = rational_json(r.bound);
  rep.json["slack"] = r.slack;
  rep.json["holds"] = r.holds();
  rep.json["heart_membership"] = heart_membership(*cfg.charge);
  rep.property_ok = r.holds();
}

json histogram_json(const std::vector<HistogramBin>& bins) {
  json h = json::array();
  for (const auto& b : bins) h.push_back({{"lo", b.lo}, {"hi", b.hi}, {"count", b.count}});
  return h;
}

void report_sample(const RunConfig& cfg, Report& rep) {
  const RootSystem rs = build_root_system(*cfg.ade);
  SearchConfig sc;
  sc.sample_count = cfg.count;
  sc.seed = cfg.seed;
  const bool want_rows = cfg.output == OutputFormat::Csv;
  const SearchResult res = sample_ratios(rs, sc, Execution::Parallel, want_rows);
  rep.json["bound"] = rational_json(res.bound);
  rep.json["best_ratio"] = res.best_ratio;
  rep.json["best_charge"] = charge_json(res.best_charge);
  rep.json["samples"] = res.evaluations;
  rep.json["samples_violating"] = res.samples_violating;
  rep.json["histogram"] = histogram_json(res.histogram);
  rep.property_ok = res.samples_violating == 0;
  if (want_rows) rep.csv = samples_to_csv(res.samples);
}

void report_optimize(const RunConfig& cfg, Report& rep) {
  const RootSystem rs = build_root_system(*cfg.ade);
  SearchConfig sc;
  sc.seed = cfg.seed;
  sc.restarts = cfg.restarts;
  const SearchResult res = optimize_ratio(rs, sc);
  const double bound = res.bound.convert_to<double>();
  json phases = json::array();
  for (const Complex z : res.best_charge.values) phases.push_back(phase(z));
  rep.json["bound"] = rational_json(res.bound);
  rep.json["best_ratio"] = res.best_ratio;
  rep.json["gap_to_bound"] = bound - res.best_ratio;
  rep.json["best_charge"] = charge_json(res.best_charge);
  rep.json["best_phases"] = phases;
  rep.json["evaluations"] = res.evaluations;
  rep.json["restarts_violating"] = res.samples_violating;
  rep.json["histogram"] = histogram_json(res.histogram);
  rep.property_ok = res.samples_violating == 0 && res.best_ratio <= bound + tolerance::kCrossFormula;
}

void report_tilt_graph(const RunConfig& cfg, Report& rep) {
  const RootSystem rs = build_root_system(*cfg.ade);
  const ExchangeGraph g = exchange_graph(rs, cfg.depth);
  const json body = to_json(g);
  for (auto it = body.begin(); it != body.end(); ++it) rep.json[it.key()] = it.value();
  rep.human = to_dot(g);
}

void report_milnor(const RunConfig& cfg, Report& rep) {
  const std::vector<Complex> raw = cfg.points ? *cfg.points : centered_polynomial_roots(*cfg.poly);
  const PointConfiguration p = validate_configuration(raw, cfg.ordering);
  const std::size_t n = p.rank();
  const auto l = segment_lengths(p);
  json lengths = json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) lengths.push_back({{"i", i + 1}, {"j", j + 1}, {"length", l(i, j)}});

  const double sys = geometric_systole(p);
  const double vol = geometric_volume(p);
  const Rational bound(static_cast<int>(n) + 1, static_cast<int>(n));
  const double slack = bound.convert_to<double>() * vol - sys * sys;
  const bool holds = slack >= -tolerance::kSlack * vol;

  rep.json["rank"] = n;
  rep.json["points"] = format_complex_list(p.points);
  rep.json["ordering"] = p.ordering;
  rep.json["general_position"] = p.general_position;
  rep.json["segment_lengths"] = lengths;
  rep.json["systole"] = sys;
  rep.json["volume"] = vol;
  rep.json["bound"] = rational_json(bound);
  rep.json["slack"] = slack;
  rep.json["holds"] = holds;
  rep.json["induced_charge"] = charge_json(induced_charge(p));
  rep.property_ok = holds;

  if (cfg.correspond || cfg.command == Command::Correspond) {
    const CorrespondenceReport c = verify_correspondence(p);
    rep.json["correspondence"] = {
        {"geometric_systole", c.geometric_systole},
        {"pi_times_categorical_systole", std::numbers::pi * c.categorical_systole},
        {"systole_rel_err", c.systole_rel_err},
        {"systole_matches", c.systole_matches()},
        {"geometric_volume", c.geometric_volume},
        {"pi2_times_categorical_volume", std::numbers::pi * std::numbers::pi * c.categorical_volume},
        {"volume_rel_err", c.volume_rel_err},
        {"volume_matches", c.volume_matches()},
        {"pass", c.pass()},
    };
    rep.property_ok = rep.property_ok && c.pass();
  }
}

void emit(const RunConfig& cfg, const Report& rep, std::ostream& out) {
  switch (cfg.output) {
    case OutputFormat::Json:
      out << rep.json.dump(2) << '\n';
      break;
    case OutputFormat::Csv:
      if (!rep.csv.empty()) {
        out << rep.csv;
        break;
      }
      [[fallthrough]];
    case OutputFormat::Human:
      out << (rep.human.empty() ? render_generic(rep.json) : rep.human);
      break;
  }
}

}  // namespace

std::string_view command_name(Command c) {
  for (const auto& [cmd, name] : kCommands)
    if (cmd == c) return name;
  return "?";
}

Command parse_command(std::string_view name) {
  for (const auto& [cmd, n] : kCommands)
    if (n == name) return cmd;
  throw ValidationError("unknown command '" + std::string(name) + "'");
}

void RunConfig::validate() const {
  const std::string name(command_name(command));
  if (needs_ade(command) && !ade) throw ValidationError(name + " requires --family and --rank");
  if (needs_charge(command) && !charge) throw ValidationError(name + " requires --charge");
  if (charge && ade && charge->size() != ade->size())
    throw ValidationError("--charge has " + std::to_string(charge->size()) + " entries but " + ade->name() + " has rank " +
                          std::to_string(ade->rank()));
  if (!needs_ade(command)) {
    if (!points && !poly) throw ValidationError(name + " requires --points or --poly");
    if (points && poly) throw ValidationError(name + " takes --points or --poly, not both");
  }
  if (command == Command::Sample && count < 1) throw ValidationError("--count must be at least 1");
  if (command == Command::Optimize && restarts < 1) throw ValidationError("--restarts must be at least 1");
  if (command == Command::TiltGraph && depth < 1) throw ValidationError("--depth must be at least 1");
}

Report build_report(const RunConfig& cfg) {
  cfg.validate();
  Report rep;
  rep.json["schema_version"] = kSchemaVersion;
  rep.json["command"] = command_name(cfg.command);
  rep.json["input"] = input_echo(cfg);
  switch (cfg.command) {
    case Command::Roots: report_roots(cfg, rep); break;
    case Command::Identity: report_identity(cfg, rep); break;
    case Command::Volume: report_volume(cfg, rep); break;
    case Command::Systole: report_systole(cfg, rep); break;
    case Command::Inequality: report_inequality(cfg, rep); break;
    case Command::Sample: report_sample(cfg, rep); break;
    case Command::Optimize: report_optimize(cfg, rep); break;
    case Command::TiltGraph: report_tilt_graph(cfg, rep); break;
    case Command::Milnor:
    case Command::Correspond: report_milnor(cfg, rep); break;
  }
  return rep;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const Report rep = build_report(cfg);
    if (cfg.out_file) {
      std::ofstream file(*cfg.out_file);
      if (!file) throw ValidationError("cannot open --out-file '" + *cfg.out_file + "'");
      emit(cfg, rep, file);
    } else {
      emit(cfg, rep, out);
    }
    if (!rep.property_ok) {
      err << "error: property violation in " << command_name(cfg.command) << " (see report)\n";
      return kExitPropertyViolation;
    }
    return kExitOk;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const PropertyViolation& e) {
    err << "property violation: " << e.what() << '\n';
    return kExitPropertyViolation;
  }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Categorical systoles and volumes for ADE 2-Calabi-Yau categories", "catsys"};
  app.set_config("--config", "", "Flat key=value file mirroring the flags; flags override it");
  app.require_subcommand(1);

  std::string family, charge, points, poly, ordering, output = "human", out_file;
  int rank = 0;
  std::uint64_t seed = 0;
  std::size_t count = 10000, restarts = 20, depth = 4;
  bool correspond = false;

  app.add_option("--family", family, "ADE family: A, D or E");
  app.add_option("--rank", rank, "Rank n");
  app.add_option("--charge", charge, "Central charge, comma-separated a+bi tokens");
  app.add_option("--points", points, "Point configuration, comma-separated a+bi tokens");
  app.add_option("--poly", poly, "Coefficients a_1..a_n of z^(n+1) + a_1 z^(n-1) + ... + a_n");
  app.add_option("--ordering", ordering, "Permutation of the points, comma-separated 0-based indices");
  app.add_option("--seed", seed, "Random seed");
  app.add_option("--count", count, "Number of samples");
  app.add_option("--restarts", restarts, "Optimizer restarts");
  app.add_option("--depth", depth, "Exchange graph depth");
  app.add_flag("--correspond", correspond, "Also check the categorical correspondence (milnor)");
  app.add_option("--output", output, "human, json or csv")->check(CLI::IsMember({"human", "json", "csv"}));
  app.add_option("--out-file", out_file, "Write the report here instead of stdout");

  for (const auto& [cmd, name] : kCommands) app.add_subcommand(std::string(name))->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  RunConfig cfg;
  try {
    cfg.command = parse_command(app.get_subcommands().front()->get_name());
    if (!family.empty() || rank != 0) {
      if (family.empty() || rank == 0) throw ValidationError("--family and --rank must be given together");
      cfg.ade = AdeType::make(parse_family(family), rank);
    }
    if (!charge.empty()) {
      try {
        cfg.charge = parse_charge(charge);
      } catch (const ParseError& e) {
        throw ValidationError(std::string("--charge ") + e.what());
      }
    }
    if (!points.empty()) cfg.points = parse_complex_list(points);
    if (!poly.empty()) cfg.poly = parse_complex_list(poly);
    if (!ordering.empty()) cfg.ordering = parse_index_list(ordering);
    cfg.seed = seed;
    cfg.count = count;
    cfg.restarts = restarts;
    cfg.depth = depth;
    cfg.correspond = correspond;
    cfg.output = output == "json" ? OutputFormat::Json : output == "csv" ? OutputFormat::Csv : OutputFormat::Human;
    if (!out_file.empty()) cfg.out_file = out_file;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return run(cfg, out, err);
}

}  // namespace catsys::cli
