#include "htc/cli.hpp"

#include <algorithm>
#include <optional>

#include <CLI11.hpp>

#include "htc/congruence.hpp"
#include "htc/errors.hpp"
#include "htc/io.hpp"
#include "htc/ledger.hpp"
#include "htc/render.hpp"

namespace htc::cli {

namespace {

using io::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ContextFlags {
  std::string config_file;
  std::optional<int> d;
  std::optional<int> g;
  std::optional<int> e_pi;
  std::optional<std::string> kappa;
  std::optional<std::string> pi;
  std::optional<std::string> modl;
  std::vector<int> levels;
  bool json = false;
  bool ascii = false;
  bool svg = false;

  void attach(CLI::App* app, bool with_context) {
    app->add_option("--config", config_file, "JSON config file; flags override it");
    if (with_context) {
      app->add_option("--d", d, "rank d of the unitary group");
      app->add_option("--g", g, "g with π a cuspidal of GL_g");
      app->add_option("--e-pi", e_pi, "e_π");
      app->add_option("--kappa", kappa, "multiplicity prefactor, e.g. 1/4");
      app->add_option("--pi", pi, "label of π");
      app->add_option("--modl", modl, "mod-l class of π");
    }
    app->add_option("--levels", levels, "level list n");
    app->add_flag("--json", json, "JSON output");
    app->add_flag("--ascii", ascii, "ASCII output");
    app->add_flag("--svg", svg, "SVG output");
  }

  io::Config resolve() const {
    io::Config c;
    if (!config_file.empty()) c = io::config_from_json(io::read_json_file(config_file));
    if (d) c.d = *d;
    if (g) c.g = *g;
    if (e_pi) c.e_pi = *e_pi;
    if (kappa) {
      try {
        c.kappa = Rational::parse(*kappa);
      } catch (const InvalidArgument& e) {
        throw UsageError(e.what());
      }
    }
    if (pi) c.pi = *pi;
    if (modl) c.modl_class = *modl;
    if (!levels.empty()) c.levels = levels;
    if (json + ascii + svg > 1) throw UsageError("choose one of --json, --ascii, --svg");
    if (json) c.format = "json";
    if (ascii) c.format = "ascii";
    if (svg) c.format = "svg";
    return c;
  }
};

GlobalContext context_or_usage(const io::Config& c) {
  try {
    return io::context_of(c);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
}

struct DiagramArgs {
  ContextFlags flags;
  std::optional<int> s;
  std::optional<int> t;
  std::string component_file;
  std::optional<int> at_r;
};

int cmd_diagram(const DiagramArgs& a, std::ostream& out) {
  io::Config config = a.flags.resolve();
  if (!a.flags.json && !a.flags.svg && !a.flags.ascii && a.flags.config_file.empty()) config.format = "ascii";
  if (config.format != "json" && config.format != "ascii" && config.format != "svg")
    throw UsageError("unknown format '" + config.format + "'");

  Diagram d;
  std::optional<LocalComponent> component;
  if (!a.component_file.empty()) {
    if (a.s || a.t) throw UsageError("--component excludes --s/--t");
    const json doc = io::read_json_file(a.component_file);
    const auto& version = doc.find("schema_version");
    if (version == doc.end() || !version->is_number_integer() || version->get<int>() != io::kSchemaVersion)
      throw SchemaError("/schema_version", "missing or unsupported schema version");
    if (!doc.contains("cuspidals")) throw SchemaError("/cuspidals", "missing required field");
    io::Catalogue catalogue;
    for (std::size_t n = 0; n < doc["cuspidals"].size(); ++n) {
      Cuspidal c = io::cuspidal_from_json(doc["cuspidals"][n], "/cuspidals/" + std::to_string(n));
      catalogue.emplace(c.id, c);
    }
    if (!doc.contains("component")) throw SchemaError("/component", "missing required field");
    component = io::local_component_from_json(doc["component"], catalogue, "/component");
    try {
      d = superpose(*component);
    } catch (const InvalidArgument& e) {
      throw SchemaError("/component", e.what());
    }
  } else {
    if (!a.s || !a.t) throw UsageError("diagram needs --s and --t, or --component");
    if (*a.s < 1 || *a.t < 1) throw UsageError("--s and --t must be >= 1");
    if (a.at_r) throw UsageError("--at-r needs --component");
    d = diagram(*a.s, *a.t);
  }

  if (config.format == "json") {
    json doc{{"schema_version", io::kSchemaVersion}};
    if (component) {
      doc["component"] = io::to_json(*component, false);
    } else {
      doc["s"] = *a.s;
      doc["t"] = *a.t;
    }
    doc["diagram"] = io::to_json(d);
    if (a.at_r) {
      json constituents = json::array();
      for (const auto& [p, ks] : d.annotations()) {
        if (p.r != *a.at_r) continue;
        for (int k : ks) {
          const Constituent c = constituent(*component, p, k);
          const auto origin = trace_back(*component, p, k);
          constituents.push_back(json{{"r", p.r},
                                      {"i", p.i},
                                      {"factor", k},
                                      {"label", c.to_string()},
                                      {"xi_twice", c.xi_power.twice()},
                                      {"origin", origin ? json{{"r", origin->r}, {"i", origin->i}} : json(nullptr)}});
        }
      }
      doc["constituents"] = constituents;
    }
    out << doc.dump(2) << '\n';
  } else if (config.format == "svg") {
    out << render_svg(d);
  } else {
    out << render_ascii(d);
    if (a.at_r) out << describe_column(*component, *a.at_r);
  }
  return kEqual;
}

struct LedgerArgs {
  ContextFlags flags;
  std::optional<int> t;
};

int cmd_ledger(const LedgerArgs& a, bool resolution, std::ostream& out, std::ostream& err) {
  const io::Config config = a.flags.resolve();
  if (!a.t) throw UsageError("missing --t");
  const GlobalContext ctx = context_or_usage(config);
  if (*a.t < 1) throw UsageError("--t must be >= 1");
  if (*a.t > ctx.s_g()) {
    err << "error: t = " << *a.t << " exceeds s_g = " << ctx.s_g() << '\n';
    return kStratumOutOfRange;
  }

  const Expr inf = infinitesimal_placeholder(ctx, *a.t);
  const auto terms = resolution ? resolution_terms(ctx, *a.t, inf) : filtration_graded(ctx, *a.t, inf);
  if (config.format == "json") {
    out << io::ledger_to_json(terms, ctx, *a.t).dump(2) << '\n';
  } else {
    out << io::ledger_listing(terms, ctx);
  }
  return kEqual;
}

Dataset load_dataset(const std::string& file) { return io::dataset_from_json(io::read_json_file(file)); }

Cuspidal resolve_pi(const Dataset& ds, const std::optional<std::string>& id) {
  if (!id || *id == ds.context.pi.id) return ds.context.pi;
  for (const auto& datum : ds.data)
    for (const auto& f : datum.local.factors)
      if (f.base.id == *id) return f.base;
  throw UsageError("no cuspidal labelled '" + *id + "' in the dataset");
}

/// Validates and, when an observed table is present, checks that it peels.
void check_dataset(const Dataset& ds) {
  validate(ds);
  if (ds.observed) infer_B(*ds.observed, ds.torsion);
}

struct CongruenceArgs {
  ContextFlags flags;
  std::string file_a;
  std::string file_b;
  std::optional<int> r;
  std::optional<int> s;
  std::optional<std::string> pi_a;
  std::optional<std::string> pi_b;
};

int cmd_congruence(const CongruenceArgs& a, std::ostream& out, std::ostream& err) {
  const io::Config config = a.flags.resolve();
  if (!a.r || !a.s) throw UsageError("congruence needs --r and --s");
  if (*a.s < 1 || *a.r < *a.s) throw UsageError("need 1 <= s <= r");

  const Dataset ds_a = load_dataset(a.file_a);
  const Dataset ds_b = load_dataset(a.file_b);
  check_dataset(ds_a);
  check_dataset(ds_b);
  const Cuspidal pi_a = resolve_pi(ds_a, a.pi_a);
  const Cuspidal pi_b = resolve_pi(ds_b, a.pi_b);
  if (!congruent_mod_l(pi_a, pi_b)) {
    err << "error: " << pi_a.id << " and " << pi_b.id << " have different mod-l classes\n";
    return kInconsistent;
  }

  const Verdict v = theorem_check(ds_a, pi_a, ds_b, pi_b, *a.r, *a.s);
  for (const auto& w : v.warnings) err << "warning: " << w << '\n';
  if (config.format == "json") {
    json doc = io::to_json(v);
    doc["r"] = *a.r;
    doc["s"] = *a.s;
    out << doc.dump(2) << '\n';
  } else {
    out << "verdict: " << (v.equal ? "equal" : "unequal") << '\n';
    out << "lhs: " << v.lhs.to_string() << '\n';
    out << "rhs: " << v.rhs.to_string() << '\n';
    for (const auto& d : v.diffs)
      out << "diff: " << d.symbol.to_string() << ": lhs=" << d.lhs << " rhs=" << d.rhs << '\n';
  }
  return v.equal ? kEqual : kUnequal;
}

struct InferArgs {
  ContextFlags flags;
  std::string file;
  std::optional<int> r;
  std::optional<std::string> pi;
};

int cmd_infer(const InferArgs& a, std::ostream& out) {
  const io::Config config = a.flags.resolve();
  const Dataset ds = load_dataset(a.file);
  validate(ds);
  const Cuspidal pi = resolve_pi(ds, a.pi);
  DTable table;
  if (ds.observed) {
    table = *ds.observed;
  } else {
    const int r = a.r ? *a.r : maximal_r(ds, pi);
    if (r < 1) throw UsageError("no datum matches " + pi.id + "; pass --r");
    table = d_sequence(ds, pi, r);
  }
  const ContributionSet set = infer_B(table, ds.torsion);
  if (config.format == "json") {
    out << json{{"schema_version", io::kSchemaVersion}, {"table", io::to_json(table)}, {"contributions", io::to_json(set)}}
               .dump(2)
        << '\n';
  } else {
    out << set.to_string() << '\n';
  }
  return kEqual;
}

struct GenerateArgs {
  ContextFlags flags;
  std::uint64_t seed = 0;
  int r = 1;
  bool torsion = false;
  std::vector<std::string> spectators;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  const io::Config config = a.flags.resolve();
  const GlobalContext ctx = context_or_usage(config);
  GeneratorConstraints constraints;
  constraints.r = a.r;
  constraints.levels = config.levels;
  constraints.inject_torsion = a.torsion;
  for (const auto& id : a.spectators) constraints.spectators.push_back(make_cuspidal(id, ctx.g()));
  out << io::to_json(generate_dataset(a.seed, ctx, constraints)).dump(2) << '\n';
  return kEqual;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local-component diagrams, sheaf ledgers and congruence checks"};
  app.name(args.empty() ? "htc" : args.front());
  app.require_subcommand(1);

  DiagramArgs diagram_args;
  auto* diagram_cmd = app.add_subcommand("diagram", "render the (r, i) diagram of Speh_s(St_t(π)) or of a component");
  diagram_args.flags.attach(diagram_cmd, false);
  diagram_cmd->add_option("--s", diagram_args.s, "rows s");
  diagram_cmd->add_option("--t", diagram_args.t, "row length t");
  diagram_cmd->add_option("--component", diagram_args.component_file, "local component JSON file");
  diagram_cmd->add_option("--at-r", diagram_args.at_r, "list constituents on column r");

  LedgerArgs resolution_args;
  auto* resolution_cmd = app.add_subcommand("resolution", "resolution of j_!*^{=t} HT(π, Π_t) by j_! terms");
  resolution_args.flags.attach(resolution_cmd, true);
  resolution_cmd->add_option("--t", resolution_args.t, "stratum t");

  LedgerArgs filtration_args;
  auto* filtration_cmd = app.add_subcommand("filtration", "graded parts of the filtration of j_!^{=t} HT(π, Π_t)");
  filtration_args.flags.attach(filtration_cmd, true);
  filtration_cmd->add_option("--t", filtration_args.t, "stratum t");

  CongruenceArgs congruence_args;
  auto* congruence_cmd = app.add_subcommand("congruence", "compare both sides of the congruence identity");
  congruence_args.flags.attach(congruence_cmd, false);
  congruence_cmd->add_option("A", congruence_args.file_a, "dataset A")->required();
  congruence_cmd->add_option("B", congruence_args.file_b, "dataset B")->required();
  congruence_cmd->add_option("--r", congruence_args.r, "r = s + t - 1");
  congruence_cmd->add_option("--s", congruence_args.s, "s");
  congruence_cmd->add_option("--pi-a", congruence_args.pi_a, "cuspidal of A (default: context π)");
  congruence_cmd->add_option("--pi-b", congruence_args.pi_b, "cuspidal of B (default: context π)");

  InferArgs infer_args;
  auto* infer_cmd = app.add_subcommand("infer", "recover the (s, t) pairs from a dataset's d-table");
  infer_args.flags.attach(infer_cmd, false);
  infer_cmd->add_option("DATASET", infer_args.file, "dataset file")->required();
  infer_cmd->add_option("--r", infer_args.r, "r (default: maximal)");
  infer_cmd->add_option("--pi", infer_args.pi, "cuspidal (default: context π)");

  GenerateArgs generate_args;
  auto* generate_cmd = app.add_subcommand("generate", "write a pseudo-random dataset");
  generate_args.flags.attach(generate_cmd, true);
  generate_cmd->add_option("--seed", generate_args.seed, "seed");
  generate_cmd->add_option("--r", generate_args.r, "r = s + t - 1");
  generate_cmd->add_flag("--torsion", generate_args.torsion, "inject a torsion profile");
  generate_cmd->add_option("--spectator", generate_args.spectators, "extra cuspidal labels");

  std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (diagram_cmd->parsed()) return cmd_diagram(diagram_args, out);
    if (resolution_cmd->parsed()) return cmd_ledger(resolution_args, true, out, err);
    if (filtration_cmd->parsed()) return cmd_ledger(filtration_args, false, out, err);
    if (congruence_cmd->parsed()) return cmd_congruence(congruence_args, out, err);
    if (infer_cmd->parsed()) return cmd_infer(infer_args, out);
    if (generate_cmd->parsed()) return cmd_generate(generate_args, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const SchemaError& e) {
    err << "schema error at " << (e.path.empty() ? "/" : e.path) << ": " << e.what() << '\n';
    return kSchema;
  } catch (const InvariantViolation& e) {
    err << "inconsistent input: " << e.what() << '\n';
    return kInconsistent;
  } catch (const InconsistentTable& e) {
    err << "inconsistent table: " << e.what() << '\n';
    return kInconsistent;
  } catch (const Unsatisfiable& e) {
    err << "unsatisfiable: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace htc::cli
