#include "htc/io.hpp"

#include <fstream>
#include <sstream>

#include "htc/errors.hpp"

namespace htc::io {

namespace {

const char* type_name(const json& j) { return j.type_name(); }

const json& field(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, std::string("expected an object, got ") + type_name(j));
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(path + "/" + key, "missing required field");
  return *it;
}

const json* optional_field(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, std::string("expected an object, got ") + type_name(j));
  auto it = j.find(key);
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

std::int64_t as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path, std::string("expected an integer, got ") + type_name(j));
  return j.get<std::int64_t>();
}

int as_small_int(const json& j, const std::string& path) {
  const auto v = as_int(j, path);
  if (v < -1000000 || v > 1000000) throw SchemaError(path, "integer out of range");
  return static_cast<int>(v);
}

std::int64_t as_positive(const json& j, const std::string& path) {
  const auto v = as_int(j, path);
  if (v < 1) throw SchemaError(path, "expected a positive integer");
  return v;
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path, std::string("expected a string, got ") + type_name(j));
  return j.get<std::string>();
}

bool as_bool(const json& j, const std::string& path) {
  if (!j.is_boolean()) throw SchemaError(path, std::string("expected a boolean, got ") + type_name(j));
  return j.get<bool>();
}

const json& as_array(const json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, std::string("expected an array, got ") + type_name(j));
  return j;
}

int int_or(const json& j, const std::string& key, int fallback, const std::string& path) {
  const json* v = optional_field(j, key, path);
  return v ? as_small_int(*v, path + "/" + key) : fallback;
}

std::string string_or(const json& j, const std::string& key, const std::string& fallback, const std::string& path) {
  const json* v = optional_field(j, key, path);
  return v ? as_string(*v, path + "/" + key) : fallback;
}

void check_version(const json& j, const std::string& path) {
  const auto v = as_int(field(j, "schema_version", path), path + "/schema_version");
  if (v != kSchemaVersion) throw SchemaError(path + "/schema_version", "unsupported schema version " + std::to_string(v));
}

std::string at(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

Cuspidal base_from_json(const json& j, const Catalogue* catalogue, const std::string& path) {
  if (j.is_string()) {
    const auto id = j.get<std::string>();
    if (!catalogue) throw SchemaError(path, "base given by id outside a document with cuspidals");
    auto it = catalogue->find(id);
    if (it == catalogue->end()) throw SchemaError(path, "unknown cuspidal id '" + id + "'");
    return it->second;
  }
  Cuspidal c = cuspidal_from_json(j, path);
  if (catalogue) {
    auto it = catalogue->find(c.id);
    if (it != catalogue->end() && !(it->second == c))
      throw SchemaError(path, "cuspidal '" + c.id + "' disagrees with the catalogue entry");
  }
  return c;
}

Wildcard wildcard_from_json(const json& j, const Catalogue* catalogue, const std::string& path) {
  Wildcard w;
  w.name = as_string(field(j, "id", path), path + "/id");
  w.args = string_or(j, "args", "", path);
  if (const json* b = optional_field(j, "base", path)) w.base = base_from_json(*b, catalogue, path + "/base");
  w.degree = as_small_int(field(j, "degree", path), path + "/degree");
  if (w.degree < 0) throw SchemaError(path + "/degree", "negative degree");
  w.twist = HalfInt::from_twice(int_or(j, "twist_twice", 0, path));
  return w;
}

json catalogue_to_json(const Catalogue& catalogue) {
  json out = json::array();
  for (const auto& [id, c] : catalogue) out.push_back(to_json(c));
  return out;
}

Catalogue catalogue_from_json(const json& j, const std::string& path) {
  Catalogue out;
  const auto& arr = as_array(j, path);
  for (std::size_t n = 0; n < arr.size(); ++n) {
    Cuspidal c = cuspidal_from_json(arr[n], at(path, n));
    auto [it, inserted] = out.emplace(c.id, c);
    if (!inserted && !(it->second == c))
      throw SchemaError(at(path, n), "cuspidal '" + c.id + "' declared twice with different fields");
  }
  return out;
}

json context_to_json(const GlobalContext& ctx) {
  return json{{"d", ctx.d}, {"pi", ctx.pi.id}, {"kappa", ctx.kappa.to_string()}};
}

GlobalContext context_from_json(const json& j, const Catalogue& catalogue, const std::string& path) {
  const int d = as_small_int(field(j, "d", path), path + "/d");
  const Cuspidal pi = base_from_json(field(j, "pi", path), &catalogue, path + "/pi");
  Rational kappa;
  if (const json* k = optional_field(j, "kappa", path)) {
    try {
      kappa = Rational::parse(as_string(*k, path + "/kappa"));
    } catch (const InvalidArgument& e) {
      throw SchemaError(path + "/kappa", e.what());
    }
  }
  try {
    return make_context(d, pi, kappa);
  } catch (const InvalidArgument& e) {
    throw SchemaError(path, e.what());
  }
}

}  // namespace

// Writers.

json to_json(const Cuspidal& c) {
  return json{{"id", c.id}, {"g", c.g}, {"e_pi", c.e_pi}, {"modl_class", c.modl_class}};
}

json to_json(const Wildcard& w, bool base_by_id) {
  json out{{"id", w.name}};
  if (!w.args.empty()) out["args"] = w.args;
  if (w.base) out["base"] = base_by_id ? json(w.base->id) : to_json(*w.base);
  out["degree"] = w.degree;
  if (w.twist != HalfInt{}) out["twist_twice"] = w.twist.twice();
  return out;
}

json to_json(const Multisegment& m) {
  Catalogue catalogue;
  json segments = json::array();
  for (const auto& seg : m.segments()) {
    catalogue.emplace(seg.base.id, seg.base);
    segments.push_back(json{{"base_id", seg.base.id}, {"start_twice", seg.start.twice()}, {"length", seg.length}});
  }
  json wildcards = json::array();
  for (const auto& w : m.wildcards()) {
    if (w.base) catalogue.emplace(w.base->id, *w.base);
    wildcards.push_back(to_json(w, true));
  }
  return json{{"cuspidals", catalogue_to_json(catalogue)},
              {"segments", segments},
              {"wildcards", wildcards},
              {"tate_twice", m.tate().twice()}};
}

json to_json(const Expr& e) {
  using Kind = Expr::Kind;
  switch (e.kind()) {
    case Kind::unit:
      return json{{"kind", "unit"}};
    case Kind::cuspidal:
      return json{{"kind", "cuspidal"}, {"base", to_json(e.cuspidal_label())}};
    case Kind::opaque:
      return json{{"kind", "opaque"}, {"wildcard", to_json(e.wildcard())}};
    case Kind::steinberg:
      return json{{"kind", "steinberg"}, {"index", e.index()}, {"of", to_json(e.children().front())}};
    case Kind::speh:
      return json{{"kind", "speh"}, {"index", e.index()}, {"of", to_json(e.children().front())}};
    case Kind::twist:
      return json{{"kind", "twist"}, {"twice", e.twist_amount().twice()}, {"of", to_json(e.children().front())}};
    case Kind::product: {
      json factors = json::array();
      for (const auto& c : e.children()) factors.push_back(to_json(c));
      return json{{"kind", "product"}, {"ordered", e.ordered()}, {"factors", factors}};
    }
  }
  return json{};
}

json to_json(const Diagram& d) {
  json points = json::array();
  for (const auto& [p, ks] : d.annotations()) points.push_back(json{{"r", p.r}, {"i", p.i}, {"factors", ks}});
  return json{{"points", points}};
}

json to_json(const LocalComponent& c, bool base_by_id) {
  json factors = json::array();
  for (const auto& f : c.factors)
    factors.push_back(json{{"t", f.t}, {"base", base_by_id ? json(f.base.id) : to_json(f.base)}});
  json out{{"s", c.s}, {"factors", factors}};
  if (c.wildcard) out["wildcard"] = to_json(*c.wildcard, base_by_id);
  return out;
}

json to_json(const LedgerTerm& term, const GlobalContext& ctx) {
  return json{{"kind", term.kind == LedgerKind::shriek ? "shriek" : "intermediate"},
              {"stratum", term.stratum},
              {"sign", term.sign},
              {"xi_twice", term.xi_power.twice()},
              {"tate_twice", term.tate.twice()},
              {"infinitesimal", to_json(term.infinitesimal)},
              {"label", term.to_string(ctx)},
              {"degree", term.levi_degree(ctx)}};
}

json to_json(const TorsionProfile& p) {
  return json{{"t0", p.t0 ? json(*p.t0) : json(nullptr)}, {"tau", p.tau}};
}

json to_json(const DimensionSum& sum) {
  json out = json::array();
  for (const auto& [symbol, c] : sum.terms())
    out.push_back(json{{"class", symbol.cls}, {"level", symbol.level}, {"coefficient", c}});
  return out;
}

json to_json(const DTable& table) {
  json rows = json::array();
  for (const auto& row : table.entries) {
    json cells = json::array();
    for (const auto& cell : row) cells.push_back(to_json(cell));
    rows.push_back(cells);
  }
  return json{{"r", table.r}, {"levels", table.levels}, {"r_is_maximal", table.r_is_maximal}, {"entries", rows}};
}

json to_json(const ContributionSet& set) {
  json pairs = json::array();
  for (const auto& [st, sum] : set.pairs) {
    json entry{{"s", st.first}, {"t", st.second}, {"weight", to_json(sum)}};
    auto it = set.witnesses.find(st);
    if (it != set.witnesses.end()) entry["witnesses"] = it->second;
    pairs.push_back(entry);
  }
  return json{{"r", set.r}, {"pairs", pairs}};
}

json to_json(const Verdict& v) {
  json diffs = json::array();
  for (const auto& d : v.diffs)
    diffs.push_back(json{{"class", d.symbol.cls}, {"level", d.symbol.level}, {"lhs", d.lhs}, {"rhs", d.rhs}});
  return json{{"schema_version", kSchemaVersion},
              {"equal", v.equal},
              {"warnings", v.warnings},
              {"lhs", to_json(v.lhs)},
              {"rhs", to_json(v.rhs)},
              {"diffs", diffs}};
}

json to_json(const Dataset& ds) {
  Catalogue catalogue;
  catalogue.emplace(ds.context.pi.id, ds.context.pi);
  for (const auto& datum : ds.data) {
    for (const auto& f : datum.local.factors) catalogue.emplace(f.base.id, f.base);
    if (datum.local.wildcard && datum.local.wildcard->base)
      catalogue.emplace(datum.local.wildcard->base->id, *datum.local.wildcard->base);
  }
  json data = json::array();
  for (const auto& datum : ds.data)
    data.push_back(json{{"id", datum.id},
                        {"local", to_json(datum.local, true)},
                        {"m", datum.m},
                        {"d_xi", datum.d_xi},
                        {"inv_dim", datum.inv_dim},
                        {"satake", datum.satake}});
  json out{{"schema_version", kSchemaVersion},
           {"cuspidals", catalogue_to_json(catalogue)},
           {"context", context_to_json(ds.context)},
           {"levels", ds.levels},
           {"torsion", to_json(ds.torsion)},
           {"data", data}};
  if (ds.observed) out["observed_table"] = to_json(*ds.observed);
  return out;
}

// Parsers.

Cuspidal cuspidal_from_json(const json& j, const std::string& path) {
  const auto id = as_string(field(j, "id", path), path + "/id");
  const int g = int_or(j, "g", 1, path);
  const int e_pi = int_or(j, "e_pi", 1, path);
  const auto modl = string_or(j, "modl_class", "", path);
  try {
    return make_cuspidal(id, g, e_pi, modl);
  } catch (const InvalidArgument& e) {
    throw SchemaError(path, e.what());
  }
}

Multisegment multisegment_from_json(const json& j, const std::string& path) {
  const Catalogue catalogue = catalogue_from_json(field(j, "cuspidals", path), path + "/cuspidals");
  std::vector<Segment> segments;
  const auto& segs = as_array(field(j, "segments", path), path + "/segments");
  for (std::size_t n = 0; n < segs.size(); ++n) {
    const auto p = at(path + "/segments", n);
    Segment s;
    s.base = base_from_json(field(segs[n], "base_id", p), &catalogue, p + "/base_id");
    s.start = HalfInt::from_twice(as_int(field(segs[n], "start_twice", p), p + "/start_twice"));
    s.length = static_cast<int>(as_positive(field(segs[n], "length", p), p + "/length"));
    segments.push_back(std::move(s));
  }
  std::vector<Wildcard> wildcards;
  if (const json* ws = optional_field(j, "wildcards", path)) {
    as_array(*ws, path + "/wildcards");
    for (std::size_t n = 0; n < ws->size(); ++n)
      wildcards.push_back(wildcard_from_json((*ws)[n], &catalogue, at(path + "/wildcards", n)));
  }
  const auto tate = HalfInt::from_twice(int_or(j, "tate_twice", 0, path));
  try {
    return Multisegment(std::move(segments), std::move(wildcards), tate);
  } catch (const std::logic_error& e) {
    throw SchemaError(path, e.what());
  }
}

Expr expr_from_json(const json& j, const std::string& path) {
  const auto kind = as_string(field(j, "kind", path), path + "/kind");
  auto inner = [&] { return expr_from_json(field(j, "of", path), path + "/of"); };
  auto index = [&] {
    const int v = as_small_int(field(j, "index", path), path + "/index");
    if (v < 0) throw SchemaError(path + "/index", "negative index");
    return v;
  };
  if (kind == "unit") return Expr();
  if (kind == "cuspidal") return Expr::cuspidal(base_from_json(field(j, "base", path), nullptr, path + "/base"));
  if (kind == "opaque") return Expr::opaque(wildcard_from_json(field(j, "wildcard", path), nullptr, path + "/wildcard"));
  if (kind == "steinberg") return Expr::steinberg(index(), inner());
  if (kind == "speh") return Expr::speh(index(), inner());
  if (kind == "twist")
    return Expr::twisted(inner(), HalfInt::from_twice(as_int(field(j, "twice", path), path + "/twice")));
  if (kind == "product") {
    const auto& fs = as_array(field(j, "factors", path), path + "/factors");
    std::vector<Expr> factors;
    for (std::size_t n = 0; n < fs.size(); ++n) factors.push_back(expr_from_json(fs[n], at(path + "/factors", n)));
    const json* ord = optional_field(j, "ordered", path);
    return Expr::product(std::move(factors), ord ? as_bool(*ord, path + "/ordered") : false);
  }
  throw SchemaError(path + "/kind", "unknown expression kind '" + kind + "'");
}

Diagram diagram_from_json(const json& j, const std::string& path) {
  Diagram::Annotations annotations;
  const auto& pts = as_array(field(j, "points", path), path + "/points");
  for (std::size_t n = 0; n < pts.size(); ++n) {
    const auto p = at(path + "/points", n);
    const DiagramPoint point{as_small_int(field(pts[n], "r", p), p + "/r"), as_small_int(field(pts[n], "i", p), p + "/i")};
    const auto& ks = as_array(field(pts[n], "factors", p), p + "/factors");
    std::vector<int> factors;
    for (std::size_t m = 0; m < ks.size(); ++m) factors.push_back(as_small_int(ks[m], at(p + "/factors", m)));
    if (!annotations.emplace(point, std::move(factors)).second) throw SchemaError(p, "duplicate point");
  }
  return Diagram(std::move(annotations));
}

LocalComponent local_component_from_json(const json& j, const Catalogue& catalogue, const std::string& path) {
  LocalComponent c;
  c.s = static_cast<int>(as_positive(field(j, "s", path), path + "/s"));
  const auto& fs = as_array(field(j, "factors", path), path + "/factors");
  for (std::size_t n = 0; n < fs.size(); ++n) {
    const auto p = at(path + "/factors", n);
    ComponentFactor f;
    f.t = static_cast<int>(as_positive(field(fs[n], "t", p), p + "/t"));
    f.base = base_from_json(field(fs[n], "base", p), &catalogue, p + "/base");
    c.factors.push_back(std::move(f));
  }
  if (const json* w = optional_field(j, "wildcard", path))
    c.wildcard = wildcard_from_json(*w, &catalogue, path + "/wildcard");
  return c;
}

LedgerTerm ledger_term_from_json(const json& j, const std::string& path) {
  LedgerTerm term;
  const auto kind = as_string(field(j, "kind", path), path + "/kind");
  if (kind == "shriek") {
    term.kind = LedgerKind::shriek;
  } else if (kind == "intermediate") {
    term.kind = LedgerKind::intermediate;
  } else {
    throw SchemaError(path + "/kind", "unknown ledger kind '" + kind + "'");
  }
  term.stratum = as_small_int(field(j, "stratum", path), path + "/stratum");
  term.sign = as_small_int(field(j, "sign", path), path + "/sign");
  if (term.sign != 1 && term.sign != -1) throw SchemaError(path + "/sign", "sign must be +1 or -1");
  term.xi_power = HalfInt::from_twice(as_int(field(j, "xi_twice", path), path + "/xi_twice"));
  term.tate = HalfInt::from_twice(as_int(field(j, "tate_twice", path), path + "/tate_twice"));
  term.infinitesimal = expr_from_json(field(j, "infinitesimal", path), path + "/infinitesimal");
  return term;
}

TorsionProfile torsion_from_json(const json& j, const std::string& path) {
  TorsionProfile p;
  if (const json* t0 = optional_field(j, "t0", path)) p.t0 = as_small_int(*t0, path + "/t0");
  const auto& tau = as_array(field(j, "tau", path), path + "/tau");
  for (std::size_t n = 0; n < tau.size(); ++n) p.tau.push_back(as_int(tau[n], at(path + "/tau", n)));
  return p;
}

DimensionSum dimension_sum_from_json(const json& j, int default_level, const std::string& path) {
  DimensionSum sum;
  if (j.is_number_integer()) {
    sum.add(DimensionSymbol{"", default_level}, j.get<std::int64_t>());
    return sum;
  }
  const auto& terms = as_array(j, path);
  for (std::size_t n = 0; n < terms.size(); ++n) {
    const auto p = at(path, n);
    DimensionSymbol symbol{string_or(terms[n], "class", "", p), int_or(terms[n], "level", default_level, p)};
    sum.add(symbol, as_int(field(terms[n], "coefficient", p), p + "/coefficient"));
  }
  return sum;
}

DTable dtable_from_json(const json& j, const std::string& path) {
  DTable table;
  table.r = static_cast<int>(as_positive(field(j, "r", path), path + "/r"));
  const auto& levels = as_array(field(j, "levels", path), path + "/levels");
  for (std::size_t n = 0; n < levels.size(); ++n) table.levels.push_back(as_small_int(levels[n], at(path + "/levels", n)));
  if (const json* m = optional_field(j, "r_is_maximal", path)) table.r_is_maximal = as_bool(*m, path + "/r_is_maximal");
  const auto& rows = as_array(field(j, "entries", path), path + "/entries");
  if (static_cast<int>(rows.size()) != table.r)
    throw SchemaError(path + "/entries", "expected " + std::to_string(table.r) + " rows (k = 0..r-1)");
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto p = at(path + "/entries", k);
    const auto& cells = as_array(rows[k], p);
    if (cells.size() != table.levels.size()) throw SchemaError(p, "expected one entry per level");
    std::vector<DimensionSum> row;
    for (std::size_t n = 0; n < cells.size(); ++n)
      row.push_back(dimension_sum_from_json(cells[n], table.levels[n], at(p, n)));
    table.entries.push_back(std::move(row));
  }
  return table;
}

Dataset dataset_from_json(const json& j) {
  check_version(j, "");
  Dataset ds;
  const Catalogue catalogue = catalogue_from_json(field(j, "cuspidals", ""), "/cuspidals");
  ds.context = context_from_json(field(j, "context", ""), catalogue, "/context");
  const auto& levels = as_array(field(j, "levels", ""), "/levels");
  for (std::size_t n = 0; n < levels.size(); ++n) ds.levels.push_back(as_small_int(levels[n], at("/levels", n)));
  ds.torsion = torsion_from_json(field(j, "torsion", ""), "/torsion");
  const auto& data = as_array(field(j, "data", ""), "/data");
  for (std::size_t n = 0; n < data.size(); ++n) {
    const auto p = at("/data", n);
    AutomorphicDatum datum;
    datum.id = as_string(field(data[n], "id", p), p + "/id");
    datum.local = local_component_from_json(field(data[n], "local", p), catalogue, p + "/local");
    datum.m = as_positive(field(data[n], "m", p), p + "/m");
    datum.d_xi = as_positive(field(data[n], "d_xi", p), p + "/d_xi");
    datum.inv_dim = as_positive(field(data[n], "inv_dim", p), p + "/inv_dim");
    datum.satake = string_or(data[n], "satake", "", p);
    ds.data.push_back(std::move(datum));
  }
  if (const json* obs = optional_field(j, "observed_table", "")) ds.observed = dtable_from_json(*obs, "/observed_table");
  return ds;
}

json ledger_to_json(const std::vector<LedgerTerm>& terms, const GlobalContext& ctx, int t) {
  json out_terms = json::array();
  for (const auto& term : terms) out_terms.push_back(to_json(term, ctx));
  return json{{"schema_version", kSchemaVersion},
              {"cuspidals", json::array({to_json(ctx.pi)})},
              {"context", context_to_json(ctx)},
              {"t", t},
              {"terms", out_terms}};
}

std::vector<LedgerTerm> ledger_from_json(const json& j) {
  check_version(j, "");
  std::vector<LedgerTerm> terms;
  const auto& arr = as_array(field(j, "terms", ""), "/terms");
  for (std::size_t n = 0; n < arr.size(); ++n) terms.push_back(ledger_term_from_json(arr[n], at("/terms", n)));
  return terms;
}

std::string ledger_listing(const std::vector<LedgerTerm>& terms, const GlobalContext& ctx) {
  std::ostringstream os;
  for (const auto& term : terms)
    os << (term.sign > 0 ? "+1" : "-1") << '\t' << term.to_string(ctx) << "\tdeg=" << term.levi_degree(ctx) << '\n';
  return os.str();
}

json read_json_file(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw SchemaError("", "cannot open '" + file + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("malformed JSON in '") + file + "': " + e.what());
  }
}

Config config_from_json(const json& j) {
  check_version(j, "");
  Config c;
  if (const json* ctx = optional_field(j, "context", "")) {
    c.d = int_or(*ctx, "d", c.d, "/context");
    c.g = int_or(*ctx, "g", c.g, "/context");
    c.e_pi = int_or(*ctx, "e_pi", c.e_pi, "/context");
    c.pi = string_or(*ctx, "pi", c.pi, "/context");
    c.modl_class = string_or(*ctx, "modl_class", c.modl_class, "/context");
    if (const json* k = optional_field(*ctx, "kappa", "/context")) {
      try {
        c.kappa = Rational::parse(as_string(*k, "/context/kappa"));
      } catch (const InvalidArgument& e) {
        throw SchemaError("/context/kappa", e.what());
      }
    }
  }
  if (const json* levels = optional_field(j, "levels", "")) {
    as_array(*levels, "/levels");
    c.levels.clear();
    for (std::size_t n = 0; n < levels->size(); ++n) c.levels.push_back(as_small_int((*levels)[n], at("/levels", n)));
  }
  c.format = string_or(j, "format", c.format, "");
  return c;
}

void validate(const Config& c) {
  if (c.g < 1) throw InvalidArgument("config: g must be >= 1");
  if (c.d < c.g) throw InvalidArgument("config: need d >= g");
  if (c.kappa.num <= 0 || c.kappa.den <= 0) throw InvalidArgument("config: kappa must be positive");
  if (c.format != "json" && c.format != "ascii" && c.format != "svg")
    throw InvalidArgument("config: unknown format '" + c.format + "'");
}

GlobalContext context_of(const Config& c) {
  validate(c);
  return make_context(c.d, make_cuspidal(c.pi, c.g, c.e_pi, c.modl_class), c.kappa);
}

}  // namespace htc::io
