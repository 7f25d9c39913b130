#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "htc/congruence.hpp"
#include "htc/diagram.hpp"
#include "htc/expr.hpp"
#include "htc/ledger.hpp"
#include "htc/torsion.hpp"
#include "htc/zelevinsky.hpp"

namespace htc::io {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Cuspidal labels by id. Files list them once under "cuspidals" and refer to
/// them by id; a base may also be written inline as an object.
using Catalogue = std::map<std::string, Cuspidal>;

json to_json(const Cuspidal& c);
json to_json(const Wildcard& w, bool base_by_id = false);
json to_json(const Multisegment& m);
json to_json(const Expr& e);
json to_json(const Diagram& d);
json to_json(const LocalComponent& c, bool base_by_id = true);
json to_json(const LedgerTerm& term, const GlobalContext& ctx);
json to_json(const TorsionProfile& p);
json to_json(const DimensionSum& sum);
json to_json(const DTable& table);
json to_json(const ContributionSet& set);
json to_json(const Verdict& v);
json to_json(const Dataset& ds);

/// Each parser throws SchemaError with a JSON-pointer path into `j`; `path`
/// is the prefix of `j` inside the enclosing document.
Cuspidal cuspidal_from_json(const json& j, const std::string& path = "");
Multisegment multisegment_from_json(const json& j, const std::string& path = "");
Expr expr_from_json(const json& j, const std::string& path = "");
Diagram diagram_from_json(const json& j, const std::string& path = "");
LocalComponent local_component_from_json(const json& j, const Catalogue& catalogue, const std::string& path = "");
LedgerTerm ledger_term_from_json(const json& j, const std::string& path = "");
TorsionProfile torsion_from_json(const json& j, const std::string& path = "");
DimensionSum dimension_sum_from_json(const json& j, int default_level, const std::string& path = "");
DTable dtable_from_json(const json& j, const std::string& path = "");
Dataset dataset_from_json(const json& j);

/// Ledger listings: {"schema_version", "context", "t", "terms": [...]}.
json ledger_to_json(const std::vector<LedgerTerm>& terms, const GlobalContext& ctx, int t);
std::vector<LedgerTerm> ledger_from_json(const json& j);

/// Tab separated "sign  label  deg=d", one term per line.
std::string ledger_listing(const std::vector<LedgerTerm>& terms, const GlobalContext& ctx);

/// Parses a file; malformed JSON becomes a SchemaError at path "".
json read_json_file(const std::string& file);

struct Config {
  int d = 0;
  int g = 1;
  int e_pi = 1;
  Rational kappa;
  std::string pi = "π";
  std::string modl_class;
  std::vector<int> levels{0};
  std::string format = "ascii";  // json | ascii | svg
};

/// Throws SchemaError (bad file) or InvalidArgument (d < g, g < 1, kappa <= 0,
/// unknown format).
Config config_from_json(const json& j);
void validate(const Config& c);
GlobalContext context_of(const Config& c);

}  // namespace htc::io
