#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "autequiv/bilabelled.hpp"
#include "autequiv/diagram_gen.hpp"
#include "autequiv/graph.hpp"
#include "autequiv/hom_matrix.hpp"
#include "autequiv/oracle_verify.hpp"
#include "autequiv/perm_group.hpp"
#include "autequiv/spanning_set.hpp"

namespace autequiv {

using Json = nlohmann::ordered_json;

/// {"n": int, "edges": [[i,j],...], "loops": [i,...]}, 1-based.
Json graph_to_json(const Graph& g);
/// Throws ParseError on a malformed document, DomainError on invalid values.
Graph graph_from_json(const Json& j);

/// {"graph": <graph>, "in": [...], "out": [...]}
Json blg_to_json(const BLG& h);
BLG blg_from_json(const Json& j);

/// {"n": int, "order": int, "elements": [[images...], ...]}
Json group_to_json(const GroupTable& gt);

/// {"n":..., "k":..., "l":..., "entries": [[...], ...]}
Json matrix_to_json(const HomMatrix& x);
HomMatrix matrix_from_json(const Json& j);

Json provenance_to_json(const Provenance& p);

/// {"graph":..., "k":..., "l":..., "items":[{"diagram", "provenance", "matrix", "key"}],
///  "shadowed":[{"provenance", "shadowed_by"}], "generated":..., "zero_matrices":...}
Json spanning_set_to_json(const SpanningSet& ss);
SpanningSet spanning_set_from_json(const Json& j);

Json diagrams_to_json(const std::vector<GeneratedDiagram>& diagrams);

/// {"case", "rank", "dim", "spanning", "equivariance_failures", "functor_failures", ...}
Json report_to_json(const SpanningReport& r);

/// One CSV row per matrix row.
void write_matrix_csv(std::ostream& os, const IntMatrix& x);
/// Blocks separated by a blank line.
void write_matrices_csv(std::ostream& os, const std::vector<IntMatrix>& xs);

/// Matrix with [n]^l row headers and [n]^k column headers, e.g. "1,2".
void write_matrix_pretty(std::ostream& os, const IntMatrix& x, int n, unsigned k, unsigned l);

Json parse_json_text(const std::string& text);

}  // namespace autequiv
