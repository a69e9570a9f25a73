#include "autequiv/json_io.hpp"

#include <ostream>

#include "autequiv/error.hpp"

namespace autequiv {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  const auto it = j.find(name);
  if (it == j.end()) throw ParseError(std::string("missing field '") + name + "'");
  return *it;
}

template <typename T>
T get_as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("field '") + what + "': " + e.what());
  }
}

std::vector<int> ints(const Json& j, const char* what) {
  return get_as<std::vector<int>>(j, what);
}

}  // namespace

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return Json{{"n", g.order()}, {"edges", edges}, {"loops", g.loops()}};
}

Graph graph_from_json(const Json& j) {
  const int n = get_as<int>(field(j, "n"), "n");
  std::vector<std::pair<int, int>> edges;
  if (j.contains("edges")) {
    for (const Json& e : field(j, "edges")) {
      const auto pair = ints(e, "edges");
      if (pair.size() != 2) throw ParseError("each edge must be a pair [i, j]");
      edges.emplace_back(pair[0], pair[1]);
    }
  }
  std::vector<int> loops;
  if (j.contains("loops")) loops = ints(field(j, "loops"), "loops");
  return make_graph(n, edges, loops);
}

Json blg_to_json(const BLG& h) {
  return Json{{"graph", graph_to_json(h.underlying())}, {"in", h.in()}, {"out", h.out()}};
}

BLG blg_from_json(const Json& j) {
  const Json& gj = field(j, "graph");
  const int n = get_as<int>(field(gj, "n"), "n");
  std::vector<std::pair<int, int>> edges;
  for (const Json& e : gj.value("edges", Json::array())) {
    const auto pair = ints(e, "edges");
    if (pair.size() != 2) throw ParseError("each edge must be a pair [i, j]");
    edges.emplace_back(pair[0], pair[1]);
  }
  const auto loops = gj.contains("loops") ? ints(gj["loops"], "loops") : std::vector<int>{};
  return BLG(Graph::make(n, edges, loops), ints(field(j, "in"), "in"), ints(field(j, "out"), "out"));
}

Json group_to_json(const GroupTable& gt) {
  Json elements = Json::array();
  for (const Perm& p : gt.elements) elements.push_back(p.images());
  return Json{{"n", gt.n}, {"order", gt.order()}, {"elements", elements}};
}

Json matrix_to_json(const HomMatrix& x) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < x.values.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < x.values.cols(); ++c) row.push_back(x.values(r, c));
    rows.push_back(std::move(row));
  }
  return Json{{"n", x.n}, {"k", x.k}, {"l", x.l}, {"entries", rows}};
}

HomMatrix matrix_from_json(const Json& j) {
  HomMatrix x;
  x.n = get_as<int>(field(j, "n"), "n");
  x.k = get_as<unsigned>(field(j, "k"), "k");
  x.l = get_as<unsigned>(field(j, "l"), "l");
  if (x.n < 0) throw DomainError("matrix: negative n");
  const auto rows = ipow(static_cast<std::size_t>(x.n), x.l);
  const auto cols = ipow(static_cast<std::size_t>(x.n), x.k);
  const auto entries = get_as<std::vector<std::vector<std::int64_t>>>(field(j, "entries"), "entries");
  if (entries.size() != rows) throw ParseError("matrix: wrong number of rows");
  std::vector<std::int64_t> flat;
  for (const auto& row : entries) {
    if (row.size() != cols) throw ParseError("matrix: wrong number of columns");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  x.values = IntMatrix(rows, cols, std::move(flat));
  return x;
}

Json provenance_to_json(const Provenance& p) {
  Json j{{"step", p.step}, {"seed", p.seed}};
  if (p.step == 5) {
    j["loops"] = p.loops;
    j["base_step"] = p.base_step;
    if (!p.base_internal.empty()) j["base_internal"] = p.base_internal;
    if (p.base_step > 1) j["base_string"] = p.base_string;
    return j;
  }
  if (p.step == 4) j["internal"] = p.internal;
  if (p.step > 1) j["string"] = p.string;
  return j;
}

namespace {

Provenance provenance_from_json(const Json& j) {
  Provenance p;
  p.step = get_as<int>(field(j, "step"), "step");
  p.seed = get_as<std::string>(field(j, "seed"), "seed");
  if (j.contains("string")) p.string = ints(j["string"], "string");
  if (j.contains("internal")) p.internal = ints(j["internal"], "internal");
  if (j.contains("loops")) p.loops = ints(j["loops"], "loops");
  if (j.contains("base_step")) p.base_step = get_as<int>(j["base_step"], "base_step");
  if (j.contains("base_string")) p.base_string = ints(j["base_string"], "base_string");
  if (j.contains("base_internal")) p.base_internal = ints(j["base_internal"], "base_internal");
  return p;
}

}  // namespace

Json spanning_set_to_json(const SpanningSet& ss) {
  Json items = Json::array();
  for (const auto& item : ss.items)
    items.push_back({{"diagram", blg_to_json(item.diagram)},
                     {"provenance", provenance_to_json(item.provenance)},
                     {"matrix", matrix_to_json(item.matrix)},
                     {"key", item.key.hex()}});
  Json shadowed = Json::array();
  for (const auto& s : ss.shadowed)
    shadowed.push_back({{"provenance", provenance_to_json(s.provenance)},
                        {"shadowed_by", s.shadowed_by}});
  return Json{{"graph", graph_to_json(ss.graph)},
              {"k", ss.k},
              {"l", ss.l},
              {"items", items},
              {"shadowed", shadowed},
              {"generated", ss.generated},
              {"zero_matrices", ss.zero_count}};
}

SpanningSet spanning_set_from_json(const Json& j) {
  SpanningSet ss;
  ss.graph = graph_from_json(field(j, "graph"));
  ss.k = get_as<unsigned>(field(j, "k"), "k");
  ss.l = get_as<unsigned>(field(j, "l"), "l");
  for (const Json& item : field(j, "items")) {
    SpanningItem it;
    it.diagram = blg_from_json(field(item, "diagram"));
    it.provenance = provenance_from_json(field(item, "provenance"));
    it.matrix = matrix_from_json(field(item, "matrix"));
    if (it.matrix.n != ss.graph.order() || it.matrix.k != ss.k || it.matrix.l != ss.l)
      throw DomainError("spanning set item does not match the graph or arity");
    it.key = canonical_form(it.diagram);
    ss.items.push_back(std::move(it));
  }
  if (j.contains("shadowed"))
    for (const Json& s : j["shadowed"])
      ss.shadowed.push_back({provenance_from_json(field(s, "provenance")),
                             get_as<std::size_t>(field(s, "shadowed_by"), "shadowed_by")});
  ss.generated = j.value("generated", ss.items.size());
  ss.zero_count = j.value("zero_matrices", std::size_t{0});
  return ss;
}

Json diagrams_to_json(const std::vector<GeneratedDiagram>& diagrams) {
  Json out = Json::array();
  for (const auto& d : diagrams) {
    Json j = blg_to_json(d.diagram);
    j["provenance"] = provenance_to_json(d.provenance);
    out.push_back(std::move(j));
  }
  return out;
}

Json report_to_json(const SpanningReport& r) {
  return Json{{"case", r.case_name},
              {"rank", r.rank},
              {"dim", r.dim},
              {"spanning", r.spanning},
              {"matrices_checked", r.matrices_checked},
              {"equivariance_failures", r.equivariance_failures},
              {"orbits_outside_span", r.orbits_outside_span},
              {"functor_failures", r.functor_failures}};
}

void write_matrix_csv(std::ostream& os, const IntMatrix& x) {
  for (std::size_t r = 0; r < x.rows(); ++r) {
    for (std::size_t c = 0; c < x.cols(); ++c) os << (c ? "," : "") << x(r, c);
    os << '\n';
  }
}

void write_matrices_csv(std::ostream& os, const std::vector<IntMatrix>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << '\n';
    write_matrix_csv(os, xs[i]);
  }
}

namespace {

std::vector<std::string> tuple_labels(int n, unsigned len) {
  std::vector<std::string> out;
  const std::size_t total = ipow(static_cast<std::size_t>(n), len);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::string s;
    std::size_t rest = idx;
    std::vector<std::size_t> digits(len);
    for (unsigned t = len; t-- > 0;) {
      digits[t] = rest % static_cast<std::size_t>(n);
      rest /= static_cast<std::size_t>(n);
    }
    for (unsigned t = 0; t < len; ++t) s += (t ? "," : "") + std::to_string(digits[t] + 1);
    out.push_back(s.empty() ? "-" : s);
  }
  return out;
}

}  // namespace

void write_matrix_pretty(std::ostream& os, const IntMatrix& x, int n, unsigned k, unsigned l) {
  const auto rows = tuple_labels(n, l);
  const auto cols = tuple_labels(n, k);
  std::size_t width = 1;
  for (const auto& s : rows) width = std::max(width, s.size());
  for (const auto& s : cols) width = std::max(width, s.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    width = std::max(width, std::to_string(x.flat()[i]).size());
  auto pad = [&](const std::string& s) { return std::string(width - s.size(), ' ') + s; };

  os << pad("") << " |";
  for (const auto& c : cols) os << ' ' << pad(c);
  os << '\n' << std::string(width + 2 + cols.size() * (width + 1), '-') << '\n';
  for (std::size_t r = 0; r < x.rows(); ++r) {
    os << pad(rows[r]) << " |";
    for (std::size_t c = 0; c < x.cols(); ++c) os << ' ' << pad(std::to_string(x(r, c)));
    os << '\n';
  }
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace autequiv
