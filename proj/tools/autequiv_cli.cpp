#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "autequiv/error.hpp"
#include "autequiv/graph.hpp"
#include "autequiv/json_io.hpp"
#include "autequiv/oracle_verify.hpp"
#include "autequiv/perm_group.hpp"
#include "autequiv/spanning_set.hpp"

namespace {

using namespace autequiv;

enum Exit { kOk = 0, kFailure = 1, kParse = 2, kPolicy = 3 };

struct Options {
  std::string graph_path;
  std::string graph_json;
  std::string builtin;
  std::string out;
  std::string format = "json";
  unsigned k = 1;
  unsigned l = 1;
  int dk = 1;
  int dl = 1;
  std::string weights;
  std::string spanset;
  bool full_group = false;
  bool reduce = false;
  bool stream = false;
  std::uint64_t seed = 0;
  bool seed_given = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph load_graph(const Options& o) {
  const int given = !o.graph_path.empty() + !o.graph_json.empty() + !o.builtin.empty();
  if (given != 1) throw ParseError("exactly one of --graph, --graph-json, --builtin is required");
  if (!o.builtin.empty()) return builtin_graph(o.builtin);
  const std::string text = o.graph_json.empty() ? read_file(o.graph_path) : o.graph_json;
  return graph_from_json(parse_json_text(text));
}

std::vector<double> parse_weights(const std::string& text) {
  std::vector<double> w;
  const auto trimmed = text.find_first_not_of(" \t\n");
  if (trimmed != std::string::npos && text[trimmed] == '[') {
    const Json j = parse_json_text(text);
    for (const auto& v : j) {
      if (!v.is_number()) throw ParseError("weights must be numbers");
      w.push_back(v.get<double>());
    }
    return w;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double x = 0;
    try {
      x = std::stod(item, &used);
    } catch (const std::exception&) {
      throw ParseError("bad weight '" + item + "'");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos)
      throw ParseError("bad weight '" + item + "'");
    w.push_back(x);
  }
  return w;
}

Json real_matrix_json(const RealMatrix& x) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < x.rows; ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < x.cols; ++c) row.push_back(x(r, c));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", x.rows}, {"cols", x.cols}, {"entries", std::move(rows)}};
}

Json int_matrix_json(const IntMatrix& x) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < x.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < x.cols(); ++c) row.push_back(x(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

class Emitter {
 public:
  explicit Emitter(const Options& o) : o_(o) {
    if (o.format != "json" && o.format != "csv" && o.format != "pretty")
      throw ParseError("unknown format " + o.format);
  }

  void json(const Json& j) { buf_ << j.dump(2) << "\n"; }
  std::ostream& raw() { return buf_; }
  const std::string& format() const { return o_.format; }

  void flush() {
    if (o_.out.empty()) {
      std::cout << buf_.str();
      return;
    }
    std::ofstream f(o_.out, std::ios::binary);
    if (!f) throw ParseError("cannot write " + o_.out);
    f << buf_.str();
  }

 private:
  const Options& o_;
  std::ostringstream buf_;
};

void emit_matrices(Emitter& e, const std::vector<IntMatrix>& xs, int n, unsigned k, unsigned l,
                   bool tuple_headers) {
  if (e.format() == "csv") {
    write_matrices_csv(e.raw(), xs);
  } else if (e.format() == "pretty") {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) e.raw() << "\n";
      e.raw() << "# " << i + 1 << "\n";
      if (tuple_headers)
        write_matrix_pretty(e.raw(), xs[i], n, k, l);
      else
        write_matrix_csv(e.raw(), xs[i]);
    }
  } else {
    Json arr = Json::array();
    for (const auto& x : xs) arr.push_back(int_matrix_json(x));
    e.json(Json{{"count", xs.size()}, {"matrices", std::move(arr)}});
  }
}

int run_aut(const Options& o, Emitter& e) {
  const Graph g = load_graph(o);
  const GroupTable gt = automorphism_group(g);
  if (e.format() == "json") {
    Json j = group_to_json(gt);
    Json gens = Json::array();
    for (const auto& p : generating_set(gt)) gens.push_back(p.images());
    j["generators"] = std::move(gens);
    e.json(j);
    return kOk;
  }
  const char* sep = e.format() == "csv" ? "," : " ";
  for (const auto& p : gt.elements) {
    for (int i = 1; i <= p.size(); ++i) e.raw() << (i > 1 ? sep : "") << p(i);
    e.raw() << "\n";
  }
  return kOk;
}

int run_trail(const Options& o, Emitter& e) {
  const int m = longest_trail(load_graph(o));
  if (e.format() == "json")
    e.json(Json{{"m", m}});
  else
    e.raw() << m << "\n";
  return kOk;
}

int run_diagrams(const Options& o, Emitter& e) {
  const Graph g = load_graph(o);
  const auto ds = generate_diagrams(g, o.k, o.l);
  if (e.format() == "json") {
    Json j = Json{{"graph", graph_to_json(g)}, {"k", o.k}, {"l", o.l}, {"count", ds.size()}};
    j["diagrams"] = diagrams_to_json(ds);
    e.json(j);
    return kOk;
  }
  std::map<int, std::size_t> per_step;
  for (const auto& d : ds) ++per_step[d.provenance.step];
  const bool csv = e.format() == "csv";
  if (csv) e.raw() << "step,count\n";
  for (auto [step, c] : per_step)
    e.raw() << (csv ? "" : "step ") << step << (csv ? "," : ": ") << c << "\n";
  if (!csv) e.raw() << "total: " << ds.size() << "\n";
  return kOk;
}

int run_spanset(const Options& o, Emitter& e) {
  const Graph g = load_graph(o);
  BuildOptions bo;
  bo.reduce_to_basis = o.reduce;
  const SpanningSet ss = build_spanning_set(g, o.k, o.l, bo);
  if (e.format() == "json")
    e.json(spanning_set_to_json(ss));
  else
    emit_matrices(e, ss.matrices(), g.order(), o.k, o.l, true);
  return kOk;
}

int run_weight(const Options& o, Emitter& e) {
  SpanningSet ss;
  if (!o.spanset.empty()) {
    ss = spanning_set_from_json(parse_json_text(read_file(o.spanset)));
  } else {
    BuildOptions bo;
    bo.reduce_to_basis = o.reduce;
    ss = build_spanning_set(load_graph(o), o.k, o.l, bo);
  }
  std::vector<double> w;
  if (!o.weights.empty()) {
    w = parse_weights(o.weights);
  } else if (o.seed_given) {
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (std::size_t i = 0; i < ss.items.size(); ++i) w.push_back(dist(rng));
  } else {
    throw ParseError("weight needs --weights or --seed");
  }
  const RealMatrix x = weight_matrix(ss, w);
  if (e.format() == "json") {
    Json j = real_matrix_json(x);
    j["weights"] = w;
    e.json(j);
    return kOk;
  }
  const char* sep = e.format() == "csv" ? "," : " ";
  for (std::size_t r = 0; r < x.rows; ++r) {
    for (std::size_t c = 0; c < x.cols; ++c) e.raw() << (c ? sep : "") << x(r, c);
    e.raw() << "\n";
  }
  return kOk;
}

int run_bias(const Options& o, Emitter& e) {
  const Graph g = load_graph(o);
  emit_matrices(e, bias_spanning_set(g, o.l), g.order(), 0, o.l, true);
  return kOk;
}

int run_features(const Options& o, Emitter& e) {
  const Graph g = load_graph(o);
  const auto xs = feature_spanning_set(g, o.k, o.l, FeatureSpec{o.dk, o.dl});
  emit_matrices(e, xs, g.order(), o.k, o.l, false);
  return kOk;
}

int run_verify(const Options& o, Emitter& e) {
  const Graph g = load_graph(o);
  SpanningReport r;
  if (o.stream) {
    r = check_spanning_stream(g, o.k, o.l, o.full_group);
  } else {
    BuildOptions bo;
    bo.reduce_to_basis = o.reduce;
    r = check_spanning(build_spanning_set(g, o.k, o.l, bo), o.full_group);
  }
  r.case_name = (o.builtin.empty() ? std::string("graph") : o.builtin) + " (" +
                std::to_string(o.k) + "," + std::to_string(o.l) + ")";
  if (e.format() == "json") {
    e.json(report_to_json(r));
  } else {
    e.raw() << "rank " << r.rank << "\ndim " << r.dim << "\nspanning "
            << (r.spanning ? "true" : "false") << "\nequivariance_failures "
            << r.equivariance_failures.size() << "\n";
  }
  return r.ok() ? kOk : kFailure;
}

int run_dim(const Options& o, Emitter& e) {
  const GroupTable gt = automorphism_group(load_graph(o));
  const std::size_t d = orbit_count(gt, o.k + o.l);
  if (e.format() == "json")
    e.json(Json{{"dim", d}});
  else
    e.raw() << d << "\n";
  return kOk;
}

void print_error(const char* kind, const std::string& message) {
  std::cerr << Json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spanning sets of Aut(G)-equivariant weight matrices"};
  app.require_subcommand(1);
  Options o;

  struct Sub {
    const char* name;
    const char* help;
    int (*run)(const Options&, Emitter&);
    bool needs_kl, needs_l, features, weights, verify, reduce;
  };
  const std::vector<Sub> subs = {
      {"aut", "automorphism group", run_aut, false, false, false, false, false, false},
      {"trail", "longest trail length m", run_trail, false, false, false, false, false, false},
      {"diagrams", "generated bilabelled diagrams", run_diagrams, true, false, false, false, false,
       false},
      {"spanset", "deduplicated spanning set", run_spanset, true, false, false, false, false, true},
      {"weight", "weighted sum of a spanning set", run_weight, true, false, false, true, false,
       true},
      {"bias", "bias spanning set (k = 0)", run_bias, false, true, false, false, false, false},
      {"features", "spanning set with feature dimensions", run_features, true, false, true,
       false, false, false},
      {"verify", "equivariance and spanning report", run_verify, true, false, false, false, true,
       true},
      {"dim", "dimension of the equivariant space", run_dim, true, false, false, false, false,
       false},
  };

  std::vector<std::pair<CLI::App*, const Sub*>> registered;
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--graph", o.graph_path, "graph JSON file");
    sub->add_option("--graph-json", o.graph_json, "inline graph JSON");
    sub->add_option("--builtin", o.builtin, "named graph, e.g. K4, Kbar4, 2K2_A, C4_B, S2_C");
    sub->add_option("--out", o.out, "output file (default stdout)");
    sub->add_option("--format", o.format, "json | csv | pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    if (s.needs_kl) sub->add_option("--k", o.k, "input tensor power");
    if (s.needs_kl || s.needs_l) sub->add_option("--l", o.l, "output tensor power");
    if (s.features) {
      sub->add_option("--dk", o.dk, "input feature dimension")->check(CLI::PositiveNumber);
      sub->add_option("--dl", o.dl, "output feature dimension")->check(CLI::PositiveNumber);
    }
    if (s.weights) {
      sub->add_option("--weights", o.weights, "comma-separated or JSON array of weights");
      sub->add_option("--spanset", o.spanset, "spanning set JSON from `spanset`");
      sub->add_option("--seed", o.seed, "draw weights uniformly from [-1, 1]");
    }
    if (s.verify) {
      sub->add_flag("--full-group-check", o.full_group, "test every group element");
      sub->add_flag("--stream", o.stream, "verify over the diagram stream");
    }
    if (s.reduce) sub->add_flag("--reduce-to-basis", o.reduce, "keep an independent subset");
    registered.emplace_back(sub, &s);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::CallForAllHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError& ex) {
    print_error("parse", ex.what());
    return kParse;
  }

  for (auto [sub, s] : registered) {
    if (!sub->parsed()) continue;
    o.seed_given = s->weights && sub->count("--seed") > 0;
    try {
      Emitter e(o);
      const int code = s->run(o, e);
      e.flush();
      return code;
    } catch (const ParseError& ex) {
      print_error(ex.kind(), ex.what());
      return kParse;
    } catch (const PolicyError& ex) {
      print_error(ex.kind(), ex.what());
      return kPolicy;
    } catch (const Error& ex) {
      print_error(ex.kind(), ex.what());
      return kFailure;
    } catch (const std::exception& ex) {
      print_error("internal", ex.what());
      return kFailure;
    }
  }
  return kFailure;
}
