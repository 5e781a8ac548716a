// grouptrix: build graphs on finite groups, reproduce the cokernel table, classify.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "grouptrix/arith.hpp"
#include "grouptrix/constructions.hpp"
#include "grouptrix/embeddings.hpp"
#include "grouptrix/errors.hpp"
#include "grouptrix/graph_algorithms.hpp"
#include "grouptrix/graph_io.hpp"
#include "grouptrix/hierarchy.hpp"
#include "grouptrix/report.hpp"
#include "grouptrix/table1.hpp"
#include "grouptrix/twins.hpp"

using namespace grouptrix;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitSpec = 2;
constexpr int kExitSize = 3;
constexpr int kExitInternal = 4;

void emit(const ReportDocument& doc, bool json, const std::string& out) {
  const std::string text = json ? doc.to_json() : doc.to_text();
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw SpecError("cannot write " + out);
  f << text;
}

struct GraphOptions {
  std::string group, kind, format = "el", out, reduced = "none", cover, trace;
  bool class_graph = false, reduce = false;
};

int cmd_graph(const GraphOptions& o) {
  Group g = make_group(o.group);
  const GraphKind kind = parse_graph_kind(o.kind);
  std::optional<Cover> cover;
  if (!o.cover.empty()) cover = parse_cover(o.cover);
  else if (kind == GraphKind::DCom) cover = builtin_cover(o.group);
  BuiltGraph b = o.class_graph ? build_class_graph(g, kind, cover) : build(g, kind, cover);
  Graph graph = b.graph;
  if (o.reduced != "none") {
    std::vector<std::size_t> keep;
    for (std::size_t v = 0; v < graph.n(); ++v) {
      const bool drop = o.reduced == "identity" ? b.vertices[v] == b.group.identity()
                                                : graph.degree(v) + 1 == graph.n();
      if (!drop) keep.push_back(v);
    }
    if (o.reduced != "identity" && o.reduced != "centre" && o.reduced != "center")
      throw SpecError("--reduced takes none, identity or centre");
    graph = induced(graph, keep);
  }
  if (o.reduce) {
    ReductionTrace t = cokernel(graph);
    if (!o.trace.empty()) {
      std::ofstream f(o.trace);
      if (!f) throw SpecError("cannot write " + o.trace);
      f << format_trace(t);
    }
    graph = t.result;
  }
  std::ostringstream body;
  if (o.format == "el") write_edge_list(graph, body);
  else if (o.format == "dot") write_dot(graph, body, g.label() + " " + to_string(kind));
  else throw SpecError("--format takes el or dot");
  if (o.out.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream f(o.out);
    if (!f) throw SpecError("cannot write " + o.out);
    f << body.str();
  }
  auto m = metrics(graph, false);
  std::cerr << "n=" << graph.n() << " m=" << graph.edge_count() << " components=" << m.components.size() << '\n';
  return 0;
}

struct TableOptions {
  std::string rows, tier = "core", columns, out;
  bool json = false, component_quotient = false;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

int cmd_table1(const TableOptions& o) {
  if (o.tier != "core" && o.tier != "extended") throw SpecError("--tier takes core or extended");
  std::vector<const Table1Def*> defs;
  if (!o.rows.empty()) {
    for (auto& name : split(o.rows, ',')) defs.push_back(&table1_row(name));
  } else {
    for (auto& d : table1_rows())
      if (d.tier == Tier::Core || o.tier == "extended") defs.push_back(&d);
  }
  std::vector<Column> cols;
  if (o.columns.empty()) {
    cols = all_columns();
  } else {
    for (auto& c : split(o.columns, ',')) {
      auto it = std::find_if(all_columns().begin(), all_columns().end(),
                             [&](Column x) { return to_string(x) == c; });
      if (it == all_columns().end()) throw SpecError("unknown column '" + c + "'");
      cols.push_back(*it);
    }
  }
  // Rows go to the worker pool one at a time; results land in their own slot.
  std::vector<Table1Row> rows(defs.size());
  std::vector<std::exception_ptr> errors(defs.size());
  const unsigned jobs = std::max(1u, std::min<unsigned>(sweep_jobs(), static_cast<unsigned>(defs.size())));
  std::mutex mu;
  std::size_t next = 0;
  auto worker = [&] {
    while (true) {
      std::size_t i;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (next >= defs.size()) return;
        i = next++;
      }
      try {
        rows[i] = compute_table1_row(*defs[i], cols);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < jobs; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  ReportDocument doc = table1_report(rows);
  if (o.component_quotient)
    for (auto* d : defs) doc.add("row." + d->name + ".pow_component_quotient", std::uint64_t{component_quotient_size(d->spec)});
  emit(doc, o.json, o.out);
  return doc.get("result") == "MATCH" ? 0 : kExitMismatch;
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

int cmd_classify(const std::vector<std::string>& args, const std::string& cover_text, bool json,
                 const std::string& out) {
  if (args.empty()) throw SpecError("classify needs a task: pslq, lists, hierarchy or gk");
  ReportDocument doc;
  const std::string& task = args[0];
  auto need = [&](std::size_t k) {
    if (args.size() != k + 1) throw SpecError("classify " + task + " takes " + std::to_string(k) + " argument(s)");
  };
  auto number = [](const std::string& s) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(s, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != s.size() || s.empty()) throw SpecError("not a number: '" + s + "'");
    return static_cast<std::uint64_t>(v);
  };
  if (task == "pslq") {
    need(1);
    const auto q = number(args[1]);
    const bool cond = arith::psl2_cograph_condition(q);
    doc.add("q", q);
    const bool even = q % 2 == 0;
    const std::uint64_t lo = even ? q - 1 : (q - 1) / 2, hi = even ? q + 1 : (q + 1) / 2;
    doc.add("parity", even ? "even" : "odd");
    for (auto [name, v] : {std::pair<std::string, std::uint64_t>{even ? "q-1" : "(q-1)/2", lo},
                           std::pair<std::string, std::uint64_t>{even ? "q+1" : "(q+1)/2", hi}}) {
      auto fc = arith::factor_classify(v);
      doc.add(name, std::to_string(v) + " " + arith::to_string(fc.kind));
    }
    doc.add("condition", cond);
  } else if (task == "lists") {
    need(2);
    const auto bound = number(args[2]);
    if (args[1] == "even_d") doc.add("even_d", join(arith::enumerate_even_d(bound)));
    else if (args[1] == "odd_q") doc.add("odd_q", join(arith::enumerate_odd_q(bound)));
    else throw SpecError("lists kind must be even_d or odd_q");
    doc.add("bound", bound);
  } else if (task == "hierarchy") {
    need(1);
    Group g = make_group(args[1]);
    std::optional<Cover> cover = cover_text.empty() ? builtin_cover(args[1]) : parse_cover(cover_text);
    auto rep = hierarchy_report(g, cover);
    for (auto& f : rep.facts) doc.add(f.key, f.value);
    doc.add("consistent", rep.consistent);
    emit(doc, json, out);
    return rep.consistent ? 0 : kExitMismatch;
  } else if (task == "gk") {
    need(1);
    Group g = make_group(args[1]);
    auto gk = gk_graph(g);
    doc.add("group", g.label());
    std::string primes, edges;
    for (auto p : gk.primes) primes += (primes.empty() ? "" : " ") + std::to_string(p);
    for (auto [p, q] : gk.edges) edges += (edges.empty() ? "" : " ") + ("{" + std::to_string(p) + "," + std::to_string(q) + "}");
    doc.add("primes", primes);
    doc.add("edges", edges.empty() ? "none" : edges);
    doc.add("null", gk.is_null());
    doc.add("connected", gk.connected());
  } else {
    throw SpecError("unknown classify task '" + task + "'");
  }
  emit(doc, json, out);
  return 0;
}

int cmd_embed(const std::string& kind_text, const std::string& graph_path, const std::string& out) {
  const EmbedKind kind = parse_embed_kind(kind_text);
  std::ifstream f(graph_path);
  if (!f) throw SpecError("cannot read " + graph_path);
  Graph g = read_edge_list(f);
  EmbeddingCertificate c = embed(kind, g);
  VerifyResult v = verify_embedding(c);
  std::string text = format_certificate(c) + "verified: " + (v.ok ? "true" : "false " + v.reason) + "\n";
  if (out.empty()) std::cout << text;
  else std::ofstream(out) << text;
  return v.ok ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graphs on finite groups: hierarchy, twin reduction, cokernel table"};
  app.require_subcommand(1);
  unsigned jobs = 1;
  bool json = false;
  std::string out;
  app.add_option("--jobs,-j", jobs, "Worker threads for sweeps and table rows")->check(CLI::PositiveNumber);
  app.add_flag("--json", json, "Structured output for reports");

  GraphOptions go;
  auto* graph = app.add_subcommand("graph", "Build a graph on a group and write it");
  graph->add_option("--group,-g", go.group, "Group descriptor, e.g. psl2:7")->required();
  graph->add_option("--kind,-k", go.kind, "POW EPOW DCOM COM GEN NGEN NILP SOL ENGEL DEP COMPLETE NULL")->required();
  graph->add_option("--format,-f", go.format, "el or dot");
  graph->add_option("--out,-o", go.out, "Output file (default stdout)");
  graph->add_option("--reduced", go.reduced, "none, identity or centre");
  graph->add_option("--cover", go.cover, "Central cover for DCOM: '<group>,center' or '<group>,trivial'");
  graph->add_flag("--class-graph", go.class_graph, "One vertex per cyclic subgroup");
  graph->add_flag("--cokernel", go.reduce, "Write the cokernel instead of the graph");
  graph->add_option("--trace", go.trace, "With --cokernel, write the merge trace here");

  TableOptions to;
  auto* table = app.add_subcommand("table1", "Cokernel sizes for small simple groups against reference values");
  table->add_option("--rows", to.rows, "Comma-separated row names, e.g. A5,L2(7)");
  table->add_option("--tier", to.tier, "core or extended");
  table->add_option("--columns", to.columns, "Subset of Pow,EPow,DCom,Com,NGen,Cyc");
  table->add_option("--out,-o", to.out, "Report file (default stdout)");
  table->add_flag("--component-quotient", to.component_quotient,
                  "Also report the two-pass twin quotient of the largest reduced power graph component");

  std::vector<std::string> cargs;
  std::string cover_text;
  auto* classify = app.add_subcommand("classify", "pslq <q> | lists <even_d|odd_q> <bound> | hierarchy <group> | gk <group>");
  classify->add_option("task", cargs, "Task and arguments")->required();
  classify->add_option("--cover", cover_text, "Central cover for the hierarchy task");
  classify->add_option("--out,-o", out, "Report file (default stdout)");

  std::string ekind, egraph, eout;
  auto* emb = app.add_subcommand("embed", "Embed an edge-list graph as an induced subgraph of a graph on a group");
  emb->add_option("--kind,-k", ekind, "COM POW EPOW DEP GEN THREE_COLOURED")->required();
  emb->add_option("--graph", egraph, "Edge-list file")->required();
  emb->add_option("--out,-o", eout, "Certificate file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitSpec;
  }
  set_sweep_jobs(jobs);
  try {
    if (*graph) return cmd_graph(go);
    if (*table) {
      to.json = json;
      return cmd_table1(to);
    }
    if (*classify) return cmd_classify(cargs, cover_text, json, out);
    if (*emb) return cmd_embed(ekind, egraph, eout);
  } catch (const SizeGuardError& e) {
    std::cerr << "size guard: " << e.what() << '\n';
    return kExitSize;
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSpec;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return 0;
}
