#include "grouptrix/table1.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <unordered_map>

#include "grouptrix/constructions.hpp"
#include "grouptrix/errors.hpp"
#include "grouptrix/graph_algorithms.hpp"
#include "grouptrix/hierarchy.hpp"
#include "grouptrix/twins.hpp"

namespace grouptrix {

std::string to_string(Column c) {
  switch (c) {
    case Column::Pow: return "Pow";
    case Column::EPow: return "EPow";
    case Column::DCom: return "DCom";
    case Column::Com: return "Com";
    case Column::NGen: return "NGen";
    case Column::Cyc: return "Cyc";
  }
  return "?";
}

const std::vector<Column>& all_columns() {
  static const std::vector<Column> cols{Column::Pow, Column::EPow, Column::DCom,
                                        Column::Com, Column::NGen, Column::Cyc};
  return cols;
}

const std::vector<Table1Def>& table1_rows() {
  static const std::vector<Table1Def> rows{
      {"A5", "alt:5", 60, Tier::Core, 5, {1, 1, 1, 1, 32, 32}},
      {"L2(7)", "psl2:7", 168, Tier::Core, 7, {1, 1, 1, 44, 79, 79}},
      {"A6", "alt:6", 360, Tier::Core, 9, {1, 1, 1, 92, 167, 167}},
      {"L2(8)", "psl2:8", 504, Tier::Core, 8, {1, 1, 1, 1, 128, 156}},
      {"L2(11)", "psl2:11", 660, Tier::Core, 11, {1, 1, 1, 112, 244, 244}},
      {"L2(13)", "psl2:13", 1092, Tier::Core, 13, {1, 1, 1, 184, 366, 366}},
      {"L2(17)", "psl2:17", 2448, Tier::Extended, 17, {1, 1, 1, 308, 750, 750}},
      {"A7", "alt:7", 2520, Tier::Extended, std::nullopt, {352, 352, 352, 352, 842, 947}},
      {"L2(19)", "psl2:19", 3420, Tier::Extended, 19, {1, 1, 1, 344, 914, 914}},
      {"L2(16)", "psl2:16", 4080, Tier::Extended, 16, {1, 1, 1, 1, 784, 784}},
      {"L3(3)", "psl3:3", 5616, Tier::Extended, std::nullopt, {756, 756, 808, 808, 1562, 1796}},
      {"L2(23)", "psl2:23", 6072, Tier::Extended, 23, {1267, 1, 1, 508, 1313, 1566}},
      {"L2(25)", "psl2:25", 7800, Tier::Extended, 25, {1627, 1, 1, 652, 1757, 2082}},
      {"M11", "m11", 7920, Tier::Extended, std::nullopt, {1212, 1212, 1212, 1212, 2444, 2576}},
  };
  return rows;
}

const Table1Def& table1_row(const std::string& name) {
  for (auto& r : table1_rows())
    if (r.name == name) return r;
  throw SpecError("unknown table row '" + name + "'");
}

std::string to_string(CellStatus s) {
  switch (s) {
    case CellStatus::Match: return "MATCH";
    case CellStatus::Mismatch: return "MISMATCH";
    case CellStatus::Skipped: return "SKIPPED";
  }
  return "?";
}

bool Table1Row::all_match() const {
  return std::none_of(cells.begin(), cells.end(), [](const Table1Cell& c) { return c.status == CellStatus::Mismatch; });
}

namespace {

GraphKind kind_of(Column c) {
  switch (c) {
    case Column::Pow: return GraphKind::Pow;
    case Column::EPow: return GraphKind::EPow;
    case Column::DCom: return GraphKind::DCom;
    case Column::Com: return GraphKind::Com;
    case Column::NGen: return GraphKind::NGen;
    default: throw Error("column has no graph");
  }
}

}  // namespace

Table1Row compute_table1_row(const Table1Def& def, const std::vector<Column>& columns) {
  Table1Row row;
  row.def = &def;
  Group g = make_group(def.spec);
  if (g.order() != def.order)
    throw Error(def.name + ": constructed order " + std::to_string(g.order()) + " differs from " +
                std::to_string(def.order));
  std::optional<Cover> cover;
  for (Column col : columns) {
    Table1Cell cell;
    cell.column = col;
    cell.reference = def.reference[static_cast<std::size_t>(col)];
    const auto start = std::chrono::steady_clock::now();
    if (col == Column::Cyc) {
      cell.computed = g.cyclic_class_count();
    } else {
      if (col == Column::DCom) {
        cover = builtin_cover(def.spec);
        if (!cover) {
          cell.note = "no built-in central cover";
          row.cells.push_back(cell);
          continue;
        }
        cell.note = "cover " + cover->label;
      }
      // Cyclic classes are closed twins in every column graph, so the class graph
      // is reached from the element graph by legal merges and has the same cokernel.
      BuiltGraph cg = build_class_graph(g, kind_of(col), col == Column::DCom ? cover : std::nullopt);
      cell.computed = cokernel(cg.graph).result.n();
    }
    cell.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    cell.status = *cell.computed == cell.reference ? CellStatus::Match : CellStatus::Mismatch;
    row.cells.push_back(cell);
  }
  return row;
}

namespace {

// Quotient by equal rows (closed rows when closed is set).
Graph twin_quotient(const Graph& g, bool closed) {
  std::unordered_map<Bitset, std::size_t, BitsetHash> first;
  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < g.n(); ++v) {
    Bitset key = g.row(v);
    if (closed) key.set(v);
    if (first.emplace(key, v).second) keep.push_back(v);
  }
  return induced(g, keep);
}

}  // namespace

std::size_t component_quotient_size(const std::string& spec) {
  Group g = make_group(spec);
  Graph pow = build_graph(g, GraphKind::Pow);
  std::vector<std::size_t> rest;
  for (Elem x = 0; x < g.order(); ++x)
    if (x != g.identity()) rest.push_back(x);
  Graph reduced = induced(pow, rest);
  auto comps = metrics(reduced, false).components;
  auto largest = std::max_element(comps.begin(), comps.end(),
                                  [](const auto& a, const auto& b) { return a.size() < b.size(); });
  Graph delta = induced(reduced, *largest);
  return twin_quotient(twin_quotient(delta, true), false).n();
}

ReportDocument table1_report(const std::vector<Table1Row>& rows) {
  ReportDocument doc;
  bool all = true;
  for (auto& r : rows) {
    const std::string p = "row." + r.def->name + ".";
    doc.add(p + "order", std::uint64_t{r.def->order});
    doc.add(p + "tier", r.def->tier == Tier::Core ? "core" : "extended");
    for (auto& c : r.cells) {
      const std::string k = p + to_string(c.column);
      std::ostringstream v;
      v << (c.computed ? std::to_string(*c.computed) : "-") << " reference=" << c.reference << " "
        << to_string(c.status);
      if (!c.note.empty()) v << " (" << c.note << ")";
      doc.add(k, v.str());
    }
    all = all && r.all_match();
  }
  doc.add("result", all ? "MATCH" : "MISMATCH");
  return doc;
}

}  // namespace grouptrix
