#include <doctest.h>

#include <algorithm>
#include <map>
#include <nlohmann/json.hpp>

#include "grouptrix/constructions.hpp"
#include "grouptrix/graph_algorithms.hpp"
#include "grouptrix/hierarchy.hpp"
#include "grouptrix/report.hpp"
#include "grouptrix/table1.hpp"
#include "grouptrix/twins.hpp"

using namespace grouptrix;

namespace {

// One vertex per class of vertices with equal (closed or open) neighbourhoods.
Graph twin_collapse(const Graph& g, bool closed) {
  std::map<std::vector<std::size_t>, std::size_t> seen;
  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < g.n(); ++v) {
    auto nb = g.row(v).to_vector();
    if (closed) nb.insert(std::upper_bound(nb.begin(), nb.end(), v), v);
    if (seen.emplace(nb, v).second) keep.push_back(v);
  }
  return induced(g, keep);
}

std::size_t quotient_oracle(const std::string& spec) {
  const Group g = make_group(spec);
  const Graph pow = build_graph(g, GraphKind::Pow);
  std::vector<std::size_t> rest;
  for (Elem x = 0; x < g.order(); ++x)
    if (x != g.identity()) rest.push_back(x);
  const Graph reduced = induced(pow, rest);
  auto comps = metrics(reduced, false).components;
  std::size_t best = 0;
  for (std::size_t i = 1; i < comps.size(); ++i)
    if (comps[i].size() > comps[best].size()) best = i;
  return twin_collapse(twin_collapse(induced(reduced, comps[best]), true), false).n();
}

}  // namespace

TEST_CASE("report document text and json") {
  ReportDocument doc;
  doc.add("group", "A5");
  doc.add("order", std::uint64_t{60});
  doc.add("abelian", false);
  doc.add("note", "first");
  doc.add("note", "second \"quoted\"");
  CHECK(doc.get("order") == "60");
  CHECK(doc.get("note") == "first");
  CHECK(doc.get("missing").empty());
  CHECK(doc.to_text() == "group: A5\norder: 60\nabelian: false\nnote: first\nnote: second \"quoted\"\n");

  const auto j = nlohmann::ordered_json::parse(doc.to_json());
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"group", "order", "abelian", "note"});
  CHECK(j["group"] == "A5");
  REQUIRE(j["note"].is_array());
  CHECK(j["note"][1] == "second \"quoted\"");

  ReportDocument again;
  for (auto& [k, v] : doc.facts()) again.add(k, v);
  CHECK(again.to_json() == doc.to_json());
  CHECK(ReportDocument{}.to_text().empty());
}

TEST_CASE("table rows") {
  const auto& rows = table1_rows();
  CHECK(rows.size() == 14);
  CHECK(rows.front().name == "A5");
  CHECK(rows.back().name == "M11");
  for (auto& r : rows) {
    CAPTURE(r.name);
    CHECK(r.reference.size() == all_columns().size());
    CHECK(make_group(r.spec).order() == r.order);
    CHECK(std::is_sorted(rows.begin(), rows.end(), [](auto& a, auto& b) { return a.order < b.order; }));
    // The cyclic-class count bounds every other column.
    for (std::size_t c = 0; c + 1 < r.reference.size(); ++c) CHECK(r.reference[c] <= r.reference.back());
  }
  CHECK(table1_row("L2(8)").psl2_q == 8u);
  CHECK_THROWS(table1_row("U3(3)"));
  CHECK(to_string(Column::NGen) == "NGen");
}

TEST_CASE("computed rows match reference values") {
  for (auto name : {"A5", "L2(7)", "L2(8)"}) {
    const Table1Row row = compute_table1_row(table1_row(name));
    CAPTURE(name);
    CHECK(row.all_match());
    REQUIRE(row.cells.size() == all_columns().size());
    for (auto& c : row.cells) {
      CAPTURE(to_string(c.column));
      CHECK(c.status == CellStatus::Match);
      REQUIRE(c.computed);
      CHECK(*c.computed == c.reference);
    }
  }
  const Group a5 = make_group("alt:5");
  const auto row = compute_table1_row(table1_row("A5"), {Column::NGen, Column::Cyc});
  REQUIRE(row.cells.size() == 2);
  CHECK(*row.cells[0].computed == cokernel(build_graph(a5, GraphKind::NGen)).result.n());
  CHECK(*row.cells[1].computed == a5.cyclic_class_count());
}

TEST_CASE("mismatches and skipped cells are reported") {
  Table1Def wrong = table1_row("A5");
  wrong.reference[0] = 2;
  const Table1Row bad = compute_table1_row(wrong, {Column::Pow});
  CHECK(bad.cells[0].status == CellStatus::Mismatch);
  CHECK_FALSE(bad.all_match());

  Table1Def nocover{"S4", "sym:4", 24, Tier::Core, std::nullopt, {1, 1, 1, 1, 1, 1}};
  const Table1Row skipped = compute_table1_row(nocover, {Column::DCom});
  CHECK(skipped.cells[0].status == CellStatus::Skipped);
  CHECK_FALSE(skipped.cells[0].computed);
  CHECK(skipped.all_match());

  const ReportDocument doc = table1_report({bad, skipped});
  CHECK(doc.get("row.A5.order") == "60");
  CHECK(doc.get("row.A5.Pow").find("reference=2") != std::string::npos);
}

TEST_CASE("component quotient size") {
  for (auto spec : {"sym:4", "alt:5", "psl2:7", "sym:5", "alt:6"}) {
    CAPTURE(spec);
    CHECK(component_quotient_size(spec) == quotient_oracle(spec));
  }
}
