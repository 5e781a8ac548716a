#pragma once

// Cokernel sizes of graphs on small simple groups, with published reference values.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grouptrix/report.hpp"

namespace grouptrix {

enum class Tier { Core, Extended };

enum class Column { Pow, EPow, DCom, Com, NGen, Cyc };

std::string to_string(Column c);
const std::vector<Column>& all_columns();

struct Table1Def {
  std::string name;   // "A5", "L2(7)", ...
  std::string spec;   // group descriptor
  std::uint32_t order = 0;
  Tier tier = Tier::Core;
  std::optional<std::uint64_t> psl2_q;  // q when the group is L2(q)
  std::vector<std::uint64_t> reference;  // one value per column, in all_columns() order
};

/// Rows in published order. U3(3) is absent (no construction is shipped for it).
const std::vector<Table1Def>& table1_rows();
const Table1Def& table1_row(const std::string& name);

enum class CellStatus { Match, Mismatch, Skipped };
std::string to_string(CellStatus s);

struct Table1Cell {
  Column column = Column::Pow;
  std::uint64_t reference = 0;
  std::optional<std::uint64_t> computed;
  CellStatus status = CellStatus::Skipped;
  std::string note;
  double seconds = 0;
};

struct Table1Row {
  const Table1Def* def = nullptr;
  std::vector<Table1Cell> cells;
  bool all_match() const;  // no Mismatch among computed cells
};

/// Cokernel sizes for the requested columns. DCom is Skipped when no built-in cover exists.
Table1Row compute_table1_row(const Table1Def& def, const std::vector<Column>& columns = all_columns());

/// Reduced power graph of the group, its largest component, then one closed-twin
/// quotient followed by one open-twin quotient. Returns the vertex count.
std::size_t component_quotient_size(const std::string& spec);

ReportDocument table1_report(const std::vector<Table1Row>& rows);

}  // namespace grouptrix
