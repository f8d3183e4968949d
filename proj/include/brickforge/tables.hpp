#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brickforge/arith.hpp"

namespace brickforge {

enum class TableId { T1, T2, T3, T4, T5, T6 };

std::string_view table_name(TableId id);
std::optional<TableId> table_from_name(std::string_view name);

struct CellDiff {
  std::size_t row;  // 1-based, as printed
  std::string column;
  Nat printed;
  std::optional<Nat> computed;  // empty when the constructor produced no brick
};

struct TableRow {
  std::vector<Nat> printed;
  std::vector<std::optional<Nat>> computed;
};

struct TableReproduction {
  TableId id{};
  std::vector<std::string> columns;
  std::vector<TableRow> rows;
  std::vector<CellDiff> diffs;
};

/// Re-derives every printed row of the fixture from its printed inputs
/// via the matching constructor and diffs each cell. Fixtures store the
/// printed values verbatim, so known misprints show up as diffs instead
/// of being silently corrected.
TableReproduction reproduce_table(TableId id);

std::vector<TableReproduction> reproduce_all_tables();

}  // namespace brickforge
