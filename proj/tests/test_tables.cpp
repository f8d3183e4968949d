#include <doctest.h>

#include "brickforge/tables.hpp"

using namespace brickforge;

TEST_SUITE("tables") {

TEST_CASE("table names round trip") {
  for (int i = 0; i < 6; ++i) {
    const auto id = static_cast<TableId>(i);
    CHECK(table_from_name(table_name(id)) == id);
  }
  CHECK(!table_from_name("T7"));
}

TEST_CASE("theorem-1 table reproduces cleanly") {
  const TableReproduction t = reproduce_table(TableId::T1);
  CHECK(t.rows.size() == 5);
  CHECK(t.diffs.empty());
}

TEST_CASE("corollary-1 table holds its single printed row") {
  const TableReproduction t = reproduce_table(TableId::T2);
  CHECK(t.rows.size() == 1);
  CHECK(t.diffs.empty());
}

TEST_CASE("theorem-2 table carries exactly one misprint") {
  const TableReproduction t = reproduce_table(TableId::T3);
  CHECK(t.rows.size() == 5);
  REQUIRE(t.diffs.size() == 1);
  const CellDiff& d = t.diffs[0];
  CHECK(d.row == 4);
  CHECK(d.column == "a");
  CHECK(d.printed == Nat(6347));  // duplicates the printed e cell
  CHECK(d.computed == Nat(6325));
}

TEST_CASE("corollary-2 table reproduces cleanly") {
  const TableReproduction t = reproduce_table(TableId::T4);
  CHECK(t.rows.size() == 5);
  CHECK(t.diffs.empty());
}

TEST_CASE("theorem-3 table reproduces cleanly") {
  const TableReproduction t = reproduce_table(TableId::T5);
  CHECK(t.rows.size() == 5);
  CHECK(t.diffs.empty());
}

TEST_CASE("lift table reproduces cleanly, including the lifted triples") {
  const TableReproduction t = reproduce_table(TableId::T6);
  CHECK(t.rows.size() == 5);
  CHECK(t.diffs.empty());
  CHECK(t.columns.size() == 15);
  for (const TableRow& row : t.rows) {
    CHECK(row.printed.size() == 15);
    CHECK(row.computed.size() == 15);
  }
}

TEST_CASE("aggregate run covers all six tables") {
  const auto all = reproduce_all_tables();
  REQUIRE(all.size() == 6);
  std::size_t total_diffs = 0;
  for (const auto& t : all) total_diffs += t.diffs.size();
  CHECK(total_diffs == 1);
}

}  // TEST_SUITE
