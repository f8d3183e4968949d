#include "brickforge/report_io.hpp"

#include <sstream>
#include <vector>

#include <json.hpp>

#include "brickforge/errors.hpp"

namespace brickforge {

namespace {

// ordered_json keeps insertion order, which keeps serialized reports
// byte-stable across runs.
using json = nlohmann::ordered_json;
using ordered_json = nlohmann::ordered_json;

json triple_to_json(const PythTriple& t) {
  return json::array({to_string(t.u), to_string(t.v), to_string(t.w)});
}

PythTriple triple_from_json(const json& j) {
  return make_triple(parse_nat(j.at(0).get<std::string>()),
                     parse_nat(j.at(1).get<std::string>()),
                     parse_nat(j.at(2).get<std::string>()));
}

ordered_json hit_to_json(ScanKind kind, const ScanHit& hit) {
  ordered_json j;
  j["record"] = "hit";
  j["kind"] = std::string(to_token(kind));
  if (hit.legs) {
    j["u0"] = to_string(hit.legs->u0);
    j["v0"] = to_string(hit.legs->v0);
  }
  j["t1"] = triple_to_json(hit.first);
  j["t2"] = triple_to_json(hit.second);
  if (hit.brick) {
    const Brick& b = *hit.brick;
    j["brick"] = json::array({to_string(b.a), to_string(b.b), to_string(b.c), to_string(b.d),
                              to_string(b.e), to_string(b.f)});
  }
  if (hit.cuboid) {
    const PerfectCuboid& c = *hit.cuboid;
    j["cuboid"] = json::array({to_string(c.a), to_string(c.b), to_string(c.c), to_string(c.d),
                               to_string(c.e), to_string(c.f), to_string(c.g)});
  }
  if (hit.roots)
    j["roots"] = json::array({to_string((*hit.roots)[0]), to_string((*hit.roots)[1])});
  if (hit.product_holds) j["product_holds"] = *hit.product_holds;
  return j;
}

ScanHit hit_from_json(const json& j) {
  ScanHit hit;
  if (j.contains("u0"))
    hit.legs = make_leg_pair(parse_nat(j.at("u0").get<std::string>()),
                             parse_nat(j.at("v0").get<std::string>()));
  hit.first = triple_from_json(j.at("t1"));
  hit.second = triple_from_json(j.at("t2"));
  if (j.contains("brick")) {
    const json& b = j.at("brick");
    hit.brick = Brick{parse_nat(b.at(0).get<std::string>()), parse_nat(b.at(1).get<std::string>()),
                      parse_nat(b.at(2).get<std::string>()), parse_nat(b.at(3).get<std::string>()),
                      parse_nat(b.at(4).get<std::string>()), parse_nat(b.at(5).get<std::string>())};
  }
  if (j.contains("cuboid")) {
    const json& c = j.at("cuboid");
    hit.cuboid = PerfectCuboid{
        parse_nat(c.at(0).get<std::string>()), parse_nat(c.at(1).get<std::string>()),
        parse_nat(c.at(2).get<std::string>()), parse_nat(c.at(3).get<std::string>()),
        parse_nat(c.at(4).get<std::string>()), parse_nat(c.at(5).get<std::string>()),
        parse_nat(c.at(6).get<std::string>())};
  }
  if (j.contains("roots")) {
    const json& r = j.at("roots");
    hit.roots = std::array<Nat, 2>{parse_nat(r.at(0).get<std::string>()),
                                   parse_nat(r.at(1).get<std::string>())};
  }
  if (j.contains("product_holds")) hit.product_holds = j.at("product_holds").get<bool>();
  return hit;
}

ordered_json summary_to_json(const ScanReport& report) {
  ordered_json j;
  j["record"] = "summary";
  j["kind"] = std::string(to_token(report.kind));
  j["w_bound"] = to_string(report.w_bound);
  if (report.leg_bound) j["leg_bound"] = to_string(*report.leg_bound);
  j["pairs_examined"] = report.pairs_examined;
  j["hits"] = report.hits.size();
  if (is_problem_scan(report.kind)) j["violations"] = report.violations();
  return j;
}

// CSV layout shared by hit and summary rows; absent fields stay empty.
const std::vector<std::string> kScanCsvColumns = {
    "record", "kind", "w_bound", "leg_bound",       "pairs_examined", "u0",   "v0",
    "t1u",    "t1v",  "t1w",     "t2u",             "t2v",            "t2w",  "a",
    "b",      "c",    "d",       "e",               "f",              "g",    "root1",
    "root2",  "product_holds"};

std::string join_csv(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line.push_back(',');
    line += cells[i];
  }
  return line;
}

std::vector<std::string> split_csv(std::string_view line) {
  std::vector<std::string> cells;
  std::string cur;
  for (const char ch : line) {
    if (ch == ',') {
      cells.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  cells.push_back(std::move(cur));
  return cells;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    if (nl > pos) lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return lines;
}

ScanKind parse_kind_or_throw(const std::string& token) {
  const auto kind = scan_kind_from_token(token);
  if (!kind) throw std::invalid_argument("unknown scan kind: " + token);
  return *kind;
}

}  // namespace

std::string hit_to_jsonl(ScanKind kind, const ScanHit& hit) {
  return hit_to_json(kind, hit).dump();
}

std::string summary_to_jsonl(const ScanReport& report) { return summary_to_json(report).dump(); }

std::string report_to_jsonl(const ScanReport& report) {
  std::string out;
  for (const ScanHit& hit : report.hits) {
    out += hit_to_jsonl(report.kind, hit);
    out.push_back('\n');
  }
  out += summary_to_jsonl(report);
  out.push_back('\n');
  return out;
}

ScanReport report_from_jsonl(std::string_view text) {
  ScanReport report;
  bool saw_summary = false;
  for (const auto line : split_lines(text)) {
    const json j = json::parse(line);
    const std::string record = j.at("record").get<std::string>();
    if (record == "hit") {
      report.hits.push_back(hit_from_json(j));
    } else if (record == "summary") {
      report.kind = parse_kind_or_throw(j.at("kind").get<std::string>());
      report.w_bound = parse_nat(j.at("w_bound").get<std::string>());
      if (j.contains("leg_bound")) report.leg_bound = parse_nat(j.at("leg_bound").get<std::string>());
      report.pairs_examined = j.at("pairs_examined").get<std::uint64_t>();
      saw_summary = true;
    } else {
      throw std::invalid_argument("unknown record type: " + record);
    }
  }
  if (!saw_summary) throw std::invalid_argument("report stream has no summary record");
  return report;
}

std::string scan_csv_header() { return join_csv(kScanCsvColumns); }

std::string hit_to_csv(ScanKind kind, const ScanHit& hit) {
  std::vector<std::string> cells(kScanCsvColumns.size());
  cells[0] = "hit";
  cells[1] = std::string(to_token(kind));
  if (hit.legs) {
    cells[5] = to_string(hit.legs->u0);
    cells[6] = to_string(hit.legs->v0);
  }
  cells[7] = to_string(hit.first.u);
  cells[8] = to_string(hit.first.v);
  cells[9] = to_string(hit.first.w);
  cells[10] = to_string(hit.second.u);
  cells[11] = to_string(hit.second.v);
  cells[12] = to_string(hit.second.w);
  if (hit.brick) {
    cells[13] = to_string(hit.brick->a);
    cells[14] = to_string(hit.brick->b);
    cells[15] = to_string(hit.brick->c);
    cells[16] = to_string(hit.brick->d);
    cells[17] = to_string(hit.brick->e);
    cells[18] = to_string(hit.brick->f);
  }
  if (hit.cuboid) {
    cells[13] = to_string(hit.cuboid->a);
    cells[14] = to_string(hit.cuboid->b);
    cells[15] = to_string(hit.cuboid->c);
    cells[16] = to_string(hit.cuboid->d);
    cells[17] = to_string(hit.cuboid->e);
    cells[18] = to_string(hit.cuboid->f);
    cells[19] = to_string(hit.cuboid->g);
  }
  if (hit.roots) {
    cells[20] = to_string((*hit.roots)[0]);
    cells[21] = to_string((*hit.roots)[1]);
  }
  if (hit.product_holds) cells[22] = *hit.product_holds ? "true" : "false";
  return join_csv(cells);
}

std::string summary_to_csv(const ScanReport& report) {
  std::vector<std::string> cells(kScanCsvColumns.size());
  cells[0] = "summary";
  cells[1] = std::string(to_token(report.kind));
  cells[2] = to_string(report.w_bound);
  if (report.leg_bound) cells[3] = to_string(*report.leg_bound);
  cells[4] = std::to_string(report.pairs_examined);
  return join_csv(cells);
}

std::string report_to_csv(const ScanReport& report) {
  std::string out = scan_csv_header();
  out.push_back('\n');
  for (const ScanHit& hit : report.hits) {
    out += hit_to_csv(report.kind, hit);
    out.push_back('\n');
  }
  out += summary_to_csv(report);
  out.push_back('\n');
  return out;
}

ScanReport report_from_csv(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty() || std::string(lines[0]) != scan_csv_header())
    throw std::invalid_argument("scan csv: missing or unexpected header");
  ScanReport report;
  bool saw_summary = false;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto cells = split_csv(lines[li]);
    if (cells.size() != kScanCsvColumns.size())
      throw std::invalid_argument("scan csv: wrong column count");
    if (cells[0] == "summary") {
      report.kind = parse_kind_or_throw(cells[1]);
      report.w_bound = parse_nat(cells[2]);
      if (!cells[3].empty()) report.leg_bound = parse_nat(cells[3]);
      report.pairs_examined = std::stoull(cells[4]);
      saw_summary = true;
      continue;
    }
    if (cells[0] != "hit") throw std::invalid_argument("scan csv: unknown record " + cells[0]);
    parse_kind_or_throw(cells[1]);  // validate the token
    ScanHit hit;
    if (!cells[5].empty()) hit.legs = make_leg_pair(parse_nat(cells[5]), parse_nat(cells[6]));
    hit.first = make_triple(parse_nat(cells[7]), parse_nat(cells[8]), parse_nat(cells[9]));
    hit.second = make_triple(parse_nat(cells[10]), parse_nat(cells[11]), parse_nat(cells[12]));
    if (!cells[19].empty()) {
      hit.cuboid = PerfectCuboid{parse_nat(cells[13]), parse_nat(cells[14]), parse_nat(cells[15]),
                                 parse_nat(cells[16]), parse_nat(cells[17]), parse_nat(cells[18]),
                                 parse_nat(cells[19])};
    } else if (!cells[13].empty()) {
      hit.brick = Brick{parse_nat(cells[13]), parse_nat(cells[14]), parse_nat(cells[15]),
                        parse_nat(cells[16]), parse_nat(cells[17]), parse_nat(cells[18])};
    }
    if (!cells[20].empty())
      hit.roots = std::array<Nat, 2>{parse_nat(cells[20]), parse_nat(cells[21])};
    if (!cells[22].empty()) hit.product_holds = cells[22] == "true";
    report.hits.push_back(std::move(hit));
  }
  if (!saw_summary) throw std::invalid_argument("scan csv: missing summary row");
  return report;
}

std::string brick_report_to_json(const BrickReport& report) {
  ordered_json j;
  j["record"] = "brick_report";
  j["edges"] = json::array({to_string(report.edges[0]), to_string(report.edges[1]),
                            to_string(report.edges[2])});
  j["is_euler"] = report.is_euler;
  j["is_primitive"] = report.is_primitive;
  if (report.diagonals)
    j["diagonals"] = json::array({to_string((*report.diagonals)[0]),
                                  to_string((*report.diagonals)[1]),
                                  to_string((*report.diagonals)[2])});
  if (report.space_diagonal) j["space_diagonal"] = to_string(*report.space_diagonal);
  return j.dump();
}

BrickReport brick_report_from_json(std::string_view text) {
  const json j = json::parse(text);
  BrickReport report;
  const json& e = j.at("edges");
  report.edges = {parse_nat(e.at(0).get<std::string>()), parse_nat(e.at(1).get<std::string>()),
                  parse_nat(e.at(2).get<std::string>())};
  report.is_euler = j.at("is_euler").get<bool>();
  report.is_primitive = j.at("is_primitive").get<bool>();
  if (j.contains("diagonals")) {
    const json& d = j.at("diagonals");
    report.diagonals = std::array<Nat, 3>{parse_nat(d.at(0).get<std::string>()),
                                          parse_nat(d.at(1).get<std::string>()),
                                          parse_nat(d.at(2).get<std::string>())};
  }
  if (j.contains("space_diagonal"))
    report.space_diagonal = parse_nat(j.at("space_diagonal").get<std::string>());
  return report;
}

std::string brick_report_csv_header() {
  return "a,b,c,is_euler,is_primitive,d,e,f,g";
}

std::string brick_report_to_csv(const BrickReport& report) {
  std::vector<std::string> cells(9);
  cells[0] = to_string(report.edges[0]);
  cells[1] = to_string(report.edges[1]);
  cells[2] = to_string(report.edges[2]);
  cells[3] = report.is_euler ? "true" : "false";
  cells[4] = report.is_primitive ? "true" : "false";
  if (report.diagonals) {
    cells[5] = to_string((*report.diagonals)[0]);
    cells[6] = to_string((*report.diagonals)[1]);
    cells[7] = to_string((*report.diagonals)[2]);
  }
  if (report.space_diagonal) cells[8] = to_string(*report.space_diagonal);
  return join_csv(cells);
}

BrickReport brick_report_from_csv(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.size() != 2 || std::string(lines[0]) != brick_report_csv_header())
    throw std::invalid_argument("brick csv: expected header plus one row");
  const auto cells = split_csv(lines[1]);
  if (cells.size() != 9) throw std::invalid_argument("brick csv: wrong column count");
  BrickReport report;
  report.edges = {parse_nat(cells[0]), parse_nat(cells[1]), parse_nat(cells[2])};
  report.is_euler = cells[3] == "true";
  report.is_primitive = cells[4] == "true";
  if (!cells[5].empty())
    report.diagonals =
        std::array<Nat, 3>{parse_nat(cells[5]), parse_nat(cells[6]), parse_nat(cells[7])};
  if (!cells[8].empty()) report.space_diagonal = parse_nat(cells[8]);
  return report;
}

std::string checkpoint_to_json(const Checkpoint& ck) {
  ordered_json j;
  j["format_version"] = ck.format_version;
  j["scan_kind"] = std::string(to_token(ck.kind));
  j["w_bound"] = to_string(ck.w_bound);
  if (ck.leg_bound) j["leg_bound"] = to_string(*ck.leg_bound);
  j["cursor"] = ck.cursor;
  json hits = json::array();
  for (const ScanHit& hit : ck.hits) hits.push_back(hit_to_json(ck.kind, hit));
  j["hits"] = std::move(hits);
  return j.dump();
}

Checkpoint checkpoint_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw CorruptCheckpoint(std::string("checkpoint: invalid JSON: ") + e.what());
  }
  try {
    Checkpoint ck;
    ck.format_version = j.at("format_version").get<int>();
    if (ck.format_version != 1)
      throw CorruptCheckpoint("checkpoint: unsupported format_version");
    ck.kind = parse_kind_or_throw(j.at("scan_kind").get<std::string>());
    ck.w_bound = parse_nat(j.at("w_bound").get<std::string>());
    if (j.contains("leg_bound")) ck.leg_bound = parse_nat(j.at("leg_bound").get<std::string>());
    ck.cursor = j.at("cursor").get<std::uint64_t>();
    for (const json& h : j.at("hits")) ck.hits.push_back(hit_from_json(h));
    return ck;
  } catch (const CorruptCheckpoint&) {
    throw;
  } catch (const std::exception& e) {
    throw CorruptCheckpoint(std::string("checkpoint: invalid fields: ") + e.what());
  }
}

}  // namespace brickforge
