#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "brickforge/errors.hpp"
#include "brickforge/report_io.hpp"
#include "brickforge/search.hpp"
#include "brickforge/tables.hpp"

namespace {

using namespace brickforge;

// Exit codes (stable, scripts branch on them):
//   0  success / scan complete without counterexample
//   2  counterexample or implication violation found
//   3  input is not an Euler brick
//   4  constructor hypothesis failed
//   5  table reproduction produced diffs
//  64  usage, parse or checkpoint errors
//  65  bound outside the 127-bit safety envelope
//  70  internal verification failure
//  75  scan paused by --stop-after (resume from the checkpoint)
enum ExitCode {
  kOk = 0,
  kCounterexample = 2,
  kNotEuler = 3,
  kHypothesisFailed = 4,
  kTableDiffs = 5,
  kUsage = 64,
  kUnsafeBound = 65,
  kInternal = 70,
  kPaused = 75,
};

enum class Format { pretty, csv, jsonl };

Format parse_format(const std::string& name) {
  if (name == "pretty") return Format::pretty;
  if (name == "csv") return Format::csv;
  if (name == "jsonl") return Format::jsonl;
  throw std::invalid_argument("unknown format: " + name);
}

PythTriple parse_triple_arg(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (const char ch : text) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  if (parts.size() != 3)
    throw std::invalid_argument("triple must be given as u,v,w: " + text);
  // make_triple canonicalizes the leg order, so users need not know it.
  return make_triple(parse_nat(parts[0]), parse_nat(parts[1]), parse_nat(parts[2]));
}

Nat parse_positive(const std::string& text, const char* what) {
  const Nat n = parse_nat(text);
  if (n.is_zero()) throw std::invalid_argument(std::string(what) + " must be positive");
  return n;
}

std::string triple_str(const PythTriple& t) {
  return "(" + to_string(t.u) + "," + to_string(t.v) + "," + to_string(t.w) + ")";
}

std::string brick_str(const Brick& b) {
  return "(" + to_string(b.a) + "," + to_string(b.b) + "," + to_string(b.c) + ";" +
         to_string(b.d) + "," + to_string(b.e) + "," + to_string(b.f) + ")";
}

std::string cuboid_str(const PerfectCuboid& c) {
  return "(" + to_string(c.a) + "," + to_string(c.b) + "," + to_string(c.c) + ";" +
         to_string(c.d) + "," + to_string(c.e) + "," + to_string(c.f) + ";g=" + to_string(c.g) +
         ")";
}

int run_verify(const std::string& a, const std::string& b, const std::string& c, Format format) {
  const BrickReport rep =
      verify_brick(parse_positive(a, "edge a"), parse_positive(b, "edge b"),
                   parse_positive(c, "edge c"));
  switch (format) {
    case Format::pretty:
      std::cout << "edges: " << rep.edges[0] << ' ' << rep.edges[1] << ' ' << rep.edges[2]
                << '\n';
      std::cout << "euler brick: " << (rep.is_euler ? "yes" : "no") << '\n';
      std::cout << "primitive: " << (rep.is_primitive ? "yes" : "no") << '\n';
      if (rep.diagonals)
        std::cout << "face diagonals: " << (*rep.diagonals)[0] << ' ' << (*rep.diagonals)[1]
                  << ' ' << (*rep.diagonals)[2] << '\n';
      std::cout << "space diagonal: "
                << (rep.space_diagonal ? to_string(*rep.space_diagonal) : std::string("none"))
                << '\n';
      break;
    case Format::csv:
      std::cout << brick_report_csv_header() << '\n' << brick_report_to_csv(rep) << '\n';
      break;
    case Format::jsonl:
      std::cout << brick_report_to_json(rep) << '\n';
      break;
  }
  return rep.is_euler ? kOk : kNotEuler;
}

int print_brick(const std::optional<Brick>& brick, Format format) {
  if (!brick) {
    std::cout << "no brick (hypothesis failed)\n";
    return kHypothesisFailed;
  }
  switch (format) {
    case Format::pretty:
      std::cout << "edges: " << brick->a << ' ' << brick->b << ' ' << brick->c << '\n';
      std::cout << "face diagonals: " << brick->d << ' ' << brick->e << ' ' << brick->f << '\n';
      break;
    case Format::csv:
      std::cout << "a,b,c,d,e,f\n"
                << to_string(brick->a) << ',' << to_string(brick->b) << ','
                << to_string(brick->c) << ',' << to_string(brick->d) << ','
                << to_string(brick->e) << ',' << to_string(brick->f) << '\n';
      break;
    case Format::jsonl:
      std::cout << "{\"record\":\"brick\",\"edges\":[\"" << to_string(brick->a) << "\",\""
                << to_string(brick->b) << "\",\"" << to_string(brick->c)
                << "\"],\"diagonals\":[\"" << to_string(brick->d) << "\",\""
                << to_string(brick->e) << "\",\"" << to_string(brick->f) << "\"]}\n";
      break;
  }
  return kOk;
}

int run_construct(const std::string& kind, const std::vector<std::string>& params,
                  Format format) {
  auto need = [&](std::size_t n) {
    if (params.size() != n)
      throw std::invalid_argument("construct " + kind + ": expected " + std::to_string(n) +
                                  " parameter(s)");
  };
  if (kind == "sounderson") {
    need(1);
    return print_brick(sounderson(parse_triple_arg(params[0])), format);
  }
  if (kind == "cor1" || kind == "cor2") {
    need(2);
    const PythTriple t1 = parse_triple_arg(params[0]);
    const PythTriple t2 = parse_triple_arg(params[1]);
    return print_brick(kind == "cor1" ? corollary1(t1, t2) : corollary2(t1, t2), format);
  }
  if (kind == "th1" || kind == "th2" || kind == "th3") {
    need(4);
    const LegPair p = make_leg_pair(parse_positive(params[0], "u0"),
                                    parse_positive(params[1], "v0"));
    const PythTriple t1 = parse_triple_arg(params[2]);
    const PythTriple t2 = parse_triple_arg(params[3]);
    std::optional<Brick> brick;
    if (kind == "th1")
      brick = theorem1(p, t1, t2);
    else if (kind == "th2")
      brick = theorem2(p, t1, t2);
    else
      brick = theorem3(p, t1, t2);
    return print_brick(brick, format);
  }
  throw std::invalid_argument("unknown constructor: " + kind);
}

int run_decompose(const std::string& a, const std::string& b, const std::string& c,
                  Format format) {
  const auto brick = try_brick(parse_positive(a, "edge a"), parse_positive(b, "edge b"),
                               parse_positive(c, "edge c"));
  if (!brick) {
    std::cout << "not an Euler brick\n";
    return kNotEuler;
  }
  const Decomposition dec = decompose(*brick);
  switch (format) {
    case Format::pretty:
      std::cout << "k1=" << dec.k1 << " t1=" << triple_str(dec.t1) << '\n';
      std::cout << "k2=" << dec.k2 << " t2=" << triple_str(dec.t2) << '\n';
      std::cout << "k3=" << dec.k3 << " t3=" << triple_str(dec.t3) << '\n';
      break;
    case Format::csv:
      std::cout << "k1,k2,k3,t1u,t1v,t1w,t2u,t2v,t2w,t3u,t3v,t3w\n"
                << to_string(dec.k1) << ',' << to_string(dec.k2) << ',' << to_string(dec.k3)
                << ',' << to_string(dec.t1.u) << ',' << to_string(dec.t1.v) << ','
                << to_string(dec.t1.w) << ',' << to_string(dec.t2.u) << ','
                << to_string(dec.t2.v) << ',' << to_string(dec.t2.w) << ','
                << to_string(dec.t3.u) << ',' << to_string(dec.t3.v) << ','
                << to_string(dec.t3.w) << '\n';
      break;
    case Format::jsonl:
      std::cout << "{\"record\":\"decomposition\",\"k\":[\"" << to_string(dec.k1) << "\",\""
                << to_string(dec.k2) << "\",\"" << to_string(dec.k3) << "\"],\"t1\":[\""
                << to_string(dec.t1.u) << "\",\"" << to_string(dec.t1.v) << "\",\""
                << to_string(dec.t1.w) << "\"],\"t2\":[\"" << to_string(dec.t2.u) << "\",\""
                << to_string(dec.t2.v) << "\",\"" << to_string(dec.t2.w) << "\"],\"t3\":[\""
                << to_string(dec.t3.u) << "\",\"" << to_string(dec.t3.v) << "\",\""
                << to_string(dec.t3.w) << "\"]}\n";
      break;
  }
  return kOk;
}

int run_tables(const std::string& id) {
  std::vector<TableReproduction> reps;
  if (id.empty()) {
    reps = reproduce_all_tables();
  } else {
    const auto table = table_from_name(id);
    if (!table) throw std::invalid_argument("unknown table id: " + id + " (expected T1..T6)");
    reps.push_back(reproduce_table(*table));
  }
  std::size_t total_diffs = 0;
  for (const TableReproduction& rep : reps) {
    std::cout << table_name(rep.id) << ": " << rep.rows.size() << " row(s), "
              << rep.diffs.size() << " diff(s)\n";
    for (const CellDiff& d : rep.diffs) {
      std::cout << "  row " << d.row << " column " << d.column << ": printed " << d.printed
                << ", computed "
                << (d.computed ? to_string(*d.computed) : std::string("(no brick)")) << '\n';
    }
    total_diffs += rep.diffs.size();
  }
  return total_diffs == 0 ? kOk : kTableDiffs;
}

void print_hit_pretty(const ScanHit& hit) {
  std::ostringstream os;
  if (hit.product_holds)
    os << "square tuple:";
  else if (hit.cuboid || hit.roots)
    os << "counterexample:";
  else
    os << "hit:";
  if (hit.legs) os << " u0=" << hit.legs->u0 << " v0=" << hit.legs->v0;
  os << " t1=" << triple_str(hit.first) << " t2=" << triple_str(hit.second);
  if (hit.brick) os << " brick=" << brick_str(*hit.brick);
  if (hit.roots) os << " roots=" << (*hit.roots)[0] << ',' << (*hit.roots)[1];
  if (hit.cuboid) os << " cuboid=" << cuboid_str(*hit.cuboid);
  if (hit.product_holds) os << " product_holds=" << (*hit.product_holds ? "true" : "false");
  std::cout << os.str() << '\n';
}

int run_scan(const std::string& kind_token, const std::string& w_bound_text,
             const std::string& leg_bound_text, unsigned workers,
             const std::string& checkpoint_arg, std::uint64_t stop_after, Format format) {
  const auto kind = scan_kind_from_token(kind_token);
  if (!kind) throw std::invalid_argument("unknown scan kind: " + kind_token);
  const Nat w_bound = parse_positive(w_bound_text, "w-bound");
  std::optional<Nat> leg_bound;
  if (scan_needs_leg_bound(*kind)) {
    if (leg_bound_text.empty())
      throw std::invalid_argument("scan " + kind_token + ": requires --leg-bound");
    leg_bound = parse_positive(leg_bound_text, "leg-bound");
  } else if (!leg_bound_text.empty()) {
    throw std::invalid_argument("scan " + kind_token + ": takes no --leg-bound");
  }

  const Nat max_safe = max_safe_w_bound(*kind, leg_bound);
  if (w_bound > max_safe) {
    std::cerr << "unsafe bound: w-bound " << w_bound
              << " exceeds the 127-bit safety envelope; maximum safe w-bound"
              << (leg_bound ? " for this leg-bound" : "") << " is " << max_safe << '\n';
    return kUnsafeBound;
  }

  ScanOptions opts;
  opts.workers = workers;
  if (!checkpoint_arg.empty()) {
    opts.checkpoint_path = std::filesystem::path(checkpoint_arg);
  } else if (const char* dir = std::getenv("BRICKFORGE_CHECKPOINT_DIR"); dir && *dir) {
    std::string name = kind_token + "-w" + to_string(w_bound);
    if (leg_bound) name += "-l" + to_string(*leg_bound);
    opts.checkpoint_path = std::filesystem::path(dir) / (name + ".checkpoint.json");
  }
  if (stop_after > 0) {
    if (!opts.checkpoint_path)
      throw std::invalid_argument("scan: --stop-after requires --checkpoint (or "
                                  "BRICKFORGE_CHECKPOINT_DIR)");
    opts.stop_after = stop_after;
  }

  if (format == Format::csv) std::cout << scan_csv_header() << '\n';
  opts.on_hit = [&](const ScanHit& hit) {
    switch (format) {
      case Format::pretty:
        print_hit_pretty(hit);
        break;
      case Format::csv:
        std::cout << hit_to_csv(*kind, hit) << '\n';
        break;
      case Format::jsonl:
        std::cout << hit_to_jsonl(*kind, hit) << '\n';
        break;
    }
    std::cout.flush();
  };

  const auto report = brickforge::run_scan(*kind, w_bound, leg_bound, opts);
  if (!report) {
    std::cerr << "scan paused after --stop-after; resume with --checkpoint "
              << opts.checkpoint_path->string() << '\n';
    return kPaused;
  }

  switch (format) {
    case Format::pretty:
      std::cout << "scan " << kind_token << " complete: " << report->pairs_examined
                << " pairs examined, " << report->hits.size() << " hit(s)";
      if (is_problem_scan(*kind)) std::cout << ", " << report->violations() << " violation(s)";
      std::cout << " in " << report->elapsed_seconds << " s\n";
      break;
    case Format::csv:
      std::cout << summary_to_csv(*report) << '\n';
      break;
    case Format::jsonl:
      std::cout << summary_to_jsonl(*report) << '\n';
      break;
  }

  if (is_conjecture_scan(*kind) && !report->hits.empty()) return kCounterexample;
  if (is_problem_scan(*kind) && report->violations() > 0) return kCounterexample;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"brickforge: construct, verify, decompose and search Euler bricks"};
  app.require_subcommand(1);

  std::string format_name = "pretty";
  std::string a, b, c;
  std::string construct_kind;
  std::vector<std::string> construct_params;
  std::string scan_kind, w_bound, leg_bound, checkpoint;
  unsigned workers = 1;
  std::uint64_t stop_after = 0;
  std::string table_id;

  auto* verify_cmd = app.add_subcommand("verify", "test edges for the Euler brick property");
  verify_cmd->add_option("a", a)->required();
  verify_cmd->add_option("b", b)->required();
  verify_cmd->add_option("c", c)->required();
  verify_cmd->add_option("--format", format_name, "pretty|csv|jsonl");

  auto* construct_cmd =
      app.add_subcommand("construct", "build a brick from one of the parametrizations");
  construct_cmd->add_option("kind", construct_kind, "sounderson|th1|th2|th3|cor1|cor2")
      ->required();
  construct_cmd->add_option("params", construct_params,
                            "triples as u,v,w; theorems take u0 v0 t1 t2");
  construct_cmd->add_option("--format", format_name, "pretty|csv|jsonl");

  auto* scan_cmd = app.add_subcommand("scan", "bounded exhaustive scan");
  scan_cmd
      ->add_option("kind", scan_kind,
                   "conjecture1|conjecture2|problem1|problem2|problem3|cor1|cor2|th1|th2|th3")
      ->required();
  scan_cmd->add_option("--w-bound", w_bound, "hypotenuse bound")->required();
  scan_cmd->add_option("--leg-bound", leg_bound, "u0/v0 bound (theorem and problem scans)");
  scan_cmd->add_option("--workers", workers, "parallel workers (results are identical)");
  scan_cmd->add_option("--checkpoint", checkpoint, "checkpoint file to resume from/save to");
  scan_cmd->add_option("--stop-after", stop_after,
                       "process N outer indices, checkpoint, exit 75");
  scan_cmd->add_option("--format", format_name, "pretty|csv|jsonl");

  auto* tables_cmd = app.add_subcommand("tables", "reproduce the reference tables");
  tables_cmd->add_option("--id", table_id, "T1..T6 (default: all)");

  auto* decompose_cmd =
      app.add_subcommand("decompose", "gcd factors and face triples of an Euler brick");
  decompose_cmd->add_option("a", a)->required();
  decompose_cmd->add_option("b", b)->required();
  decompose_cmd->add_option("c", c)->required();
  decompose_cmd->add_option("--format", format_name, "pretty|csv|jsonl");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const Format format = parse_format(format_name);
    if (verify_cmd->parsed()) return run_verify(a, b, c, format);
    if (construct_cmd->parsed()) return run_construct(construct_kind, construct_params, format);
    if (scan_cmd->parsed())
      return run_scan(scan_kind, w_bound, leg_bound, workers, checkpoint, stop_after, format);
    if (tables_cmd->parsed()) return run_tables(table_id);
    if (decompose_cmd->parsed()) return run_decompose(a, b, c, format);
    return kUsage;
  } catch (const VerificationFailure& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const CorruptCheckpoint& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BoundMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << " (values exceed the 127-bit envelope)\n";
    return kUnsafeBound;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}
