#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <string>
#include <sys/wait.h>

#include "brickforge/report_io.hpp"
#include "brickforge/search.hpp"

using namespace brickforge;

namespace {

struct CliResult {
  int exit_code;
  std::string out;
};

// Runs the installed CLI with stderr folded into stdout.
CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(BRICKFORGE_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return CliResult{WIFEXITED(status) ? WEXITSTATUS(status) : -1, std::move(out)};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("verify") {
  const auto halcke = run_cli("verify 117 44 240");
  CHECK(halcke.exit_code == 0);
  CHECK(contains(halcke.out, "euler brick: yes"));
  CHECK(contains(halcke.out, "primitive: yes"));
  CHECK(contains(halcke.out, "face diagonals: 125 267 244"));

  CHECK(run_cli("verify 1 2 3").exit_code == 3);

  const auto jsonl = run_cli("verify 275 252 240 --format jsonl");
  CHECK(jsonl.exit_code == 0);
  CHECK(brick_report_from_json(jsonl.out) == verify_brick(Nat(275), Nat(252), Nat(240)));

  CHECK(run_cli("verify 1 2").exit_code == 64);
  CHECK(run_cli("verify a b c").exit_code == 64);
  CHECK(run_cli("verify 0 44 240").exit_code == 64);
}

TEST_CASE("construct") {
  const auto sounderson = run_cli("construct sounderson 3,4,5");
  CHECK(sounderson.exit_code == 0);
  CHECK(contains(sounderson.out, "edges: 117 44 240"));
  CHECK(contains(sounderson.out, "face diagonals: 125 267 244"));

  const auto th2 = run_cli("construct th2 11 17 11,60,61 17,144,145");
  CHECK(th2.exit_code == 0);
  CHECK(contains(th2.out, "edges: 187 1020 1584"));

  const auto fail = run_cli("construct cor1 3,4,5 5,12,13");
  CHECK(fail.exit_code == 4);
  CHECK(contains(fail.out, "no brick (hypothesis failed)"));

  CHECK(run_cli("construct cor1 3,4 5,12,13").exit_code == 64);
  CHECK(run_cli("construct th1 7 20 7,24,25").exit_code == 64);
  CHECK(run_cli("construct sounderson 6,8,10").exit_code == 64);
  CHECK(run_cli("construct nothing 3,4,5").exit_code == 64);
}

TEST_CASE("decompose") {
  const auto halcke = run_cli("decompose 117 44 240");
  CHECK(halcke.exit_code == 0);
  CHECK(contains(halcke.out, "k1=1 t1=(117,44,125)"));
  CHECK(contains(halcke.out, "k2=3 t2=(39,80,89)"));
  CHECK(contains(halcke.out, "k3=4 t3=(11,60,61)"));

  CHECK(run_cli("decompose 1 2 3").exit_code == 3);
}

TEST_CASE("tables") {
  CHECK(run_cli("tables --id T1").exit_code == 0);
  const auto t3 = run_cli("tables --id T3");
  CHECK(t3.exit_code == 5);
  CHECK(contains(t3.out, "row 4 column a: printed 6347, computed 6325"));
  CHECK(run_cli("tables").exit_code == 5);  // the T3 misprint again
  CHECK(run_cli("tables --id T9").exit_code == 64);
}

TEST_CASE("scan basics") {
  const auto conj = run_cli("scan conjecture1 --w-bound 100 --format jsonl");
  CHECK(conj.exit_code == 0);
  const ScanReport report = report_from_jsonl(conj.out);
  CHECK(report.pairs_examined == 136);
  CHECK(report.hits.empty());

  const auto cor2 = run_cli("scan cor2 --w-bound 145 --format jsonl");
  CHECK(cor2.exit_code == 0);
  bool found = false;
  for (const ScanHit& h : report_from_jsonl(cor2.out).hits)
    if (h.brick && h.brick->a == Nat(187) && h.brick->b == Nat(1020) &&
        h.brick->c == Nat(1584))
      found = true;
  CHECK(found);

  // Implication violations exit with the counterexample code.
  CHECK(run_cli("scan problem1 --w-bound 25 --leg-bound 1").exit_code == 2);

  CHECK(run_cli("scan th1 --w-bound 100").exit_code == 64);          // missing leg bound
  CHECK(run_cli("scan conjecture1 --w-bound 100 --leg-bound 4").exit_code == 64);
  CHECK(run_cli("scan wat --w-bound 100").exit_code == 64);
  CHECK(run_cli("scan conjecture1 --w-bound 4").exit_code == 64);
}

TEST_CASE("scan csv output parses back") {
  const auto csv = run_cli("scan th3 --w-bound 89 --leg-bound 4 --format csv");
  CHECK(csv.exit_code == 0);
  const ScanReport parsed = report_from_csv(csv.out);
  CHECK(same_results(parsed, scan_theorem(ScanKind::theorem3, Nat(89), Nat(4))));
}

TEST_CASE("unsafe bounds are refused with the maximum printed") {
  const auto res = run_cli("scan conjecture1 --w-bound 99999999999999");
  CHECK(res.exit_code == 65);
  CHECK(contains(res.out, "maximum safe w-bound"));
  CHECK(contains(res.out, to_string(max_safe_w_bound(ScanKind::conjecture1, std::nullopt))));
}

TEST_CASE("worker determinism at the CLI") {
  const auto one = run_cli("scan conjecture2 --w-bound 50 --workers 1 --format jsonl");
  const auto four = run_cli("scan conjecture2 --w-bound 50 --workers 4 --format jsonl");
  CHECK(one.exit_code == 0);
  CHECK(one.out == four.out);
}

TEST_CASE("checkpoint dir env var provides the default location") {
  namespace fs = std::filesystem;
  const auto dir = fs::temp_directory_path() / "brickforge-ckdir-test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string env = "BRICKFORGE_CHECKPOINT_DIR=" + dir.string() + " ";
  const std::string cmd = env + std::string(BRICKFORGE_CLI_PATH) +
                          " scan conjecture1 --w-bound 200 --stop-after 3 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  while (fread(buf, 1, sizeof buf, pipe) > 0) {
  }
  const int status = pclose(pipe);
  CHECK(WEXITSTATUS(status) == 75);
  CHECK(fs::exists(dir / "conjecture1-w200.checkpoint.json"));
  fs::remove_all(dir);
}

TEST_CASE("stop-after pauses and resume completes") {
  namespace fs = std::filesystem;
  const auto dir = fs::temp_directory_path() / "brickforge-cli-test";
  fs::create_directories(dir);
  const auto ck = (dir / "cli.checkpoint.json").string();
  fs::remove(ck);

  const auto full = run_cli("scan conjecture1 --w-bound 200 --format jsonl");
  const auto part1 =
      run_cli("scan conjecture1 --w-bound 200 --format jsonl --checkpoint " + ck +
              " --stop-after 10");
  CHECK(part1.exit_code == 75);
  const auto part2 =
      run_cli("scan conjecture1 --w-bound 200 --format jsonl --checkpoint " + ck);
  CHECK(part2.exit_code == 0);
  // stderr carries the pause notice; strip it before comparing streams.
  std::string joined;
  for (const auto* piece : {&part1.out, &part2.out}) {
    std::size_t pos = 0;
    while (pos < piece->size()) {
      std::size_t nl = piece->find('\n', pos);
      if (nl == std::string::npos) nl = piece->size();
      const std::string line = piece->substr(pos, nl - pos);
      if (!line.empty() && line.front() == '{') joined += line + "\n";
      pos = nl + 1;
    }
  }
  CHECK(joined == full.out);
  CHECK(!fs::exists(ck));
}

}  // TEST_SUITE
