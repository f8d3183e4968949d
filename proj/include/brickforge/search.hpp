#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "brickforge/constructors.hpp"

namespace brickforge {

enum class ScanKind {
  conjecture1,
  conjecture2,
  problem1,
  problem2,
  problem3,
  corollary1,
  corollary2,
  theorem1,
  theorem2,
  theorem3,
};

std::string_view to_token(ScanKind kind);              // "conjecture1", "cor1", "th1", ...
std::optional<ScanKind> scan_kind_from_token(std::string_view token);

bool is_conjecture_scan(ScanKind kind);
bool is_problem_scan(ScanKind kind);
bool is_constructive_scan(ScanKind kind);  // corollary/theorem kinds
bool scan_needs_leg_bound(ScanKind kind);  // theorem/problem kinds

/// One confirmed scan record. Which optional fields are set depends on
/// the scan kind:
///   corollary/theorem: legs (theorem only) + canonical brick
///   conjecture1: the two square roots
///   conjecture2: the two square roots + the verified perfect cuboid
///   problem: product_holds verdict for a tuple passing the square test
struct ScanHit {
  std::optional<LegPair> legs;
  PythTriple first;
  PythTriple second;
  std::optional<Brick> brick;
  std::optional<PerfectCuboid> cuboid;
  std::optional<std::array<Nat, 2>> roots;
  std::optional<bool> product_holds;

  friend bool operator==(const ScanHit&, const ScanHit&) = default;
};

struct ScanReport {
  ScanKind kind{};
  Nat w_bound;
  std::optional<Nat> leg_bound;
  std::uint64_t pairs_examined = 0;
  std::vector<ScanHit> hits;
  double elapsed_seconds = 0.0;  // excluded from machine-readable encodings

  /// Problem scans: hits whose product condition failed.
  std::uint64_t violations() const;
};

/// Field-wise equality ignoring elapsed time.
bool same_results(const ScanReport& a, const ScanReport& b);

struct Checkpoint {
  int format_version = 1;
  ScanKind kind{};
  Nat w_bound;
  std::optional<Nat> leg_bound;
  std::uint64_t cursor = 0;  // fully processed outer indices; 0 = fresh
  std::vector<ScanHit> hits;
};

void checkpoint_save(const Checkpoint& ck, const std::filesystem::path& path);
Checkpoint checkpoint_load(const std::filesystem::path& path);

struct ScanOptions {
  unsigned workers = 1;
  /// When set: resume from this file if it exists, and keep it updated
  /// (atomically, write-then-rename). Removed on successful completion.
  std::optional<std::filesystem::path> checkpoint_path;
  /// Process at most this many outer indices in this invocation, then
  /// checkpoint and pause. Requires checkpoint_path.
  std::optional<std::uint64_t> stop_after;
  /// Called for every confirmed hit, in deterministic merge order.
  std::function<void(const ScanHit&)> on_hit;
};

/// Scan engine. Returns the complete report, or nullopt when the run was
/// paused by stop_after (partial state is in the checkpoint file).
/// leg_bound must be present exactly for theorem/problem kinds.
std::optional<ScanReport> run_scan(ScanKind kind, Nat w_bound, std::optional<Nat> leg_bound,
                                   const ScanOptions& opts = {});

// Convenience wrappers; these always run to completion.
ScanReport scan_corollary(ScanKind kind, Nat w_bound, const ScanOptions& opts = {});
ScanReport scan_theorem(ScanKind kind, Nat w_bound, Nat leg_bound, const ScanOptions& opts = {});
ScanReport scan_conjecture1(Nat w_bound, const ScanOptions& opts = {});
ScanReport scan_conjecture2(Nat w_bound, const ScanOptions& opts = {});
ScanReport scan_problem(ScanKind kind, Nat w_bound, Nat leg_bound, const ScanOptions& opts = {});

/// Largest w_bound (given leg_bound for theorem/problem kinds) for which
/// every intermediate stays below 2^127.
Nat max_safe_w_bound(ScanKind kind, std::optional<Nat> leg_bound);

}  // namespace brickforge
