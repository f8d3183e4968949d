#include "brickforge/search.hpp"

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <exception>
#include <fstream>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "brickforge/errors.hpp"
#include "brickforge/report_io.hpp"

namespace brickforge {

namespace {

constexpr std::string_view kTokens[] = {
    "conjecture1", "conjecture2", "problem1", "problem2", "problem3",
    "cor1",        "cor2",        "th1",      "th2",      "th3",
};

using Clock = std::chrono::steady_clock;

struct ScanContext {
  ScanKind kind{};
  Nat w_bound;
  std::optional<Nat> leg_bound;
  std::vector<PythTriple> triples;
  std::vector<LegPair> leg_pairs;  // theorem/problem kinds only
};

std::vector<LegPair> enumerate_leg_pairs(Nat leg_bound, bool both_odd) {
  std::vector<LegPair> out;
  for (Nat u0 = 1; u0 <= leg_bound; u0 += 2) {
    const Nat step = both_odd ? Nat(2) : Nat(1);
    for (Nat v0 = 1; v0 <= leg_bound; v0 += step) {
      if (gcd(u0, v0) != 1) continue;
      out.push_back(make_leg_pair(u0, v0));
    }
  }
  return out;
}

ScanContext build_context(ScanKind kind, Nat w_bound, std::optional<Nat> leg_bound) {
  if (w_bound < 5) throw std::invalid_argument("scan: w_bound must be >= 5");
  if (scan_needs_leg_bound(kind)) {
    if (!leg_bound) throw std::invalid_argument("scan: this kind requires a leg bound");
    if (*leg_bound < 1) throw std::invalid_argument("scan: leg_bound must be >= 1");
  } else if (leg_bound) {
    throw std::invalid_argument("scan: this kind takes no leg bound");
  }
  ScanContext ctx{kind, w_bound, leg_bound, enumerate_primitive(w_bound), {}};
  if (scan_needs_leg_bound(kind)) {
    const bool both_odd = kind == ScanKind::theorem2 || kind == ScanKind::problem2;
    ctx.leg_pairs = enumerate_leg_pairs(*leg_bound, both_odd);
  }
  return ctx;
}

std::uint64_t checked_mul_u64(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("scan: pair count exceeds 64 bits");
  return r;
}

std::uint64_t pairs_closed_form(const ScanContext& ctx) {
  const std::uint64_t n = ctx.triples.size();
  if (is_conjecture_scan(ctx.kind)) return n % 2 == 0 ? n / 2 * (n + 1) : (n + 1) / 2 * n;
  const std::uint64_t ordered = checked_mul_u64(n, n);
  if (ctx.kind == ScanKind::corollary1 || ctx.kind == ScanKind::corollary2) return ordered;
  return checked_mul_u64(ctx.leg_pairs.size(), ordered);
}

// Product conditions, evaluated on raw u128 values: every factor is below
// 2^63 inside the safety envelope, so the products cannot wrap.
inline bool product_holds_raw(ScanKind kind, const LegPair& p, const PythTriple& t1,
                              const PythTriple& t2) {
  switch (kind) {
    case ScanKind::theorem1:
    case ScanKind::problem1:
      return p.v0.raw() * t1.u.raw() == p.u0.raw() * t2.v.raw();
    case ScanKind::theorem2:
    case ScanKind::problem2:
      return p.u0.raw() * t2.u.raw() == p.v0.raw() * t1.u.raw();
    case ScanKind::theorem3:
    case ScanKind::problem3:
      return p.v0.raw() * t1.v.raw() == p.u0.raw() * t2.v.raw();
    default:
      throw std::logic_error("product_holds_raw: not a theorem/problem kind");
  }
}

std::optional<Nat> problem_square_root(ScanKind kind, const LegPair& p, const PythTriple& t1,
                                       const PythTriple& t2) {
  switch (kind) {
    case ScanKind::problem1:
      return perfect_square(sq(p.u0 * t2.u) + sq(p.v0 * t1.v));
    case ScanKind::problem2:
      return perfect_square(sq(p.v0 * t1.v) + sq(p.u0 * t2.v));
    case ScanKind::problem3:
      return perfect_square(sq(p.u0 * t2.u) + sq(p.v0 * t1.u));
    default:
      throw std::logic_error("problem_square_root: not a problem kind");
  }
}

std::optional<Brick> run_constructor(ScanKind kind, const std::optional<LegPair>& legs,
                                     const PythTriple& t1, const PythTriple& t2) {
  switch (kind) {
    case ScanKind::corollary1:
      return corollary1(t1, t2);
    case ScanKind::corollary2:
      return corollary2(t1, t2);
    case ScanKind::theorem1:
      return theorem1(*legs, t1, t2);
    case ScanKind::theorem2:
      return theorem2(*legs, t1, t2);
    case ScanKind::theorem3:
      return theorem3(*legs, t1, t2);
    default:
      throw std::logic_error("run_constructor: not a constructive kind");
  }
}

// Conjecture systems. Conjecture 1 tests (xu)^2+(yv)^2 and (xv)^2+(yu)^2;
// conjecture 2 tests (zu)^2+(yv)^2 and (zv)^2+(yu)^2. Roles: (x,y,z) from
// the first triple, (u,v,w) from the second, canonical leg order.
std::optional<std::array<Nat, 2>> conjecture_roots(ScanKind kind, const PythTriple& a,
                                                   const PythTriple& b) {
  const Nat lead = kind == ScanKind::conjecture1 ? a.u : a.w;
  const auto r1 = perfect_square(sq(lead * b.u) + sq(a.v * b.v));
  if (!r1) return std::nullopt;
  const auto r2 = perfect_square(sq(lead * b.v) + sq(a.v * b.u));
  if (!r2) return std::nullopt;
  return std::array<Nat, 2>{*r1, *r2};
}

// Hits for one outer index, in the fixed deterministic inner order. The
// outer index walks the first triple of the canonical enumeration; it is
// also the checkpoint cursor unit.
void process_outer(const ScanContext& ctx, std::size_t i, std::vector<ScanHit>& out) {
  const auto& triples = ctx.triples;
  const PythTriple& t1 = triples[i];
  switch (ctx.kind) {
    case ScanKind::corollary1:
    case ScanKind::corollary2:
      for (const PythTriple& t2 : triples) {
        auto brick = ctx.kind == ScanKind::corollary1 ? corollary1(t1, t2) : corollary2(t1, t2);
        if (brick)
          out.push_back(ScanHit{std::nullopt, t1, t2, normalize(*brick), std::nullopt,
                                std::nullopt, std::nullopt});
      }
      break;
    case ScanKind::theorem1:
    case ScanKind::theorem2:
    case ScanKind::theorem3:
      for (const LegPair& p : ctx.leg_pairs) {
        for (const PythTriple& t2 : triples) {
          // Cheap product filter first; the square test dominates runtime.
          if (!product_holds_raw(ctx.kind, p, t1, t2)) continue;
          auto brick = run_constructor(ctx.kind, p, t1, t2);
          if (brick)
            out.push_back(ScanHit{p, t1, t2, normalize(*brick), std::nullopt, std::nullopt,
                                  std::nullopt});
        }
      }
      break;
    case ScanKind::problem1:
    case ScanKind::problem2:
    case ScanKind::problem3:
      // Inverted filter order: find square-condition tuples, then report
      // the product verdict for each.
      for (const LegPair& p : ctx.leg_pairs) {
        for (const PythTriple& t2 : triples) {
          if (!problem_square_root(ctx.kind, p, t1, t2)) continue;
          out.push_back(ScanHit{p, t1, t2, std::nullopt, std::nullopt, std::nullopt,
                                product_holds_raw(ctx.kind, p, t1, t2)});
        }
      }
      break;
    case ScanKind::conjecture1:
      for (std::size_t j = i; j < triples.size(); ++j) {
        // The system is symmetric under swapping the two triples, so one
        // role order per unordered pair suffices.
        if (auto roots = conjecture_roots(ctx.kind, t1, triples[j]))
          out.push_back(ScanHit{std::nullopt, t1, triples[j], std::nullopt, std::nullopt,
                                *roots, std::nullopt});
      }
      break;
    case ScanKind::conjecture2:
      for (std::size_t j = i; j < triples.size(); ++j) {
        // Not symmetric under swapping the triples (z and y come from the
        // first only), so both role orders are tested per unordered pair.
        const PythTriple& tj = triples[j];
        if (auto roots = conjecture_roots(ctx.kind, t1, tj))
          out.push_back(ScanHit{std::nullopt, t1, tj, std::nullopt,
                                perfect_from_counterexample(t1, tj), *roots, std::nullopt});
        if (j != i) {
          if (auto roots = conjecture_roots(ctx.kind, tj, t1))
            out.push_back(ScanHit{std::nullopt, tj, t1, std::nullopt,
                                  perfect_from_counterexample(tj, t1), *roots, std::nullopt});
        }
      }
      break;
  }
}

using EdgeKey = std::array<u128, 3>;

EdgeKey edge_key(const Brick& br) { return {br.a.raw(), br.b.raw(), br.c.raw()}; }

void validate_against(const Checkpoint& ck, ScanKind kind, Nat w_bound,
                      std::optional<Nat> leg_bound) {
  if (ck.kind != kind) throw BoundMismatch("checkpoint: scan kind mismatch");
  if (ck.w_bound != w_bound) throw BoundMismatch("checkpoint: w_bound mismatch");
  if (ck.leg_bound != leg_bound) throw BoundMismatch("checkpoint: leg_bound mismatch");
}

// Every hit must re-verify under its constructor/predicate before the
// report leaves the engine.
void reverify(const ScanContext& ctx, const std::vector<ScanHit>& hits) {
  for (const ScanHit& h : hits) {
    bool ok = false;
    if (is_constructive_scan(ctx.kind)) {
      const auto brick = run_constructor(ctx.kind, h.legs, h.first, h.second);
      ok = brick && h.brick && normalize(*brick) == *h.brick;
    } else if (is_problem_scan(ctx.kind)) {
      ok = h.legs && h.product_holds &&
           problem_square_root(ctx.kind, *h.legs, h.first, h.second).has_value() &&
           *h.product_holds == product_holds_raw(ctx.kind, *h.legs, h.first, h.second);
    } else {
      const auto roots = conjecture_roots(ctx.kind, h.first, h.second);
      ok = roots && h.roots && *roots == *h.roots;
      if (ok && ctx.kind == ScanKind::conjecture2)
        ok = h.cuboid && perfect_from_counterexample(h.first, h.second) == *h.cuboid;
    }
    if (!ok) throw VerificationFailure("scan: hit failed re-verification");
  }
}

class Merger {
 public:
  Merger(ScanReport& report, const ScanOptions& opts, bool dedup)
      : report_(report), opts_(opts), dedup_(dedup) {
    if (dedup_)
      for (const ScanHit& h : report_.hits)
        if (h.brick) seen_.insert(edge_key(*h.brick));
  }

  void merge(std::vector<ScanHit>&& hits) {
    for (ScanHit& h : hits) {
      if (dedup_ && h.brick && !seen_.insert(edge_key(*h.brick)).second) continue;
      if (opts_.on_hit) opts_.on_hit(h);
      report_.hits.push_back(std::move(h));
    }
  }

 private:
  ScanReport& report_;
  const ScanOptions& opts_;
  bool dedup_;
  std::set<EdgeKey> seen_;
};

}  // namespace

std::string_view to_token(ScanKind kind) { return kTokens[static_cast<int>(kind)]; }

std::optional<ScanKind> scan_kind_from_token(std::string_view token) {
  for (int i = 0; i < 10; ++i)
    if (kTokens[i] == token) return static_cast<ScanKind>(i);
  return std::nullopt;
}

bool is_conjecture_scan(ScanKind kind) {
  return kind == ScanKind::conjecture1 || kind == ScanKind::conjecture2;
}

bool is_problem_scan(ScanKind kind) {
  return kind == ScanKind::problem1 || kind == ScanKind::problem2 || kind == ScanKind::problem3;
}

bool is_constructive_scan(ScanKind kind) {
  return !is_conjecture_scan(kind) && !is_problem_scan(kind);
}

bool scan_needs_leg_bound(ScanKind kind) {
  return is_problem_scan(kind) || kind == ScanKind::theorem1 || kind == ScanKind::theorem2 ||
         kind == ScanKind::theorem3;
}

std::uint64_t ScanReport::violations() const {
  std::uint64_t n = 0;
  for (const ScanHit& h : hits)
    if (h.product_holds && !*h.product_holds) ++n;
  return n;
}

bool same_results(const ScanReport& a, const ScanReport& b) {
  return a.kind == b.kind && a.w_bound == b.w_bound && a.leg_bound == b.leg_bound &&
         a.pairs_examined == b.pairs_examined && a.hits == b.hits;
}

void checkpoint_save(const Checkpoint& ck, const std::filesystem::path& path) {
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("checkpoint: cannot write " + tmp.string());
    out << checkpoint_to_json(ck) << '\n';
  }
  std::filesystem::rename(tmp, path);  // atomic publish
}

Checkpoint checkpoint_load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CorruptCheckpoint("checkpoint: cannot read " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return checkpoint_from_json(text);
}

Nat max_safe_w_bound(ScanKind kind, std::optional<Nat> leg_bound) {
  // Worst intermediate is the space-diagonal sum of three squared
  // products; it must stay below 2^127. Conjecture/corollary products are
  // bounded by W^2, theorem/problem products by L*W.
  const Nat limit = isqrt(Nat::of(nat_max_raw / 3));  // products must stay <= this
  if (!scan_needs_leg_bound(kind)) return isqrt(limit);
  if (!leg_bound || leg_bound->is_zero())
    throw std::invalid_argument("max_safe_w_bound: this kind requires a leg bound");
  return limit / *leg_bound;
}

std::optional<ScanReport> run_scan(ScanKind kind, Nat w_bound, std::optional<Nat> leg_bound,
                                   const ScanOptions& opts) {
  if (opts.stop_after && !opts.checkpoint_path)
    throw std::invalid_argument("scan: stop_after requires a checkpoint path");
  const auto t_begin = Clock::now();
  const ScanContext ctx = build_context(kind, w_bound, leg_bound);
  const std::size_t n = ctx.triples.size();

  ScanReport report{kind, w_bound, leg_bound, 0, {}, 0.0};
  std::size_t start = 0;
  if (opts.checkpoint_path && std::filesystem::exists(*opts.checkpoint_path)) {
    Checkpoint ck = checkpoint_load(*opts.checkpoint_path);
    validate_against(ck, kind, w_bound, leg_bound);
    start = ck.cursor;
    if (start > n) throw CorruptCheckpoint("checkpoint: cursor past the end of the sweep");
    report.hits = std::move(ck.hits);  // already streamed by the earlier run
  }

  Merger merger(report, opts, is_constructive_scan(kind));
  const std::size_t budget =
      opts.stop_after ? std::min<std::size_t>(*opts.stop_after, n - start) : n - start;
  const std::size_t end = start + budget;
  std::size_t frontier = start;

  auto save_progress = [&](std::size_t cursor) {
    if (!opts.checkpoint_path) return;
    checkpoint_save(Checkpoint{1, kind, w_bound, leg_bound, cursor, report.hits},
                    *opts.checkpoint_path);
  };

  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(std::max(1u, opts.workers), budget ? budget : 1));
  if (workers <= 1) {
    for (std::size_t i = start; i < end; ++i) {
      std::vector<ScanHit> hits;
      process_outer(ctx, i, hits);
      merger.merge(std::move(hits));
      frontier = i + 1;
      if (opts.checkpoint_path && (frontier - start) % 32 == 0 && frontier < n)
        save_progress(frontier);
    }
  } else {
    std::vector<std::optional<std::vector<ScanHit>>> slots(n - start);
    std::atomic<std::size_t> next{start};
    std::atomic<bool> halt{false};
    std::mutex mu;
    std::condition_variable cv;
    std::exception_ptr failure;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned k = 0; k < workers; ++k) {
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= end || halt.load()) break;
          try {
            std::vector<ScanHit> hits;
            process_outer(ctx, i, hits);
            std::lock_guard lock(mu);
            slots[i - start] = std::move(hits);
          } catch (...) {
            std::lock_guard lock(mu);
            if (!failure) failure = std::current_exception();
            halt.store(true);
          }
          cv.notify_all();
        }
        cv.notify_all();
      });
    }
    // Merge strictly in outer-index order so results are independent of
    // worker count and scheduling.
    for (std::size_t i = start; i < end; ++i) {
      std::vector<ScanHit> hits;
      {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return slots[i - start].has_value() || failure; });
        if (failure) break;
        hits = std::move(*slots[i - start]);
        slots[i - start].reset();
      }
      merger.merge(std::move(hits));
      frontier = i + 1;
      if (opts.checkpoint_path && (frontier - start) % 32 == 0 && frontier < n)
        save_progress(frontier);
    }
    halt.store(true);
    next.store(end);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  if (frontier < n) {  // paused by stop_after
    save_progress(frontier);
    return std::nullopt;
  }

  report.pairs_examined = pairs_closed_form(ctx);
  reverify(ctx, report.hits);
  report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - t_begin).count();
  if (opts.checkpoint_path) std::filesystem::remove(*opts.checkpoint_path);
  return report;
}

namespace {

ScanReport must_complete(std::optional<ScanReport> r) {
  if (!r) throw std::logic_error("scan: paused run from a completing wrapper");
  return std::move(*r);
}

}  // namespace

ScanReport scan_corollary(ScanKind kind, Nat w_bound, const ScanOptions& opts) {
  if (kind != ScanKind::corollary1 && kind != ScanKind::corollary2)
    throw std::invalid_argument("scan_corollary: kind must be cor1 or cor2");
  return must_complete(run_scan(kind, w_bound, std::nullopt, opts));
}

ScanReport scan_theorem(ScanKind kind, Nat w_bound, Nat leg_bound, const ScanOptions& opts) {
  if (kind != ScanKind::theorem1 && kind != ScanKind::theorem2 && kind != ScanKind::theorem3)
    throw std::invalid_argument("scan_theorem: kind must be th1, th2 or th3");
  return must_complete(run_scan(kind, w_bound, leg_bound, opts));
}

ScanReport scan_conjecture1(Nat w_bound, const ScanOptions& opts) {
  return must_complete(run_scan(ScanKind::conjecture1, w_bound, std::nullopt, opts));
}

ScanReport scan_conjecture2(Nat w_bound, const ScanOptions& opts) {
  return must_complete(run_scan(ScanKind::conjecture2, w_bound, std::nullopt, opts));
}

ScanReport scan_problem(ScanKind kind, Nat w_bound, Nat leg_bound, const ScanOptions& opts) {
  if (!is_problem_scan(kind))
    throw std::invalid_argument("scan_problem: kind must be problem1..problem3");
  return must_complete(run_scan(kind, w_bound, leg_bound, opts));
}

}  // namespace brickforge
