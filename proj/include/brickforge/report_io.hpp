#pragma once

#include <string>
#include <string_view>

#include "brickforge/search.hpp"

namespace brickforge {

// All Nat values travel as exact decimal strings; counts small enough for
// 64 bits travel as plain numbers. elapsed time is deliberately absent
// from both encodings so reports from repeated runs compare byte-equal.

std::string hit_to_jsonl(ScanKind kind, const ScanHit& hit);
std::string summary_to_jsonl(const ScanReport& report);
std::string report_to_jsonl(const ScanReport& report);  // hit lines + summary line
ScanReport report_from_jsonl(std::string_view text);

std::string scan_csv_header();
std::string hit_to_csv(ScanKind kind, const ScanHit& hit);
std::string summary_to_csv(const ScanReport& report);
std::string report_to_csv(const ScanReport& report);
ScanReport report_from_csv(std::string_view text);

std::string brick_report_to_json(const BrickReport& report);
BrickReport brick_report_from_json(std::string_view text);
std::string brick_report_csv_header();
std::string brick_report_to_csv(const BrickReport& report);
BrickReport brick_report_from_csv(std::string_view text);  // header + one row

std::string checkpoint_to_json(const Checkpoint& ck);
Checkpoint checkpoint_from_json(std::string_view text);  // throws CorruptCheckpoint

}  // namespace brickforge
