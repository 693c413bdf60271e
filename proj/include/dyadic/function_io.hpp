#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dyadic/besov.hpp"
#include "dyadic/counterexample.hpp"
#include "dyadic/lcfunction.hpp"

namespace dyadic {

// Function file format: {"resolution": J, "values": [2^J rational strings]}.
// Values are re-reduced on read; writers emit canonical lowest-term strings,
// so read -> write is a canonicalizing round trip.

nlohmann::ordered_json function_to_json(const LCFunction& f);
LCFunction function_from_json(const nlohmann::json& j);

LCFunction read_function_file(const std::string& path);
void write_function_file(const LCFunction& f, const std::string& path);

// Blocks file format: {"mean": rational string, "blocks": [function objects]}.
nlohmann::ordered_json block_sequence_to_json(const BlockSequence& b);
BlockSequence block_sequence_from_json(const nlohmann::json& j);

BlockSequence read_blocks_file(const std::string& path);
void write_blocks_file(const BlockSequence& b, const std::string& path);

/// {"exact": nullable string, "exact_is_qth_power": bool, "float": decimal
/// string, "terms": [decimal strings]}.
nlohmann::ordered_json norm_report_to_json(const NormReport& report);

/// Rational rendered as a decimal string at the given precision.
std::string decimal_string(const Rational& x, unsigned precision);

std::string sweep_csv_header();
std::string sweep_row_csv(const SweepRow& row, unsigned precision);
nlohmann::ordered_json sweep_row_json(const SweepRow& row, unsigned precision);

} // namespace dyadic
