// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dris/harness.hpp"
#include "dris/scenario.hpp"

namespace dris {

inline constexpr int kCsvSchema = 1;

/// FNV-1a 64 over the canonical serialized configuration.
std::uint64_t config_hash(const ScenarioConfig& cfg);

std::string csv_escape(const std::string& field);
/// %.12g; non-finite values become nan/inf/-inf, an empty string for "absent".
std::string format_number(double v);

struct CsvTable {
    std::vector<std::string> metadata;  // written as "# key=value"
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::vector<std::string> standard_metadata(const ScenarioConfig& cfg, const std::string& command);
std::string render_csv(const CsvTable& table);

CsvTable sweep_table(const std::vector<SweepRow>& rows, const ScenarioConfig& cfg, const std::string& command);
CsvTable validation_table(const ValidationReport& report, const ScenarioConfig& cfg);
CsvTable cep_table(const std::vector<CepTraceEntry>& trace, const ScenarioConfig& cfg, ScenarioTag tag);

/// Whitespace-separated x/series columns for generic plotting tools.
std::string render_plot_data(const std::vector<SweepRow>& rows);

/// Writes text to path, or to stdout when path is "-". Throws with the path on failure.
void write_text(const std::string& path, const std::string& text);

}  // namespace dris
