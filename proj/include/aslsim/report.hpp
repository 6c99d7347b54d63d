#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace aslsim {

inline constexpr const char* kVersion = "0.1.0";

/// Deterministically formatted numeric cell (shared by machine and human
/// output, so every printed figure exists verbatim in the reports).
std::string format_number(double v);

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> row);
    std::string to_csv() const;
    std::string to_text() const;  // aligned human rendering
};

struct Report {
    std::string experiment;
    std::uint64_t seed = 0;
    std::string config_hash;
    std::vector<Table> tables;
    /// extra text artifacts (timing diagrams, CDF CSVs): name -> content
    std::vector<std::pair<std::string, std::string>> artifacts;

    std::string machine_json() const;
    std::string human_text() const;
};

/// FNV-1a 64 over the canonical config serialization.
std::string fnv1a_hex(const std::string& data);

/// Writes report.json, per-table CSVs (when csv format) and artifacts into
/// dir. All files appear atomically or not at all.
void write_report(const Report& report, const std::string& dir,
                  const std::string& format);

}  // namespace aslsim
