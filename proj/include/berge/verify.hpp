#pragma once

#include <json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace berge {

using Json = nlohmann::ordered_json;

enum class Verdict { pass, fail, report };

std::string_view to_string(Verdict v);

struct ReportRow {
    std::string suite;
    std::string check;
    Json inputs = Json::object();
    Json expected;
    Json observed;
    Verdict verdict = Verdict::report;
    std::string note;
};

struct SuiteReport {
    std::string suite;
    std::vector<ReportRow> rows;

    std::size_t count(Verdict v) const;
    /// No row failed. Report-only rows never fail.
    bool ok() const { return count(Verdict::fail) == 0; }
};

struct VerifyOptions {
    std::uint64_t rng_seed = 20240601;
    int workers = 1;
    double search_time_limit = 120.0; // seconds per exhaustive search
};

/// "n=5..12;l=1..3;f=P1|P2": inclusive integer ranges or '|'-separated
/// values, one key per ';'-separated item. Throws MalformedInput.
std::map<std::string, std::vector<std::string>> parse_grid(std::string_view text);

/// Suites: "constructions", "lemma3.1", "bounds-vs-search", "thm2.7-desk".
/// An empty grid selects the suite's default grid. Throws UnknownSuite, or
/// BadParameters for grid keys the suite does not use.
SuiteReport verify_suite(const std::string& suite, std::string_view grid = {}, const VerifyOptions& opts = {});

const std::vector<std::string>& suite_ids();

/// Fixed-width text table: one line per row plus a totals line.
std::string summary_table(const SuiteReport& report);

} // namespace berge
