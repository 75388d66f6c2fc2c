// Golden-value corpus: named foliation/curve families with expected
// invariant values, loaded from the versioned JSON data file and replayed
// by the CLI `examples` subcommand and the acceptance suite.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace folinv {

struct CorpusCurve {
    std::string curve;
    bool assume_irreducible = false;
    nlohmann::json expected; // subset of the invariant-report fields
    std::string origin;      // how the expected values were obtained
};

struct CorpusDivisor {
    std::string divisor;
    nlohmann::json expected; // subset of the divisor-report fields
    std::string origin;
};

struct CorpusEntry {
    std::string name;
    std::string source;
    std::string form;
    std::vector<CorpusCurve> curves;
    std::optional<CorpusDivisor> divisor;
};

std::vector<CorpusEntry> load_corpus(const std::string& path);

struct CorpusDiff {
    std::string where; // "curve <f>" or "divisor"
    std::string key;
    std::string expected;
    std::string got;
};

struct CorpusOutcome {
    std::string name;
    bool ok = true;
    std::vector<CorpusDiff> diffs;
    nlohmann::json reports; // computed values, keyed like the entry
};

// Replays one entry: computes every report and diffs the expected keys.
CorpusOutcome replay_entry(const CorpusEntry& entry);

} // namespace folinv
