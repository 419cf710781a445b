#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nacrig/graph.hpp"
#include "nacrig/laman.hpp"
#include "nacrig/motion.hpp"
#include "nacrig/nac.hpp"
#include "nacrig/structure.hpp"

namespace nacrig {

inline constexpr std::string_view kReportSchema = "nac-rigidity/1";

struct AnalyzeOptions {
    int max_cut_size = kDefaultMaxCutSize;
    bool up_to_swap = false;
    std::size_t coloring_cap = 64;  // list limit; --all lifts it
    bool all_colorings = false;
    // Exhaustive enumeration runs only below this many triangle classes;
    // beyond it the verdict falls back to structural certificates.
    std::size_t max_enum_classes = 24;
};

enum class Verdict { flexible_exists, none_exists, unknown_within_bounds };

struct NacSummary {
    bool exists = false;
    std::optional<std::uint64_t> count;  // unset when enumeration was skipped
    bool up_to_swap = false;
    std::vector<NacColoring> colorings;  // capped witness list
    bool truncated = false;
    bool disconnected_trivial = false;
};

struct AnalysisReport {
    std::string format;  // input echo
    int vertex_count = 0;
    int edge_count = 0;
    bool connected = false;
    bool laman = false;
    StructureReport structure;
    NacSummary nac;
    Verdict verdict = Verdict::unknown_within_bounds;
    std::string decided_by;
};

AnalysisReport analyze(const Graph& g, const std::string& format_name,
                       const AnalyzeOptions& options = {});

// JSON serializations; all embed the schema string and stable key names.
std::string to_json(const AnalysisReport& report, int indent = 2);
std::string to_json(const ConjectureReport& report, int indent = 2);
std::string to_json(const Motion& motion, int indent = 2);
std::string colorings_to_json(const std::vector<NacColoring>& colorings, int indent = 2);

}  // namespace nacrig
