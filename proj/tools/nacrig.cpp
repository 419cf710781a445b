// Command-line front end: analyze, nac, flex, verify.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "nacrig/errors.hpp"
#include "nacrig/fixtures.hpp"
#include "nacrig/laman.hpp"
#include "nacrig/motion.hpp"
#include "nacrig/nac.hpp"
#include "nacrig/report.hpp"
#include "nacrig/svg.hpp"

namespace {

using nacrig::Graph;
using nacrig::ParsedGraph;

std::string read_all(const std::string& path) {
    if (path == "-" || path.empty()) {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw nacrig::ParseError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// A line of two whitespace-separated tokens means an edge list; a single
// token means graph6.
std::string sniff_format(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (std::size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream tokens(line);
        std::string tok;
        int count = 0;
        while (tokens >> tok) ++count;
        if (count == 0) continue;
        return count >= 2 ? "edges" : "graph6";
    }
    return "graph6";
}

struct LoadedGraph {
    ParsedGraph parsed;
    std::string format;
};

LoadedGraph load_graph(const std::string& input, const std::string& format_flag) {
    const std::string text = read_all(input);
    std::string format = format_flag;
    if (format == "auto") format = sniff_format(text);
    LoadedGraph out;
    out.format = format;
    if (format == "graph6") {
        out.parsed.graph = nacrig::parse_graph6(text);
        for (int v = 0; v < out.parsed.graph.vertex_count(); ++v)
            out.parsed.names.push_back(std::to_string(v));
    } else if (format == "edges") {
        out.parsed = nacrig::parse_edge_list(text);
    } else {
        throw nacrig::ParseError("unknown format: " + format);
    }
    return out;
}

int resolve_vertex(const ParsedGraph& parsed, const std::string& name) {
    for (std::size_t i = 0; i < parsed.names.size(); ++i)
        if (parsed.names[i] == name) return static_cast<int>(i);
    throw nacrig::ParseError("unknown vertex name: " + name);
}

int run_analyze(const LoadedGraph& loaded, const nacrig::AnalyzeOptions& options) {
    const nacrig::AnalysisReport report =
        nacrig::analyze(loaded.parsed.graph, loaded.format, options);
    std::cout << nacrig::to_json(report);
    switch (report.verdict) {
        case nacrig::Verdict::flexible_exists: return 0;
        case nacrig::Verdict::none_exists: return 1;
        case nacrig::Verdict::unknown_within_bounds: return 3;
    }
    return 3;
}

int run_nac(const LoadedGraph& loaded, bool up_to_swap, bool all) {
    const std::vector<nacrig::NacColoring> colorings =
        nacrig::enumerate_nac(loaded.parsed.graph, up_to_swap);
    const std::size_t cap = all ? colorings.size() : std::min<std::size_t>(colorings.size(), 64);
    nlohmann::ordered_json out;
    out["schema"] = nacrig::kReportSchema;
    out["count"] = colorings.size();
    out["upToSwap"] = up_to_swap;
    const std::vector<nacrig::NacColoring> kept(colorings.begin(), colorings.begin() + cap);
    out["colorings"] =
        nlohmann::ordered_json::parse(nacrig::colorings_to_json(kept, 0));
    out["truncated"] = cap < colorings.size();
    std::cout << out.dump(2) << "\n";
    return colorings.empty() ? 1 : 0;
}

int run_flex(const LoadedGraph& loaded, const std::string& coloring_arg, const std::string& mode,
             int frames, const std::string& out_format, const std::string& out_path,
             bool animate, const std::vector<std::string>& pair) {
    const Graph& g = loaded.parsed.graph;
    const std::vector<double> alphas = nacrig::uniform_alphas(frames);
    nacrig::Motion motion;
    std::optional<nacrig::EdgeColoring> stroke_coloring;

    if (mode == "3d") {
        std::pair<int, int> uv;
        if (!pair.empty()) {
            uv = {resolve_vertex(loaded.parsed, pair[0]), resolve_vertex(loaded.parsed, pair[1])};
        } else {
            auto found = nacrig::first_nonadjacent_pair(g);
            if (!found) {
                std::cerr << "flex: complete graph, no non-adjacent pair in 3d mode\n";
                return 1;
            }
            uv = *found;
        }
        motion = nacrig::flex3d(g, uv.first, uv.second, alphas);
    } else {
        nacrig::NacColoring nac;
        if (coloring_arg == "auto") {
            std::vector<nacrig::NacColoring> all = nacrig::enumerate_nac(g);
            if (all.empty()) {
                std::cerr << "flex: graph has no NAC-coloring\n";
                return 1;
            }
            nac = std::move(all.front());
        } else {
            const std::string text = read_all(coloring_arg);
            nac = nacrig::NacColoring::create(
                g, nacrig::parse_coloring(text, g, loaded.parsed.names));
        }
        stroke_coloring = nac.coloring;
        const nacrig::GridAssignment ga = nacrig::component_grid(g, nac);
        if (mode == "grid")
            motion = nacrig::grid_motion(ga, alphas);
        else if (mode == "zigzag")
            motion = nacrig::zigzag_motion(ga, nacrig::default_zigzag(ga), alphas);
        else
            throw nacrig::ParseError("unknown mode: " + mode);
    }

    if (out_format == "json") {
        std::cout << nacrig::to_json(motion);
        return 0;
    }
    if (out_format != "svg") throw nacrig::ParseError("unknown output format: " + out_format);

    const nacrig::SvgRenderer renderer(motion, stroke_coloring);
    auto write_file = [](const std::string& path, const std::string& content) {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) throw nacrig::ParseError("cannot write " + path);
        out << content;
    };
    if (animate) {
        const std::string path = out_path + ".svg";
        write_file(path, renderer.render_animation());
        std::cout << path << "\n";
        return 0;
    }
    for (std::size_t f = 0; f < motion.frames.size(); ++f) {
        char suffix[16];
        std::snprintf(suffix, sizeof suffix, "_%03zu.svg", f);
        const std::string path = out_path + suffix;
        write_file(path, renderer.render_frame(f));
        std::cout << path << "\n";
    }
    return 0;
}

int run_verify(int max_n, const std::string& checkpoint) {
    std::optional<std::string> path;
    if (!checkpoint.empty()) path = checkpoint;
    const nacrig::ConjectureReport report = nacrig::verify_conjecture(max_n, path);
    std::cout << nacrig::to_json(report);
    return report.counterexamples.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"NAC-coloring based flexibility analysis for graphs"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string format = "auto";
    nacrig::AnalyzeOptions analyze_options;
    bool up_to_swap = false;
    bool all = false;

    auto* analyze = app.add_subcommand("analyze", "Full structural and NAC analysis");
    analyze->add_option("input", input, "graph file or - for stdin");
    analyze->add_option("--format", format, "graph6|edges|auto")->default_str("auto");
    analyze->add_flag("--up-to-swap", up_to_swap, "one coloring per swap pair");
    analyze->add_option("--max-cut-size", analyze_options.max_cut_size,
                        "bound for the independent-cut search");
    analyze->add_flag("--all", all, "do not cap the coloring list");

    auto* nac = app.add_subcommand("nac", "Enumerate NAC-colorings");
    nac->add_option("input", input, "graph file or - for stdin");
    nac->add_option("--format", format, "graph6|edges|auto");
    nac->add_flag("--up-to-swap", up_to_swap, "one coloring per swap pair");
    nac->add_flag("--all", all, "do not cap the coloring list");

    std::string coloring_arg = "auto";
    std::string mode = "grid";
    int frames = 36;
    std::string out_format = "json";
    std::string out_path = "motion";
    bool animate = false;
    std::vector<std::string> pair;

    auto* flex = app.add_subcommand("flex", "Construct a flexible motion");
    flex->add_option("input", input, "graph file or - for stdin");
    flex->add_option("--format", format, "graph6|edges|auto");
    flex->add_option("--coloring", coloring_arg, "coloring file or 'auto'");
    flex->add_option("--mode", mode, "grid|zigzag|3d");
    flex->add_option("--frames", frames, "number of alpha samples")->check(CLI::PositiveNumber);
    flex->add_option("--out", out_format, "json|svg");
    flex->add_option("--out-path", out_path, "output path prefix for svg");
    flex->add_flag("--animate", animate, "emit one SMIL-animated svg instead of per-frame files");
    flex->add_option("--pair", pair, "non-adjacent vertex pair for 3d mode")->expected(2);

    int max_n = nacrig::kDefaultLamanCap;
    std::string checkpoint;

    auto* verify = app.add_subcommand("verify", "Re-verify the Laman conjecture at desk scale");
    verify->add_option("--max-n", max_n, "largest vertex count to sweep");
    verify->add_option("--checkpoint", checkpoint, "resumable checkpoint file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            analyze_options.up_to_swap = up_to_swap;
            analyze_options.all_colorings = all;
            return run_analyze(load_graph(input, format), analyze_options);
        }
        if (nac->parsed()) return run_nac(load_graph(input, format), up_to_swap, all);
        if (flex->parsed())
            return run_flex(load_graph(input, format), coloring_arg, mode, frames, out_format,
                            out_path, animate, pair);
        if (verify->parsed()) return run_verify(max_n, checkpoint);
    } catch (const std::exception& error) {
        std::cerr << "nacrig: " << error.what() << "\n";
        return 2;
    }
    return 2;
}
