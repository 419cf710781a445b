#include "nacrig/report.hpp"

#include <limits>

#include <json.hpp>

#include "nacrig/errors.hpp"

namespace nacrig {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json edge_json(const Edge& e) { return ordered_json::array({e.u, e.v}); }

ordered_json edges_json(const std::vector<Edge>& edges) {
    ordered_json out = ordered_json::array();
    for (const Edge& e : edges) out.push_back(edge_json(e));
    return out;
}

ordered_json coloring_json(const NacColoring& c) {
    ordered_json arr = ordered_json::array();
    for (const auto& [e, color] : c.coloring.entries)
        arr.push_back(ordered_json{{"u", e.u}, {"v", e.v},
                                   {"color", color == Color::red ? "red" : "blue"}});
    return arr;
}

ordered_json structure_json(const StructureReport& s) {
    ordered_json delta = ordered_json::array();
    for (const auto& cls : s.delta_classes.classes) delta.push_back(edges_json(cls.edges));
    ordered_json out;
    out["deltaClasses"] = std::move(delta);
    out["spannedBy"] = s.spanned_by ? ordered_json(*s.spanned_by) : ordered_json(nullptr);
    out["edgeBoundOk"] = s.edge_bound_ok;
    out["independentCut"] =
        s.independent_cut ? ordered_json(*s.independent_cut) : ordered_json(nullptr);
    out["triangleFreeVertex"] =
        s.triangle_free_vertex ? ordered_json(*s.triangle_free_vertex) : ordered_json(nullptr);
    out["connectingEdgeCut"] =
        s.connecting_edge_cut ? edges_json(*s.connecting_edge_cut) : ordered_json(nullptr);
    out["maxCutSize"] = s.max_cut_size;
    return out;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::flexible_exists: return "flexible-labeling-exists";
        case Verdict::none_exists: return "none-exists";
        case Verdict::unknown_within_bounds: return "unknown-within-bounds";
    }
    return "unknown-within-bounds";
}

}  // namespace

AnalysisReport analyze(const Graph& g, const std::string& format_name,
                       const AnalyzeOptions& options) {
    AnalysisReport report;
    report.format = format_name;
    report.vertex_count = g.vertex_count();
    report.edge_count = g.edge_count();
    report.connected = g.connected();
    report.laman = g.vertex_count() >= 2 && is_laman(g);
    report.structure = build_structure_report(g, options.max_cut_size);
    report.nac.up_to_swap = options.up_to_swap;

    const std::size_t cap =
        options.all_colorings ? std::numeric_limits<std::size_t>::max() : options.coloring_cap;
    auto keep_witness = [&](NacColoring witness) {
        if (report.nac.colorings.size() < cap)
            report.nac.colorings.push_back(std::move(witness));
        else
            report.nac.truncated = true;
    };

    int edge_bearing = 0;
    for (const auto& block : connected_components(g).blocks)
        for (int v : block)
            if (g.degree(v) > 0) {
                ++edge_bearing;
                break;
            }

    const std::size_t class_count = report.structure.delta_classes.classes.size();
    if (class_count <= options.max_enum_classes) {
        std::vector<NacColoring> all = enumerate_nac(g, options.up_to_swap);
        report.nac.exists = !all.empty();
        report.nac.count = all.size();
        report.nac.disconnected_trivial = !report.connected && edge_bearing >= 2;
        for (NacColoring& c : all) keep_witness(std::move(c));
        report.verdict = report.nac.exists ? Verdict::flexible_exists : Verdict::none_exists;
        report.decided_by = "nac-enumeration";
        return report;
    }

    // Too many classes to enumerate; fall back to structural certificates.
    if (!report.connected && edge_bearing >= 2) {
        // Color the edges of the component holding the smallest positive-
        // degree vertex red, everything else blue.
        const VertexPartition comps = connected_components(g);
        std::uint64_t red_mask = 0;
        for (const auto& block : comps.blocks) {
            bool bears = false;
            for (int v : block) bears |= g.degree(v) > 0;
            if (!bears) continue;
            for (int v : block) red_mask |= std::uint64_t{1} << v;
            break;
        }
        std::vector<std::pair<Edge, Color>> entries;
        for (const Edge& e : g.edges())
            entries.emplace_back(e, ((red_mask >> e.u) & 1) ? Color::red : Color::blue);
        keep_witness(NacColoring::create(g, EdgeColoring::make(std::move(entries))));
        report.nac.exists = true;
        report.nac.disconnected_trivial = true;
        report.verdict = Verdict::flexible_exists;
        report.decided_by = "disconnected-split";
        return report;
    }
    if (report.structure.spanned_by) {
        report.verdict = Verdict::none_exists;
        report.decided_by = "spanning-triangle-class";
        return report;
    }
    if (!report.structure.edge_bound_ok) {
        report.verdict = Verdict::none_exists;
        report.decided_by = "edge-count-bound";
        return report;
    }
    if (report.connected && report.structure.independent_cut) {
        keep_witness(coloring_from_independent_cut(g, *report.structure.independent_cut));
        report.nac.exists = true;
        report.verdict = Verdict::flexible_exists;
        report.decided_by = "independent-vertex-cut";
        return report;
    }
    if (report.connected && report.structure.triangle_free_vertex) {
        keep_witness(coloring_from_independent_cut(
            g, cut_from_triangle_free_vertex(g, *report.structure.triangle_free_vertex)));
        report.nac.exists = true;
        report.verdict = Verdict::flexible_exists;
        report.decided_by = "triangle-free-vertex";
        return report;
    }
    if (report.connected && report.structure.connecting_edge_cut) {
        keep_witness(coloring_from_edge_cut(g, *report.structure.connecting_edge_cut));
        report.nac.exists = true;
        report.verdict = Verdict::flexible_exists;
        report.decided_by = "connecting-edge-cut";
        return report;
    }
    report.verdict = Verdict::unknown_within_bounds;
    report.decided_by = "enumeration-skipped";
    return report;
}

std::string to_json(const AnalysisReport& report, int indent) {
    ordered_json nac;
    nac["exists"] = report.nac.exists;
    nac["count"] = report.nac.count ? ordered_json(*report.nac.count) : ordered_json(nullptr);
    nac["upToSwap"] = report.nac.up_to_swap;
    ordered_json colorings = ordered_json::array();
    for (const NacColoring& c : report.nac.colorings) colorings.push_back(coloring_json(c));
    nac["colorings"] = std::move(colorings);
    nac["truncated"] = report.nac.truncated;
    nac["disconnectedTrivial"] = report.nac.disconnected_trivial;

    ordered_json out;
    out["schema"] = kReportSchema;
    out["input"] = ordered_json{{"format", report.format},
                                {"n", report.vertex_count},
                                {"edges", report.edge_count},
                                {"connected", report.connected}};
    out["laman"] = report.laman;
    out["structure"] = structure_json(report.structure);
    out["nac"] = std::move(nac);
    out["verdict"] = ordered_json{{"result", verdict_name(report.verdict)},
                                  {"decidedBy", report.decided_by}};
    return out.dump(indent) + "\n";
}

std::string to_json(const ConjectureReport& report, int indent) {
    ordered_json per_n = ordered_json::array();
    for (const ConjectureLevel& lvl : report.per_n)
        per_n.push_back(ordered_json{{"n", lvl.n},
                                     {"total", lvl.total},
                                     {"triConnected", lvl.tri_connected},
                                     {"withNac", lvl.with_nac},
                                     {"problematic", lvl.problematic}});
    ordered_json counter = ordered_json::array();
    for (const CanonicalCode& c : report.counterexamples) counter.push_back(c.bytes);
    ordered_json ambiguous = ordered_json::array();
    for (const CanonicalCode& c : report.ambiguous_problematic) ambiguous.push_back(c.bytes);

    ordered_json out;
    out["schema"] = kReportSchema;
    out["maxN"] = report.max_n;
    out["cap"] = report.cap;
    out["perN"] = std::move(per_n);
    out["counterexamples"] = std::move(counter);
    out["ambiguousProblematic"] = std::move(ambiguous);
    out["resumedFrom"] =
        report.resumed_from ? ordered_json(*report.resumed_from) : ordered_json(nullptr);
    return out.dump(indent) + "\n";
}

std::string to_json(const Motion& motion, int indent) {
    ordered_json labeling = ordered_json::array();
    for (int i = 0; i < motion.graph.edge_count(); ++i) {
        const Edge& e = motion.graph.edge(i);
        labeling.push_back(
            ordered_json{{"u", e.u}, {"v", e.v}, {"length", motion.labeling.lengths[i]}});
    }
    ordered_json frames = ordered_json::array();
    for (const MotionFrame& frame : motion.frames) {
        ordered_json positions = ordered_json::array();
        for (const Vec3& p : frame.positions) {
            if (motion.dimension == 2)
                positions.push_back(ordered_json::array({p.x, p.y}));
            else
                positions.push_back(ordered_json::array({p.x, p.y, p.z}));
        }
        frames.push_back(ordered_json{{"alpha", frame.alpha}, {"positions", std::move(positions)}});
    }
    const char* construction = motion.construction == Construction::grid      ? "grid"
                               : motion.construction == Construction::zigzag  ? "zigzag"
                               : motion.construction == Construction::threeD ? "threeD"
                                                                             : "external";
    ordered_json out;
    out["schema"] = kReportSchema;
    out["dimension"] = motion.dimension;
    out["labeling"] = std::move(labeling);
    out["frames"] = std::move(frames);
    out["construction"] = construction;
    return out.dump(indent) + "\n";
}

std::string colorings_to_json(const std::vector<NacColoring>& colorings, int indent) {
    ordered_json arr = ordered_json::array();
    for (const NacColoring& c : colorings) arr.push_back(coloring_json(c));
    return arr.dump(indent) + "\n";
}

}  // namespace nacrig
