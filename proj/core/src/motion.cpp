#include "nacrig/motion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "nacrig/errors.hpp"
#include "nacrig/parallel.hpp"

namespace nacrig {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

double norm(Vec2 v) { return std::hypot(v.x, v.y); }

Vec2 sub(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }

// Paper convention: clockwise rotation by alpha.
Vec2 rotate_cw(double alpha, Vec2 v) {
    const double c = std::cos(alpha), s = std::sin(alpha);
    return {c * v.x + s * v.y, -s * v.x + c * v.y};
}

void check_alphas(const std::vector<double>& alphas) {
    if (alphas.size() < 2) throw ContractError("motion needs at least two alpha samples");
    for (double a : alphas)
        if (!(a >= 0.0 && a < kTwoPi))
            throw ContractError("alpha sample outside [0, 2*pi)");
}

double wrap_angle(double a) {
    while (a > std::numbers::pi) a -= kTwoPi;
    while (a <= -std::numbers::pi) a += kTwoPi;
    return a;
}

}  // namespace

double Labeling::at(const Graph& g, Edge e) const {
    const int idx = g.edge_index(e);
    if (idx < 0) throw ContractError("labeling lookup: not an edge");
    return lengths[idx];
}

GridAssignment component_grid(const Graph& g, const NacColoring& coloring) {
    GridAssignment ga;
    ga.graph = g;
    ga.coloring = coloring.coloring;
    ga.red_components = coloring.red_components;
    ga.blue_components = coloring.blue_components;
    ga.red_index.assign(g.vertex_count(), -1);
    ga.blue_index.assign(g.vertex_count(), -1);
    for (std::size_t i = 0; i < ga.red_components.blocks.size(); ++i)
        for (int v : ga.red_components.blocks[i]) ga.red_index[v] = static_cast<int>(i);
    for (std::size_t j = 0; j < ga.blue_components.blocks.size(); ++j)
        for (int v : ga.blue_components.blocks[j]) ga.blue_index[v] = static_cast<int>(j);
    for (const Edge& e : g.edges())
        if (ga.red_index[e.u] == ga.red_index[e.v] && ga.blue_index[e.u] == ga.blue_index[e.v])
            throw ContractError("grid assignment would give an edge zero length");
    return ga;
}

std::vector<double> uniform_alphas(int frames) {
    if (frames < 2) throw ContractError("need at least two frames");
    std::vector<double> alphas(frames);
    for (int k = 0; k < frames; ++k) alphas[k] = kTwoPi * k / frames;
    return alphas;
}

Motion grid_motion(const GridAssignment& ga, const std::vector<double>& alphas) {
    check_alphas(alphas);
    const Graph& g = ga.graph;

    Motion motion;
    motion.dimension = 2;
    motion.graph = g;
    motion.construction = Construction::grid;
    motion.labeling.lengths.reserve(g.edge_count());
    for (const Edge& e : g.edges()) {
        const bool red = ga.coloring.at(e) == Color::red;
        const int d = red ? ga.blue_index[e.u] - ga.blue_index[e.v]
                          : ga.red_index[e.u] - ga.red_index[e.v];
        motion.labeling.lengths.push_back(std::abs(d));
    }

    motion.frames.resize(alphas.size());
    parallel_chunks(alphas.size(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t f = begin; f < end; ++f) {
            MotionFrame& frame = motion.frames[f];
            frame.alpha = alphas[f];
            const double c = std::cos(frame.alpha), s = std::sin(frame.alpha);
            frame.positions.resize(g.vertex_count());
            for (int v = 0; v < g.vertex_count(); ++v) {
                const double i = ga.red_index[v] + 1;
                const double j = ga.blue_index[v] + 1;
                frame.positions[v] = {i + j * c, j * s, 0};
            }
        }
    });
    return motion;
}

ZigzagData default_zigzag(const GridAssignment& ga) {
    constexpr double eps = 0.125;
    ZigzagData z;
    for (int j = 1; j <= ga.blue_count(); ++j) z.a.push_back({eps * j * j, static_cast<double>(j)});
    for (int i = 1; i <= ga.red_count(); ++i) z.b.push_back({static_cast<double>(i), eps * i * i});
    return z;
}

Motion zigzag_motion(const GridAssignment& ga, const ZigzagData& z,
                     const std::vector<double>& alphas) {
    check_alphas(alphas);
    const Graph& g = ga.graph;
    if (static_cast<int>(z.a.size()) != ga.blue_count() ||
        static_cast<int>(z.b.size()) != ga.red_count())
        throw ContractError("zigzag vector families must match the component counts");
    for (const auto& family : {z.a, z.b})
        for (std::size_t i = 0; i < family.size(); ++i)
            for (std::size_t j = i + 1; j < family.size(); ++j)
                if (family[i] == family[j])
                    throw ContractError("zigzag vectors must be pairwise distinct");

    Motion motion;
    motion.dimension = 2;
    motion.graph = g;
    motion.construction = Construction::zigzag;
    motion.labeling.lengths.reserve(g.edge_count());
    for (const Edge& e : g.edges()) {
        const bool red = ga.coloring.at(e) == Color::red;
        const double len = red ? norm(sub(z.a[ga.blue_index[e.u]], z.a[ga.blue_index[e.v]]))
                               : norm(sub(z.b[ga.red_index[e.u]], z.b[ga.red_index[e.v]]));
        motion.labeling.lengths.push_back(len);
    }

    motion.frames.resize(alphas.size());
    parallel_chunks(alphas.size(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t f = begin; f < end; ++f) {
            MotionFrame& frame = motion.frames[f];
            frame.alpha = alphas[f];
            frame.positions.resize(g.vertex_count());
            for (int v = 0; v < g.vertex_count(); ++v) {
                const Vec2 rotated = rotate_cw(frame.alpha, z.a[ga.blue_index[v]]);
                const Vec2 base = z.b[ga.red_index[v]];
                frame.positions[v] = {rotated.x + base.x, rotated.y + base.y, 0};
            }
        }
    });
    return motion;
}

bool injective_flex(const GridAssignment& ga) {
    std::vector<std::pair<int, int>> cells;
    for (int v = 0; v < ga.graph.vertex_count(); ++v)
        cells.emplace_back(ga.red_index[v], ga.blue_index[v]);
    std::sort(cells.begin(), cells.end());
    return std::adjacent_find(cells.begin(), cells.end()) == cells.end();
}

EdgeColoring recover_coloring(const Motion& motion) {
    if (motion.dimension != 2)
        throw ContractError("recover_coloring: only 2D motions are classifiable");
    if (motion.frames.size() < 8)
        throw ContractError("recover_coloring: needs at least 8 frames");
    constexpr double kAngleTol = 1e-6;

    std::vector<std::pair<Edge, Color>> entries;
    for (const Edge& e : motion.graph.edges()) {
        std::vector<double> theta;
        theta.reserve(motion.frames.size());
        for (const MotionFrame& frame : motion.frames) {
            const Vec3& pu = frame.positions[e.u];
            const Vec3& pv = frame.positions[e.v];
            const double dx = pv.x - pu.x, dy = pv.y - pu.y;
            if (std::hypot(dx, dy) == 0.0)
                throw ClassificationError("edge collapses to zero length in a frame");
            theta.push_back(std::atan2(dy, dx));
        }
        double deviation = 0;
        for (double t : theta) deviation = std::max(deviation, std::abs(wrap_angle(t - theta[0])));
        if (deviation < kAngleTol) {
            entries.emplace_back(e, Color::blue);
            continue;
        }
        // Rotating edges track alpha step for step, up to a fixed sense.
        int sense = 0;
        bool lockstep = true;
        for (std::size_t f = 0; f + 1 < motion.frames.size(); ++f) {
            const double dalpha = motion.frames[f + 1].alpha - motion.frames[f].alpha;
            const double dtheta = wrap_angle(theta[f + 1] - theta[f]);
            if (std::abs(dalpha) < kAngleTol) {
                if (std::abs(dtheta) > kAngleTol) lockstep = false;
                continue;
            }
            if (sense == 0)
                sense = std::abs(wrap_angle(dtheta - dalpha)) <=
                                std::abs(wrap_angle(dtheta + dalpha))
                            ? 1
                            : -1;
            if (std::abs(wrap_angle(dtheta - sense * dalpha)) > kAngleTol) {
                lockstep = false;
                break;
            }
        }
        if (!lockstep)
            throw ClassificationError("edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                                      " direction neither constant nor rotating with alpha");
        entries.emplace_back(e, Color::red);
    }
    return EdgeColoring::make(std::move(entries));
}

Motion flex3d(const Graph& g, int u, int v, const std::vector<double>& alphas) {
    check_alphas(alphas);
    if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count() || u == v)
        throw ContractError("flex3d: invalid vertex pair");
    if (g.has_edge(u, v)) throw ContractError("flex3d: the chosen pair must be a non-edge");

    // y-coordinates: the vertex index keeps them pairwise distinct.
    auto y_of = [](int w) { return static_cast<double>(w); };

    Motion motion;
    motion.dimension = 3;
    motion.graph = g;
    motion.construction = Construction::threeD;
    motion.labeling.lengths.reserve(g.edge_count());
    for (const Edge& e : g.edges()) {
        double len;
        if (e.u == u || e.v == u) {
            const int w = e.u == u ? e.v : e.u;
            len = std::hypot(1.0, y_of(w));
        } else if (e.u == v || e.v == v) {
            const int w = e.u == v ? e.v : e.u;
            len = std::hypot(1.0, 1.0 - y_of(w));
        } else {
            len = std::abs(y_of(e.u) - y_of(e.v));
        }
        motion.labeling.lengths.push_back(len);
    }

    motion.frames.resize(alphas.size());
    for (std::size_t f = 0; f < alphas.size(); ++f) {
        MotionFrame& frame = motion.frames[f];
        frame.alpha = alphas[f];
        frame.positions.resize(g.vertex_count());
        for (int w = 0; w < g.vertex_count(); ++w) frame.positions[w] = {0, y_of(w), 0};
        frame.positions[u] = {1, 0, 0};
        frame.positions[v] = {std::cos(frame.alpha), 1, std::sin(frame.alpha)};
    }
    return motion;
}

std::optional<std::pair<int, int>> first_nonadjacent_pair(const Graph& g) {
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (!g.has_edge(u, v)) return std::make_pair(u, v);
    return std::nullopt;
}

MotionFrame pin_frame(const Graph& g, const MotionFrame& frame) {
    if (g.edge_count() == 0) throw ContractError("pin_frame: graph has no edge to pin");
    const Edge e = g.edges().front();
    const Vec3 origin = frame.positions[e.u];
    const double angle =
        std::atan2(frame.positions[e.v].y - origin.y, frame.positions[e.v].x - origin.x);
    const double c = std::cos(-angle), s = std::sin(-angle);
    MotionFrame out;
    out.alpha = frame.alpha;
    out.positions.reserve(frame.positions.size());
    for (const Vec3& p : frame.positions) {
        const double x = p.x - origin.x, y = p.y - origin.y;
        out.positions.push_back({c * x - s * y, s * x + c * y, p.z});
    }
    return out;
}

double max_nonedge_variation(const Motion& motion) {
    const Graph& g = motion.graph;
    double best = 0;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            if (g.has_edge(u, v)) continue;
            double lo = std::numeric_limits<double>::infinity(), hi = 0;
            for (const MotionFrame& frame : motion.frames) {
                const Vec3& a = frame.positions[u];
                const Vec3& b = frame.positions[v];
                const double d = std::sqrt((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y) +
                                           (a.z - b.z) * (a.z - b.z));
                lo = std::min(lo, d);
                hi = std::max(hi, d);
            }
            best = std::max(best, hi - lo);
        }
    return best;
}

}  // namespace nacrig
