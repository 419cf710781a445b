#include "nacrig/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

namespace nacrig {

namespace {

constexpr double kCanvas = 512;
constexpr double kMargin = 32;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

}  // namespace

SvgRenderer::SvgRenderer(const Motion& motion, std::optional<EdgeColoring> coloring)
    : motion_(motion), coloring_(std::move(coloring)) {
    double min_x = std::numeric_limits<double>::infinity(), max_x = -min_x;
    double min_y = min_x, max_y = -min_x;
    for (const MotionFrame& frame : motion_.frames)
        for (const Vec3& p : frame.positions) {
            const double px = p.x + (motion_.dimension == 3 ? 0.35 * p.z : 0.0);
            const double py = p.y + (motion_.dimension == 3 ? 0.35 * p.z : 0.0);
            min_x = std::min(min_x, px);
            max_x = std::max(max_x, px);
            min_y = std::min(min_y, py);
            max_y = std::max(max_y, py);
        }
    const double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
    scale_ = (kCanvas - 2 * kMargin) / span;
    offset_x_ = min_x - (span - (max_x - min_x)) / 2;
    offset_y_ = min_y - (span - (max_y - min_y)) / 2;
}

std::pair<double, double> SvgRenderer::project(const Vec3& p) const {
    const double px = p.x + (motion_.dimension == 3 ? 0.35 * p.z : 0.0);
    const double py = p.y + (motion_.dimension == 3 ? 0.35 * p.z : 0.0);
    // SVG y grows downward.
    return {kMargin + (px - offset_x_) * scale_, kCanvas - kMargin - (py - offset_y_) * scale_};
}

std::string SvgRenderer::frame_group(std::size_t frame_index) const {
    const MotionFrame& frame = motion_.frames[frame_index];
    std::ostringstream out;
    for (const Edge& e : motion_.graph.edges()) {
        const auto [x1, y1] = project(frame.positions[e.u]);
        const auto [x2, y2] = project(frame.positions[e.v]);
        std::string stroke = "#555555";
        if (coloring_) stroke = coloring_->at(e) == Color::red ? "#d62728" : "#1f77b4";
        out << "  <line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2)
            << "\" y2=\"" << fmt(y2) << "\" stroke=\"" << stroke << "\" stroke-width=\"2\"/>\n";
    }
    for (const Vec3& p : frame.positions) {
        const auto [x, y] = project(p);
        out << "  <circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y)
            << "\" r=\"4\" fill=\"#222222\"/>\n";
    }
    return out.str();
}

std::string SvgRenderer::render_frame(std::size_t frame_index) const {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" standalone=\"no\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 " << kCanvas
        << ' ' << kCanvas << "\">\n"
        << frame_group(frame_index) << "</svg>\n";
    return out.str();
}

std::string SvgRenderer::render_animation(double seconds_per_frame) const {
    std::ostringstream out;
    const std::size_t count = motion_.frames.size();
    out << "<?xml version=\"1.0\" standalone=\"no\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 " << kCanvas
        << ' ' << kCanvas << "\">\n";
    for (std::size_t f = 0; f < count; ++f) {
        out << "<g visibility=\"hidden\">\n" << frame_group(f);
        out << "  <animate id=\"f" << f << "\" attributeName=\"visibility\" begin=\"";
        if (f == 0)
            out << "0s;f" << count - 1 << ".end";
        else
            out << 'f' << f - 1 << ".end";
        out << "\" dur=\"" << fmt(seconds_per_frame) << "s\" to=\"visible\"/>\n</g>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace nacrig
