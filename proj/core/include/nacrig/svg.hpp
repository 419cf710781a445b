#pragma once

#include <optional>
#include <string>

#include "nacrig/motion.hpp"
#include "nacrig/nac.hpp"

namespace nacrig {

// Renders motion frames into a 512x512 viewbox. The scale is fixed from the
// bounding box over all frames so an animation does not jump. Edges are
// stroked red/blue when a coloring is given, gray otherwise. 3D frames are
// drawn with a cabinet projection.
struct SvgRenderer {
    explicit SvgRenderer(const Motion& motion,
                         std::optional<EdgeColoring> coloring = std::nullopt);

    // Standalone SVG with the single frame.
    std::string render_frame(std::size_t frame_index) const;

    // One SVG animating through all frames via SMIL visibility switching.
    std::string render_animation(double seconds_per_frame = 0.1) const;

private:
    const Motion& motion_;
    std::optional<EdgeColoring> coloring_;
    double scale_ = 1;
    double offset_x_ = 0;
    double offset_y_ = 0;

    std::pair<double, double> project(const Vec3& p) const;
    std::string frame_group(std::size_t frame_index) const;
};

}  // namespace nacrig
