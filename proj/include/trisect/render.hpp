#pragma once

#include "trisect/engine.hpp"

#include <stdexcept>
#include <string>

namespace trisect::render {

struct RenderOptions {
    int width = 800;
    int height = 800;
    int margin = 40;
    double stroke_width = 1.5;
    double font_size = 16;
    bool show_labels = true;
    bool show_angle_arcs = true;
    bool show_construction_circles = true;
};

enum class RenderErrc { empty_trace, invalid_options };

class RenderError : public std::runtime_error {
public:
    RenderError(RenderErrc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    RenderErrc code() const { return code_; }

private:
    RenderErrc code_;
};

/// SVG 1.1 document for one execution. World coordinates are kept inside a
/// single y-flipping group; labels sit outside it in canvas pixels.
template <typename Real>
std::string to_svg(const engine::Trace<Real>& trace, const engine::Environment<Real>& env,
                   const RenderOptions& opts = {});

/// %.9g with negative zero printed as 0.
std::string fmt(double v);

}  // namespace trisect::render
