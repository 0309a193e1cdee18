#pragma once

#include "pipeline.hpp"

#include <string>

namespace transcut {

struct RenderOptions {
  double width = 900;
  double height = 700;
  std::size_t max_curves = 400;    // translates drawn, in index order
  std::size_t max_witnesses = 20;  // self-intersecting P3s highlighted
};

/// SVG of the instance: translates, points, and, when a pipeline result is
/// given, the cutting chains and walls plus highlighted P3 witnesses. The view
/// box is the bounding box of P (or of the translate apexes if P is empty).
std::string render_svg(const Instance& inst, const PipelineResult* result,
                       const RenderOptions& options = {});

}  // namespace transcut
