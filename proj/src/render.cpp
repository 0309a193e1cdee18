#include "render.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

namespace transcut {

namespace {

struct View {
  double x0, x1, y0, y1, w, h;
  double sx(double x) const { return (x - x0) / (x1 - x0) * w; }
  double sy(double y) const { return h - (y - y0) / (y1 - y0) * h; }
};

View make_view(const Instance& inst, const RenderOptions& o) {
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  auto grow = [&](double x, double y) {
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  };
  for (const auto& p : inst.points) grow(to_double(p.x), to_double(p.y));
  if (inst.points.empty()) {
    for (const auto& t : inst.translates) grow(to_double(t.a), to_double(t.b));
  }
  if (!std::isfinite(x0)) x0 = -1, x1 = 1, y0 = -1, y1 = 1;
  const double mx = std::max(1.0, (x1 - x0) * 0.05);
  const double my = std::max(1.0, (y1 - y0) * 0.05);
  return {x0 - mx, x1 + mx, y0 - my, y1 + my, o.width, o.height};
}

// Parabola coordinates of a lifted line over [xa, xb] as an SVG polyline.
void polyline(std::ostringstream& out, const View& v, double slope, double intercept, double xa,
              double xb, const char* style) {
  xa = std::max(xa, v.x0);
  xb = std::min(xb, v.x1);
  if (!(xa < xb)) return;
  out << "<polyline fill=\"none\" " << style << " points=\"";
  const int steps = 64;
  for (int i = 0; i <= steps; ++i) {
    const double x = xa + (xb - xa) * i / steps;
    out << v.sx(x) << ',' << v.sy(slope * x + intercept + x * x) << ' ';
  }
  out << "\"/>\n";
}

double bound(const XBound& b, double fallback) {
  return b.finite() ? to_double(b.value()) : fallback;
}

}  // namespace

std::string render_svg(const Instance& inst, const PipelineResult* result,
                       const RenderOptions& options) {
  const View v = make_view(inst, options);
  std::ostringstream out;
  out << std::setprecision(6);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << v.w << "\" height=\"" << v.h
      << "\" viewBox=\"0 0 " << v.w << ' ' << v.h << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  out << "<g id=\"curves\">\n";
  for (std::size_t i = 0; i < inst.translates.size() && i < options.max_curves; ++i) {
    const Line l = Line::from(inst.translates[i]);
    polyline(out, v, to_double(l.slope), to_double(l.intercept), v.x0, v.x1,
             "stroke=\"#bbbbbb\" stroke-width=\"0.6\"");
  }
  out << "</g>\n";

  if (result && result->cutting) {
    const Cutting& c = *result->cutting;
    out << "<g id=\"cutting\">\n";
    for (const auto& s : c.simplifications) {
      for (const auto& p : s.chain.pieces()) {
        polyline(out, v, to_double(p.line.slope), to_double(p.line.intercept),
                 bound(p.x_lo, v.x0), bound(p.x_hi, v.x1),
                 "stroke=\"#3366cc\" stroke-width=\"1.2\"");
      }
    }
    for (const auto& cell : c.cells) {
      for (const auto* wall : {&cell.left_wall, &cell.right_wall}) {
        if (!*wall) continue;
        const double x = to_double((*wall)->x);
        const double ya = (*wall)->y_lo ? to_double(*(*wall)->y_lo) : v.y0;
        const double yb = (*wall)->y_hi ? to_double(*(*wall)->y_hi) : v.y1;
        out << "<line x1=\"" << v.sx(x) << "\" y1=\"" << v.sy(ya) << "\" x2=\"" << v.sx(x)
            << "\" y2=\"" << v.sy(yb) << "\" stroke=\"#99aadd\" stroke-width=\"0.6\"/>\n";
      }
    }
    out << "</g>\n";
  }

  out << "<g id=\"points\">\n";
  for (const auto& p : inst.points) {
    out << "<circle cx=\"" << v.sx(to_double(p.x)) << "\" cy=\"" << v.sy(to_double(p.y))
        << "\" r=\"1.6\" fill=\"black\"/>\n";
  }
  out << "</g>\n";

  if (result) {
    out << "<g id=\"witnesses\">\n";
    std::size_t shown = 0;
    for (const auto& e : result->h.edges) {
      for (const auto& w : e.witnesses) {
        if (shown++ >= options.max_witnesses) break;
        const auto it = std::find_if(result->graphs.begin(), result->graphs.end(),
                                     [&](const CellGraph& g) { return g.cell == w.cell; });
        if (it == result->graphs.end()) continue;
        const auto draw = [&](std::size_t idx, const char* style) {
          const GraphEdge& ge = it->edges[idx];
          const Line l = Line::from(inst.translates[ge.curve]);
          polyline(out, v, to_double(l.slope), to_double(l.intercept), to_double(ge.x_lo),
                   to_double(ge.x_hi), style);
        };
        draw(w.e1, "stroke=\"#d62728\" stroke-width=\"2\"");
        draw(w.e2, "stroke=\"#2ca02c\" stroke-width=\"2\"");
        draw(w.e3, "stroke=\"#d62728\" stroke-width=\"2\"");
      }
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace transcut
