#include "geocover/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace geocover {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                    "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};
constexpr const char* kGroupFill[] = {"#d62728", "#1f77b4", "#2ca02c"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const PointSet& ps, const std::vector<Piece>& pieces, const SvgOptions& opts) {
  const double size = opts.canvas;
  const double inner = size - 2.0 * opts.margin;
  Coord xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  if (ps.size() > 0) {
    xmin = xmax = ps[0].x;
    ymin = ymax = ps[0].y;
    for (const Point& p : ps.points) {
      xmin = std::min(xmin, p.x);
      xmax = std::max(xmax, p.x);
      ymin = std::min(ymin, p.y);
      ymax = std::max(ymax, p.y);
    }
  }
  const double span = static_cast<double>(std::max<Coord>({xmax - xmin, ymax - ymin, 1}));
  const double scale = inner / span;
  auto sx = [&](const Point& p) { return opts.margin + (static_cast<double>(p.x - xmin)) * scale; };
  auto sy = [&](const Point& p) { return size - opts.margin - (static_cast<double>(p.y - ymin)) * scale; };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(size) + "\" height=\"" + num(size) +
         "\" viewBox=\"0 0 " + num(size) + " " + num(size) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!opts.title.empty()) {
    out += "<text x=\"" + num(opts.margin) + "\" y=\"" + num(opts.margin * 0.6) +
           "\" font-family=\"sans-serif\" font-size=\"14\">" + escape(opts.title) + "</text>\n";
  }
  const double stroke = pieces.size() > 200 ? 0.5 : 1.5;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const char* colour = kPalette[i % std::size(kPalette)];
    const Piece& piece = pieces[i];
    if (const PathPiece* path = piece.path()) {
      out += "<polyline fill=\"none\" stroke=\"" + std::string(colour) + "\" stroke-width=\"" + num(stroke) + "\" points=\"";
      for (std::size_t k = 0; k < path->vertices.size(); ++k) {
        const Point& p = ps[path->vertices[k]];
        if (k) out += ' ';
        out += num(sx(p)) + "," + num(sy(p));
      }
      out += "\"/>\n";
    } else {
      for (const Edge& e : piece.matching()->edges) {
        out += "<line x1=\"" + num(sx(ps[e.u])) + "\" y1=\"" + num(sy(ps[e.u])) + "\" x2=\"" + num(sx(ps[e.v])) +
               "\" y2=\"" + num(sy(ps[e.v])) + "\" stroke=\"" + colour + "\" stroke-width=\"" + num(stroke) + "\"/>\n";
      }
    }
  }
  if (opts.arrow) {
    const double len = std::hypot(static_cast<double>(opts.arrow->dx()), static_cast<double>(opts.arrow->dy()));
    const double cx = size / 2, cy = size / 2;
    const double ex = cx + 0.15 * inner * static_cast<double>(opts.arrow->dx()) / len;
    const double ey = cy - 0.15 * inner * static_cast<double>(opts.arrow->dy()) / len;
    out += "<defs><marker id=\"head\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" refY=\"4\" orient=\"auto\">"
           "<path d=\"M0,0 L8,4 L0,8 z\" fill=\"black\"/></marker></defs>\n";
    out += "<line x1=\"" + num(cx) + "\" y1=\"" + num(cy) + "\" x2=\"" + num(ex) + "\" y2=\"" + num(ey) +
           "\" stroke=\"black\" stroke-width=\"2\" stroke-dasharray=\"6,3\" marker-end=\"url(#head)\"/>\n";
  }
  const bool labels = opts.labels.value_or(ps.size() <= 40);
  const double r = ps.size() > 500 ? 1.5 : 3.5;
  for (const Point& p : ps.points) {
    const char* fill = ps.groups ? kGroupFill[static_cast<int>((*ps.groups)[static_cast<std::size_t>(p.id)])] : "black";
    out += "<circle cx=\"" + num(sx(p)) + "\" cy=\"" + num(sy(p)) + "\" r=\"" + num(r) + "\" fill=\"" + fill + "\"/>\n";
    if (labels) {
      out += "<text x=\"" + num(sx(p) + 5) + "\" y=\"" + num(sy(p) - 5) + "\" font-family=\"sans-serif\" font-size=\"10\">" +
             std::to_string(p.id) + "</text>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace geocover
