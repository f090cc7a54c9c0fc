#include "thetalift/diagram.hpp"

#include <sstream>

#include <json.hpp>

namespace thetalift {

namespace {
constexpr std::int64_t kMaxExtent = 512;
}

std::vector<DiagramCell> diagram_cells(const ThetaContext& ctx, const DiagramSpec& spec) {
  if (spec.r_max < 0 || spec.s_max < 0)
    throw validation_error("diagram bounds must be non-negative");
  if (spec.r_max > kMaxExtent || spec.s_max > kMaxExtent)
    throw validation_error("diagram bounds are capped at 512");

  std::vector<DiagramCell> cells;
  for (std::int64_t s = 0; s <= spec.s_max; ++s)
    for (std::int64_t r = 0; r <= spec.r_max; ++r) {
      if (((r + s - ctx.nu) % 2 + 2) % 2 != 0) continue;
      cells.push_back({r, s, nonvanishing(ctx, r, s)});
    }
  return cells;
}

std::string render_ascii(const std::vector<DiagramCell>& cells, const DiagramSpec& spec) {
  std::vector<std::string> grid(spec.s_max + 1, std::string(spec.r_max + 1, ' '));
  for (const auto& c : cells) grid[c.s][c.r] = c.nonzero ? '#' : '.';
  std::string out;
  for (std::int64_t s = spec.s_max; s >= 0; --s) {
    out += grid[s];
    out += '\n';
  }
  return out;
}

std::string render_svg(const std::vector<DiagramCell>& cells, const DiagramSpec& spec) {
  constexpr int step = 24, margin = 40, radius = 7;
  const std::int64_t width = 2 * margin + spec.r_max * step;
  const std::int64_t height = 2 * margin + spec.s_max * step;
  auto cx = [&](std::int64_t r) { return margin + r * step; };
  auto cy = [&](std::int64_t s) { return margin + (spec.s_max - s) * step; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  svg << "  <line x1=\"" << cx(0) << "\" y1=\"" << cy(0) << "\" x2=\"" << cx(spec.r_max)
      << "\" y2=\"" << cy(0) << "\" stroke=\"black\"/>\n";
  svg << "  <line x1=\"" << cx(0) << "\" y1=\"" << cy(0) << "\" x2=\"" << cx(0) << "\" y2=\""
      << cy(spec.s_max) << "\" stroke=\"black\"/>\n";
  svg << "  <text x=\"" << cx(spec.r_max) + 14 << "\" y=\"" << cy(0) + 5
      << "\" font-size=\"14\">r</text>\n";
  svg << "  <text x=\"" << cx(0) - 5 << "\" y=\"" << cy(spec.s_max) - 12
      << "\" font-size=\"14\">s</text>\n";
  for (std::int64_t r = 0; r <= spec.r_max; ++r)
    svg << "  <text x=\"" << cx(r) << "\" y=\"" << cy(0) + 20
        << "\" font-size=\"9\" text-anchor=\"middle\">" << r << "</text>\n";
  for (std::int64_t s = 0; s <= spec.s_max; ++s)
    svg << "  <text x=\"" << cx(0) - 14 << "\" y=\"" << cy(s) + 3
        << "\" font-size=\"9\" text-anchor=\"middle\">" << s << "</text>\n";
  for (const auto& c : cells)
    svg << "  <circle cx=\"" << cx(c.r) << "\" cy=\"" << cy(c.s) << "\" r=\"" << radius
        << "\" fill=\"" << (c.nonzero ? "black" : "white") << "\" stroke=\"black\"/>\n";
  svg << "</svg>\n";
  return svg.str();
}

std::string render_json(const std::vector<DiagramCell>& cells) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : cells)
    arr.push_back({{"r", c.r}, {"s", c.s}, {"nonzero", c.nonzero}});
  return arr.dump(2);
}

std::string render_diagram(const ThetaContext& ctx, const DiagramSpec& spec) {
  const auto cells = diagram_cells(ctx, spec);
  switch (spec.format) {
    case DiagramFormat::ascii:
      return render_ascii(cells, spec);
    case DiagramFormat::svg:
      return render_svg(cells, spec);
    case DiagramFormat::json:
      return render_json(cells);
  }
  return {};
}

}  // namespace thetalift
