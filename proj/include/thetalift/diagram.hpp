#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "thetalift/theta.hpp"

namespace thetalift {

enum class DiagramFormat { ascii, svg, json };

struct DiagramSpec {
  std::int64_t r_max = 0;
  std::int64_t s_max = 0;
  DiagramFormat format = DiagramFormat::ascii;
};

struct DiagramCell {
  std::int64_t r = 0;
  std::int64_t s = 0;
  bool nonzero = false;
};

// One record per in-parity lattice point of [0, r_max] x [0, s_max].
// This is the single source of truth all renderers consume.
// r_max, s_max are capped at 512.
std::vector<DiagramCell> diagram_cells(const ThetaContext& ctx, const DiagramSpec& spec);

// Rows are s = s_max down to 0; '#' nonzero, '.' zero, ' ' off-parity.
std::string render_ascii(const std::vector<DiagramCell>& cells, const DiagramSpec& spec);

// Self-contained SVG: filled circle = nonzero, open circle = zero,
// r horizontal, s vertical.
std::string render_svg(const std::vector<DiagramCell>& cells, const DiagramSpec& spec);

// JSON array of {"r":..., "s":..., "nonzero":...} records.
std::string render_json(const std::vector<DiagramCell>& cells);

std::string render_diagram(const ThetaContext& ctx, const DiagramSpec& spec);

}  // namespace thetalift
