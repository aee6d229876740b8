#pragma once

#include <string>

#include "pqm/barcode.hpp"

namespace pqm {

// Persistence diagram as a standalone SVG: birth/death scatter over the
// diagonal, with a dashed row for infinite deaths. Layout is integral and
// documented in docs/formats.md, so output bytes are deterministic.
std::string render_diagram_svg(const Barcode& barcode);

void render_diagram_to_file(const Barcode& barcode, const std::string& path);

}  // namespace pqm
