#pragma once

#include <string>

#include "htc/diagram.hpp"

namespace htc {

/// Text plot with r along the horizontal axis and i along the vertical one.
/// A point carrying one factor is drawn as '#'; superposed points show how
/// many factors meet there.
std::string render_ascii(const Diagram& d);

/// The same picture as an SVG document: one square per point, labelled with
/// its factor list when more than one factor is present.
std::string render_svg(const Diagram& d, int cell = 28);

/// One line per (i, factor) on column r: the constituent label with its
/// ξ_k ⊗ Ξ^{i/2} markers and the vertex it comes from ("none" when it does
/// not come from a higher stratum).
std::string describe_column(const LocalComponent& c, int r);

}  // namespace htc
