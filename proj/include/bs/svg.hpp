#pragma once

#include "bs/wang.hpp"

#include <string>

namespace bs::svg {

// Schematic patch rendering. Cells are grouped into one row per height,
// rows stacked top-down by decreasing height; the horizontal position is
// alpha(g) (m/n)^height(g), mapped to integers by clearing the common
// denominator, so output bytes are a pure function of the patch.
std::string render_patch(const wang::Patch& patch);

}  // namespace bs::svg
