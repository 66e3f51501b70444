#pragma once

#include "bs/wang.hpp"

#include <string>
#include <vector>

// JSON wire formats. Labels are tagged objects: {"num", "den"} for rationals,
// {"color"} for colors, all three keys for paired labels. Numerators and
// denominators must fit in 64 bits; anything larger is refused rather than
// rounded.
namespace bs::json_io {

std::string tileset_to_json(const wang::Tileset& ts);
wang::Tileset tileset_from_json(const std::string& text);

// {"tileset_ref": <tileset>, "cells": [{"word": ..., "tile_index": ...}]}.
// Cells are emitted in canonical-form order, so output is deterministic.
std::string patch_to_json(const wang::Patch& patch);
wang::Patch patch_from_json(const std::string& text);

std::string violations_to_json(const std::vector<wang::Violation>& vs);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& data);

}  // namespace bs::json_io
