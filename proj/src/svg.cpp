#include "bs/svg.hpp"

#include <algorithm>
#include <vector>

namespace bs::svg {

namespace {

constexpr long long kRowPx = 40;

struct Cell {
  Rat u;  // alpha(g) (m/n)^height
  long long h;
  std::size_t tile;
};

}  // namespace

std::string render_patch(const wang::Patch& patch) {
  const auto& p = patch.params();
  std::vector<Cell> cells;
  cells.reserve(patch.cells.size());
  Int denom_lcm = 1;
  for (const auto& [g, idx] : patch.cells) {
    Rat u = p.m * group::lambda_map(g, p);
    denom_lcm = lcm(denom_lcm, denominator(u));
    cells.push_back({std::move(u), g.height(), idx});
  }

  Rat u_min = 0, u_max = 0;
  long long h_min = 0, h_max = 0;
  for (size_t i = 0; i < cells.size(); ++i) {
    u_min = i ? std::min(u_min, cells[i].u) : cells[i].u;
    u_max = i ? std::max(u_max, cells[i].u) : cells[i].u;
    h_min = i ? std::min(h_min, cells[i].h) : cells[i].h;
    h_max = i ? std::max(h_max, cells[i].h) : cells[i].h;
  }

  // Stretch so a tile is at least kRowPx wide; all coordinates stay integral.
  Int unit = denom_lcm;
  Int tile_w = p.m * unit;
  if (tile_w < kRowPx) {
    Int f = (kRowPx + tile_w - 1) / tile_w;
    unit *= f;
    tile_w = p.m * unit;
  }

  auto xpos = [&](const Rat& u) {
    Rat scaled = (u - u_min) * unit;
    return numerator(scaled);  // exact by choice of unit
  };

  Int width = cells.empty() ? Int(1) : xpos(u_max) + tile_w;
  Int height = cells.empty() ? Int(1) : Int((h_max - h_min + 1) * kRowPx);

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + width.str() + " " +
         height.str() + "\">\n";
  for (const Cell& c : cells) {
    Int x = xpos(c.u);
    Int y = (h_max - c.h) * kRowPx;
    Int x2 = x + tile_w;
    Int y2 = y + kRowPx;
    out += "  <polygon points=\"" + x.str() + "," + y.str() + " " + x2.str() + "," + y.str() +
           " " + x2.str() + "," + y2.str() + " " + x.str() + "," + y2.str() +
           "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    out += "  <text x=\"" + Int(x + tile_w / 2).str() + "\" y=\"" + Int(y + kRowPx / 2).str() +
           "\" font-size=\"10\" text-anchor=\"middle\" dominant-baseline=\"middle\">" +
           std::to_string(c.tile) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace bs::svg
