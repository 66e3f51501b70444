#include "bs/wang.hpp"

#include <algorithm>
#include <set>

namespace bs::wang {

const Rat& Label::numeric_value() const {
  if (kind == LabelKind::color)
    throw UsageError("label '" + str() + "' has no rational component");
  return value;
}

std::string Label::str() const {
  switch (kind) {
    case LabelKind::rational: return rat_str(value);
    case LabelKind::color: return "c" + std::to_string(color);
    default: return rat_str(value) + "#c" + std::to_string(color);
  }
}

bool WangTile::operator<(const WangTile& o) const {
  if (top != o.top) return top < o.top;
  if (!(left == o.left)) return left < o.left;
  if (!(right == o.right)) return right < o.right;
  return bottom < o.bottom;
}

Tileset::Tileset(group::GroupParams p, std::vector<WangTile> ts)
    : params(p), tiles(std::move(ts)) {
  if (params.m < 1 || params.n < 1)
    throw UsageError("tilesets require m >= 1 and n >= 1");
  std::set<WangTile> seen;
  for (const auto& t : tiles) {
    if ((long long)t.top.size() != params.m || (long long)t.bottom.size() != params.n)
      throw UsageError("tile arity does not match group parameters");
    if (!seen.insert(t).second) throw UsageError("duplicate tile in tileset");
  }
}

Patch::Patch(std::shared_ptr<const Tileset> ts, std::map<group::CanonicalForm, std::size_t> cs)
    : tileset(std::move(ts)), cells(std::move(cs)) {
  if (!tileset) throw UsageError("patch requires a tileset");
  if (tileset->tiles.empty()) throw UsageError("patch over an empty tileset");
  for (const auto& [g, idx] : cells)
    if (idx >= tileset->tiles.size()) throw UsageError("tile index out of range");
}

const WangTile& Patch::tile_at(const group::CanonicalForm& g) const {
  auto it = cells.find(g);
  if (it == cells.end()) throw UsageError("cell " + g.str() + " not in patch");
  return tileset->tiles[it->second];
}

std::vector<Violation> verify_patch(const Patch& patch) {
  const auto& p = patch.params();
  std::vector<Violation> out;
  for (const auto& [g, idx] : patch.cells) {
    const WangTile& tile = patch.tileset->tiles[idx];
    {
      group::CanonicalForm right = g;
      group::append(right, 'a', Int(p.m), p);
      auto it = patch.cells.find(right);
      if (it != patch.cells.end()) {
        const WangTile& rt = patch.tileset->tiles[it->second];
        if (!(tile.right == rt.left))
          out.push_back({g, Violation::Rule::horizontal, 0, 0, right, tile.right, rt.left});
      }
    }
    for (int k = 1; k <= p.m; ++k) {
      for (int l = 1; l <= p.n; ++l) {
        group::CanonicalForm up = g;
        group::append(up, 'a', Int(k - l), p);
        group::append(up, 'b', Int(1), p);
        auto it = patch.cells.find(up);
        if (it == patch.cells.end()) continue;
        const WangTile& ut = patch.tileset->tiles[it->second];
        if (!(tile.top[k - 1] == ut.bottom[l - 1]))
          out.push_back({g, Violation::Rule::vertical, k, l, up, tile.top[k - 1],
                         ut.bottom[l - 1]});
      }
    }
  }
  return out;
}

bool check_multiplies(const Tileset& ts, const Rat& q) {
  for (const auto& t : ts.tiles) {
    Rat tops = 0, bots = 0;
    for (const auto& l : t.top) tops += l.numeric_value();
    for (const auto& l : t.bottom) bots += l.numeric_value();
    Rat lhs = q * tops / ts.params.m + t.left.numeric_value();
    Rat rhs = bots / ts.params.n + t.right.numeric_value();
    if (lhs != rhs) return false;
  }
  return true;
}

std::vector<Label> line_word(const Patch& patch, const group::CanonicalForm& base, Side side,
                             long long lo, long long hi) {
  if (lo > hi) throw UsageError("empty position range");
  const auto& p = patch.params();
  long long span = side == Side::top ? p.m : p.n;
  std::vector<Label> out;
  std::vector<long long> missing;
  for (long long pos = lo; pos <= hi; ++pos) {
    Int block = floor_div(Int(pos - 1), Int(span));
    long long k = pos - (block * span).convert_to<long long>();  // 1-based within tile
    group::CanonicalForm cell = base;
    group::append(cell, 'a', block * p.m, p);
    auto it = patch.cells.find(cell);
    if (it == patch.cells.end()) {
      missing.push_back(pos);
      continue;
    }
    const WangTile& t = patch.tileset->tiles[it->second];
    out.push_back(side == Side::top ? t.top[k - 1] : t.bottom[k - 1]);
  }
  if (!missing.empty()) {
    std::string msg = "line has gaps at positions";
    for (long long pos : missing) msg += " " + std::to_string(pos);
    throw GapError(msg, missing);
  }
  return out;
}

bool window_check(std::span<const Label> word, long long e, long long d, const Label& target) {
  if (e < 1) throw UsageError("window length must be positive");
  if ((long long)word.size() < e) throw UsageError("word shorter than window");
  long long count = 0;
  for (long long i = 0; i < (long long)word.size(); ++i) {
    if (word[i] == target) ++count;
    if (i >= e && word[i - e] == target) --count;
    if (i >= e - 1 && count < d) return false;
  }
  return true;
}

}  // namespace bs::wang
