#pragma once

#include "bs/group.hpp"
#include "bs/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

// Wang tiles over the Cayley graph of BS(m,n). A tile carries m top labels,
// one left and one right label, and n bottom labels. Matching rules:
//   horizontal: T_g(right) = T_{g a^m}(left)
//   vertical:   T_g(top_k) = T_{g a^(k-l) b}(bottom_l), 1<=k<=m, 1<=l<=n,
// quantified here over the lower tile g.
namespace bs::wang {

enum class LabelKind { rational, color, paired };

struct Label {
  LabelKind kind = LabelKind::rational;
  Rat value;      // rational, paired
  int color = 0;  // color, paired

  static Label of(Rat v) { return {LabelKind::rational, std::move(v), 0}; }
  static Label of_color(int c) { return {LabelKind::color, Rat(0), c}; }
  static Label paired(Rat v, int c) { return {LabelKind::paired, std::move(v), c}; }

  bool numeric() const { return kind != LabelKind::color; }
  // Rational component; colors have none.
  const Rat& numeric_value() const;
  std::string str() const;

  bool operator==(const Label& o) const {
    return kind == o.kind && value == o.value && color == o.color;
  }
  bool operator<(const Label& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (value != o.value) return value < o.value;
    return color < o.color;
  }
};

struct WangTile {
  std::vector<Label> top;     // size m
  Label left;
  Label right;
  std::vector<Label> bottom;  // size n

  bool operator==(const WangTile& o) const {
    return top == o.top && left == o.left && right == o.right && bottom == o.bottom;
  }
  bool operator<(const WangTile& o) const;
};

struct Tileset {
  group::GroupParams params;
  std::vector<WangTile> tiles;

  // Validates side arities against params and rejects duplicates.
  Tileset(group::GroupParams p, std::vector<WangTile> ts);
};

struct Patch {
  std::shared_ptr<const Tileset> tileset;
  std::map<group::CanonicalForm, std::size_t> cells;

  Patch(std::shared_ptr<const Tileset> ts, std::map<group::CanonicalForm, std::size_t> cs);
  const group::GroupParams& params() const { return tileset->params; }
  const WangTile& tile_at(const group::CanonicalForm& g) const;
};

struct Violation {
  enum class Rule { horizontal, vertical };
  group::CanonicalForm site;  // left resp. lower cell
  Rule rule;
  int k = 0;  // top index, vertical only
  int l = 0;  // bottom index, vertical only
  group::CanonicalForm neighbor;
  Label expected;
  Label actual;

  bool operator==(const Violation& o) const = default;
};

// Checks every adjacency between two present cells; absent neighbors are
// skipped. Result order follows the cell map, so it is deterministic.
std::vector<Violation> verify_patch(const Patch& patch);

// q (t_1+...+t_m)/m + left = (b_1+...+b_n)/n + right for every tile.
// Throws UsageError if a label has no rational component.
bool check_multiplies(const Tileset& ts, const Rat& q);

enum class Side { top, bottom };

// Side labels of the tile row through base along its level, positions
// lo..hi, 1-based: position j of the top side lives on tile base a^(m i)
// with i = floor((j-1)/m); the bottom side packs n labels per tile.
// Missing cells raise GapError listing the absent positions.
struct GapError : Error {
  std::vector<long long> missing;
  explicit GapError(std::string msg, std::vector<long long> miss)
      : Error(std::move(msg)), missing(std::move(miss)) {}
};
std::vector<Label> line_word(const Patch& patch, const group::CanonicalForm& base, Side side,
                             long long lo, long long hi);

// Every window of e consecutive labels contains at least d copies of target.
bool window_check(std::span<const Label> word, long long e, long long d, const Label& target);

}  // namespace bs::wang
