#include "bs/subst_tiles.hpp"

#include <map>
#include <memory>

namespace bs::subst_tiles {

using group::QuasiNormalForm;
using wang::Label;
using wang::WangTile;

WangTile sigma_tile(int n, uint8_t c, int i) {
  if (c > 1) throw UsageError("letters are 0 or 1");
  if (i < 0 || i >= n) throw UsageError("sigma index out of range");
  WangTile t;
  t.top = {Label::of(Rat(c))};
  t.left = t.right = Label::of_color(i);
  subst::UniformSubstitution s = subst::sigma(n, i);
  for (uint8_t l : s.image(c)) t.bottom.push_back(Label::of(Rat(l)));
  return t;
}

wang::Tileset tau_sigma(int n) {
  std::vector<WangTile> tiles;
  for (int i = 0; i < n; ++i)
    for (uint8_t c = 0; c <= 1; ++c) tiles.push_back(sigma_tile(n, c, i));
  return wang::Tileset(group::GroupParams(1, n), std::move(tiles));
}

Int level_down(const Int& k, long long n) { return floor_div(k + 1, Int(n)); }

int level_index(const Int& k, long long n) {
  Int r = (k + 1) % n;
  if (r < 0) r += n;
  return r.convert_to<int>();
}

FixpointTable::FixpointTable(int n)
    : n_(n),
      step_(n == 2 ? subst::compose(subst::sigma(2, 1), subst::sigma(2, 1))
                   : subst::sigma(n, 1)),
      even_(n == 2 ? subst::fixpoint2_windows(1).first : subst::fixpoint_window(n, 1)),
      odd_(n == 2 ? subst::fixpoint2_windows(1).second : subst::PointedWord{}) {
  if (n < 2) throw UsageError("fixpoint table needs n >= 2");
}

void FixpointTable::grow(const Int& pos, subst::PointedWord& w) {
  const long long cap = 64'000'000;
  while (pos < w.min_pos() || pos > w.max_pos()) {
    if (w.size() * step_.n > cap)
      throw LimitError("fixpoint window would exceed " + std::to_string(cap) + " letters");
    w = subst::apply_pointed(step_, w);
  }
}

uint8_t FixpointTable::letter(const Int& pos, int parity) {
  subst::PointedWord& w = (n_ == 2 && (parity % 2 + 2) % 2 == 1) ? odd_ : even_;
  grow(pos, w);
  return w.at(pos.convert_to<long long>());
}

ExplicitTile explicit_tile(int n, const QuasiNormalForm& q, FixpointTable& table) {
  if (q.k < 0 || q.m < 0) throw UsageError("quasi-normal exponents must be nonnegative");
  Int pos = q.l;
  int index = 1;
  for (long long step = 0; step < q.m; ++step) {
    if (step == q.m - 1) index = level_index(pos, n);
    pos = level_down(pos, n);
  }
  int parity = (int)((q.k + q.m) % 2);
  return {table.letter(pos, parity), index};
}

wang::Patch explicit_patch(int n, int radius, const group::BallOptions& opts) {
  group::GroupParams p(1, n);
  auto ts = std::make_shared<wang::Tileset>(tau_sigma(n));
  FixpointTable table(n);
  std::map<group::CanonicalForm, std::size_t> cells;
  for (const auto& g : group::ball(p, radius, opts)) {
    auto qn = group::quasi_normal_form_1n(g.word(), n);
    ExplicitTile t = explicit_tile(n, qn, table);
    cells.emplace(g, (std::size_t)(2 * t.index + t.letter));
  }
  return wang::Patch(std::move(ts), std::move(cells));
}

bool b_periodicity_check(int n, int period, int radius, const group::BallOptions& opts) {
  if (period < 1) throw UsageError("period must be positive");
  group::GroupParams p(1, n);
  FixpointTable table(n);
  group::GroupWord shift;
  shift.push('b', period);
  for (const auto& g : group::ball(p, radius, opts)) {
    auto base = group::quasi_normal_form_1n(g.word(), n);
    auto moved = group::quasi_normal_form_1n(group::concat(shift, g.word()), n);
    if (!(explicit_tile(n, base, table) == explicit_tile(n, moved, table))) return false;
  }
  return true;
}

std::vector<PeriodWitness> a_period_falsification(int n, long long k_max, int levels,
                                                  long long window) {
  if (k_max < 1 || levels < 1 || window < 2) throw UsageError("bounds must be positive");
  FixpointTable table(n);
  std::vector<PeriodWitness> out;
  for (int level = 0; level < levels; ++level) {
    for (long long period = 1; period <= k_max; ++period) {
      bool found = false;
      for (long long i = -window; i + period <= window; ++i) {
        if (table.letter(Int(i), level) != table.letter(Int(i + period), level)) {
          out.push_back({period, level, i});
          found = true;
          break;
        }
      }
      if (!found)
        throw InconclusiveError("no witness against period " + std::to_string(period) +
                                " within the window");
    }
  }
  return out;
}

}  // namespace bs::subst_tiles
