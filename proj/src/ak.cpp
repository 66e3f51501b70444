#include "bs/ak.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace bs::ak {

using group::CanonicalForm;
using group::GroupParams;
using wang::Label;
using wang::WangTile;

Int balanced(const Rat& x, const Rat& z, const Int& j) {
  return floor_rat((z + j) * x) - floor_rat((z + j - 1) * x);
}

WangTile tile_for_lambda(const GroupParams& p, const Rat& q, const Rat& lambda, const Rat& x) {
  if (p.m < 1 || p.n < 1) throw UsageError("tile formulas require m, n >= 1");
  WangTile t;
  Rat mz = p.m * lambda;
  Rat nz = p.n * lambda;
  Rat qx = q * x;
  for (long long j = 1; j <= p.m; ++j) t.top.push_back(Label::of(Rat(balanced(x, mz, Int(j)))));
  for (long long j = 1; j <= p.n; ++j) t.bottom.push_back(Label::of(Rat(balanced(qx, nz, Int(j)))));
  t.left = Label::of(q / p.m * floor_rat(mz * x) - Rat(1, p.n) * floor_rat(nz * qx));
  t.right =
      Label::of(q / p.m * floor_rat((mz + p.m) * x) - Rat(1, p.n) * floor_rat((nz + p.n) * qx));
  return t;
}

WangTile tile_at(const GroupParams& p, const Rat& q, const CanonicalForm& g, const Rat& x) {
  return tile_for_lambda(p, q, group::lambda_map(g, p), x);
}

LeftBounds left_label_bounds(const GroupParams& p, const Rat& q) {
  if (p.m < 1 || p.n < 1) throw UsageError("bounds require m, n >= 1");
  if (q == 0) throw UsageError("q must be nonzero");
  Int q1 = numerator(q), q2 = denominator(q);
  Int k1 = -p.n * q1, k2 = p.m * q2;
  // For negative q1 the floor defects flip sign; keep the interval valid.
  if (q1 < 0) {
    k1 = 0;
    k2 = p.m * q2 - p.n * q1;
  }
  return {k1, k2, Int(p.m) * p.n * q2};
}

namespace {

// Sampling grid: reduced fractions in [lo, hi] with denominator <= dmax.
std::vector<Rat> rationals_upto(const Rat& lo, const Rat& hi, long long dmax) {
  std::set<Rat> out;
  for (long long den = 1; den <= dmax; ++den) {
    Int first = floor_rat(lo * den);
    if (Rat(first, den) < lo) ++first;
    Int last = floor_rat(hi * den);
    for (Int num = first; num <= last; ++num) out.insert(Rat(num, den));
  }
  return {out.begin(), out.end()};
}

std::vector<Rat> lambdas_in_ball(const GroupParams& p, int radius,
                                 const group::BallOptions& opts) {
  std::set<Rat> out;
  for (const auto& g : group::ball(p, radius, opts)) out.insert(group::lambda_map(g, p));
  return {out.begin(), out.end()};
}

EnumeratedTileset enumerate_exhaustive(const GroupParams& p, const Rat& q, const Rat& lo,
                                       const Rat& hi) {
  // Label ranges: tops are balanced digits of x in [lo, hi], bottoms of qx;
  // left/right run over the proven integer window over m n q2.
  Int tlo = floor_rat(lo), thi = floor_rat(hi) + 1;
  Rat qlo = std::min(q * lo, q * hi), qhi = std::max(q * lo, q * hi);
  Int blo = floor_rat(qlo), bhi = floor_rat(qhi) + 1;
  LeftBounds lb = left_label_bounds(p, q);
  std::vector<Rat> sides;
  for (Int k = lb.k1; k <= lb.k2; ++k) sides.emplace_back(k, lb.denom);

  std::vector<std::vector<Int>> tops{{}};
  for (long long j = 0; j < p.m; ++j) {
    std::vector<std::vector<Int>> next;
    for (const auto& t : tops)
      for (Int v = tlo; v <= thi; ++v) {
        auto copy = t;
        copy.push_back(v);
        next.push_back(std::move(copy));
      }
    tops = std::move(next);
  }
  std::vector<std::vector<Int>> bots{{}};
  for (long long j = 0; j < p.n; ++j) {
    std::vector<std::vector<Int>> next;
    for (const auto& t : bots)
      for (Int v = blo; v <= bhi; ++v) {
        auto copy = t;
        copy.push_back(v);
        next.push_back(std::move(copy));
      }
    bots = std::move(next);
  }

  std::set<WangTile> tiles;
  for (const auto& top : tops) {
    Rat tsum = 0;
    for (const auto& v : top) tsum += Rat(v);
    for (const auto& bot : bots) {
      Rat bsum = 0;
      for (const auto& v : bot) bsum += Rat(v);
      for (const auto& l : sides) {
        // q tsum / m + l = bsum / n + r
        Rat r = q * tsum / p.m + l - bsum / p.n;
        if (r < Rat(lb.k1, lb.denom) || r > Rat(lb.k2, lb.denom)) continue;
        WangTile t;
        for (const auto& v : top) t.top.push_back(Label::of(Rat(v)));
        for (const auto& v : bot) t.bottom.push_back(Label::of(Rat(v)));
        t.left = Label::of(l);
        t.right = Label::of(r);
        tiles.insert(std::move(t));
      }
    }
  }
  return {wang::Tileset(p, {tiles.begin(), tiles.end()}),
          Certificate{EnumerationStrategy::Kind::exhaustive, 0, 0}};
}

}  // namespace

EnumeratedTileset enumerate_tileset(const GroupParams& p, const Rat& q, const Rat& lo,
                                    const Rat& hi, const EnumerationStrategy& strategy) {
  if (lo > hi) throw UsageError("empty interval");
  if (q == 0) throw UsageError("q must be nonzero");
  if (strategy.kind == EnumerationStrategy::Kind::exhaustive)
    return enumerate_exhaustive(p, q, lo, hi);

  std::set<WangTile> tiles;
  int radius = 0;
  long long dmax = 0;
  const long long dstep = 4;
  bool grew = true;
  while (true) {
    int next_radius = radius + 1;
    long long next_dmax = dmax + dstep;
    if (next_radius > strategy.max_radius || next_dmax > strategy.max_denominator) {
      if (grew)
        throw InconclusiveError("tile enumeration still growing at radius " +
                                std::to_string(radius) + ", denominator " + std::to_string(dmax));
      break;
    }
    size_t before = tiles.size();
    for (const Rat& lambda : lambdas_in_ball(p, next_radius, strategy.ball))
      for (const Rat& x : rationals_upto(lo, hi, next_dmax))
        tiles.insert(tile_for_lambda(p, q, lambda, x));
    grew = tiles.size() != before || radius == 0;
    radius = next_radius;
    dmax = next_dmax;
    if (!grew) break;
  }
  return {wang::Tileset(p, {tiles.begin(), tiles.end()}),
          Certificate{EnumerationStrategy::Kind::sampling, radius, dmax}};
}

YsTileset build_ys(const GroupParams& p, const multsys::MultSystem& s,
                   const EnumerationStrategy& strategy) {
  std::vector<WangTile> tiles;
  std::vector<YsConstraint> constraints;
  std::vector<Certificate> certs;
  for (size_t i = 0; i < s.pieces.size(); ++i) {
    const auto& piece = s.pieces[i];
    int color = (int)i + 1;
    Rat lo(piece.interval.a), hi = Rat(piece.interval.a) + 1;
    auto en = enumerate_tileset(p, piece.q, lo, hi, strategy);
    certs.push_back(en.certificate);
    for (auto t : en.tiles.tiles) {
      t.left = Label::paired(t.left.numeric_value(), color);
      t.right = Label::paired(t.right.numeric_value(), color);
      tiles.push_back(std::move(t));
    }
    auto small = [&](const Int& v) {
      return v.convert_to<long long>();
    };
    constraints.push_back({color, small(piece.interval.e1), small(piece.interval.d1),
                           Label::of(Rat(piece.interval.a) + 1)});
    constraints.push_back({color, small(piece.interval.e2), small(piece.interval.d2),
                           Label::of(Rat(piece.interval.a))});
  }
  return {wang::Tileset(p, std::move(tiles)), std::move(constraints), std::move(certs)};
}

OrbitBranch::OrbitBranch(const multsys::MultSystem& s, int lo_, int hi_, std::vector<int> idx,
                         std::vector<Rat> vals)
    : lo(lo_), hi(hi_), indices(std::move(idx)), values(std::move(vals)) {
  if (hi < lo) throw UsageError("branch window is empty");
  if ((long long)values.size() != (long long)(hi - lo + 1) ||
      (long long)indices.size() != (long long)(hi - lo))
    throw UsageError("branch arrays do not match the window");
  for (long long k = lo; k <= hi; ++k) {
    if (!s.in_domain(value_at(k)))
      throw UsageError("branch value at " + std::to_string(k) + " escapes the domains");
    if (k < hi) {
      int i = index_at(k);
      if (i < 1 || i > (int)s.pieces.size()) throw UsageError("branch index out of range");
      const auto& piece = s.pieces[i - 1];
      if (!piece.interval.contains(value_at(k)))
        throw UsageError("branch value at " + std::to_string(k) + " not in piece domain");
      if (value_at(k + 1) != piece.q * value_at(k))
        throw UsageError("branch violates x_{k+1} = q x_k at " + std::to_string(k));
    }
  }
}

int OrbitBranch::index_at(long long k) const {
  if (k < lo || k >= hi) throw UsageError("branch index " + std::to_string(k) + " out of window");
  return indices[(size_t)(k - lo)];
}

const Rat& OrbitBranch::value_at(long long k) const {
  if (k < lo || k > hi) throw UsageError("branch value " + std::to_string(k) + " out of window");
  return values[(size_t)(k - lo)];
}

OrbitBranch orbit_for_s0(const Rat& x0, int horizon) {
  if (horizon < 0) throw UsageError("horizon must be nonnegative");
  if (x0 < Rat(1, 3) || x0 > 2) throw UsageError("x0 outside [1/3, 2]");
  auto forward = [](const Rat& x) -> std::pair<int, Rat> {
    if (x <= 1) return {1, 2 * x};  // doubling piece, f(1) stored as 2
    return {2, x / 3};
  };
  auto backward = [](const Rat& x) -> std::pair<int, Rat> {
    if (x == Rat(2, 3)) return {1, Rat(1, 3)};  // prefer the doubling preimage
    if (x > Rat(2, 3)) return {1, x / 2};
    return {2, 3 * x};
  };
  std::vector<int> idx;
  std::vector<Rat> vals{x0};
  Rat cur = x0;
  for (int k = 0; k < horizon; ++k) {
    auto [i, next] = forward(cur);
    idx.push_back(i);
    vals.push_back(next);
    cur = next;
  }
  cur = x0;
  for (int k = 0; k < horizon; ++k) {
    auto [i, prev] = backward(cur);
    idx.insert(idx.begin(), i);
    vals.insert(vals.begin(), prev);
    cur = prev;
  }
  return OrbitBranch(multsys::s0(), -horizon, horizon, std::move(idx), std::move(vals));
}

namespace {

WangTile orbit_tile(const GroupParams& p, const multsys::MultSystem& s, const OrbitBranch& br,
                    const CanonicalForm& g) {
  long long k = -g.height();
  if (k < br.lo || k >= br.hi)
    throw UsageError("branch window misses height " + std::to_string(-k));
  int color = br.index_at(k);
  const Rat& q = s.pieces[(size_t)color - 1].q;
  WangTile t = tile_at(p, q, g, br.value_at(k));
  t.left = Label::paired(t.left.numeric_value(), color);
  t.right = Label::paired(t.right.numeric_value(), color);
  return t;
}

}  // namespace

wang::Patch orbit_configuration(const GroupParams& p, const multsys::MultSystem& s,
                                const OrbitBranch& branch, int radius,
                                const group::BallOptions& opts) {
  std::vector<WangTile> tiles;
  std::map<WangTile, size_t> indices;
  std::map<CanonicalForm, size_t> cells;
  for (const auto& g : group::ball(p, radius, opts)) {
    WangTile t = orbit_tile(p, s, branch, g);
    auto [it, fresh] = indices.try_emplace(t, tiles.size());
    if (fresh) tiles.push_back(t);
    cells.emplace(g, it->second);
  }
  auto ts = std::make_shared<wang::Tileset>(p, std::move(tiles));
  return wang::Patch(std::move(ts), std::move(cells));
}

WindowReport check_window_constraints(const wang::Patch& patch, const multsys::MultSystem& s) {
  const auto& p = patch.params();
  std::vector<YsConstraint> constraints;
  for (size_t i = 0; i < s.pieces.size(); ++i) {
    const auto& in = s.pieces[i].interval;
    constraints.push_back({(int)i + 1, in.e1.convert_to<long long>(),
                           in.d1.convert_to<long long>(), Label::of(Rat(in.a) + 1)});
    constraints.push_back({(int)i + 1, in.e2.convert_to<long long>(),
                           in.d2.convert_to<long long>(), Label::of(Rat(in.a))});
  }
  WindowReport report;
  for (const auto& [g, idx] : patch.cells) {
    // Runs start where the left neighbor is absent.
    CanonicalForm left = g;
    group::append(left, 'a', Int(-p.m), p);
    if (patch.cells.count(left)) continue;
    std::vector<Label> word;
    CanonicalForm cur = g;
    for (auto it = patch.cells.find(cur); it != patch.cells.end();
         it = patch.cells.find(cur)) {
      const WangTile& t = patch.tileset->tiles[it->second];
      word.insert(word.end(), t.top.begin(), t.top.end());
      group::append(cur, 'a', Int(p.m), p);
    }
    const Label& first = patch.tile_at(g).left;
    if (first.kind != wang::LabelKind::paired) continue;
    for (const auto& c : constraints) {
      if (c.color != first.color) continue;
      if ((long long)word.size() < c.e) continue;
      long long count = 0;
      for (long long i = 0; i < (long long)word.size(); ++i) {
        if (word[i] == c.target) ++count;
        if (i >= c.e && word[i - c.e] == c.target) --count;
        if (i >= c.e - 1 && count < c.d) {
          report.ok = false;
          report.failures.push_back({g, c.color, i - c.e + 2});
        }
      }
    }
  }
  return report;
}

bool weak_period_check(const GroupParams& p, const multsys::MultSystem& s,
                       const OrbitBranch& branch, const group::GroupWord& period, int radius,
                       const group::BallOptions& opts) {
  CanonicalForm per = group::canonical_form(period, p);
  for (const auto& g : group::ball(p, radius, opts)) {
    CanonicalForm shifted = group::mul(per, g, p);
    if (!(orbit_tile(p, s, branch, shifted) == orbit_tile(p, s, branch, g))) return false;
  }
  return true;
}

}  // namespace bs::ak
