#include "bs/ak.hpp"

#include "doctest.h"

#include <memory>
#include <random>
#include <set>

using namespace bs;
using group::GroupParams;
using wang::Label;
using wang::WangTile;

namespace {

group::CanonicalForm cf(const std::string& w, const GroupParams& p) {
  return group::canonical_form(group::parse_word(w), p);
}

// Independent sampler for the tile count: a flat lambda grid instead of the
// ball-driven rounds the library uses.
std::set<WangTile> grid_tiles(const GroupParams& p, const Rat& q, const Rat& lo, const Rat& hi,
                              long long lam_den, long long lam_span, long long xden) {
  std::set<WangTile> tiles;
  std::set<Rat> xs;
  for (long long d = 1; d <= xden; ++d) {
    Int first = floor_rat(lo * d);
    if (Rat(first, d) < lo) ++first;
    Int last = floor_rat(hi * d);
    for (Int num = first; num <= last; ++num) xs.insert(Rat(num, d));
  }
  for (long long i = -lam_den * lam_span; i <= lam_den * lam_span; ++i) {
    Rat lambda(i, lam_den);
    for (const Rat& x : xs) tiles.insert(ak::tile_for_lambda(p, q, lambda, x));
  }
  return tiles;
}

Rat random_rat(std::mt19937_64& rng, long long dmax, long long lo_num, long long hi_num) {
  long long den = 1 + (long long)(rng() % dmax);
  long long span = hi_num * den - lo_num * den + 1;
  long long num = lo_num * den + (long long)(rng() % (unsigned long long)span);
  return Rat(num, den);
}

}  // namespace

TEST_CASE("balanced digits") {
  CHECK(ak::balanced(Rat(1, 2), Rat(0), Int(1)) == 0);
  CHECK(ak::balanced(Rat(1, 2), Rat(0), Int(2)) == 1);
  CHECK(ak::balanced(Rat(5, 3), Rat(0), Int(1)) == 1);
  CHECK(ak::balanced(Rat(5, 3), Rat(0), Int(2)) == 2);
  CHECK(ak::balanced(Rat(5, 3), Rat(0), Int(3)) == 2);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    Rat x = random_rat(rng, 40, 0, 3);
    Rat z = random_rat(rng, 40, -4, 4);
    Int fl = floor_rat(x);
    Int d = ak::balanced(x, z, Int(1 + (long long)(rng() % 10)));
    CHECK((d == fl || d == fl + 1));
  }
}

TEST_CASE("balanced windows average to x") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    Rat x = random_rat(rng, 30, 0, 3);
    Rat z = random_rat(rng, 30, -4, 4);
    long long N = 1 + (long long)(rng() % 200);
    Rat sum = 0;
    for (long long j = 1; j <= N; ++j) sum += Rat(ak::balanced(x, z, Int(j)));
    Rat avg = sum / N;
    Rat err = avg > x ? avg - x : x - avg;
    CHECK(err <= Rat(1, N));
    // telescoping exactly
    CHECK(sum == Rat(floor_rat((z + N) * x) - floor_rat(z * x)));
  }
}

TEST_CASE("tile formulas at the identity") {
  GroupParams p(2, 3);
  WangTile t = ak::tile_at(p, Rat(2), cf("e", p), Rat(1, 2));
  REQUIRE(t.top.size() == 2);
  REQUIRE(t.bottom.size() == 3);
  CHECK(t.top[0] == Label::of(Rat(0)));
  CHECK(t.top[1] == Label::of(Rat(1)));
  CHECK(t.bottom[0] == Label::of(Rat(1)));
  CHECK(t.bottom[1] == Label::of(Rat(1)));
  CHECK(t.bottom[2] == Label::of(Rat(1)));
  CHECK(t.left == Label::of(Rat(0)));
  CHECK(t.right == Label::of(Rat(0)));
}

TEST_CASE("tiles satisfy the multiplier equation") {
  GroupParams p(2, 3);
  std::mt19937_64 rng(9);
  for (const Rat& q : {Rat(2), Rat(1, 3), Rat(3, 2)}) {
    for (int trial = 0; trial < 300; ++trial) {
      Rat lambda(((long long)(rng() % 2000)) - 1000, 162);
      Rat x = random_rat(rng, 12, 0, 2);
      WangTile t = ak::tile_for_lambda(p, q, lambda, x);
      Rat tops = 0, bots = 0;
      for (const auto& l : t.top) tops += l.numeric_value();
      for (const auto& l : t.bottom) bots += l.numeric_value();
      CHECK(q * tops / p.m + t.left.numeric_value() == bots / p.n + t.right.numeric_value());
    }
  }
}

TEST_CASE("side and digit identities across neighbors") {
  GroupParams p(2, 3);
  Rat q(2);
  std::mt19937_64 rng(17);
  auto cells = group::ball(p, 3);
  for (int trial = 0; trial < 500; ++trial) {
    const auto& g = cells[rng() % cells.size()];
    Rat x = random_rat(rng, 16, 0, 1);
    if (x == 0) continue;

    // right label of g equals left label of g a^m
    group::CanonicalForm right = g;
    group::append(right, 'a', Int(p.m), p);
    CHECK(ak::tile_at(p, q, g, x).right == ak::tile_at(p, q, right, x).left);

    // bottom_l of the upper cell g a^(j-l) b at x matches top_j of g at qx
    WangTile lower = ak::tile_at(p, q, g, q * x);
    for (int j = 1; j <= p.m; ++j)
      for (int l = 1; l <= p.n; ++l) {
        group::CanonicalForm up = g;
        group::append(up, 'a', Int(j - l), p);
        group::append(up, 'b', Int(1), p);
        WangTile upper = ak::tile_at(p, q, up, x);
        CHECK(upper.bottom[l - 1] == lower.top[j - 1]);
      }
  }
}

TEST_CASE("left label bounds") {
  GroupParams p(2, 3);
  auto b2 = ak::left_label_bounds(p, Rat(2));
  CHECK(b2.k1 == -6);
  CHECK(b2.k2 == 2);
  CHECK(b2.denom == 6);
  auto b13 = ak::left_label_bounds(p, Rat(1, 3));
  CHECK(b13.k1 == -3);
  CHECK(b13.k2 == 6);
  CHECK(b13.denom == 18);
  auto bneg = ak::left_label_bounds(p, Rat(-1, 2));
  CHECK(bneg.k1 == 0);
  CHECK(bneg.k2 == 7);
  CHECK(bneg.denom == 12);
  CHECK_THROWS_AS(ak::left_label_bounds(p, Rat(0)), UsageError);

  // all enumerated side labels are integers over denom inside [k1, k2]
  for (auto [q, lo, hi] : {std::tuple{Rat(2), Rat(1, 3), Rat(1)}, {Rat(1, 3), Rat(1), Rat(2)}}) {
    auto lb = ak::left_label_bounds(p, q);
    auto en = ak::enumerate_tileset(p, q, lo, hi);
    for (const auto& t : en.tiles.tiles)
      for (const Label* side : {&t.left, &t.right}) {
        Rat scaled = side->numeric_value() * Rat(lb.denom);
        CHECK(denominator(scaled) == 1);
        CHECK(numerator(scaled) >= lb.k1);
        CHECK(numerator(scaled) <= lb.k2);
      }
  }
}

TEST_CASE("tile enumeration stabilizes") {
  GroupParams p(2, 3);

  auto en2 = ak::enumerate_tileset(p, Rat(2), Rat(1, 3), Rat(1));
  CHECK(en2.tiles.tiles.size() == 35);
  CHECK(en2.certificate.kind == ak::EnumerationStrategy::Kind::sampling);
  CHECK(en2.certificate.radius == 4);
  CHECK(en2.certificate.denominator == 16);
  CHECK(wang::check_multiplies(en2.tiles, Rat(2)));

  auto en13 = ak::enumerate_tileset(p, Rat(1, 3), Rat(1), Rat(2));
  CHECK(en13.tiles.tiles.size() == 12);
  CHECK(wang::check_multiplies(en13.tiles, Rat(1, 3)));

  // flat-grid oracle reproduces both tile sets exactly
  auto g2 = grid_tiles(p, Rat(2), Rat(1, 3), Rat(1), 54, 4, 16);
  CHECK(g2 == std::set<WangTile>(en2.tiles.tiles.begin(), en2.tiles.tiles.end()));
  auto g13 = grid_tiles(p, Rat(1, 3), Rat(1), Rat(2), 54, 4, 16);
  CHECK(g13 == std::set<WangTile>(en13.tiles.tiles.begin(), en13.tiles.tiles.end()));

  // the label-equation closure contains the realized tiles
  ak::EnumerationStrategy ex;
  ex.kind = ak::EnumerationStrategy::Kind::exhaustive;
  auto exh = ak::enumerate_tileset(p, Rat(2), Rat(1, 3), Rat(1), ex);
  CHECK(exh.certificate.kind == ak::EnumerationStrategy::Kind::exhaustive);
  CHECK(wang::check_multiplies(exh.tiles, Rat(2)));
  std::set<WangTile> closure(exh.tiles.tiles.begin(), exh.tiles.tiles.end());
  for (const auto& t : en2.tiles.tiles) CHECK(closure.count(t) == 1);

  // caps too tight to certify anything
  ak::EnumerationStrategy tight;
  tight.max_radius = 1;
  tight.max_denominator = 4;
  CHECK_THROWS_AS(ak::enumerate_tileset(p, Rat(2), Rat(1, 3), Rat(1), tight), InconclusiveError);
}

TEST_CASE("system tileset with window constraints") {
  GroupParams p(2, 3);
  auto ys = ak::build_ys(p, multsys::s0());
  CHECK(ys.tiles.tiles.size() == 60);
  REQUIRE(ys.certificates.size() == 2);

  // left/right labels carry the piece color, tops and bottoms stay plain
  for (const auto& t : ys.tiles.tiles) {
    CHECK(t.left.kind == wang::LabelKind::paired);
    CHECK(t.right.kind == wang::LabelKind::paired);
    CHECK(t.left.color == t.right.color);
    for (const auto& l : t.top) CHECK(l.kind == wang::LabelKind::rational);
  }

  // per-color subsets still multiply by their piece slopes
  for (int color = 1; color <= 2; ++color) {
    std::vector<WangTile> sub;
    for (auto t : ys.tiles.tiles)
      if (t.left.color == color) sub.push_back(std::move(t));
    CHECK_FALSE(sub.empty());
    Rat q = multsys::s0().pieces[color - 1].q;
    CHECK(wang::check_multiplies(wang::Tileset(p, std::move(sub)), q));
  }

  REQUIRE(ys.constraints.size() == 4);
  CHECK(ys.constraints[0].color == 1);
  CHECK(ys.constraints[0].e == 3);
  CHECK(ys.constraints[0].d == 1);
  CHECK(ys.constraints[0].target == Label::of(Rat(1)));
  CHECK(ys.constraints[1].color == 1);
  CHECK(ys.constraints[1].e == 1);
  CHECK(ys.constraints[1].d == 0);
  CHECK(ys.constraints[1].target == Label::of(Rat(0)));
  CHECK(ys.constraints[2].color == 2);
  CHECK(ys.constraints[2].target == Label::of(Rat(2)));
  CHECK(ys.constraints[3].color == 2);
  CHECK(ys.constraints[3].target == Label::of(Rat(1)));
}

TEST_CASE("orbit branches") {
  auto br = ak::orbit_for_s0(Rat(1, 2), 2);
  CHECK(br.lo == -2);
  CHECK(br.hi == 2);
  CHECK(br.value_at(-2) == Rat(3, 4));
  CHECK(br.value_at(-1) == Rat(3, 2));
  CHECK(br.value_at(0) == Rat(1, 2));
  CHECK(br.value_at(1) == 1);
  CHECK(br.value_at(2) == 2);
  CHECK(br.index_at(-2) == 1);
  CHECK(br.index_at(-1) == 2);
  CHECK(br.index_at(0) == 1);
  CHECK(br.index_at(1) == 1);
  CHECK_THROWS_AS((void)br.index_at(2), UsageError);
  CHECK_THROWS_AS((void)br.value_at(3), UsageError);

  // the endpoint chains through the identified class
  auto ep = ak::orbit_for_s0(Rat(1, 3), 2);
  CHECK(ep.value_at(-1) == 1);
  CHECK(ep.value_at(1) == Rat(2, 3));
  CHECK(ep.value_at(2) == Rat(4, 3));

  CHECK_THROWS_AS(ak::orbit_for_s0(Rat(1, 4), 2), UsageError);

  // hand-rolled branches are validated
  auto s = multsys::s0();
  CHECK_THROWS_AS(ak::OrbitBranch(s, 0, 1, {1}, {Rat(1, 2)}), UsageError);  // size mismatch
  CHECK_THROWS_AS(ak::OrbitBranch(s, 0, 1, {3}, {Rat(1, 2), Rat(1)}), UsageError);
  CHECK_THROWS_AS(ak::OrbitBranch(s, 0, 1, {1}, {Rat(1, 2), Rat(2)}), UsageError);  // not q*x
  CHECK_THROWS_AS(ak::OrbitBranch(s, 0, 1, {2}, {Rat(1, 2), Rat(1, 6)}), UsageError);
  CHECK_NOTHROW(ak::OrbitBranch(s, 0, 1, {1}, {Rat(1, 2), Rat(1)}));
}

TEST_CASE("orbit configurations tile without violations") {
  GroupParams p(2, 3);
  auto s = multsys::s0();
  auto br = ak::orbit_for_s0(Rat(1, 2), 4);
  auto patch = ak::orbit_configuration(p, s, br, 3);
  CHECK(patch.cells.size() == 53);
  CHECK(patch.tileset->tiles.size() == 20);
  CHECK(wang::verify_patch(patch).empty());
  CHECK(ak::check_window_constraints(patch, s).ok);

  auto br4 = ak::orbit_for_s0(Rat(1, 2), 5);
  auto patch4 = ak::orbit_configuration(p, s, br4, 4);
  CHECK(patch4.cells.size() == 147);
  CHECK(patch4.tileset->tiles.size() == 32);
  CHECK(wang::verify_patch(patch4).empty());
  CHECK(ak::check_window_constraints(patch4, s).ok);

  // a branch too short for the radius is rejected
  CHECK_THROWS_AS(ak::orbit_configuration(p, s, br, 5), UsageError);
}

TEST_CASE("window constraint failures are located") {
  GroupParams p(2, 3);
  // tops all zero on the doubling color: every window of 3 misses its 1
  WangTile t;
  t.top = {Label::of(Rat(0)), Label::of(Rat(0))};
  t.bottom = {Label::of(Rat(0)), Label::of(Rat(0)), Label::of(Rat(0))};
  t.left = Label::paired(Rat(0), 1);
  t.right = Label::paired(Rat(0), 1);
  auto ts = std::make_shared<wang::Tileset>(p, std::vector<WangTile>{t});
  std::map<group::CanonicalForm, std::size_t> cells;
  cells[cf("e", p)] = 0;
  cells[cf("a^2", p)] = 0;
  cells[cf("a^4", p)] = 0;
  auto report = ak::check_window_constraints(wang::Patch(ts, cells), multsys::s0());
  CHECK_FALSE(report.ok);
  REQUIRE(report.failures.size() == 4);  // windows at positions 1..4 of the 6 tops
  CHECK(report.failures[0].run_start == cf("e", p));
  CHECK(report.failures[0].color == 1);
  CHECK(report.failures[0].window_start == 1);
  CHECK(report.failures[3].window_start == 4);
}

TEST_CASE("weak period fixes orbit tilings") {
  GroupParams p(2, 3);
  auto s = multsys::s0();
  auto br = ak::orbit_for_s0(Rat(1, 2), 4);
  CHECK(ak::weak_period_check(p, s, br, group::parse_word("baBabABA"), 3));
  CHECK_FALSE(ak::weak_period_check(p, s, br, group::parse_word("a"), 3));
  CHECK_FALSE(ak::weak_period_check(p, s, br, group::parse_word("b"), 3));

  auto br2 = ak::orbit_for_s0(Rat(5, 7), 4);
  CHECK(ak::weak_period_check(p, s, br2, group::parse_word("baBabABA"), 3));
}
