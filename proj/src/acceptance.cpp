#include "bs/acceptance.hpp"

#include <chrono>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bs/ak.hpp"
#include "bs/bsnn.hpp"
#include "bs/group.hpp"
#include "bs/multsys.hpp"
#include "bs/subst.hpp"
#include "bs/subst_tiles.hpp"
#include "bs/wang.hpp"

namespace bs::acceptance {

namespace {

// Collects checks; keeps the first failure as the reported detail.
struct Gate {
  bool ok = true;
  long long checks = 0;
  std::string failure;

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond && ok) {
      ok = false;
      failure = what;
    }
  }
};

group::GroupWord random_word(std::mt19937_64& rng, int len) {
  group::GroupWord w;
  for (int i = 0; i < len; ++i) {
    switch (rng() % 4) {
      case 0: w.push('a', 1); break;
      case 1: w.push('a', -1); break;
      case 2: w.push('b', 1); break;
      default: w.push('b', -1); break;
    }
  }
  return w;
}

group::GroupWord with_relator(const group::GroupWord& w, std::mt19937_64& rng,
                              const group::GroupParams& p) {
  group::GroupWord flat;
  for (const auto& l : w.letters) {
    long long step = l.exp < 0 ? -1 : 1;
    for (long long i = 0; i != l.exp; i += step) flat.letters.push_back({l.gen, step});
  }
  group::GroupWord rel;
  rel.push('b', 1);
  rel.push('a', p.m);
  rel.push('b', -1);
  rel.push('a', -p.n);
  if (rng() % 2) rel = group::inverse(rel);
  size_t pos = flat.letters.empty() ? 0 : rng() % (flat.letters.size() + 1);
  group::GroupWord out;
  for (size_t i = 0; i <= flat.letters.size(); ++i) {
    if (i == pos)
      for (const auto& l : rel.letters) out.push(l.gen, l.exp);
    if (i < flat.letters.size()) out.push(flat.letters[i].gen, flat.letters[i].exp);
  }
  return out;
}

Rat random_domain_point(std::mt19937_64& rng) {
  for (;;) {
    Rat x(1 + (long long)(rng() % 60), 1 + (long long)(rng() % 30));
    if (Rat(1, 3) <= x && x <= 2) return x;
  }
}

// Tile algebra: the two enumerated multiplier tilesets satisfy the exact
// multiplier equation.
void c1(Gate& g, const Options&) {
  auto start = std::chrono::steady_clock::now();
  group::GroupParams p(2, 3);
  auto doubling = ak::enumerate_tileset(p, Rat(2), Rat(1, 3), Rat(1));
  auto thirds = ak::enumerate_tileset(p, Rat(1, 3), Rat(1), Rat(2));
  g.expect(!doubling.tiles.tiles.empty(), "doubling tileset is empty");
  g.expect(!thirds.tiles.tiles.empty(), "division tileset is empty");
  g.expect(wang::check_multiplies(doubling.tiles, Rat(2)), "a doubling tile fails the equation");
  g.expect(wang::check_multiplies(thirds.tiles, Rat(1, 3)), "a division tile fails the equation");
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  g.expect(secs < 60.0, "enumeration exceeded 60 s");
}

// Twenty random starting points, radius-5 orbit patches verify cleanly.
void c2(Gate& g, const Options& o) {
  auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(o.seed ^ 0xC2);
  group::GroupParams p(2, 3);
  auto sys = multsys::s0();
  for (int t = 0; t < 20; ++t) {
    Rat x0 = random_domain_point(rng);
    auto branch = ak::orbit_for_s0(x0, 6);
    auto patch = ak::orbit_configuration(p, sys, branch, 5);
    g.expect(wang::verify_patch(patch).empty(), "adjacency violation at x0 = " + rat_str(x0));
    g.expect(ak::check_window_constraints(patch, sys).ok,
             "window constraint fails at x0 = " + rat_str(x0));
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  g.expect(secs < 300.0, "patch verification exceeded 300 s");
}

// The weak period fixes every tile but is not the identity.
void c3(Gate& g, const Options&) {
  group::GroupParams p(2, 3);
  auto period = group::parse_word("baBabABA");
  auto branch = ak::orbit_for_s0(Rat(1, 2), 5);
  g.expect(ak::weak_period_check(p, multsys::s0(), branch, period, 4),
           "period fails to fix a tile on the radius-4 ball");
  g.expect(!group::canonical_form(period, p).is_identity(), "period is trivial");
  g.expect(group::alpha(period, p) == 0, "period has nonzero alpha");
}

// Side identities of the tile formulas at random cells and values.
void c4(Gate& g, const Options& o) {
  std::mt19937_64 rng(o.seed ^ 0xC4);
  group::GroupParams p(2, 3);
  auto am = group::canonical_form(group::parse_word("a^2"), p);
  for (int t = 0; t < 10'000; ++t) {
    auto gc = group::canonical_form(random_word(rng, (int)(rng() % 12)), p);
    Rat x(1 + (long long)(rng() % 80), 1 + (long long)(rng() % 40));
    Rat q = t % 2 ? Rat(2) : Rat(1, 3);
    auto tile = ak::tile_at(p, q, gc, x);
    auto right = ak::tile_at(p, q, group::mul(gc, am, p), x);
    g.expect(tile.right == right.left, "left/right identity fails");

    int j = 1 + (int)(rng() % 2), l = 1 + (int)(rng() % 3);
    group::GroupWord up_word;
    if (j != l) up_word.push('a', j - l);
    up_word.push('b', 1);
    auto upper_cell = group::mul(gc, group::canonical_form(up_word, p), p);
    auto lower = ak::tile_at(p, q, gc, q * x);
    auto upper = ak::tile_at(p, q, upper_cell, x);
    g.expect(lower.top[j - 1] == upper.bottom[l - 1], "top/bottom identity fails");
  }
}

// Independent orbit enumeration: apply pieces branch by branch, dedupe at
// the end only. Shares no code with multsys::iterate.
std::vector<Rat> oracle_iterate(const multsys::MultSystem& s, const Rat& x, long long k) {
  std::vector<Rat> cur{x};
  for (long long step = 0; step < (k < 0 ? -k : k); ++step) {
    std::vector<Rat> next;
    for (const Rat& v : cur)
      for (const auto& piece : s.pieces) {
        if (k > 0) {
          if (piece.interval.contains(v)) next.push_back(piece.q * v);
        } else {
          Rat pre = v / piece.q;
          if (piece.interval.contains(pre)) next.push_back(pre);
        }
      }
    cur = std::move(next);
  }
  std::set<Rat> dedup(cur.begin(), cur.end());
  return {dedup.begin(), dedup.end()};
}

// No periodic points, oracle-checked orbits, conjugation to the rotation.
void c5(Gate& g, const Options& o) {
  auto sys = multsys::s0();
  auto found = multsys::periodic_point_search(sys, 200, 12);
  g.expect(found.empty(), found.empty() ? "" : "periodic point " + rat_str(found[0].first));

  std::mt19937_64 rng(o.seed ^ 0xC5);
  for (int t = 0; t < 100; ++t) {
    Rat x = random_domain_point(rng);
    for (long long k = -6; k <= 6; ++k) {
      auto got = multsys::iterate(sys, x, k);
      auto want = oracle_iterate(sys, x, k);
      g.expect(got == want, "iterate mismatch at x = " + rat_str(x));
    }
  }

  g.expect(multsys::rotation_residual(10'000) < 1e-9, "rotation residual above 1e-9");
}

// Substitution alignment, fixpoints, complexity growth, aperiodicity.
void c6(Gate& g, const Options& o) {
  std::mt19937_64 rng(o.seed ^ 0xC6);
  for (int t = 0; t < 100; ++t) {
    int n = 2 + (int)(rng() % 4);
    auto s = subst::sigma(n, (int)(rng() % n));
    subst::PointedWord u;
    for (int i = (int)(rng() % 8); i > 0; --i) u.left.push_back(rng() % 2);
    for (int i = 1 + (int)(rng() % 8); i > 0; --i) u.right.push_back(rng() % 2);
    auto y = subst::apply_pointed(s, u);
    for (long long j = u.min_pos(); j <= u.max_pos(); ++j)
      for (int i = 0; i < n; ++i)
        g.expect(y.at(n * j + i) == s.image(u.at(j))[i], "image alignment fails");
  }

  auto w = subst::fixpoint_window(3, 2187);  // 3^7
  auto sw = subst::apply_pointed(subst::sigma(3, 1), w);
  for (long long i = w.min_pos(); i <= w.max_pos(); ++i)
    g.expect(sw.at(i) == w.at(i), "fixpoint window is not invariant");

  auto [u2, v2] = subst::fixpoint2_windows(512);
  auto square = subst::compose(subst::sigma(2, 1), subst::sigma(2, 1));
  auto su = subst::apply_pointed(subst::sigma(2, 1), u2);
  auto uu = subst::apply_pointed(square, u2);
  for (long long i = v2.min_pos(); i <= v2.max_pos(); ++i)
    g.expect(su.at(i) == v2.at(i), "swap image of u disagrees with v");
  for (long long i = u2.min_pos(); i <= u2.max_pos(); ++i)
    g.expect(uu.at(i) == u2.at(i), "squared substitution does not fix u");

  auto sc = subst::stabilized_complexity(subst::sigma(3, 1), 25);
  for (int k = 1; k <= 25; ++k)
    g.expect(sc.counts[k - 1] >= k + 1, "complexity below k+1 at k = " + std::to_string(k));

  auto big = subst::fixpoint_window(3, 1000);
  for (long long k = 1; k <= 50; ++k) {
    auto wit = subst::k_period_witness(big, k);
    g.expect(wit.has_value() && big.at(*wit) != big.at(*wit + k),
             "no period witness for k = " + std::to_string(k));
  }
}

// Substitution tilesets and their explicit valid configurations.
void c7(Gate& g, const Options& o) {
  for (int n : {2, 3, 4, 5}) {
    g.expect(subst_tiles::tau_sigma(n).tiles.size() == 2 * (size_t)n, "tile count is not 2n");
    auto patch = subst_tiles::explicit_patch(n, 5);
    g.expect(!patch.cells.empty(), "empty patch");
    g.expect(wang::verify_patch(patch).empty(),
             "explicit patch violates adjacency at n = " + std::to_string(n));
  }
  for (int n : {3, 4, 5})
    g.expect(subst_tiles::b_periodicity_check(n, 1, 4), "vertical shift fails to fix tiles");
  g.expect(subst_tiles::b_periodicity_check(2, 2, 4), "double shift fails at n = 2");
  g.expect(!subst_tiles::b_periodicity_check(2, 1, 4), "single shift unexpectedly fixes n = 2");
  subst_tiles::FixpointTable t2(2);
  g.expect(!(subst_tiles::explicit_tile(2, {0, 0, 0}, t2) ==
             subst_tiles::explicit_tile(2, {0, 0, 1}, t2)),
           "missing counterexample cell at n = 2");

  std::mt19937_64 rng(o.seed ^ 0xC7);
  subst_tiles::FixpointTable t3(3), t5(5);
  for (int t = 0; t < 10'000; ++t) {
    int n = t % 3 == 0 ? 2 : (t % 3 == 1 ? 3 : 5);
    subst_tiles::FixpointTable& table = n == 2 ? t2 : (n == 3 ? t3 : t5);
    group::QuasiNormalForm q1;
    q1.k = rng() % 6;
    q1.m = rng() % 6;
    q1.l = (long long)(rng() % 487) - 243;
    long long shift = 1 + rng() % 3;
    group::QuasiNormalForm q2;
    q2.k = q1.k + shift;
    q2.m = q1.m + shift;
    q2.l = q1.l;
    for (long long i = 0; i < shift; ++i) q2.l *= n;
    g.expect(subst_tiles::explicit_tile(n, q1, table) == subst_tiles::explicit_tile(n, q2, table),
             "tile changes under an equivalent form");
  }
}

// The subgroup isomorphism and coset structure of BS(n,n).
void c8(Gate& g, const Options& o) {
  for (long long n : {2, 3, 4}) {
    group::GroupParams p(n, n);
    std::mt19937_64 rng(o.seed ^ (0xC80 + n));
    for (int t = 0; t < 3400; ++t) {
      bsnn::ZxFn z1, z2;
      z1.k = (long long)(rng() % 9) - 4;
      z2.k = (long long)(rng() % 9) - 4;
      for (int i = (int)(rng() % 7); i > 0; --i)
        z1.w.push((int)(rng() % n), rng() % 2 ? 1 : -1);
      for (int i = (int)(rng() % 7); i > 0; --i)
        z2.w.push((int)(rng() % n), rng() % 2 ? 1 : -1);
      auto lhs = group::concat(bsnn::phi_iso(z1, n), bsnn::phi_iso(z2, n));
      g.expect(group::equals(lhs, bsnn::phi_iso(bsnn::mul(z1, z2), n), p),
               "image of a product is not the product of images");
      g.expect(bsnn::phi_inverse(bsnn::phi_iso(z1, n), n) == z1, "round trip alters the pair");
    }

    auto ws = bsnn::normality_witnesses(n);
    g.expect(ws.size() == 4 * (size_t)(n + 1), "witness count");
    for (const auto& w : ws) {
      auto conj = group::concat(group::concat(w.conjugator, w.generator),
                                group::inverse(w.conjugator));
      g.expect(bsnn::coset(conj, n) == 0, "conjugate leaves the subgroup");
      g.expect(group::equals(conj, bsnn::phi_iso(w.image, n), p), "witness image mismatch");
    }

    std::set<int> cosets;
    for (const auto& cf : group::ball(p, 4)) cosets.insert(bsnn::coset(cf.word(), n));
    g.expect(cosets.size() == (size_t)n, "coset count differs from n");
  }

  struct Row {
    long long m, n;
    bool rf;
  };
  for (const Row& r : std::vector<Row>{{1, 1, true},   {1, 5, true},   {2, 3, false},
                                       {-2, 2, true},  {3, 3, true},   {-1, 4, true},
                                       {2, 4, false},  {5, -5, true},  {-3, 2, false},
                                       {7, 1, true},   {1, -6, true},  {-1, -1, true},
                                       {4, 6, false},  {6, 4, false},  {-4, 4, true},
                                       {2, -2, true},  {3, 5, false},  {-5, 3, false},
                                       {9, 9, true},   {1, 2, true}})
    g.expect(bsnn::residually_finite(r.m, r.n) == r.rf,
             "classification wrong at (" + std::to_string(r.m) + "," + std::to_string(r.n) + ")");
}

// Normal forms are relator-invariant; quasi-normal forms round-trip.
void c9(Gate& g, const Options& o) {
  for (auto [m, n] : {std::pair<long long, long long>{2, 3}, {1, 2}}) {
    group::GroupParams p(m, n);
    std::mt19937_64 rng(o.seed ^ (0xC90 + 10 * m + n));
    for (int t = 0; t < 5000; ++t) {
      auto w = random_word(rng, (int)(rng() % 16));
      g.expect(group::canonical_form(with_relator(w, rng, p), p) == group::canonical_form(w, p),
               "canonical form changes under a relator");
      if (m == 1) {
        auto q = group::quasi_normal_form_1n(w, n);
        g.expect(group::equals(w, group::qnf_word(q), p), "quasi-normal form round trip");
        g.expect(q.m - q.k == group::height(w), "height bookkeeping in quasi-normal form");
      }
    }
  }
}

// Balanced words average back to x within 1/N, exactly.
void c10(Gate& g, const Options& o) {
  std::mt19937_64 rng(o.seed ^ 0xCA);
  for (int t = 0; t < 20; ++t) {
    Rat x((long long)(rng() % 101) - 50, 1 + (long long)(rng() % 20));
    Rat z((long long)(rng() % 101) - 50, 1 + (long long)(rng() % 10));
    Int sum = 0;
    for (long long N = 1; N <= 1000; ++N) {
      sum += ak::balanced(x, z, N);
      Rat gap = Rat(sum) - N * x;
      if (gap < 0) gap = -gap;
      g.expect(gap <= 1, "window average drifts past 1/N");
      g.expect(sum == floor_rat((z + N) * x) - floor_rat(z * x), "telescoping fails");
    }
  }
}

}  // namespace

std::vector<CriterionResult> run_all(const Options& opts) {
  struct Entry {
    const char* name;
    void (*fn)(Gate&, const Options&);
  };
  const Entry entries[] = {
      {"multiplier-tiles-exact", c1},  {"orbit-patches-verify", c2},
      {"weak-period-fixes-tiles", c3}, {"tile-side-identities", c4},
      {"no-periodic-points", c5},      {"substitution-fixpoints", c6},
      {"substitution-tilings", c7},    {"subgroup-isomorphism", c8},
      {"normal-form-invariance", c9},  {"balanced-window-average", c10},
  };

  std::vector<CriterionResult> out;
  int id = 1;
  for (const Entry& e : entries) {
    CriterionResult r;
    r.id = id++;
    r.name = e.name;
    auto start = std::chrono::steady_clock::now();
    Gate gate;
    try {
      e.fn(gate, opts);
      r.passed = gate.ok;
      r.detail = gate.ok ? std::to_string(gate.checks) + " checks" : gate.failure;
    } catch (const std::exception& ex) {
      r.passed = false;
      r.detail = std::string("exception: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace bs::acceptance
