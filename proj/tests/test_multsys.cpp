#include "bs/multsys.hpp"

#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

using namespace bs;
using multsys::MultSystem;
using multsys::QuotientPoint;
using multsys::UnitInterval;

namespace {

// Independent oracle: k-fold images by direct branch enumeration, one piece
// choice at a time, deduplicated only at the end.
void oracle_walk(const MultSystem& s, const Rat& x, long long k, std::vector<Rat>& out) {
  if (k == 0) {
    out.push_back(x);
    return;
  }
  if (k > 0) {
    for (const auto& piece : s.pieces)
      if (piece.interval.contains(x)) oracle_walk(s, piece.q * x, k - 1, out);
  } else {
    for (const auto& piece : s.pieces) {
      Rat y = x / piece.q;
      if (piece.interval.contains(y)) oracle_walk(s, y, k + 1, out);
    }
  }
}

std::vector<Rat> oracle_iterate(const MultSystem& s, const Rat& x, long long k) {
  std::vector<Rat> raw;
  oracle_walk(s, x, k, raw);
  std::set<Rat> dedup(raw.begin(), raw.end());
  return {dedup.begin(), dedup.end()};
}

MultSystem pair_system() {
  std::vector<multsys::LinearPiece> ps;
  ps.emplace_back(Rat(2), UnitInterval(Int(0), Int(1), Int(2), Int(0), Int(1)));    // x2 on [1/2,1]
  ps.emplace_back(Rat(1, 2), UnitInterval(Int(1), Int(0), Int(1), Int(0), Int(1)));  // /2 on [1,2]
  return MultSystem(std::move(ps));
}

double circle_dist(double u, double v) {
  double d = std::fabs(u - v);
  d -= std::floor(d);
  return std::min(d, 1.0 - d);
}

}  // namespace

TEST_CASE("unit intervals") {
  UnitInterval i(Int(0), Int(1), Int(3), Int(0), Int(1));
  CHECK(i.lo() == Rat(1, 3));
  CHECK(i.hi() == 1);
  CHECK(i.contains(Rat(1, 3)));
  CHECK(i.contains(Rat(1, 2)));
  CHECK_FALSE(i.contains(Rat(1, 4)));
  CHECK_FALSE(i.contains(Rat(3, 2)));
  CHECK_THROWS_AS(UnitInterval(Int(0), Int(2), Int(3), Int(2), Int(3)), UsageError);  // empty
  CHECK_THROWS_AS(UnitInterval(Int(0), Int(1), Int(0), Int(0), Int(1)), UsageError);
  CHECK_THROWS_AS(UnitInterval(Int(0), Int(-1), Int(3), Int(0), Int(1)), UsageError);
  CHECK_THROWS_AS(multsys::LinearPiece(Rat(0), i), UsageError);
  CHECK_THROWS_AS(MultSystem({}), UsageError);
}

TEST_CASE("standard system domain and one-step maps") {
  auto s = multsys::s0();
  CHECK(s.in_domain(Rat(1, 3)));
  CHECK(s.in_domain(Rat(1)));
  CHECK(s.in_domain(Rat(2)));
  CHECK_FALSE(s.in_domain(Rat(1, 4)));
  CHECK_FALSE(s.in_domain(Rat(5, 2)));

  CHECK(multsys::image(s, Rat(1)) == std::vector<Rat>{Rat(1, 3), Rat(2)});
  CHECK(multsys::image(s, Rat(1, 2)) == std::vector<Rat>{Rat(1)});
  CHECK(multsys::image(s, Rat(2)) == std::vector<Rat>{Rat(2, 3)});
  CHECK(multsys::preimage(s, Rat(1, 2)) == std::vector<Rat>{Rat(3, 2)});
  CHECK(multsys::preimage(s, Rat(1)) == std::vector<Rat>{Rat(1, 2)});
  CHECK(multsys::preimage(s, Rat(2, 3)) == std::vector<Rat>{Rat(1, 3), Rat(2)});
}

TEST_CASE("iterate and the branch oracle agree") {
  auto s = multsys::s0();
  CHECK(multsys::iterate(s, Rat(1, 2), 0) == std::vector<Rat>{Rat(1, 2)});
  CHECK(multsys::iterate(s, Rat(1, 2), 2) == std::vector<Rat>{Rat(1, 3), Rat(2)});
  CHECK(multsys::iterate(s, Rat(1, 2), -1) == std::vector<Rat>{Rat(3, 2)});

  std::mt19937_64 rng(7);
  auto pair = pair_system();
  for (int trial = 0; trial < 100; ++trial) {
    long long den = 1 + (long long)(rng() % 30);
    long long num = (long long)(rng() % (5 * (unsigned long long)den));
    Rat x(num, den);
    const MultSystem& sys = trial % 2 ? pair : s;
    for (long long k = -6; k <= 6; ++k)
      CHECK(multsys::iterate(sys, x, k) == oracle_iterate(sys, x, k));
  }
}

TEST_CASE("iterate respects the set cap") {
  // Two contracting pieces on the same interval; set sizes 1, 2, 3, 4, 5, ...
  std::vector<multsys::LinearPiece> ps;
  ps.emplace_back(Rat(1, 2), UnitInterval(Int(0), Int(0), Int(1), Int(0), Int(1)));
  ps.emplace_back(Rat(1, 3), UnitInterval(Int(0), Int(0), Int(1), Int(0), Int(1)));
  MultSystem s(std::move(ps));
  multsys::IterateOptions opts;
  opts.max_set = 4;
  CHECK_THROWS_AS(multsys::iterate(s, Rat(1), 5, opts), LimitError);
  CHECK(multsys::iterate(s, Rat(1), 3, opts).size() == 4);
}

TEST_CASE("immortality probes") {
  auto s = multsys::s0();
  CHECK(multsys::is_immortal_up_to(s, Rat(1, 2), 8));
  CHECK(multsys::is_immortal_up_to(s, Rat(17, 12), 8));
  CHECK_FALSE(multsys::is_immortal_up_to(s, Rat(1, 5), 0));

  // x3 on [0,1]: forward orbits escape.
  std::vector<multsys::LinearPiece> ps;
  ps.emplace_back(Rat(3), UnitInterval(Int(0), Int(0), Int(1), Int(0), Int(1)));
  MultSystem esc(std::move(ps));
  CHECK(multsys::is_immortal_up_to(esc, Rat(1, 2), 0));
  CHECK_FALSE(multsys::is_immortal_up_to(esc, Rat(1, 2), 1));
}

TEST_CASE("periodic point search") {
  // Identity on [0,1]: every rational there is 1-periodic.
  std::vector<multsys::LinearPiece> ps;
  ps.emplace_back(Rat(1), UnitInterval(Int(0), Int(0), Int(1), Int(0), Int(1)));
  auto ident = multsys::periodic_point_search(MultSystem(std::move(ps)), 3, 1);
  std::vector<std::pair<Rat, long long>> want{
      {Rat(0), 1}, {Rat(1), 1}, {Rat(1, 2), 1}, {Rat(1, 3), 1}, {Rat(2, 3), 1}};
  CHECK(ident == want);

  // The doubling/halving pair has 2-cycles everywhere.
  auto pf = multsys::periodic_point_search(pair_system(), 2, 4);
  std::vector<std::pair<Rat, long long>> want2{
      {Rat(1), 2}, {Rat(2), 2}, {Rat(1, 2), 2}, {Rat(3, 2), 2}};
  CHECK(pf == want2);

  // The standard system admits none.
  CHECK(multsys::periodic_point_search(multsys::s0(), 40, 8).empty());

  CHECK_THROWS_AS(multsys::periodic_point_search(multsys::s0(), 0, 1), UsageError);
}

TEST_CASE("quotient bijection") {
  CHECK_THROWS_AS(QuotientPoint(Rat(1, 4)), UsageError);
  CHECK_THROWS_AS(QuotientPoint(Rat(5, 2)), UsageError);
  CHECK(QuotientPoint(Rat(1, 3)) == QuotientPoint(Rat(2)));
  CHECK_FALSE(QuotientPoint(Rat(1, 3)) == QuotientPoint(Rat(1)));

  // forward orbit of 1: 2 ~ 2/3 ~ 4/3 ~ 4/9 ~ 8/9
  QuotientPoint x(Rat(1));
  x = multsys::f_quotient(x);
  CHECK(x.value == 2);
  CHECK(x.endpoint_class());
  x = multsys::f_quotient(x);
  CHECK(x.value == Rat(2, 3));
  x = multsys::f_quotient(x);
  CHECK(x.value == Rat(4, 3));
  x = multsys::f_quotient(x);
  CHECK(x.value == Rat(4, 9));
  x = multsys::f_quotient(x);
  CHECK(x.value == Rat(8, 9));

  CHECK(multsys::f_quotient(QuotientPoint(Rat(1, 3))).value == Rat(2, 3));
  CHECK(multsys::f_quotient_inv(QuotientPoint(Rat(2, 3))).value == Rat(1, 3));
  CHECK(multsys::f_quotient_inv(QuotientPoint(Rat(2))).value == 1);
  CHECK(multsys::f_quotient_inv(QuotientPoint(Rat(1, 3))).value == 1);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    long long den = 1 + (long long)(rng() % 200);
    Int first = floor_rat(Rat(1, 3) * den) + 1;
    Int last = floor_rat(Rat(2) * den);
    unsigned long long span = (last - first + 1).convert_to<unsigned long long>();
    QuotientPoint x0{Rat(first + Int(rng() % span), den)};
    CHECK(multsys::f_quotient_inv(multsys::f_quotient(x0)) == x0);
    CHECK(multsys::f_quotient(multsys::f_quotient_inv(x0)) == x0);
  }
}

TEST_CASE("circle conjugation") {
  CHECK(multsys::rotation_theta() == doctest::Approx(0.38685280723454163).epsilon(1e-14));
  std::mt19937_64 rng(13);
  double theta = multsys::rotation_theta();
  for (int trial = 0; trial < 200; ++trial) {
    long long den = 1 + (long long)(rng() % 100);
    Int first = floor_rat(Rat(1, 3) * den) + 1;
    Int last = floor_rat(Rat(2) * den);
    unsigned long long span = (last - first + 1).convert_to<unsigned long long>();
    QuotientPoint x{Rat(first + Int(rng() % span), den)};
    CHECK(circle_dist(multsys::phi_circle(multsys::f_quotient(x)),
                      multsys::phi_circle(x) + theta) < 1e-12);
  }
  CHECK(multsys::phi_circle(QuotientPoint(Rat(1, 3))) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(multsys::rotation_residual(2000) < 1e-9);
}
