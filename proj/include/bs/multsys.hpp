#pragma once

#include "bs/rational.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

// Piecewise multiplication systems: finitely many maps x -> q_i x on closed
// intervals I_i contained in unit intervals [a_i, a_i + 1].
namespace bs::multsys {

// [a + d1/e1, a + 1 - d2/e2] inside [a, a+1].
struct UnitInterval {
  Int a;
  Int d1, e1;
  Int d2, e2;

  UnitInterval(Int a_, Int d1_, Int e1_, Int d2_, Int e2_);
  Rat lo() const { return Rat(a) + Rat(d1, e1); }
  Rat hi() const { return Rat(a) + 1 - Rat(d2, e2); }
  bool contains(const Rat& x) const { return lo() <= x && x <= hi(); }
};

struct LinearPiece {
  Rat q;
  UnitInterval interval;

  LinearPiece(Rat q_, UnitInterval i_);
};

struct MultSystem {
  std::vector<LinearPiece> pieces;

  explicit MultSystem(std::vector<LinearPiece> ps);
  bool in_domain(const Rat& x) const;
};

// { x2 on [1/3,1], x1/3 on [1,2] }. Every point of [1/3,2] is immortal and
// the system has no periodic points.
MultSystem s0();

// Values q_i x over pieces whose domain contains x; sorted, deduplicated.
std::vector<Rat> image(const MultSystem& s, const Rat& x);
std::vector<Rat> preimage(const MultSystem& s, const Rat& x);

struct IterateOptions {
  std::size_t max_set = 10'000;
};

// k-fold image (k < 0 iterates preimages). k = 0 gives {x}.
// Throws LimitError when an intermediate set would exceed max_set.
std::vector<Rat> iterate(const MultSystem& s, const Rat& x, long long k,
                         const IterateOptions& opts = {});

// Whether every |k| <= K iterate set meets the union of the domains.
bool is_immortal_up_to(const MultSystem& s, const Rat& x, long long K,
                       const IterateOptions& opts = {});

// All reduced p/q in the domain union with q <= denom_bound such that
// x is in iterate(s, x, k) for some 1 <= k <= period_bound; each point is
// reported with the least such k, sorted by (denominator, numerator).
std::vector<std::pair<Rat, long long>> periodic_point_search(const MultSystem& s,
                                                             long long denom_bound,
                                                             long long period_bound,
                                                             const IterateOptions& opts = {});

// Point of [1/3,2] with the endpoints 1/3 and 2 identified. The stored
// rational keeps the representative chosen by the producing map.
struct QuotientPoint {
  Rat value;

  explicit QuotientPoint(Rat v);
  bool endpoint_class() const { return value == Rat(1, 3) || value == 2; }
  bool operator==(const QuotientPoint& o) const {
    return value == o.value || (endpoint_class() && o.endpoint_class());
  }
};

// The quotient bijection: doubling on (1/3,1), division by 3 on (1,2),
// f(1) = the endpoint class (stored as 2), f(endpoint class) = 2/3.
QuotientPoint f_quotient(const QuotientPoint& x);
// Inverse; the endpoint class produced from 2/3 is stored as 1/3.
QuotientPoint f_quotient_inv(const QuotientPoint& y);

// Conjugation to the unit circle: phi(x) = (log x + log 3)/(log 2 + log 3)
// mod 1, sending f to the rotation by log 2/(log 2 + log 3).
double phi_circle(const QuotientPoint& x);
double rotation_theta();

// Max circle distance between phi(f(x)) and phi(x) + theta over random
// rational samples; analytically zero, so only rounding noise remains.
double rotation_residual(int samples, unsigned long long seed = 20260814);

}  // namespace bs::multsys
