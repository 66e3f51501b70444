#include "bs/multsys.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

namespace bs::multsys {

UnitInterval::UnitInterval(Int a_, Int d1_, Int e1_, Int d2_, Int e2_)
    : a(std::move(a_)), d1(std::move(d1_)), e1(std::move(e1_)), d2(std::move(d2_)),
      e2(std::move(e2_)) {
  if (e1 < 1 || e2 < 1) throw UsageError("interval denominators must be positive");
  if (d1 < 0 || d2 < 0) throw UsageError("interval offsets must be nonnegative");
  if (lo() > hi()) throw UsageError("empty interval");
}

LinearPiece::LinearPiece(Rat q_, UnitInterval i_) : q(std::move(q_)), interval(std::move(i_)) {
  if (q == 0) throw UsageError("piece slope must be nonzero");
}

MultSystem::MultSystem(std::vector<LinearPiece> ps) : pieces(std::move(ps)) {
  if (pieces.empty()) throw UsageError("a system needs at least one piece");
}

bool MultSystem::in_domain(const Rat& x) const {
  for (const auto& p : pieces)
    if (p.interval.contains(x)) return true;
  return false;
}

MultSystem s0() {
  std::vector<LinearPiece> pieces;
  pieces.emplace_back(Rat(2), UnitInterval(Int(0), Int(1), Int(3), Int(0), Int(1)));
  pieces.emplace_back(Rat(1, 3), UnitInterval(Int(1), Int(0), Int(1), Int(0), Int(1)));
  return MultSystem(std::move(pieces));
}

std::vector<Rat> image(const MultSystem& s, const Rat& x) {
  std::set<Rat> out;
  for (const auto& p : s.pieces)
    if (p.interval.contains(x)) out.insert(p.q * x);
  return {out.begin(), out.end()};
}

std::vector<Rat> preimage(const MultSystem& s, const Rat& x) {
  std::set<Rat> out;
  for (const auto& p : s.pieces) {
    Rat y = x / p.q;
    if (p.interval.contains(y)) out.insert(y);
  }
  return {out.begin(), out.end()};
}

std::vector<Rat> iterate(const MultSystem& s, const Rat& x, long long k,
                         const IterateOptions& opts) {
  std::set<Rat> cur{x};
  long long steps = k < 0 ? -k : k;
  for (long long i = 0; i < steps; ++i) {
    std::set<Rat> next;
    for (const Rat& v : cur) {
      auto vs = k > 0 ? image(s, v) : preimage(s, v);
      next.insert(vs.begin(), vs.end());
      if (next.size() > opts.max_set)
        throw LimitError("iterate set exceeds cap " + std::to_string(opts.max_set));
    }
    cur = std::move(next);
  }
  return {cur.begin(), cur.end()};
}

bool is_immortal_up_to(const MultSystem& s, const Rat& x, long long K,
                       const IterateOptions& opts) {
  for (int dir : {1, -1}) {
    std::set<Rat> cur{x};
    for (long long k = 0; k <= K; ++k) {
      bool alive = std::any_of(cur.begin(), cur.end(),
                               [&](const Rat& v) { return s.in_domain(v); });
      if (!alive) return false;
      if (k == K) break;
      std::set<Rat> next;
      for (const Rat& v : cur) {
        auto vs = dir > 0 ? image(s, v) : preimage(s, v);
        next.insert(vs.begin(), vs.end());
        if (next.size() > opts.max_set)
          throw LimitError("iterate set exceeds cap " + std::to_string(opts.max_set));
      }
      cur = std::move(next);
    }
  }
  return true;
}

std::vector<std::pair<Rat, long long>> periodic_point_search(const MultSystem& s,
                                                             long long denom_bound,
                                                             long long period_bound,
                                                             const IterateOptions& opts) {
  if (denom_bound < 1 || period_bound < 1)
    throw UsageError("bounds must be positive");
  // Domain union hull, for candidate enumeration.
  Rat lo = s.pieces.front().interval.lo(), hi = s.pieces.front().interval.hi();
  for (const auto& p : s.pieces) {
    lo = std::min(lo, p.interval.lo());
    hi = std::max(hi, p.interval.hi());
  }
  std::vector<std::pair<Rat, long long>> found;
  for (long long den = 1; den <= denom_bound; ++den) {
    Int first = floor_rat(lo * den);
    if (Rat(first, den) < lo) ++first;
    Int last = floor_rat(hi * den);
    for (Int num = first; num <= last; ++num) {
      if (boost::multiprecision::gcd(num < 0 ? Int(-num) : num, Int(den)) != 1) continue;
      Rat x(num, den);
      if (!s.in_domain(x)) continue;
      std::set<Rat> cur{x};
      for (long long k = 1; k <= period_bound; ++k) {
        std::set<Rat> next;
        for (const Rat& v : cur) {
          auto vs = image(s, v);
          next.insert(vs.begin(), vs.end());
          if (next.size() > opts.max_set)
            throw LimitError("iterate set exceeds cap " + std::to_string(opts.max_set));
        }
        cur = std::move(next);
        if (cur.count(x)) {
          found.emplace_back(x, k);
          break;
        }
        if (cur.empty()) break;
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (denominator(a.first) != denominator(b.first))
      return denominator(a.first) < denominator(b.first);
    if (numerator(a.first) != numerator(b.first))
      return numerator(a.first) < numerator(b.first);
    return a.second < b.second;
  });
  return found;
}

QuotientPoint::QuotientPoint(Rat v) : value(std::move(v)) {
  if (value < Rat(1, 3) || value > 2)
    throw UsageError("quotient point " + rat_str(value) + " outside [1/3, 2]");
}

QuotientPoint f_quotient(const QuotientPoint& x) {
  if (x.endpoint_class()) return QuotientPoint(Rat(2, 3));
  if (x.value == 1) return QuotientPoint(Rat(2));
  if (x.value < 1) return QuotientPoint(2 * x.value);
  return QuotientPoint(x.value / 3);
}

QuotientPoint f_quotient_inv(const QuotientPoint& y) {
  if (y.endpoint_class()) return QuotientPoint(Rat(1));
  if (y.value == Rat(2, 3)) return QuotientPoint(Rat(1, 3));
  if (y.value > Rat(2, 3)) return QuotientPoint(y.value / 2);
  return QuotientPoint(3 * y.value);
}

double phi_circle(const QuotientPoint& x) {
  double v = x.value.convert_to<double>();
  double t = (std::log(v) + std::log(3.0)) / (std::log(2.0) + std::log(3.0));
  t -= std::floor(t);
  if (t >= 1.0) t = 0.0;
  return t;
}

double rotation_theta() { return std::log(2.0) / (std::log(2.0) + std::log(3.0)); }

namespace {
double circle_dist(double u, double v) {
  double d = std::fabs(u - v);
  d -= std::floor(d);
  return std::min(d, 1.0 - d);
}
}  // namespace

double rotation_residual(int samples, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  double theta = rotation_theta();
  for (int i = 0; i < samples; ++i) {
    long long den = 1 + (long long)(rng() % 997);
    Int first = floor_rat(Rat(1, 3) * den) + 1;
    Int last = floor_rat(Rat(2) * den);
    unsigned long long span = (last - first + 1).convert_to<unsigned long long>();
    Int num = first + Int(rng() % span);
    QuotientPoint x{Rat(num, den)};
    double lhs = phi_circle(f_quotient(x));
    double rhs = phi_circle(x) + theta;
    worst = std::max(worst, circle_dist(lhs, rhs));
  }
  return worst;
}

}  // namespace bs::multsys
