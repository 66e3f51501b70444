#pragma once

#include "bs/group.hpp"
#include "bs/multsys.hpp"
#include "bs/rational.hpp"
#include "bs/wang.hpp"

#include <optional>
#include <vector>

// Tiles that multiply a balanced representation of x (top, in blocks of m)
// into one of qx (bottom, in blocks of n) across a level of BS(m,n).
namespace bs::ak {

// B_j(x, z) = floor((z+j)x) - floor((z+j-1)x), always floor(x) or floor(x)+1.
Int balanced(const Rat& x, const Rat& z, const Int& j);

// The tile of the level offset lambda = lambda(g):
//   t_j = B_j(x, m lambda),            j = 1..m
//   b_j = B_j(qx, n lambda),           j = 1..n
//   l   = (q/m) floor(m lambda x)       - (1/n) floor(n lambda q x)
//   r   = (q/m) floor((m lambda + m) x) - (1/n) floor((n lambda + n) q x)
wang::WangTile tile_for_lambda(const group::GroupParams& p, const Rat& q, const Rat& lambda,
                               const Rat& x);
wang::WangTile tile_at(const group::GroupParams& p, const Rat& q,
                       const group::CanonicalForm& g, const Rat& x);

// Left labels scaled by m n q2 are integers in [k1, k2] (q = q1/q2 reduced,
// q2 > 0). For q1 > 0 this is [-n q1, m q2].
struct LeftBounds {
  Int k1, k2;
  Int denom;
};
LeftBounds left_label_bounds(const group::GroupParams& p, const Rat& q);

struct EnumerationStrategy {
  enum class Kind { sampling, exhaustive } kind = Kind::sampling;
  int max_radius = 8;
  long long max_denominator = 128;
  group::BallOptions ball;
};

struct Certificate {
  EnumerationStrategy::Kind kind = EnumerationStrategy::Kind::sampling;
  int radius = 0;             // last ball radius sampled
  long long denominator = 0;  // last x-denominator sampled
};

struct EnumeratedTileset {
  wang::Tileset tiles;
  Certificate certificate;
};

// Tiles of the q-multiplier over x in [lo, hi], sampling g over growing
// balls and x over rationals of growing denominator until a full extra
// round adds nothing. The exhaustive strategy instead emits every label
// tuple within the proven bounds that satisfies the multiplier equation;
// it over-approximates but needs no sampling certificate.
EnumeratedTileset enumerate_tileset(const group::GroupParams& p, const Rat& q, const Rat& lo,
                                    const Rat& hi, const EnumerationStrategy& strategy = {});

// Window rule for one color: every e consecutive upper labels of a line of
// that color carry at least d copies of target.
struct YsConstraint {
  int color;  // 1-based piece index
  long long e;
  long long d;
  wang::Label target;
};

struct YsTileset {
  wang::Tileset tiles;
  std::vector<YsConstraint> constraints;
  std::vector<Certificate> certificates;  // per piece
};

// Union over pieces i of the enumerated tilesets for q_i on the full unit
// interval [a_i, a_i+1], left/right labels paired with the piece color, plus
// the window constraints cutting the represented reals down to I_i.
YsTileset build_ys(const group::GroupParams& p, const multsys::MultSystem& s,
                   const EnumerationStrategy& strategy = {});

// One orbit line of a multiplication system: indices i_k and values x_k for
// k in [lo, hi] with x_{k+1} = q_{i_k} x_k and every x_k in some domain.
struct OrbitBranch {
  int lo = 0, hi = 0;
  std::vector<int> indices;  // i_k for k in [lo, hi-1], 1-based colors
  std::vector<Rat> values;   // x_k for k in [lo, hi]

  OrbitBranch(const multsys::MultSystem& s, int lo_, int hi_, std::vector<int> idx,
              std::vector<Rat> vals);
  int index_at(long long k) const;
  const Rat& value_at(long long k) const;
};

// Branch through x0 for the standard system on [1/3, 2]: forward applies
// the quotient map (doubling below 1, thirds above, endpoints chained
// through the identified class stored as 2); backward prefers the doubling
// preimage when both apply and stores the endpoint class as 1/3.
OrbitBranch orbit_for_s0(const Rat& x0, int horizon);

// The valid configuration piece induced by the branch: the cell g gets the
// tile of tau_{i_k} at (g, x_k) with k = -height(g), colors on left/right.
wang::Patch orbit_configuration(const group::GroupParams& p, const multsys::MultSystem& s,
                                const OrbitBranch& branch, int radius,
                                const group::BallOptions& opts = {});

struct WindowFailure {
  group::CanonicalForm run_start;
  int color;
  long long window_start;  // 1-based position within the run
};

struct WindowReport {
  bool ok = true;
  std::vector<WindowFailure> failures;
};

// Applies each color's window constraints to every maximal run of
// horizontally chained cells; runs shorter than a window are skipped.
WindowReport check_window_constraints(const wang::Patch& patch, const multsys::MultSystem& s);

// Whether the orbit tile assignment satisfies tile(p g) = tile(g), colors
// included, for every g in the ball of the given radius.
bool weak_period_check(const group::GroupParams& p, const multsys::MultSystem& s,
                       const OrbitBranch& branch, const group::GroupWord& period, int radius,
                       const group::BallOptions& opts = {});

}  // namespace bs::ak
