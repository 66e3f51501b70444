#pragma once

#include "bs/group.hpp"
#include "bs/subst.hpp"
#include "bs/wang.hpp"

#include <vector>

// Wang tiles over BS(1,n) that spell a substitution: the tile (c, i) shows
// the letter c on top, the sigma index i on both sides, and sigma_i(c)
// across its bottom. A valid tiling writes each level as a word and makes
// every level the sigma_i-image of the one above it.
namespace bs::subst_tiles {

wang::WangTile sigma_tile(int n, uint8_t c, int i);

// All 2n tiles (c, i); the tile (c, i) sits at index 2 i + c.
wang::Tileset tau_sigma(int n);

// Position maps between a level and the one above: a cell at position k
// reads the letter under position F(k) = floor((k+1)/n) of the upper level,
// through image index R(k) = (k+1) mod n.
Int level_down(const Int& k, long long n);
int level_index(const Int& k, long long n);

// Letters of the guiding fixpoint, window grown on demand. For n >= 3 one
// word serves every level; for n = 2 the levels alternate between the two
// fixpoints of the squared substitution, chosen by parity.
class FixpointTable {
 public:
  explicit FixpointTable(int n);
  uint8_t letter(const Int& pos, int parity);

 private:
  void grow(const Int& pos, subst::PointedWord& w);
  int n_;
  subst::UniformSubstitution step_;
  subst::PointedWord even_, odd_;
};

struct ExplicitTile {
  uint8_t letter;
  int index;

  bool operator==(const ExplicitTile&) const = default;
};

// Tile of the cell b^-k a^l b^m: letter at position F^m(l) of its level
// word, sigma index R(F^(m-1)(l)) (index 1 when m = 0). Well defined under
// (k, l, m) -> (k+t, l n^t, m+t).
ExplicitTile explicit_tile(int n, const group::QuasiNormalForm& q, FixpointTable& table);

// The explicit tiles over a radius ball, as a patch over tau_sigma(n).
wang::Patch explicit_patch(int n, int radius, const group::BallOptions& opts = {});

// Whether left multiplication by b^period fixes every explicit tile on the
// ball. True for period 1 when n >= 3; for n = 2 only period 2 works.
bool b_periodicity_check(int n, int period, int radius, const group::BallOptions& opts = {});

struct PeriodWitness {
  long long period;
  int level;           // 0 at the identity, counting upward
  long long position;  // letters at position and position + period differ
};

// For every period 1..k_max and each requested level, a position in the
// level word certifying the period fails. Throws InconclusiveError when the
// window shows no witness.
std::vector<PeriodWitness> a_period_falsification(int n, long long k_max, int levels,
                                                  long long window);

}  // namespace bs::subst_tiles
