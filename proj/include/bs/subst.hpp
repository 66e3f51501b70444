#pragma once

#include "bs/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

// Uniform substitutions on the alphabet {0, 1} and their pointed fixpoints.
namespace bs::subst {

struct UniformSubstitution {
  int n;  // image length
  std::vector<uint8_t> image0, image1;

  UniformSubstitution(int n_, std::vector<uint8_t> im0, std::vector<uint8_t> im1);
  const std::vector<uint8_t>& image(uint8_t c) const { return c ? image1 : image0; }
};

// sigma_r: 0 -> 0^(n-r-1) 1 0^r, 1 -> 0^n. The only 1 in sigma_r(0) sits at
// index n-r-1.
UniformSubstitution sigma(int n, int r);

// first o second, images of length n1*n2.
UniformSubstitution compose(const UniformSubstitution& first, const UniformSubstitution& second);

// Biinfinite window around the origin: left holds positions -1, -2, ... and
// right holds 0, 1, ...
struct PointedWord {
  std::vector<uint8_t> left;
  std::vector<uint8_t> right;

  long long min_pos() const { return -(long long)left.size(); }
  long long max_pos() const { return (long long)right.size() - 1; }  // inclusive
  long long size() const { return (long long)left.size() + (long long)right.size(); }
  uint8_t at(long long i) const;
  bool in_window(long long i) const { return i >= min_pos() && i <= max_pos(); }
  std::vector<uint8_t> letters() const;  // left to right
};

// Serializes with '|' in front of position 0, e.g. "0010|0100".
std::string to_string(const PointedWord& w);
PointedWord parse_pointed(const std::string& text);

// Image with position nj+i carrying s(u_j)_i; the window scales by n.
PointedWord apply_pointed(const UniformSubstitution& s, const PointedWord& u);

// Fixpoint window of sigma_1 for n >= 3 (unique biinfinite fixpoint, 0 at
// the origin), at least half_len letters on each side.
// For n = 2 use fixpoint2_windows: sigma_1 itself has no fixpoint there.
PointedWord fixpoint_window(int n, long long half_len);

// The two fixpoints u (0 at origin) and v (1 at origin) of sigma_1^2 for
// n = 2; sigma_1 swaps them.
std::pair<PointedWord, PointedWord> fixpoint2_windows(long long half_len);

// Fixpoints of an arbitrary composite: one per (right seed, left seed) pair,
// where s(c) begins with c resp. s(c') ends with c'. Empty if no seed exists.
std::vector<PointedWord> fixpoints(const UniformSubstitution& s, long long half_len);

// Distinct factor counts for lengths 1..max_len within the window.
std::vector<long long> factor_complexity(const PointedWord& w, int max_len);

struct StabilizedComplexity {
  std::vector<long long> counts;
  int iterations;       // substitution applications performed
  long long window;     // final window size
};

// Grows a fixpoint window until the factor sets up to max_len are identical
// between consecutive iterations, then reports the counts.
// Throws InconclusiveError if the caps are hit first.
StabilizedComplexity stabilized_complexity(const UniformSubstitution& s, int max_len,
                                           int max_iterations = 40,
                                           long long max_window = 4'000'000);

// Least witness position i in the window with w_i != w_{i+k}, if any.
std::optional<long long> k_period_witness(const PointedWord& w, long long k);

// Whether the window is k-periodic; requires window size >= 2k.
bool is_k_periodic(const PointedWord& w, long long k);

}  // namespace bs::subst
