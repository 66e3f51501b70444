#pragma once

#include "bs/group.hpp"
#include "bs/rational.hpp"

#include <string>
#include <vector>

// The index-n subgroup H = <a^n, a^i b a^-i : 0 <= i < n> of BS(n,n).
// a^n is central, the conjugates t_i = a^i b a^-i generate a free group,
// and H is isomorphic to Z x F_n.
namespace bs::bsnn {

struct MembershipError : Error {
  using Error::Error;
};

// Freely reduced word over g_0..g_{n-1}; unit exponents, no x x^-1.
struct FreeLetter {
  int gen = 0;
  int sign = 1;
  auto operator<=>(const FreeLetter&) const = default;
};

struct FreeWord {
  std::vector<FreeLetter> letters;

  void push(int gen, int sign);  // cancels against the tail
  bool operator==(const FreeWord&) const = default;
};

// Syntax: whitespace-separated g<index> with optional ^<int>, e.g. "g0 g1^-1".
FreeWord parse_free(const std::string& text, int n);
std::string to_string(const FreeWord& w);
FreeWord concat(const FreeWord& u, const FreeWord& v);
FreeWord inverse(const FreeWord& w);

struct ZxFn {
  Int k;
  FreeWord w;

  bool operator==(const ZxFn&) const = default;
};

ZxFn mul(const ZxFn& x, const ZxFn& y);
ZxFn inv(const ZxFn& x);

// a^(i) b^(e) a^(-i); adjacent (i, e)(i, -e) never survive canonicalization.
struct Syllable {
  int i = 0;
  int e = 1;
  auto operator<=>(const Syllable&) const = default;
};

struct HForm {
  Int k;  // power of the central a^n
  std::vector<Syllable> sylls;

  bool operator==(const HForm&) const = default;
};

// g = a^p h with p in {0..n-1} the coset exponent and h in H.
struct BSnnForm {
  int p = 0;
  HForm h;

  bool operator==(const BSnnForm&) const = default;
};

// Unique decomposition of a word of BS(n,n).
BSnnForm canonicalize(const group::GroupWord& w, long long n);
group::GroupWord rebuild(const BSnnForm& f, long long n);
std::string form_str(const BSnnForm& f, long long n);

// Total a-exponent mod n; constant on cosets of H.
int coset(const group::GroupWord& w, long long n);

// The isomorphism: (1, empty) -> a^n and (0, g_i) -> a^i b a^-i.
group::GroupWord phi_iso(const ZxFn& z, long long n);
// Inverse on H; words with a nonzero coset exponent are rejected.
ZxFn phi_inverse(const group::GroupWord& w, long long n);

struct NormalityWitness {
  group::GroupWord conjugator;
  group::GroupWord generator;
  ZxFn image;  // phi_inverse of conjugator generator conjugator^-1
};

// Conjugates of every subgroup generator by a, a^-1, b, b^-1, each landing
// back in H; 4 (n+1) witnesses.
std::vector<NormalityWitness> normality_witnesses(long long n);

// |m| = 1, |n| = 1, or |m| = |n|.
bool residually_finite(long long m, long long n);

}  // namespace bs::bsnn
