#pragma once

#include "bs/rational.hpp"

#include <compare>
#include <string>
#include <utility>
#include <vector>

// Words and normal forms in the Baumslag-Solitar group
//   BS(m,n) = < a, b | b a^m b^-1 = a^n >.
namespace bs::group {

struct GroupParams {
  long long m = 1;
  long long n = 1;
  GroupParams(long long m_, long long n_) : m(m_), n(n_) {
    if (m == 0 || n == 0) throw UsageError("group parameters must be nonzero");
  }
};

// Run-length letters; gen is 'a' or 'b', exp any nonzero integer.
struct Letter {
  char gen;
  long long exp;
  auto operator<=>(const Letter&) const = default;
};

struct GroupWord {
  std::vector<Letter> letters;

  void push(char gen, long long exp);
  long long length() const;  // total letter count, sum of |exp|
  auto operator<=>(const GroupWord&) const = default;
};

// Text syntax: letters a, b (A, B for inverses), each optionally followed by
// ^<int>. "baaB" and "ba^2b^-1" parse to the same word.
GroupWord parse_word(const std::string& text);
std::string to_string(const GroupWord& w);
GroupWord inverse(const GroupWord& w);
GroupWord concat(const GroupWord& u, const GroupWord& v);

// One b^eps a^res block of a normal form.
struct Syllable {
  int eps;        // +1 or -1
  long long res;  // 0 <= res < |m| after b, 0 <= res < |n| after b^-1
  auto operator<=>(const Syllable&) const = default;
};

// a^lead b^eps1 a^res1 ... b^epsk a^resk, pinch-free with residues in range.
// Two words are equal in BS(m,n) iff their canonical forms are identical.
struct CanonicalForm {
  Int lead;
  std::vector<Syllable> sylls;

  bool is_identity() const { return lead == 0 && sylls.empty(); }
  long long height() const;
  GroupWord word() const;
  std::string str() const;
  bool operator==(const CanonicalForm& o) const { return lead == o.lead && sylls == o.sylls; }
  bool operator<(const CanonicalForm& o) const {
    if (lead != o.lead) return lead < o.lead;
    return sylls < o.sylls;
  }
};

// Right-multiply by gen^exp, maintaining the invariants.
void append(CanonicalForm& f, char gen, const Int& exp, const GroupParams& p);

CanonicalForm canonical_form(const GroupWord& w, const GroupParams& p);
CanonicalForm mul(const CanonicalForm& g, const CanonicalForm& h, const GroupParams& p);
CanonicalForm inv(const CanonicalForm& g, const GroupParams& p);
bool equals(const GroupWord& u, const GroupWord& v, const GroupParams& p);

long long height(const GroupWord& w);

// alpha(e) = 0, alpha(w a^s) = alpha(w) + s (n/m)^height(w), alpha(w b^s) = alpha(w).
// Invariant under the relator, so well defined on the group.
Rat alpha(const GroupWord& w, const GroupParams& p);
Rat alpha(const CanonicalForm& g, const GroupParams& p);

// lambda(g) = (1/m) (m/n)^height(g) alpha(g); lambda(g a^m) = lambda(g) + 1.
Rat lambda_map(const GroupWord& w, const GroupParams& p);
Rat lambda_map(const CanonicalForm& g, const GroupParams& p);

// Phi(g) = (alpha(g), height(g)), injective on BS(1,n).
std::pair<Rat, long long> phi_embed(const GroupWord& w, const GroupParams& p);

// g = b^-k a^l b^m in BS(1,n); k, m >= 0 and m - k = height(g).
// Not unique in general; this returns the representative with minimal k.
struct QuasiNormalForm {
  long long k;
  Int l;
  long long m;
};
QuasiNormalForm quasi_normal_form_1n(const GroupWord& w, long long n);
GroupWord qnf_word(const QuasiNormalForm& q);

struct BallOptions {
  int max_radius = 8;
  long long max_nodes = 1'000'000;
};

// Closed ball of the word metric on generators {a, b, a^-1, b^-1},
// sorted canonical forms.
std::vector<CanonicalForm> ball(const GroupParams& p, int radius, const BallOptions& opts = {});

}  // namespace bs::group
