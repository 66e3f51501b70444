#include "bs/bsnn.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace bs::bsnn {

namespace {

void require_n(long long n) {
  if (n < 1) throw UsageError("subgroup decomposition needs n >= 1");
}

int mod_n(const Int& v, long long n) {
  Int r = v % n;
  if (r < 0) r += n;
  return static_cast<int>(r);
}

}  // namespace

void FreeWord::push(int gen, int sign) {
  if (sign != 1 && sign != -1) throw UsageError("free letter sign must be +1 or -1");
  if (!letters.empty() && letters.back().gen == gen && letters.back().sign == -sign) {
    letters.pop_back();
    return;
  }
  letters.push_back({gen, sign});
}

FreeWord parse_free(const std::string& text, int n) {
  if (n < 1) throw UsageError("free group rank must be positive");
  FreeWord w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok[0] != 'g') throw ParseError("free word token must start with g: " + tok);
    size_t pos = 1;
    size_t caret = tok.find('^', 1);
    std::string idx = tok.substr(pos, caret == std::string::npos ? std::string::npos : caret - pos);
    if (idx.empty() || idx.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad generator index in token: " + tok);
    long long gen = std::strtoll(idx.c_str(), nullptr, 10);
    if (gen >= n) throw ParseError("generator index out of range: " + tok);
    long long exp = 1;
    if (caret != std::string::npos) {
      std::string e = tok.substr(caret + 1);
      if (e.empty() || e.find_first_not_of("0123456789-") != std::string::npos ||
          e.find('-', 1) != std::string::npos)
        throw ParseError("bad exponent in token: " + tok);
      exp = std::strtoll(e.c_str(), nullptr, 10);
    }
    int sign = exp < 0 ? -1 : 1;
    for (long long i = 0; i < std::llabs(exp); ++i) w.push(static_cast<int>(gen), sign);
  }
  return w;
}

std::string to_string(const FreeWord& w) {
  std::string out;
  size_t i = 0;
  while (i < w.letters.size()) {
    size_t j = i;
    while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
    long long run = static_cast<long long>(j - i) * w.letters[i].sign;
    if (!out.empty()) out += ' ';
    out += 'g';
    out += std::to_string(w.letters[i].gen);
    if (run != 1) out += '^' + std::to_string(run);
    i = j;
  }
  return out;
}

FreeWord concat(const FreeWord& u, const FreeWord& v) {
  FreeWord w = u;
  for (const FreeLetter& l : v.letters) w.push(l.gen, l.sign);
  return w;
}

FreeWord inverse(const FreeWord& w) {
  FreeWord out;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.push(it->gen, -it->sign);
  return out;
}

ZxFn mul(const ZxFn& x, const ZxFn& y) { return {x.k + y.k, concat(x.w, y.w)}; }

ZxFn inv(const ZxFn& x) { return {-x.k, inverse(x.w)}; }

BSnnForm canonicalize(const group::GroupWord& w, long long n) {
  require_n(n);
  Int total = 0;
  for (const group::Letter& l : w.letters)
    if (l.gen == 'a') total += l.exp;
  BSnnForm f;
  f.p = mod_n(total, n);
  f.h.k = (total - f.p) / n;

  Int sum = 0;
  for (const group::Letter& l : w.letters) {
    if (l.gen == 'a') {
      sum += l.exp;
      continue;
    }
    int sign = l.exp < 0 ? -1 : 1;
    Syllable s{mod_n(sum - f.p, n), sign};
    for (long long r = 0; r < std::llabs(l.exp); ++r) {
      auto& sy = f.h.sylls;
      if (!sy.empty() && sy.back().i == s.i && sy.back().e == -s.e)
        sy.pop_back();
      else
        sy.push_back(s);
    }
  }
  return f;
}

group::GroupWord rebuild(const BSnnForm& f, long long n) {
  require_n(n);
  group::GroupWord w;
  Int lead = f.p + f.h.k * n;
  if (lead != 0) w.push('a', static_cast<long long>(lead));
  for (const Syllable& s : f.h.sylls) {
    if (s.i != 0) w.push('a', s.i);
    w.push('b', s.e);
    if (s.i != 0) w.push('a', -s.i);
  }
  return w;
}

std::string form_str(const BSnnForm& f, long long n) {
  std::string out;
  auto sep = [&] {
    if (!out.empty()) out += ' ';
  };
  if (f.p != 0) {
    sep();
    out += 'a';
    if (f.p != 1) out += '^' + std::to_string(f.p);
  }
  if (f.h.k != 0) {
    sep();
    out += "(a^" + std::to_string(n) + ")^" + f.h.k.str();
  }
  for (const Syllable& s : f.h.sylls) {
    sep();
    out += 't' + std::to_string(s.i);
    if (s.e != 1) out += "^-1";
  }
  return out.empty() ? "e" : out;
}

int coset(const group::GroupWord& w, long long n) {
  require_n(n);
  Int total = 0;
  for (const group::Letter& l : w.letters)
    if (l.gen == 'a') total += l.exp;
  return mod_n(total, n);
}

group::GroupWord phi_iso(const ZxFn& z, long long n) {
  require_n(n);
  group::GroupWord w;
  Int lead = z.k * n;
  if (lead != 0) w.push('a', static_cast<long long>(lead));
  for (const FreeLetter& l : z.w.letters) {
    if (l.gen < 0 || l.gen >= n) throw UsageError("free generator index out of range");
    if (l.gen != 0) w.push('a', l.gen);
    w.push('b', l.sign);
    if (l.gen != 0) w.push('a', -l.gen);
  }
  return w;
}

ZxFn phi_inverse(const group::GroupWord& w, long long n) {
  BSnnForm f = canonicalize(w, n);
  if (f.p != 0)
    throw MembershipError("word lies in coset " + std::to_string(f.p) +
                          ", not in the index-" + std::to_string(n) + " subgroup");
  ZxFn z;
  z.k = f.h.k;
  for (const Syllable& s : f.h.sylls) z.w.letters.push_back({s.i, s.e});
  return z;
}

std::vector<NormalityWitness> normality_witnesses(long long n) {
  require_n(n);
  std::vector<group::GroupWord> gens;
  {
    group::GroupWord an;
    an.push('a', n);
    gens.push_back(an);
  }
  for (long long i = 0; i < n; ++i) {
    group::GroupWord t;
    if (i != 0) t.push('a', i);
    t.push('b', 1);
    if (i != 0) t.push('a', -i);
    gens.push_back(t);
  }

  std::vector<group::GroupWord> conj;
  for (auto [gen, exp] : {std::pair{'a', 1LL}, {'a', -1LL}, {'b', 1LL}, {'b', -1LL}}) {
    group::GroupWord s;
    s.push(gen, exp);
    conj.push_back(s);
  }

  std::vector<NormalityWitness> out;
  for (const group::GroupWord& s : conj)
    for (const group::GroupWord& h : gens) {
      group::GroupWord u = group::concat(group::concat(s, h), group::inverse(s));
      out.push_back({s, h, phi_inverse(u, n)});
    }
  return out;
}

bool residually_finite(long long m, long long n) {
  if (m == 0 || n == 0) throw UsageError("group parameters must be nonzero");
  return std::llabs(m) == 1 || std::llabs(n) == 1 || std::llabs(m) == std::llabs(n);
}

}  // namespace bs::bsnn
