#include "bs/group.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>

namespace bs::group {

void GroupWord::push(char gen, long long exp) {
  if (exp == 0) return;
  if (gen != 'a' && gen != 'b') throw UsageError("generator must be a or b");
  if (!letters.empty() && letters.back().gen == gen) {
    letters.back().exp += exp;
    if (letters.back().exp == 0) letters.pop_back();
    return;
  }
  letters.push_back({gen, exp});
}

long long GroupWord::length() const {
  long long total = 0;
  for (const auto& l : letters) total += l.exp < 0 ? -l.exp : l.exp;
  return total;
}

GroupWord parse_word(const std::string& text) {
  GroupWord w;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    char gen;
    long long sign;
    switch (c) {
      case 'a': gen = 'a'; sign = 1; break;
      case 'b': gen = 'b'; sign = 1; break;
      case 'A': gen = 'a'; sign = -1; break;
      case 'B': gen = 'b'; sign = -1; break;
      case 'e': ++i; continue;  // identity, convenience for round-trips
      default:
        throw ParseError("unexpected character '" + std::string(1, c) + "' at position " +
                         std::to_string(i));
    }
    ++i;
    long long exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      size_t start = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
        throw ParseError("missing exponent after '^' at position " + std::to_string(start));
      try {
        exp = std::stoll(text.substr(start, i - start));
      } catch (const std::exception&) {
        throw ParseError("exponent out of range at position " + std::to_string(start));
      }
    }
    w.push(gen, sign * exp);
  }
  return w;
}

std::string to_string(const GroupWord& w) {
  std::string out;
  for (const auto& l : w.letters) {
    char c = l.gen;
    long long e = l.exp;
    if (e < 0) {
      c = std::toupper(static_cast<unsigned char>(c));
      e = -e;
    }
    out += c;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

GroupWord inverse(const GroupWord& w) {
  GroupWord out;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.push(it->gen, -it->exp);
  return out;
}

GroupWord concat(const GroupWord& u, const GroupWord& v) {
  GroupWord out = u;
  for (const auto& l : v.letters) out.push(l.gen, l.exp);
  return out;
}

long long CanonicalForm::height() const {
  long long h = 0;
  for (const auto& s : sylls) h += s.eps;
  return h;
}

GroupWord CanonicalForm::word() const {
  GroupWord w;
  if (lead != 0) {
    if (lead < Int(std::numeric_limits<long long>::min()) ||
        lead > Int(std::numeric_limits<long long>::max()))
      throw LimitError("leading exponent too large for a word");
    w.push('a', lead.convert_to<long long>());
  }
  for (const auto& s : sylls) {
    w.push('b', s.eps);
    w.push('a', s.res);
  }
  return w;
}

std::string CanonicalForm::str() const {
  if (is_identity()) return "e";
  return to_string(word());
}

namespace {

// Residue step to the right of b^eps and the factor carried left through it.
// b a^(m t + s) = a^(n t) b a^s and b^-1 a^(n t + s) = a^(m t) b^-1 a^s.
inline long long step_of(int eps, const GroupParams& p) { return eps > 0 ? p.m : p.n; }
inline long long push_of(int eps, const GroupParams& p) { return eps > 0 ? p.n : p.m; }

// Add delta to the residue at syllable i and restore residue ranges by
// carrying excess leftward. Carries across an opposite-sign junction are
// multiples of that junction's modulus, so no pinch can appear.
void add_at(CanonicalForm& f, size_t i, Int delta, const GroupParams& p) {
  while (true) {
    if (i == 0) {
      f.lead += delta;
      return;
    }
    Syllable& s = f.sylls[i - 1];
    Int r = Int(s.res) + delta;
    long long step = step_of(s.eps, p);
    Int astep = step < 0 ? Int(-step) : Int(step);
    Int res = r % astep;
    if (res < 0) res += astep;
    Int t = (r - res) / Int(step);
    s.res = res.convert_to<long long>();
    if (t == 0) return;
    delta = t * Int(push_of(s.eps, p));
    --i;
  }
}

}  // namespace

void append(CanonicalForm& f, char gen, const Int& exp, const GroupParams& p) {
  if (exp == 0) return;
  if (gen == 'a') {
    add_at(f, f.sylls.size(), exp, p);
    return;
  }
  if (gen != 'b') throw UsageError("generator must be a or b");
  Int rest = exp;
  int dir = exp > 0 ? 1 : -1;
  while (rest != 0) {
    if (!f.sylls.empty() && f.sylls.back().res == 0 && f.sylls.back().eps == -dir) {
      f.sylls.pop_back();  // pinch b^eps a^0 b^-eps
    } else {
      f.sylls.push_back({dir, 0});
    }
    rest -= dir;
  }
}

CanonicalForm canonical_form(const GroupWord& w, const GroupParams& p) {
  CanonicalForm f;
  for (const auto& l : w.letters) append(f, l.gen, Int(l.exp), p);
  return f;
}

CanonicalForm mul(const CanonicalForm& g, const CanonicalForm& h, const GroupParams& p) {
  CanonicalForm f = g;
  append(f, 'a', h.lead, p);
  for (const auto& s : h.sylls) {
    append(f, 'b', Int(s.eps), p);
    append(f, 'a', Int(s.res), p);
  }
  return f;
}

CanonicalForm inv(const CanonicalForm& g, const GroupParams& p) {
  CanonicalForm f;
  for (auto it = g.sylls.rbegin(); it != g.sylls.rend(); ++it) {
    append(f, 'a', Int(-it->res), p);
    append(f, 'b', Int(-it->eps), p);
  }
  append(f, 'a', -g.lead, p);
  return f;
}

bool equals(const GroupWord& u, const GroupWord& v, const GroupParams& p) {
  return canonical_form(u, p) == canonical_form(v, p);
}

long long height(const GroupWord& w) {
  long long h = 0;
  for (const auto& l : w.letters)
    if (l.gen == 'b') h += l.exp;
  return h;
}

Rat alpha(const GroupWord& w, const GroupParams& p) {
  Rat acc = 0;
  long long h = 0;
  Rat ratio(p.n, p.m);
  for (const auto& l : w.letters) {
    if (l.gen == 'b') {
      h += l.exp;
    } else {
      acc += Rat(l.exp) * pow_rat(ratio, h);
    }
  }
  return acc;
}

Rat alpha(const CanonicalForm& g, const GroupParams& p) { return alpha(g.word(), p); }

Rat lambda_map(const GroupWord& w, const GroupParams& p) {
  return Rat(1, p.m) * pow_rat(Rat(p.m, p.n), height(w)) * alpha(w, p);
}

Rat lambda_map(const CanonicalForm& g, const GroupParams& p) { return lambda_map(g.word(), p); }

std::pair<Rat, long long> phi_embed(const GroupWord& w, const GroupParams& p) {
  return {alpha(w, p), height(w)};
}

QuasiNormalForm quasi_normal_form_1n(const GroupWord& w, long long n) {
  if (n == 0) throw UsageError("n must be nonzero");
  // b^m a = a^(n^m) b^m moves a-letters left past positive b's;
  // a^l b^-1 = b^-1 a^(n l) absorbs negative b's on the left.
  long long k = 0, m = 0;
  Int l = 0;
  Int nn(n);
  for (const auto& letter : w.letters) {
    if (letter.gen == 'a') {
      l += Int(letter.exp) * pow(nn, (unsigned)m);
    } else {
      long long e = letter.exp;
      for (; e > 0; --e) ++m;
      for (; e < 0; ++e) {
        if (m > 0) {
          --m;
        } else {
          ++k;
          l *= nn;
        }
      }
    }
  }
  while (k > 0 && m > 0 && l % nn == 0) {
    --k;
    --m;
    l /= nn;
  }
  return {k, l, m};
}

GroupWord qnf_word(const QuasiNormalForm& q) {
  GroupWord w;
  w.push('b', -q.k);
  if (q.l != 0) {
    if (q.l < Int(std::numeric_limits<long long>::min()) ||
        q.l > Int(std::numeric_limits<long long>::max()))
      throw LimitError("quasi-normal exponent too large for a word");
    w.push('a', q.l.convert_to<long long>());
  }
  w.push('b', q.m);
  return w;
}

std::vector<CanonicalForm> ball(const GroupParams& p, int radius, const BallOptions& opts) {
  if (radius < 0) throw UsageError("radius must be nonnegative");
  if (radius > opts.max_radius)
    throw UsageError("radius " + std::to_string(radius) + " exceeds configured max " +
                     std::to_string(opts.max_radius));
  std::set<CanonicalForm> seen;
  std::vector<CanonicalForm> frontier{CanonicalForm{}};
  seen.insert(CanonicalForm{});
  const std::pair<char, long long> gens[4] = {{'a', 1}, {'a', -1}, {'b', 1}, {'b', -1}};
  for (int r = 0; r < radius; ++r) {
    std::vector<CanonicalForm> next;
    for (const auto& g : frontier) {
      for (auto [gen, e] : gens) {
        CanonicalForm h = g;
        append(h, gen, Int(e), p);
        if (seen.insert(h).second) {
          if ((long long)seen.size() > opts.max_nodes)
            throw LimitError("ball node cap " + std::to_string(opts.max_nodes) + " exceeded");
          next.push_back(std::move(h));
        }
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace bs::group
