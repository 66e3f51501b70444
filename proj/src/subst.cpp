#include "bs/subst.hpp"

#include <algorithm>
#include <set>

namespace bs::subst {

UniformSubstitution::UniformSubstitution(int n_, std::vector<uint8_t> im0,
                                         std::vector<uint8_t> im1)
    : n(n_), image0(std::move(im0)), image1(std::move(im1)) {
  if (n < 1) throw UsageError("image length must be positive");
  if ((long long)image0.size() != n || (long long)image1.size() != n)
    throw UsageError("images must both have the declared length");
  for (uint8_t c : image0)
    if (c > 1) throw UsageError("letters are 0 or 1");
  for (uint8_t c : image1)
    if (c > 1) throw UsageError("letters are 0 or 1");
}

UniformSubstitution sigma(int n, int r) {
  if (n < 2) throw UsageError("sigma needs n >= 2");
  if (r < 0 || r >= n) throw UsageError("sigma needs 0 <= r < n");
  std::vector<uint8_t> im0(n, 0), im1(n, 0);
  im0[n - r - 1] = 1;
  return UniformSubstitution(n, std::move(im0), std::move(im1));
}

UniformSubstitution compose(const UniformSubstitution& first, const UniformSubstitution& second) {
  auto expand = [&](const std::vector<uint8_t>& w) {
    std::vector<uint8_t> out;
    out.reserve(w.size() * first.n);
    for (uint8_t c : w) {
      const auto& im = first.image(c);
      out.insert(out.end(), im.begin(), im.end());
    }
    return out;
  };
  return UniformSubstitution(first.n * second.n, expand(second.image0), expand(second.image1));
}

uint8_t PointedWord::at(long long i) const {
  if (!in_window(i)) throw UsageError("position " + std::to_string(i) + " outside window");
  return i >= 0 ? right[(size_t)i] : left[(size_t)(-1 - i)];
}

std::vector<uint8_t> PointedWord::letters() const {
  std::vector<uint8_t> out(left.rbegin(), left.rend());
  out.insert(out.end(), right.begin(), right.end());
  return out;
}

std::string to_string(const PointedWord& w) {
  std::string out;
  for (auto it = w.left.rbegin(); it != w.left.rend(); ++it) out += char('0' + *it);
  out += '|';
  for (uint8_t c : w.right) out += char('0' + c);
  return out;
}

PointedWord parse_pointed(const std::string& text) {
  auto bar = text.find('|');
  if (bar == std::string::npos) throw ParseError("pointed word needs an origin marker '|'");
  PointedWord w;
  for (size_t i = bar; i-- > 0;) {
    char c = text[i];
    if (c != '0' && c != '1') throw ParseError("letters are 0 or 1");
    w.left.push_back(c - '0');
  }
  for (size_t i = bar + 1; i < text.size(); ++i) {
    char c = text[i];
    if (c != '0' && c != '1') throw ParseError("letters are 0 or 1");
    w.right.push_back(c - '0');
  }
  return w;
}

PointedWord apply_pointed(const UniformSubstitution& s, const PointedWord& u) {
  PointedWord out;
  out.right.reserve(u.right.size() * s.n);
  for (uint8_t c : u.right) {
    const auto& im = s.image(c);
    out.right.insert(out.right.end(), im.begin(), im.end());
  }
  out.left.reserve(u.left.size() * s.n);
  for (uint8_t c : u.left) {  // left[0] is position -1; its image fills -n..-1
    const auto& im = s.image(c);
    out.left.insert(out.left.end(), im.rbegin(), im.rend());
  }
  return out;
}

namespace {

PointedWord grow_fixpoint(const UniformSubstitution& s, uint8_t right_seed, uint8_t left_seed,
                          long long half_len) {
  if (s.image(right_seed).front() != right_seed)
    throw UsageError("no seed letter: image does not begin with the seed");
  if (s.image(left_seed).back() != left_seed)
    throw UsageError("no seed letter: image does not end with the seed");
  PointedWord w;
  w.right.push_back(right_seed);
  w.left.push_back(left_seed);
  while ((long long)w.right.size() < half_len || (long long)w.left.size() < half_len)
    w = apply_pointed(s, w);
  return w;
}

}  // namespace

PointedWord fixpoint_window(int n, long long half_len) {
  if (n == 2)
    throw UsageError("sigma_1 has no fixpoint for n = 2; use fixpoint2_windows");
  if (n < 3) throw UsageError("fixpoint_window needs n >= 3");
  return grow_fixpoint(sigma(n, 1), 0, 0, half_len);
}

std::pair<PointedWord, PointedWord> fixpoint2_windows(long long half_len) {
  UniformSubstitution s = compose(sigma(2, 1), sigma(2, 1));
  PointedWord u = grow_fixpoint(s, 0, 0, half_len);
  PointedWord v = grow_fixpoint(s, 1, 0, half_len);
  return {std::move(u), std::move(v)};
}

std::vector<PointedWord> fixpoints(const UniformSubstitution& s, long long half_len) {
  std::vector<PointedWord> out;
  for (uint8_t rc : {0, 1})
    for (uint8_t lc : {0, 1}) {
      if (s.image(rc).front() != rc || s.image(lc).back() != lc) continue;
      out.push_back(grow_fixpoint(s, rc, lc, half_len));
    }
  return out;
}

namespace {

std::set<std::vector<uint8_t>> factor_set(const std::vector<uint8_t>& letters, int max_len) {
  std::set<std::vector<uint8_t>> out;
  for (int len = 1; len <= max_len; ++len)
    for (size_t i = 0; i + len <= letters.size(); ++i)
      out.insert(std::vector<uint8_t>(letters.begin() + i, letters.begin() + i + len));
  return out;
}

}  // namespace

std::vector<long long> factor_complexity(const PointedWord& w, int max_len) {
  if (max_len < 1) throw UsageError("max_len must be positive");
  if (w.size() < max_len) throw UsageError("window shorter than max_len");
  std::vector<long long> counts(max_len, 0);
  for (const auto& f : factor_set(w.letters(), max_len)) ++counts[f.size() - 1];
  return counts;
}

StabilizedComplexity stabilized_complexity(const UniformSubstitution& s, int max_len,
                                           int max_iterations, long long max_window) {
  auto fps = fixpoints(s, 1);
  if (fps.empty()) throw UsageError("no seed letter: the substitution has no fixpoint");
  PointedWord w = fps.front();
  std::set<std::vector<uint8_t>> prev;
  for (int it = 1; it <= max_iterations; ++it) {
    w = apply_pointed(s, w);
    if (w.size() > max_window)
      throw InconclusiveError("factor sets still changing at window cap " +
                              std::to_string(max_window));
    if (w.size() < max_len) continue;
    auto cur = factor_set(w.letters(), max_len);
    if (!prev.empty() && cur == prev) {
      std::vector<long long> counts(max_len, 0);
      for (const auto& f : cur) ++counts[f.size() - 1];
      return {std::move(counts), it, w.size()};
    }
    prev = std::move(cur);
  }
  throw InconclusiveError("factor sets still changing after " + std::to_string(max_iterations) +
                          " iterations");
}

std::optional<long long> k_period_witness(const PointedWord& w, long long k) {
  if (k < 1) throw UsageError("period must be >= 1");
  for (long long i = w.min_pos(); i + k <= w.max_pos(); ++i)
    if (w.at(i) != w.at(i + k)) return i;
  return std::nullopt;
}

bool is_k_periodic(const PointedWord& w, long long k) {
  if (k < 1) throw UsageError("period must be >= 1");
  if (w.size() < 2 * k) throw UsageError("window too short to test the period");
  return !k_period_witness(w, k).has_value();
}

}  // namespace bs::subst
