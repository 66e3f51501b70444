#include "bs_capi.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "bs/acceptance.hpp"
#include "bs/ak.hpp"
#include "bs/bsnn.hpp"
#include "bs/group.hpp"
#include "bs/json_io.hpp"
#include "bs/multsys.hpp"
#include "bs/subst.hpp"
#include "bs/subst_tiles.hpp"
#include "bs/svg.hpp"
#include "bs/wang.hpp"
#include "json.hpp"

struct bs_tileset {
  bs::wang::Tileset value;
};

struct bs_patch {
  bs::wang::Patch value;
};

namespace {

using nlohmann::json;

thread_local std::string g_error;

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class F>
bs_status guard(F&& f) {
  g_error.clear();
  try {
    return f();
  } catch (const bs::bsnn::MembershipError& e) {
    g_error = e.what();
    return BS_USAGE;
  } catch (const bs::UsageError& e) {
    g_error = e.what();
    return BS_USAGE;
  } catch (const bs::ParseError& e) {
    g_error = e.what();
    return BS_USAGE;
  } catch (const bs::InconclusiveError& e) {
    g_error = e.what();
    return BS_INCONCLUSIVE;
  } catch (const bs::LimitError& e) {
    g_error = e.what();
    return BS_INCONCLUSIVE;
  } catch (const std::exception& e) {
    g_error = e.what();
    return BS_ERROR;
  }
}

bs_status require(bool cond, const char* msg) {
  if (cond) return BS_OK;
  g_error = msg;
  return BS_USAGE;
}

bs::group::BallOptions ball_options(int radius, long long max_nodes) {
  bs::group::BallOptions opts;
  opts.max_radius = radius;
  if (max_nodes > 0) opts.max_nodes = max_nodes;
  return opts;
}

}  // namespace

extern "C" {

const char* bs_last_error(void) { return g_error.c_str(); }

void bs_string_free(char* s) { std::free(s); }

void bs_tileset_free(bs_tileset* ts) { delete ts; }

void bs_patch_free(bs_patch* p) { delete p; }

bs_status bs_group_nf(long long m, long long n, const char* word, char** out) {
  if (require(word && out, "null argument")) return BS_USAGE;
  return guard([&] {
    bs::group::GroupParams p(m, n);
    auto cf = bs::group::canonical_form(bs::group::parse_word(word), p);
    *out = dup_string(cf.str());
    return BS_OK;
  });
}

bs_status bs_tileset_ak(long long m, long long n, const char* q, const char* lo, const char* hi,
                        int max_radius, long long max_denominator, long long max_nodes,
                        bs_tileset** out) {
  if (require(q && lo && hi && out, "null argument")) return BS_USAGE;
  return guard([&] {
    bs::group::GroupParams p(m, n);
    bs::ak::EnumerationStrategy strategy;
    if (max_radius > 0) strategy.max_radius = max_radius;
    if (max_denominator > 0) strategy.max_denominator = max_denominator;
    strategy.ball.max_radius = strategy.max_radius;
    if (max_nodes > 0) strategy.ball.max_nodes = max_nodes;
    auto e = bs::ak::enumerate_tileset(p, bs::parse_rat(q), bs::parse_rat(lo), bs::parse_rat(hi),
                                       strategy);
    *out = new bs_tileset{std::move(e.tiles)};
    return BS_OK;
  });
}

bs_status bs_tileset_to_json(const bs_tileset* ts, char** out) {
  if (require(ts && out, "null argument")) return BS_USAGE;
  return guard([&] {
    *out = dup_string(bs::json_io::tileset_to_json(ts->value));
    return BS_OK;
  });
}

bs_status bs_tileset_from_json(const char* text, bs_tileset** out) {
  if (require(text && out, "null argument")) return BS_USAGE;
  return guard([&] {
    *out = new bs_tileset{bs::json_io::tileset_from_json(text)};
    return BS_OK;
  });
}

long long bs_tileset_tile_count(const bs_tileset* ts) {
  return ts ? static_cast<long long>(ts->value.tiles.size()) : -1;
}

bs_status bs_tileset_multiplies(const bs_tileset* ts, const char* q, int* result) {
  if (require(ts && q && result, "null argument")) return BS_USAGE;
  return guard([&] {
    *result = bs::wang::check_multiplies(ts->value, bs::parse_rat(q)) ? 1 : 0;
    return BS_OK;
  });
}

bs_status bs_patch_orbit(const char* x0, int radius, long long max_nodes, bs_patch** out) {
  if (require(x0 && out, "null argument")) return BS_USAGE;
  return guard([&] {
    if (radius < 0) throw bs::UsageError("radius must be nonnegative");
    bs::group::GroupParams p(2, 3);
    auto branch = bs::ak::orbit_for_s0(bs::parse_rat(x0), radius + 1);
    auto patch = bs::ak::orbit_configuration(p, bs::multsys::s0(), branch, radius,
                                             ball_options(radius, max_nodes));
    *out = new bs_patch{std::move(patch)};
    return BS_OK;
  });
}

bs_status bs_patch_subst(long long n, int radius, long long max_nodes, bs_patch** out) {
  if (require(out != nullptr, "null argument")) return BS_USAGE;
  return guard([&] {
    if (radius < 0) throw bs::UsageError("radius must be nonnegative");
    if (n < 2 || n > 64) throw bs::UsageError("n must be between 2 and 64");
    auto patch = bs::subst_tiles::explicit_patch(static_cast<int>(n), radius,
                                                 ball_options(radius, max_nodes));
    *out = new bs_patch{std::move(patch)};
    return BS_OK;
  });
}

bs_status bs_patch_from_json(const char* text, bs_patch** out) {
  if (require(text && out, "null argument")) return BS_USAGE;
  return guard([&] {
    *out = new bs_patch{bs::json_io::patch_from_json(text)};
    return BS_OK;
  });
}

bs_status bs_patch_to_json(const bs_patch* p, char** out) {
  if (require(p && out, "null argument")) return BS_USAGE;
  return guard([&] {
    *out = dup_string(bs::json_io::patch_to_json(p->value));
    return BS_OK;
  });
}

long long bs_patch_cell_count(const bs_patch* p) {
  return p ? static_cast<long long>(p->value.cells.size()) : -1;
}

bs_status bs_patch_verify(const bs_patch* p, char** report) {
  if (require(p && report, "null argument")) return BS_USAGE;
  return guard([&] {
    auto vs = bs::wang::verify_patch(p->value);
    *report = dup_string(bs::json_io::violations_to_json(vs));
    if (vs.empty()) return BS_OK;
    g_error = std::to_string(vs.size()) + " adjacency violations";
    return BS_VIOLATIONS;
  });
}

bs_status bs_patch_render_svg(const bs_patch* p, char** out) {
  if (require(p && out, "null argument")) return BS_USAGE;
  return guard([&] {
    *out = dup_string(bs::svg::render_patch(p->value));
    return BS_OK;
  });
}

bs_status bs_period_check(long long m, long long n, const char* word, const char* x0, int radius,
                          long long max_nodes, char** out_json) {
  if (require(word && x0 && out_json, "null argument")) return BS_USAGE;
  return guard([&] {
    if (radius < 0) throw bs::UsageError("radius must be nonnegative");
    bs::group::GroupParams p(m, n);
    auto w = bs::group::parse_word(word);
    auto branch = bs::ak::orbit_for_s0(bs::parse_rat(x0), radius + 1);
    bool periodic = bs::ak::weak_period_check(p, bs::multsys::s0(), branch, w, radius,
                                              ball_options(radius, max_nodes));
    auto cf = bs::group::canonical_form(w, p);
    json j{{"word", word},
           {"canonical", cf.str()},
           {"x0", bs::to_wire(bs::parse_rat(x0))},
           {"radius", radius},
           {"periodic", periodic},
           {"trivial_period", cf.is_identity()},
           {"alpha", bs::to_wire(bs::group::alpha(cf, p))}};
    *out_json = dup_string(j.dump(2) + "\n");
    return BS_OK;
  });
}

bs_status bs_subst_fixpoint(long long n, long long r, long long half_len, char** out_json) {
  if (require(out_json != nullptr, "null argument")) return BS_USAGE;
  return guard([&] {
    if (n < 2 || n > 1000) throw bs::UsageError("n must be between 2 and 1000");
    if (half_len < 1) throw bs::UsageError("length must be positive");
    auto s = bs::subst::sigma(static_cast<int>(n), static_cast<int>(r));
    json j{{"n", n}, {"r", r}, {"half_length", half_len}};
    j["fixpoints"] = json::array();
    for (const auto& w : bs::subst::fixpoints(s, half_len))
      j["fixpoints"].push_back(bs::subst::to_string(w));
    if (n == 2 && r == 1) {
      auto [u, v] = bs::subst::fixpoint2_windows(half_len);
      j["square_fixpoints"] = {bs::subst::to_string(u), bs::subst::to_string(v)};
    }
    *out_json = dup_string(j.dump(2) + "\n");
    return BS_OK;
  });
}

bs_status bs_subst_complexity(long long n, long long r, int max_len, char** out_json) {
  if (require(out_json != nullptr, "null argument")) return BS_USAGE;
  return guard([&] {
    if (n < 2 || n > 1000) throw bs::UsageError("n must be between 2 and 1000");
    if (max_len < 1) throw bs::UsageError("max length must be positive");
    auto s = bs::subst::sigma(static_cast<int>(n), static_cast<int>(r));
    std::string name = "sigma_{" + std::to_string(n) + "," + std::to_string(r) + "}";
    if (n == 2 && r == 1) {
      s = bs::subst::compose(s, s);  // sigma_1 alone has no fixpoint at n = 2
      name += "^2";
    }
    auto sc = bs::subst::stabilized_complexity(s, max_len);
    json j{{"substitution", name},
           {"counts", sc.counts},
           {"iterations", sc.iterations},
           {"window", sc.window}};
    *out_json = dup_string(j.dump(2) + "\n");
    return BS_OK;
  });
}

bs_status bs_dyn_orbit(const char* x0, long long steps, char** out_json) {
  if (require(x0 && out_json, "null argument")) return BS_USAGE;
  return guard([&] {
    auto sys = bs::multsys::s0();
    bs::Rat x = bs::parse_rat(x0);
    long long dir = steps < 0 ? -1 : 1;
    json sets = json::array();
    for (long long k = 0; k <= (steps < 0 ? -steps : steps); ++k) {
      json level = json::array();
      for (const auto& v : bs::multsys::iterate(sys, x, dir * k))
        level.push_back(bs::to_wire(v));
      sets.push_back(std::move(level));
    }
    json j{{"x0", bs::to_wire(x)}, {"steps", steps}, {"sets", std::move(sets)}};
    *out_json = dup_string(j.dump(2) + "\n");
    return BS_OK;
  });
}

bs_status bs_dyn_periodic_search(long long denom_bound, long long period_bound, char** out_json) {
  if (require(out_json != nullptr, "null argument")) return BS_USAGE;
  return guard([&] {
    auto found = bs::multsys::periodic_point_search(bs::multsys::s0(), denom_bound, period_bound);
    json pts = json::array();
    for (const auto& [x, k] : found) pts.push_back(json{{"x", bs::to_wire(x)}, {"period", k}});
    json j{{"denom_bound", denom_bound}, {"period_bound", period_bound}, {"points", std::move(pts)}};
    *out_json = dup_string(j.dump(2) + "\n");
    return BS_OK;
  });
}

bs_status bs_bsnn_coset(long long n, const char* word, char** out_json) {
  if (require(word && out_json, "null argument")) return BS_USAGE;
  return guard([&] {
    auto w = bs::group::parse_word(word);
    auto f = bs::bsnn::canonicalize(w, n);
    json sylls = json::array();
    for (const auto& s : f.h.sylls) sylls.push_back(json{{"i", s.i}, {"e", s.e}});
    json j{{"n", n},
           {"word", word},
           {"coset", f.p},
           {"in_subgroup", f.p == 0},
           {"central_exponent", f.h.k.str()},
           {"syllables", std::move(sylls)},
           {"form", bs::bsnn::form_str(f, n)}};
    *out_json = dup_string(j.dump(2) + "\n");
    return BS_OK;
  });
}

bs_status bs_bsnn_phi(long long n, long long z, const char* free_word, char** out_json) {
  if (require(out_json != nullptr, "null argument")) return BS_USAGE;
  return guard([&] {
    auto fw = bs::bsnn::parse_free(free_word ? free_word : "",
                                   n > 0 && n <= 1'000'000 ? static_cast<int>(n) : 0);
    auto w = bs::bsnn::phi_iso(bs::bsnn::ZxFn{z, fw}, n);
    json j{{"n", n},
           {"z", z},
           {"free", bs::bsnn::to_string(fw)},
           {"word", bs::group::to_string(w)}};
    *out_json = dup_string(j.dump(2) + "\n");
    return BS_OK;
  });
}

bs_status bs_accept(unsigned long long seed, char** out_json) {
  if (require(out_json != nullptr, "null argument")) return BS_USAGE;
  return guard([&] {
    bs::acceptance::Options opts;
    opts.seed = seed;
    auto results = bs::acceptance::run_all(opts);
    bool all = true;
    json rows = json::array();
    for (const auto& r : results) {
      all = all && r.passed;
      rows.push_back(json{{"id", r.id},
                          {"name", r.name},
                          {"passed", r.passed},
                          {"ms", static_cast<long long>(r.seconds * 1000)},
                          {"detail", r.detail}});
    }
    json j{{"passed", all}, {"criteria", std::move(rows)}};
    *out_json = dup_string(j.dump(2) + "\n");
    if (all) return BS_OK;
    g_error = "acceptance criteria failed";
    return BS_ERROR;
  });
}

}  // extern "C"
