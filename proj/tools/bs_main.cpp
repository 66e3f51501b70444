// Command-line front end. Talks to the library exclusively through the C
// API; every command prints JSON on stdout and exits with the status code
// (0 ok, 1 internal, 2 violations, 3 inconclusive, 4 usage).

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "bs_capi.h"

namespace {

struct CStr {
  char* s = nullptr;
  ~CStr() { bs_string_free(s); }
};

std::string escape(const std::string& raw) {
  std::string out;
  for (char c : raw) {
    if (c == '"' || c == '\\') out += '\\';
    out += c == '\n' ? ' ' : c;
  }
  return out;
}

int fail(bs_status st, const std::string& msg) {
  std::printf("{\"error\": \"%s\", \"status\": %d}\n", escape(msg).c_str(), (int)st);
  return (int)st;
}

int fail(bs_status st) { return fail(st, bs_last_error()); }

long long env_max_nodes() {
  const char* v = std::getenv("BS_MAX_NODES");
  return v ? std::strtoll(v, nullptr, 10) : 0;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

bool write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << data;
  return bool(out);
}

struct Frac {
  long long num = 0;
  long long den = 1;
};

bool parse_atom(const std::string& text, Frac& f) {
  size_t slash = text.find('/');
  try {
    size_t used = 0;
    f.num = std::stoll(text.substr(0, slash), &used);
    if (used != (slash == std::string::npos ? text.size() : slash)) return false;
    if (slash == std::string::npos) {
      f.den = 1;
    } else {
      f.den = std::stoll(text.substr(slash + 1), &used);
      if (used != text.size() - slash - 1 || f.den <= 0) return false;
    }
  } catch (...) {
    return false;
  }
  return true;
}

// One interval endpoint: INT, INT/INT, or INT(+|-)INT/INT.
bool parse_endpoint(const std::string& text, Frac& out) {
  size_t split = std::string::npos;
  for (size_t i = 1; i < text.size(); ++i)
    if ((text[i] == '+' || text[i] == '-') && std::isdigit((unsigned char)text[i - 1])) {
      split = i;
      break;
    }
  if (split == std::string::npos) return parse_atom(text, out);
  Frac a, d;
  if (!parse_atom(text.substr(0, split), a) || a.den != 1) return false;
  if (!parse_atom(text.substr(split + 1), d)) return false;
  long long sign = text[split] == '+' ? 1 : -1;
  out.num = a.num * d.den + sign * d.num;
  out.den = d.den;
  long long g = std::gcd(out.num < 0 ? -out.num : out.num, out.den);
  if (g > 1) {
    out.num /= g;
    out.den /= g;
  }
  return true;
}

std::string frac_str(const Frac& f) {
  return std::to_string(f.num) + "/" + std::to_string(f.den);
}

int emit(bs_status st, const CStr& out) {
  if (st == BS_OK || (st == BS_VIOLATIONS && out.s)) {
    if (out.s) std::fputs(out.s, stdout);
    return (int)st;
  }
  return fail(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wang tilings and normal forms on Baumslag-Solitar groups"};
  app.require_subcommand(1);
  int rc = 0;

  long long m = 2, n = 3, z = 0, steps = 5, denoms = 40, period = 8, r = 1;
  long long length = 32, max_denominator = 0, max_nodes_flag = 0;
  int radius = 4, max_radius = 0, max_len = 12;
  unsigned long long seed = 20260814ULL;
  std::string word, x0 = "1/2", q, interval, out_path, in_path, svg_path, system_name = "s0";
  std::string free_word;

  auto nodes = [&] { return max_nodes_flag > 0 ? max_nodes_flag : env_max_nodes(); };

  // group nf
  auto* group_cmd = app.add_subcommand("group", "Group word operations");
  auto* nf = group_cmd->add_subcommand("nf", "Normal form of a word");
  nf->add_option("--m", m)->required();
  nf->add_option("--n", n)->required();
  nf->add_option("--word", word)->required();
  nf->callback([&] {
    CStr out;
    bs_status st = bs_group_nf(m, n, word.c_str(), &out.s);
    if (st != BS_OK) {
      rc = fail(st);
      return;
    }
    std::printf("{\"word\": \"%s\", \"canonical\": \"%s\"}\n", escape(word).c_str(),
                escape(out.s).c_str());
  });

  // tileset ak
  auto* tileset_cmd = app.add_subcommand("tileset", "Tileset construction");
  auto* ak = tileset_cmd->add_subcommand("ak", "Enumerate the multiplier tileset");
  ak->add_option("--m", m)->required();
  ak->add_option("--n", n)->required();
  ak->add_option("--q", q, "Multiplier as NUM/DEN")->required();
  ak->add_option("--interval", interval, "Domain as a+d1/e1,a+1-d2/e2")->required();
  ak->add_option("--out", out_path)->required();
  ak->add_option("--max-radius", max_radius);
  ak->add_option("--max-denominator", max_denominator);
  ak->add_option("--max-nodes", max_nodes_flag);
  ak->callback([&] {
    size_t comma = interval.find(',');
    Frac lo, hi;
    if (comma == std::string::npos || !parse_endpoint(interval.substr(0, comma), lo) ||
        !parse_endpoint(interval.substr(comma + 1), hi)) {
      rc = fail(BS_USAGE, "bad interval: " + interval);
      return;
    }
    bs_tileset* ts = nullptr;
    bs_status st = bs_tileset_ak(m, n, q.c_str(), frac_str(lo).c_str(), frac_str(hi).c_str(),
                                 max_radius, max_denominator, nodes(), &ts);
    if (st != BS_OK) {
      rc = fail(st);
      return;
    }
    CStr text;
    st = bs_tileset_to_json(ts, &text.s);
    long long count = bs_tileset_tile_count(ts);
    bs_tileset_free(ts);
    if (st != BS_OK) {
      rc = fail(st);
      return;
    }
    if (!write_file(out_path, text.s)) {
      rc = fail(BS_USAGE, "cannot write " + out_path);
      return;
    }
    std::printf("{\"tiles\": %lld, \"out\": \"%s\"}\n", count, escape(out_path).c_str());
  });

  // patch orbit | subst | verify
  auto* patch_cmd = app.add_subcommand("patch", "Patches over the Cayley graph");
  auto* orbit = patch_cmd->add_subcommand("orbit", "Orbit configuration of the standard system");
  orbit->add_option("--system", system_name, "Only s0 is built in");
  orbit->add_option("--x0", x0)->required();
  orbit->add_option("--radius", radius)->required();
  orbit->add_option("--out", out_path)->required();
  orbit->add_option("--max-nodes", max_nodes_flag);
  orbit->add_option("--m", m);
  orbit->add_option("--n", n);

  auto* subst = patch_cmd->add_subcommand("subst", "Explicit substitution tiling on BS(1,n)");
  subst->add_option("--n", n)->required();
  subst->add_option("--radius", radius)->required();
  subst->add_option("--out", out_path)->required();
  subst->add_option("--max-nodes", max_nodes_flag);

  auto patch_writer = [&](bs_patch* p, bs_status st) {
    if (st != BS_OK) {
      rc = fail(st);
      return;
    }
    CStr text;
    st = bs_patch_to_json(p, &text.s);
    long long count = bs_patch_cell_count(p);
    bs_patch_free(p);
    if (st != BS_OK) {
      rc = fail(st);
      return;
    }
    if (!write_file(out_path, text.s)) {
      rc = fail(BS_USAGE, "cannot write " + out_path);
      return;
    }
    std::printf("{\"cells\": %lld, \"out\": \"%s\"}\n", count, escape(out_path).c_str());
  };
  orbit->callback([&] {
    if (system_name != "s0") {
      rc = fail(BS_USAGE, "unknown system: " + system_name);
      return;
    }
    if (m != 2 || n != 3) {
      rc = fail(BS_USAGE, "the standard system tiles BS(2,3)");
      return;
    }
    bs_patch* p = nullptr;
    patch_writer(p, bs_patch_orbit(x0.c_str(), radius, nodes(), &p));
  });
  subst->callback([&] {
    bs_patch* p = nullptr;
    patch_writer(p, bs_patch_subst(n, radius, nodes(), &p));
  });

  auto* verify = patch_cmd->add_subcommand("verify", "Check every adjacency in a patch");
  verify->add_option("--in", in_path)->required();
  verify->callback([&] {
    std::string text;
    if (!read_file(in_path, text)) {
      rc = fail(BS_USAGE, "cannot read " + in_path);
      return;
    }
    bs_patch* p = nullptr;
    bs_status st = bs_patch_from_json(text.c_str(), &p);
    if (st != BS_OK) {
      rc = fail(st);
      return;
    }
    CStr report;
    st = bs_patch_verify(p, &report.s);
    bs_patch_free(p);
    rc = emit(st, report);
  });

  // period check
  auto* period_cmd = app.add_subcommand("period", "Periodicity of orbit configurations");
  auto* check = period_cmd->add_subcommand("check", "Does the word fix every tile?");
  check->add_option("--m", m);
  check->add_option("--n", n);
  check->add_option("--word", word)->required();
  check->add_option("--x0", x0);
  check->add_option("--radius", radius);
  check->add_option("--max-nodes", max_nodes_flag);
  check->callback([&] {
    CStr out;
    rc = emit(bs_period_check(m, n, word.c_str(), x0.c_str(), radius, nodes(), &out.s), out);
  });

  // subst fixpoint | complexity
  auto* subst_cmd = app.add_subcommand("subst", "Uniform substitutions on {0,1}");
  auto* fixpoint = subst_cmd->add_subcommand("fixpoint", "Two-sided fixpoint windows");
  fixpoint->add_option("--n", n)->required();
  fixpoint->add_option("--r", r)->required();
  fixpoint->add_option("--length", length, "Half length of the window");
  fixpoint->callback([&] {
    CStr out;
    rc = emit(bs_subst_fixpoint(n, r, length, &out.s), out);
  });
  auto* complexity = subst_cmd->add_subcommand("complexity", "Stabilized factor complexity");
  complexity->add_option("--n", n)->required();
  complexity->add_option("--r", r)->required();
  complexity->add_option("--max-len", max_len);
  complexity->callback([&] {
    CStr out;
    rc = emit(bs_subst_complexity(n, r, max_len, &out.s), out);
  });

  // dyn orbit | periodic-search
  auto* dyn_cmd = app.add_subcommand("dyn", "The multiplication system as a dynamical system");
  auto* dorbit = dyn_cmd->add_subcommand("orbit", "Iterated image sets");
  dorbit->add_option("--x0", x0)->required();
  dorbit->add_option("--steps", steps);
  dorbit->callback([&] {
    CStr out;
    rc = emit(bs_dyn_orbit(x0.c_str(), steps, &out.s), out);
  });
  auto* search = dyn_cmd->add_subcommand("periodic-search", "Search for periodic points");
  search->add_option("--denoms", denoms)->required();
  search->add_option("--period", period)->required();
  search->callback([&] {
    CStr out;
    rc = emit(bs_dyn_periodic_search(denoms, period, &out.s), out);
  });

  // bsnn coset | phi
  auto* bsnn_cmd = app.add_subcommand("bsnn", "The index-n subgroup of BS(n,n)");
  auto* coset = bsnn_cmd->add_subcommand("coset", "Coset and subgroup decomposition");
  coset->add_option("--n", n)->required();
  coset->add_option("--word", word)->required();
  coset->callback([&] {
    CStr out;
    rc = emit(bs_bsnn_coset(n, word.c_str(), &out.s), out);
  });
  auto* phi = bsnn_cmd->add_subcommand("phi", "Embed a (z, free word) pair");
  phi->add_option("--n", n)->required();
  phi->add_option("--z", z);
  phi->add_option("--free", free_word);
  phi->callback([&] {
    CStr out;
    rc = emit(bs_bsnn_phi(n, z, free_word.c_str(), &out.s), out);
  });

  // render
  auto* render = app.add_subcommand("render", "Render a patch to SVG");
  render->add_option("--in", in_path)->required();
  render->add_option("--svg", svg_path)->required();
  render->callback([&] {
    std::string text;
    if (!read_file(in_path, text)) {
      rc = fail(BS_USAGE, "cannot read " + in_path);
      return;
    }
    bs_patch* p = nullptr;
    bs_status st = bs_patch_from_json(text.c_str(), &p);
    if (st != BS_OK) {
      rc = fail(st);
      return;
    }
    CStr svg;
    st = bs_patch_render_svg(p, &svg.s);
    bs_patch_free(p);
    if (st != BS_OK) {
      rc = fail(st);
      return;
    }
    if (!write_file(svg_path, svg.s)) {
      rc = fail(BS_USAGE, "cannot write " + svg_path);
      return;
    }
    std::printf("{\"svg\": \"%s\", \"bytes\": %zu}\n", escape(svg_path).c_str(),
                std::string(svg.s).size());
  });

  // accept
  auto* accept = app.add_subcommand("accept", "Run the acceptance criteria");
  accept->add_option("--seed", seed);
  accept->callback([&] {
    CStr out;
    bs_status st = bs_accept(seed, &out.s);
    if (out.s) std::fputs(out.s, stdout);
    if (st != BS_OK && !out.s) {
      rc = fail(st);
      return;
    }
    rc = (int)st;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    return fail(BS_USAGE, e.what());
  }
  return rc;
}
