#include "bs/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace bs::json_io {

namespace {

using nlohmann::json;

long long to_i64(const Int& v, const char* what) {
  if (v < std::numeric_limits<long long>::min() || v > std::numeric_limits<long long>::max())
    throw LimitError(std::string(what) + " does not fit in 64 bits");
  return static_cast<long long>(v);
}

json label_to_json(const wang::Label& l) {
  json out = json::object();
  if (l.kind != wang::LabelKind::color) {
    out["num"] = to_i64(numerator(l.value), "label numerator");
    out["den"] = to_i64(denominator(l.value), "label denominator");
  }
  if (l.kind != wang::LabelKind::rational) out["color"] = l.color;
  return out;
}

long long get_int(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_number_integer()) throw ParseError(std::string("field is not an integer: ") + key);
  return v.get<long long>();
}

wang::Label label_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("label must be an object");
  bool has_rat = j.contains("num") || j.contains("den");
  bool has_color = j.contains("color");
  if (has_rat && (!j.contains("num") || !j.contains("den")))
    throw ParseError("rational label needs both num and den");
  if (!has_rat && !has_color) throw ParseError("label carries neither a rational nor a color");
  Rat value = 0;
  int color = 0;
  if (has_rat) {
    long long den = get_int(j, "den");
    if (den == 0) throw ParseError("label denominator is zero");
    value = Rat(get_int(j, "num"), den);
  }
  if (has_color) {
    long long c = get_int(j, "color");
    if (c < std::numeric_limits<int>::min() || c > std::numeric_limits<int>::max())
      throw ParseError("color does not fit in 32 bits");
    color = static_cast<int>(c);
  }
  if (has_rat && has_color) return wang::Label::paired(value, color);
  if (has_rat) return wang::Label::of(value);
  return wang::Label::of_color(color);
}

json tileset_obj(const wang::Tileset& ts) {
  json tiles = json::array();
  for (const wang::WangTile& t : ts.tiles) {
    json jt = json::object();
    jt["top"] = json::array();
    for (const auto& l : t.top) jt["top"].push_back(label_to_json(l));
    jt["left"] = label_to_json(t.left);
    jt["right"] = label_to_json(t.right);
    jt["bottom"] = json::array();
    for (const auto& l : t.bottom) jt["bottom"].push_back(label_to_json(l));
    tiles.push_back(std::move(jt));
  }
  return json{{"m", ts.params.m}, {"n", ts.params.n}, {"tiles", std::move(tiles)}};
}

wang::Tileset tileset_from_obj(const json& j) {
  if (!j.is_object()) throw ParseError("tileset must be an object");
  group::GroupParams params(get_int(j, "m"), get_int(j, "n"));
  const auto& tiles = j.at("tiles");
  if (!tiles.is_array()) throw ParseError("tiles must be an array");
  std::vector<wang::WangTile> out;
  for (const auto& jt : tiles) {
    wang::WangTile t;
    for (const auto& l : jt.at("top")) t.top.push_back(label_from_json(l));
    t.left = label_from_json(jt.at("left"));
    t.right = label_from_json(jt.at("right"));
    for (const auto& l : jt.at("bottom")) t.bottom.push_back(label_from_json(l));
    out.push_back(std::move(t));
  }
  return wang::Tileset(params, std::move(out));
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
}

}  // namespace

std::string tileset_to_json(const wang::Tileset& ts) { return tileset_obj(ts).dump(2) + "\n"; }

wang::Tileset tileset_from_json(const std::string& text) {
  json j = parse_text(text);
  try {
    return tileset_from_obj(j);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad tileset JSON: ") + e.what());
  }
}

std::string patch_to_json(const wang::Patch& patch) {
  json cells = json::array();
  for (const auto& [g, idx] : patch.cells)
    cells.push_back(json{{"word", group::to_string(g.word())}, {"tile_index", idx}});
  json j{{"tileset_ref", tileset_obj(*patch.tileset)}, {"cells", std::move(cells)}};
  return j.dump(2) + "\n";
}

wang::Patch patch_from_json(const std::string& text) {
  json j = parse_text(text);
  try {
    auto ts = std::make_shared<const wang::Tileset>(tileset_from_obj(j.at("tileset_ref")));
    const auto& cells = j.at("cells");
    if (!cells.is_array()) throw ParseError("cells must be an array");
    std::map<group::CanonicalForm, std::size_t> map;
    for (const auto& jc : cells) {
      const auto& w = jc.at("word");
      if (!w.is_string()) throw ParseError("cell word must be a string");
      long long idx = get_int(jc, "tile_index");
      if (idx < 0 || static_cast<size_t>(idx) >= ts->tiles.size())
        throw ParseError("tile_index out of range: " + std::to_string(idx));
      auto g = group::canonical_form(group::parse_word(w.get<std::string>()), ts->params);
      if (!map.emplace(std::move(g), static_cast<size_t>(idx)).second)
        throw ParseError("duplicate cell: " + w.get<std::string>());
    }
    return wang::Patch(std::move(ts), std::move(map));
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad patch JSON: ") + e.what());
  }
}

std::string violations_to_json(const std::vector<wang::Violation>& vs) {
  json arr = json::array();
  for (const auto& v : vs) {
    json jv = json::object();
    jv["rule"] = v.rule == wang::Violation::Rule::horizontal ? "horizontal" : "vertical";
    jv["site"] = group::to_string(v.site.word());
    jv["neighbor"] = group::to_string(v.neighbor.word());
    if (v.rule == wang::Violation::Rule::vertical) {
      jv["k"] = v.k;
      jv["l"] = v.l;
    }
    jv["expected"] = label_to_json(v.expected);
    jv["actual"] = label_to_json(v.actual);
    arr.push_back(std::move(jv));
  }
  json j{{"violations", vs.size()}, {"details", std::move(arr)}};
  return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open file for writing: " + path);
  out << data;
  if (!out) throw UsageError("write failed: " + path);
}

}  // namespace bs::json_io
