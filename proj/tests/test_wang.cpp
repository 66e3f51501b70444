#include "bs/wang.hpp"

#include "doctest.h"

#include <memory>

using namespace bs;
using group::GroupParams;
using wang::Label;
using wang::LabelKind;
using wang::Patch;
using wang::Tileset;
using wang::WangTile;

namespace {

group::CanonicalForm cf(const std::string& w, const GroupParams& p) {
  return group::canonical_form(group::parse_word(w), p);
}

WangTile tile12(int top, int b1, int b2, int side) {
  WangTile t;
  t.top = {Label::of(Rat(top))};
  t.bottom = {Label::of(Rat(b1)), Label::of(Rat(b2))};
  t.left = t.right = Label::of(Rat(side));
  return t;
}

}  // namespace

TEST_CASE("labels compare and print") {
  Label r = Label::of(Rat(1, 2));
  Label c = Label::of_color(3);
  Label pr = Label::paired(Rat(1, 2), 3);
  CHECK(r.str() == "1/2");
  CHECK(c.str() == "c3");
  CHECK(pr.str() == "1/2#c3");
  CHECK(r.numeric());
  CHECK_FALSE(c.numeric());
  CHECK(pr.numeric());
  CHECK(pr.numeric_value() == Rat(1, 2));
  CHECK_THROWS_AS((void)c.numeric_value(), UsageError);
  CHECK_FALSE(r == pr);
  CHECK(Label::of(Rat(0)) == Label::of(Rat(0)));
  CHECK(r < pr);  // kind order: rational < color < paired
  CHECK(r < c);
}

TEST_CASE("tileset validation") {
  GroupParams p(1, 2);
  CHECK_NOTHROW(Tileset(p, {tile12(0, 0, 0, 0)}));
  // wrong arity
  WangTile bad = tile12(0, 0, 0, 0);
  bad.bottom.push_back(Label::of(Rat(0)));
  CHECK_THROWS_AS(Tileset(p, {bad}), UsageError);
  // duplicate
  CHECK_THROWS_AS(Tileset(p, {tile12(0, 0, 0, 0), tile12(0, 0, 0, 0)}), UsageError);
  // negative parameters have no tile orientation
  CHECK_THROWS_AS(Tileset(GroupParams(-2, 3), {}), UsageError);
}

TEST_CASE("patch validation and lookup") {
  GroupParams p(1, 2);
  auto ts = std::make_shared<Tileset>(p, std::vector<WangTile>{tile12(1, 1, 2, 0)});
  std::map<group::CanonicalForm, std::size_t> cells;
  cells[cf("e", p)] = 0;
  Patch patch(ts, cells);
  CHECK(patch.tile_at(cf("e", p)) == ts->tiles[0]);
  CHECK_THROWS_AS((void)patch.tile_at(cf("a", p)), UsageError);
  cells[cf("a", p)] = 7;
  CHECK_THROWS_AS(Patch(ts, cells), UsageError);
}

TEST_CASE("verify_patch reports vertical mismatches") {
  GroupParams p(1, 2);
  // X matches itself in column 1; Y's first bottom label differs from X's top.
  auto ts = std::make_shared<Tileset>(
      p, std::vector<WangTile>{tile12(1, 1, 2, 0), tile12(2, 2, 1, 0)});
  std::map<group::CanonicalForm, std::size_t> cells;
  cells[cf("e", p)] = 0;
  cells[cf("b", p)] = 0;  // bottom_1 = 1 matches top(e) = 1
  CHECK(wang::verify_patch(Patch(ts, cells)).empty());

  cells[cf("b", p)] = 1;  // bottom_1 = 2, mismatch
  auto viol = wang::verify_patch(Patch(ts, cells));
  REQUIRE(viol.size() == 1);
  CHECK(viol[0].rule == wang::Violation::Rule::vertical);
  CHECK(viol[0].site == cf("e", p));
  CHECK(viol[0].neighbor == cf("b", p));
  CHECK(viol[0].k == 1);
  CHECK(viol[0].l == 1);
  CHECK(viol[0].expected == Label::of(Rat(1)));
  CHECK(viol[0].actual == Label::of(Rat(2)));

  // second column: the cell above e in column 2 is a^-1 b
  cells.erase(cf("b", p));
  cells[cf("Ab", p)] = 1;  // bottom_2 = 1 matches top(e)
  CHECK(wang::verify_patch(Patch(ts, cells)).empty());
  cells[cf("Ab", p)] = 0;  // bottom_2 = 2, mismatch
  auto viol2 = wang::verify_patch(Patch(ts, cells));
  REQUIRE(viol2.size() == 1);
  CHECK(viol2[0].l == 2);
}

TEST_CASE("verify_patch reports horizontal mismatches") {
  GroupParams p(2, 3);
  WangTile u, v;
  u.top = {Label::of(Rat(0)), Label::of(Rat(0))};
  u.bottom = {Label::of(Rat(0)), Label::of(Rat(0)), Label::of(Rat(0))};
  u.left = Label::of(Rat(1));
  u.right = Label::of(Rat(2));
  v = u;
  v.left = Label::of(Rat(2));
  v.right = Label::of(Rat(1));
  auto ts = std::make_shared<Tileset>(p, std::vector<WangTile>{u, v});
  std::map<group::CanonicalForm, std::size_t> cells;
  cells[cf("e", p)] = 0;
  cells[cf("a^2", p)] = 1;  // left(v) = 2 = right(u)
  cells[cf("a^4", p)] = 0;  // left(u) = 1 = right(v)
  CHECK(wang::verify_patch(Patch(ts, cells)).empty());
  cells[cf("a^4", p)] = 1;  // left(v) = 2 != right(v) = 1
  auto viol = wang::verify_patch(Patch(ts, cells));
  REQUIRE(viol.size() == 1);
  CHECK(viol[0].rule == wang::Violation::Rule::horizontal);
  CHECK(viol[0].site == cf("a^2", p));
  CHECK(viol[0].neighbor == cf("a^4", p));
  // a cell one step left of e completes the chain without new mismatches
  cells[cf("a^4", p)] = 0;
  cells[cf("A^2", p)] = 1;
  CHECK(wang::verify_patch(Patch(ts, cells)).empty());
}

TEST_CASE("check_multiplies") {
  GroupParams p(2, 3);
  // top sum 1, bottom sum 3: 2*(1/2) + l = 3/3 + r forces l = r.
  WangTile t;
  t.top = {Label::of(Rat(0)), Label::of(Rat(1))};
  t.bottom = {Label::of(Rat(1)), Label::of(Rat(1)), Label::of(Rat(1))};
  t.left = Label::of(Rat(1, 6));
  t.right = Label::of(Rat(1, 6));
  CHECK(wang::check_multiplies(Tileset(p, {t}), Rat(2)));
  t.right = Label::of(Rat(1, 7));
  CHECK_FALSE(wang::check_multiplies(Tileset(p, {t}), Rat(2)));
  t.right = Label::of_color(1);
  CHECK_THROWS_AS(wang::check_multiplies(Tileset(p, {t}), Rat(2)), UsageError);
}

TEST_CASE("line_word walks a level") {
  GroupParams p(1, 2);
  auto ts = std::make_shared<Tileset>(
      p, std::vector<WangTile>{tile12(1, 1, 2, 0), tile12(2, 3, 4, 0)});
  std::map<group::CanonicalForm, std::size_t> cells;
  cells[cf("e", p)] = 0;
  cells[cf("a", p)] = 1;
  cells[cf("a^2", p)] = 0;
  Patch patch(ts, cells);

  auto tops = wang::line_word(patch, cf("e", p), wang::Side::top, 1, 3);
  REQUIRE(tops.size() == 3);
  CHECK(tops[0] == Label::of(Rat(1)));
  CHECK(tops[1] == Label::of(Rat(2)));
  CHECK(tops[2] == Label::of(Rat(1)));

  // bottom side packs two labels per tile
  auto bots = wang::line_word(patch, cf("e", p), wang::Side::bottom, 1, 6);
  REQUIRE(bots.size() == 6);
  CHECK(bots[0] == Label::of(Rat(1)));
  CHECK(bots[1] == Label::of(Rat(2)));
  CHECK(bots[2] == Label::of(Rat(3)));
  CHECK(bots[3] == Label::of(Rat(4)));
  CHECK(bots[4] == Label::of(Rat(1)));
  CHECK(bots[5] == Label::of(Rat(2)));

  // negative positions reach cells left of the base
  cells[cf("A", p)] = 1;
  Patch wider(ts, cells);
  auto left = wang::line_word(wider, cf("e", p), wang::Side::top, 0, 1);
  REQUIRE(left.size() == 2);
  CHECK(left[0] == Label::of(Rat(2)));
  CHECK(left[1] == Label::of(Rat(1)));

  CHECK_THROWS_AS(wang::line_word(patch, cf("e", p), wang::Side::top, 3, 1), UsageError);
  try {
    wang::line_word(patch, cf("e", p), wang::Side::top, 1, 5);
    FAIL("expected GapError");
  } catch (const wang::GapError& gap) {
    CHECK(gap.missing == std::vector<long long>{4, 5});
  }
}

TEST_CASE("window_check counts targets per window") {
  Label one = Label::of(Rat(1)), zero = Label::of(Rat(0));
  std::vector<Label> word{zero, one, zero, zero, one, zero};
  CHECK(wang::window_check(word, 3, 1, one));
  CHECK_FALSE(wang::window_check(word, 2, 1, one));
  CHECK(wang::window_check(word, 1, 0, one));
  CHECK(wang::window_check(word, 6, 2, one));
  CHECK_FALSE(wang::window_check(word, 6, 3, one));
  CHECK_THROWS_AS(wang::window_check(word, 0, 0, one), UsageError);
  CHECK_THROWS_AS(wang::window_check(word, 7, 0, one), UsageError);
}
