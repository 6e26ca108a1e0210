#include <doctest.h>

#include <fstream>
#include <sstream>

#include "braidforge/degeneration.hpp"
#include "braidforge/invariance.hpp"
#include "braidforge/regeneration.hpp"
#include "braidforge/relations.hpp"

using namespace braidforge;

namespace {

Presentation doubled(int ell) {
  Presentation p;
  p.generators = doubled_names(ell);
  return p;
}

std::vector<Relation> prs1_targets(const Presentation& p) {
  std::ifstream in(BRAIDFORGE_GOLDEN_DIR "/prs1.txt");
  REQUIRE(in.good());
  std::vector<Relation> out;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    for (auto& r : parse_relations(line, p)) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

TEST_CASE("relation syntax expands underlined generators") {
  Presentation p = doubled(3);
  auto rs = parse_relations("[3 _2 3^-1, _1]", p);
  REQUIRE(rs.size() == 4);
  CHECK(rs[0].shape == RelationShape::commute);
  CHECK(format_relation(rs[3], p) == "[3 2' 3^-1, 1']");
  auto eq = parse_relations("1 = 2' 2 1' 2^-1 2'^-1", p);
  REQUIRE(eq.size() == 1);
  CHECK(eq[0].relator() == parse_word("1 2' 2 1'^-1 2^-1 2'^-1", p));
  CHECK(parse_relations("<1, 2>", p)[0].shape == RelationShape::braid);
  CHECK_THROWS_AS(parse_relations("[1 2]", p), ParseError);
  CHECK_THROWS_AS(parse_relations("<1, 2]", p), ParseError);
}

TEST_CASE("relator keys identify rotations and inverses") {
  Presentation p = doubled(2);
  FreeWord w = parse_word("1 2 1^-1 2^-1", p);
  CHECK(relator_key(w) == relator_key(parse_word("2 1 2^-1 1^-1", p)));
  CHECK(relator_key(w) == relator_key(parse_word("2^-1 1 2 1^-1", p)));
  CHECK(relator_key(w) == relator_key(parse_word("1' 1 2 1^-1 2^-1 1'^-1", p)));
  CHECK(relator_key(w) != relator_key(parse_word("1 2 1 2^-1 1^-1 2^-1", p)));
}

TEST_CASE("peeling uses established commutations only") {
  Presentation p = doubled(3);
  std::vector<std::vector<bool>> c(7, std::vector<bool>(7, false));
  Relation r = parse_relations("[2^-1 3 2, 1]", p)[0];
  CHECK(peel(r, c).a == r.a);
  c[1][3] = c[3][1] = true;  // [1,2]
  CHECK(format_relation(peel(r, c), p) == "[3, 1]");
  Relation q = parse_relations("2^-1 1 3 1^-1 2 = 3", p)[0];
  c[1][5] = c[5][1] = true;  // [1,3]
  CHECK(format_relation(peel(q, c), p) == "2^-1 3 2 = 3");
}

TEST_CASE("complex conjugation reflects the path") {
  Factor f = Factor::from_half_twist(
      compile_sides(6, 1, 6, {Side::below, Side::below, Side::above, Side::below}), 2, OriginTag::event(1));
  Factor g = Factor::from_half_twist(
      compile_sides(6, 1, 6, {Side::above, Side::above, Side::below, Side::above}), 2, OriginTag::event(1));
  CHECK(braid_equal(complex_conjugate(f).braid(), g.braid()));
  auto [a, b] = van_kampen_pair(complex_conjugate(f));
  auto [c, d] = van_kampen_pair(g);
  CHECK(relator_key(commutator(a, b)) == relator_key(commutator(c, d)));
}

TEST_CASE("loop action is the action on van Kampen pairs") {
  BraidWord h(5, {2, -3, 1});
  for (int k = 1; k <= 4; ++k) {
    Factor f = Factor::from_half_twist(compile_sides(5, k, k + 1, {}), 1, OriginTag::event(1));
    Factor moved = f;
    moved.conj = h.inverse() * f.conj;
    auto [a, b] = van_kampen_pair(f);
    auto [a2, b2] = van_kampen_pair(moved);
    CHECK(loop_action(h.inverse(), a) == a2);
    CHECK(loop_action(h.inverse(), b) == b2);
  }
}

TEST_CASE("B1 van Kampen relations match the printed presentation after normalization") {
  auto f = assemble_bmf(cpg_builder(1));
  Presentation p = doubled(8);
  NormalizeOptions opt;
  for (int k : {1, 2, 4, 5, 6, 7, 8}) {
    BraidWord h(16, {2 * k - 1});
    REQUIRE(invariance_check(f, h, 0).verdict == Invariance::invariant);
    opt.invariance.push_back(h);
  }
  auto targets = prs1_targets(p);
  CHECK(targets.size() == 116);
  auto rels = normalized_relations(f, opt);
  auto missing = unmatched(targets, rels);
  for (const auto& r : missing) MESSAGE(format_relation(r, p));
  CHECK(missing.empty());

  NormalizeOptions bare;
  auto without = unmatched(targets, normalized_relations(f, bare));
  CHECK(without.size() == 12);
  for (const auto& r : without) CHECK(r.shape == RelationShape::braid);
}
