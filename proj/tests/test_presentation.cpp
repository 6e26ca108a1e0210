#include <doctest.h>

#include "braidforge/degeneration.hpp"
#include "braidforge/presentation.hpp"
#include "braidforge/regeneration.hpp"

using namespace braidforge;

namespace {

FreeWord g(int n, int k) { return FreeWord::generator(n, k); }

}  // namespace

TEST_CASE("word parsing and formatting round trip") {
  Presentation p;
  p.generators = doubled_names(2);
  FreeWord w = parse_word("1 1'^-1 2^2 e", p);
  CHECK(w.letters() == std::vector<int>{1, -2, 3, 3});
  CHECK(format_word(w, p) == "1 1'^-1 2^2");
  CHECK(format_word(FreeWord(4, {}), p) == "e");
  CHECK_THROWS_AS(parse_word("3", p), ParseError);
  CHECK_THROWS_AS(parse_word("1^x", p), ParseError);
  p.add(w);
  Presentation q = presentation_from_json(to_json(p));
  CHECK(q.generators == p.generators);
  CHECK(q.relators.front().letters() == w.letters());
}

TEST_CASE("relator shapes") {
  FreeWord a = g(2, 1), b = g(2, 2);
  CHECK(commutator(a, b).letters() == std::vector<int>{1, 2, -1, -2});
  CHECK(triple(a, b).letters() == std::vector<int>{1, 2, 1, -2, -1, -2});
  CHECK(conj(a, b).letters() == std::vector<int>{-2, 1, 2});
}

TEST_CASE("van Kampen pair of an adjacent half-twist") {
  Factor f = Factor::from_half_twist(compile_sides(4, 2, 3, {}), 1, OriginTag::event(1));
  auto [a, b] = van_kampen_pair(f);
  CHECK(a.letters() == std::vector<int>{3});
  CHECK(b.letters() == std::vector<int>{2});
  CHECK(van_kampen_relator(f).letters() == std::vector<int>{3, -2});
}

TEST_CASE("van Kampen pair of a path below 2,3,5 and above 4") {
  Factor f = Factor::from_half_twist(
      compile_sides(6, 1, 6, {Side::below, Side::below, Side::above, Side::below}), 2, OriginTag::event(1));
  auto [a, b] = van_kampen_pair(f);
  CHECK(a.letters() == std::vector<int>{-4, 6, 4});
  CHECK(b.letters() == std::vector<int>{1});
}

TEST_CASE("van Kampen rejects exponents without a relation") {
  Factor f = Factor::from_half_twist(compile_sides(3, 1, 2, {}), 4, OriginTag::event(1));
  CHECK_THROWS_AS(van_kampen_relator(f), Error);
}

TEST_CASE("btilde presentation") {
  Presentation p = btilde(4);
  CHECK(p.rank() == 3);
  CHECK(p.relators.size() == 4);
  CHECK_THROWS_AS(btilde(3), Error);
  // S_4 satisfies it
  std::vector<Permutation> s{Permutation::transposition(4, 1, 2), Permutation::transposition(4, 2, 3),
                             Permutation::transposition(4, 3, 4)};
  CHECK(perm_rep_check(p, s));
}

TEST_CASE("btilde2 membership is degree and permutation") {
  BraidWord x(4, {1, 2, -1}), y(4, {-1, 2, 1});
  CHECK(btilde2_member(x, y));
  CHECK_FALSE(btilde2_member(x, BraidWord(4, {2})));
  CHECK_FALSE(btilde2_member(BraidWord(4, {1, 1}), BraidWord(4, {})));
  CHECK(btilde2_member(BraidWord(4, {1, 1}), BraidWord(4, {3, 3})));
}

TEST_CASE("coxeter quotient adds squares and identifications") {
  Presentation p;
  p.generators = doubled_names(1);
  Presentation q = coxeter_quotient(p, {{"1", "1'"}});
  REQUIRE(q.relators.size() == 3);
  CHECK(q.relators[2].letters() == std::vector<int>{1, -2});
}

TEST_CASE("plane transpositions represent the regenerated cpg group") {
  for (int genus : {1, 2}) {
    auto plan = cpg_builder(genus);
    Presentation p = van_kampen(assemble_bmf(plan), true, doubled_names(plan.ell()));
    CHECK(p.rank() == 2 * plan.ell());
    auto t = plane_transpositions(plan);
    CHECK(perm_rep_check(coxeter_quotient(p, {}), t));
  }
}
