#include <doctest.h>

#include <algorithm>
#include <set>

#include "braidforge/artin.hpp"
#include "braidforge/degeneration.hpp"
#include "g1_support.hpp"

using namespace braidforge;

namespace {

ArtinGraph path(std::vector<std::string> vs, std::vector<std::string> es) {
  ArtinGraph t;
  t.vertices = vs;
  for (std::size_t i = 0; i < es.size(); ++i) t.edges.push_back({es[i], vs[i], vs[i + 1]});
  return t;
}

std::set<std::vector<int>> keys(const Presentation& p) {
  std::set<std::vector<int>> out;
  for (const auto& r : p.relators) out.insert(relator_key(r));
  return out;
}

// Relators of q rewritten in the generator order of p.
std::set<std::vector<int>> keys_in(const Presentation& q, const Presentation& p) {
  std::set<std::vector<int>> out;
  for (const auto& r : q.relators) {
    std::vector<int> ls;
    for (int l : r.letters()) {
      int k = p.index_of(q.generators[std::abs(l) - 1]);
      ls.push_back(l > 0 ? k : -k);
    }
    out.insert(relator_key(FreeWord(p.rank(), ls)));
  }
  return out;
}

}  // namespace

TEST_CASE("two disjoint edges commute") {
  ArtinGraph t;
  t.vertices = {"a", "b", "c", "d"};
  t.edges = {{"u", "a", "b"}, {"v", "c", "d"}};
  Presentation p = artin_hat(t);
  REQUIRE(p.relators.size() == 1);
  CHECK(p.relators[0] == commutator(FreeWord::generator(2, 1), FreeWord::generator(2, 2)));
  CHECK_FALSE(satisfies_otimes(t));
}

TEST_CASE("gluing two single edges gives a braid relation") {
  ArtinGraph a = path({"x", "y"}, {"u"});
  ArtinGraph b = path({"x", "z"}, {"w"});
  ArtinGraph t = glue_graphs(a, "y", b, "x");
  CHECK(t.vertices.size() == 3);
  CHECK(satisfies_otimes(t));
  Presentation p = artin_hat(t);
  REQUIRE(p.relators.size() == 1);
  CHECK(p.relators[0] == triple(FreeWord::generator(2, 1), FreeWord::generator(2, 2)));
  CHECK(keys(amalgam_presentation(a, "y", b, "x")) == keys(p));
}

TEST_CASE("glue_graphs enforces the valence bound and distinct edges") {
  ArtinGraph a = path({"a", "b", "c"}, {"u", "v"});
  ArtinGraph b = path({"x", "y", "z"}, {"w", "s"});
  CHECK_THROWS_AS(glue_graphs(a, "b", b, "y"), Error);
  CHECK_NOTHROW(glue_graphs(a, "b", b, "x"));
  CHECK_THROWS_AS(glue_graphs(a, "a", path({"p", "q"}, {"u"}), "p"), Error);
}

TEST_CASE("glued graph matches the amalgam at a vertex of valence three") {
  ArtinGraph a = path({"a", "b", "c"}, {"u", "v"});
  ArtinGraph b = path({"x", "y", "z"}, {"w", "s"});
  ArtinGraph t = glue_graphs(a, "a", b, "x");
  REQUIRE(t.triples.size() == 0);
  ArtinGraph c = path({"m", "n"}, {"r"});
  ArtinGraph t3 = glue_graphs(t, "a", c, "m");
  REQUIRE(t3.triples.size() == 1);
  CHECK(t3.triples[0].u == "u");
  CHECK(t3.triples[0].v == "w");
  CHECK(t3.triples[0].w == "r");
  CHECK(satisfies_otimes(t3));
  Presentation glued = artin_hat(t3);
  Presentation amalgam = amalgam_presentation(t, "a", c, "m");
  CHECK(keys(amalgam) == keys_in(glued, amalgam));
  CHECK(amalgam.relators.size() == glued.relators.size());
}

TEST_CASE("disjoint union adds every cross commutator") {
  ArtinGraph a = path({"a", "b", "c"}, {"u", "v"});
  ArtinGraph b = path({"x", "y"}, {"w"});
  ArtinGraph t = a;
  t.vertices.insert(t.vertices.end(), b.vertices.begin(), b.vertices.end());
  t.edges.insert(t.edges.end(), b.edges.begin(), b.edges.end());
  Presentation p = artin_hat(t);
  CHECK(p.relators.size() == 1 + 2);
  CHECK(keys(p).count(relator_key(commutator(FreeWord::generator(3, 1), FreeWord::generator(3, 3)))));
  CHECK(keys(p).count(relator_key(commutator(FreeWord::generator(3, 2), FreeWord::generator(3, 3)))));
}

TEST_CASE("unannotated configurations are reported") {
  ArtinGraph star;
  star.vertices = {"o", "a", "b", "c"};
  star.edges = {{"u", "o", "a"}, {"v", "o", "b"}, {"w", "o", "c"}};
  CHECK_THROWS_AS(artin_hat(star), Error);
  star.triples.push_back({"u", "v", "w"});
  Presentation p = artin_hat(star);
  CHECK(p.relators.back() == commutator(FreeWord::generator(3, 1), parse_word("v w v^-1", p)));

  ArtinGraph twin = path({"a", "b"}, {"v"});
  twin.edges.push_back({"v'", "a", "b"});
  CHECK_THROWS_AS(artin_hat(twin), Error);
  CHECK_FALSE(satisfies_otimes(twin));
}

TEST_CASE("T1 has the plane graph of the genus one degeneration") {
  ArtinGraph t = t1_graph();
  CHECK(t.vertices.size() == 8);
  CHECK(t.edges.size() == 9);
  CHECK(t.shared_vertices("4", "4'") == 2);
  CHECK(t.edge("3").u == "P4");
  CHECK(t.edge("3").v == "P8");
  for (const auto& v : t.vertices) CHECK(t.degree(v) <= 3);
  ArtinHat hat = artin_hat_labeled(t);
  auto count = [&](ArtinRelationKind k) { return std::count(hat.kinds.begin(), hat.kinds.end(), k); };
  CHECK(count(ArtinRelationKind::disjoint) == 24);
  CHECK(count(ArtinRelationKind::adjacent) == 11);
  CHECK(count(ArtinRelationKind::triple) == 1);
  CHECK(count(ArtinRelationKind::quadruple) == 3);
  CHECK(count(ArtinRelationKind::circles) == 1);
  Presentation& p = hat.presentation;
  CHECK(p.relators.back() == triple(parse_word("3^-1 4 3", p), parse_word("5 6 7 8 4' 8^-1 7^-1 6^-1 5^-1", p)));
}

TEST_CASE("A(T1) with rho1 is the G1 presentation") {
  auto issues = testing::g1_correspondence_issues(BRAIDFORGE_GOLDEN_DIR "/g1_presentation.txt");
  for (const auto& s : issues) INFO(s);
  CHECK(issues.empty());
  for (const auto& s : issues) MESSAGE(s);
}

TEST_CASE("T_g glues copies of T0 into the plane graph of the genus g degeneration") {
  for (int g : {2, 3}) {
    ArtinGraph t = tg_graph(g);
    ArtinGraph plane = plane_graph(cpg_builder(g));
    CHECK(t.vertices.size() == static_cast<std::size_t>(8 * g));
    CHECK(t.edges.size() == static_cast<std::size_t>(10 * g - 1));
    for (const auto& e : plane.edges) {
      const ArtinEdge& f = t.edge(e.name);
      CHECK(std::set<std::string>{e.u, e.v} == std::set<std::string>{f.u, f.v});
    }
    CHECK_NOTHROW(artin_hat(t));
    CHECK(abelianize(artin_hat(t)) == AbelianInvariants{1, {}});
  }
  ArtinGraph t0 = t0_graph(2);
  CHECK(t0.vertices.size() == 9);
  CHECK(t0.edges.size() == 10);
}

TEST_CASE("abelianize via Smith normal form") {
  CHECK(abelianize(btilde(5)) == AbelianInvariants{1, {}});
  Presentation d;
  d.generators = {"a", "b"};
  d.add(parse_word("a^2", d));
  d.add(parse_word("b^2", d));
  CHECK(abelianize(d) == AbelianInvariants{0, {2, 2}});
  Presentation z6;
  z6.generators = {"a", "b"};
  z6.add(parse_word("a^2", z6));
  z6.add(parse_word("b^3", z6));
  CHECK(abelianize(z6) == AbelianInvariants{0, {6}});
  Presentation free;
  free.generators = {"a", "b", "c"};
  CHECK(abelianize(free) == AbelianInvariants{3, {}});
  CHECK(abelianize(artin_hat(t1_graph())) == AbelianInvariants{1, {}});
  CHECK(abelianize(coxeter_quotient(artin_hat(t1_graph()), {})) == AbelianInvariants{0, {2}});
  CHECK(smith_diagonal({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}) == std::vector<long long>{2, 6, 12});
}
