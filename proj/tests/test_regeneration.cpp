#include <doctest.h>

#include <fstream>
#include <sstream>

#include "braidforge/degeneration.hpp"
#include "braidforge/regeneration.hpp"

using namespace braidforge;

namespace {

BraidWord product(const std::vector<Factor>& fs, int n) {
  BraidWord w(n);
  for (const auto& f : fs) w = w * f.braid();
  return w;
}

int degree_of(const std::vector<Factor>& fs) {
  int d = 0;
  for (const auto& f : fs) d += f.degree();
  return d;
}

BraidWord sq(int n, int k) { return BraidWord(n, {k, k}); }

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(BRAIDFORGE_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const OriginTag tag = OriginTag::event(1);

}  // namespace

TEST_CASE("cable of a single crossing") {
  CHECK(cable(BraidWord(2, {1}), {2, 1}).word == BraidWord(3, {2, 1}));
  CHECK(cable(BraidWord(2, {1}), {1, 2}).word == BraidWord(3, {1, 2}));
  CHECK(cable(BraidWord(2, {1}), {2, 2}).word == BraidWord(4, {2, 1, 3, 2}));
  CHECK(cable(BraidWord(2, {1}), {2, 1}).widths == std::vector<int>{1, 2});
  CHECK(cable(BraidWord(2, {-1}), {2, 1}).word == BraidWord(3, {-2, -1}));
}

TEST_CASE("cable is a homomorphism on mixed widths") {
  for (auto widths : {std::vector<int>{2, 1, 2}, std::vector<int>{1, 2, 1}, std::vector<int>{2, 1, 1}}) {
    BraidWord w(3, {1, -2, 2, 2, -1, 1, -2});
    CHECK(braid_is_identity(cable(w * w.inverse(), widths).word));
    Cabled first = cable(BraidWord(3, {1, -2}), widths);
    Cabled second = cable(BraidWord(3, {2, 2, -1, 1, -2}), first.widths);
    CHECK(braid_equal(first.word * second.word, cable(w, widths).word));
  }
}

TEST_CASE("cabled full twist is the full twist without band framing") {
  // bands {1,2} and {3,4}
  BraidWord c = cable(sq(2, 1), {2, 2}).word;
  CHECK(braid_equal(c * sq(4, 1) * sq(4, 3), full_twist(4)));
  BraidWord d = cable(sq(2, 1), {1, 2}).word;
  CHECK(braid_equal(d * sq(3, 2), full_twist(3)));
  CHECK(braid_equal(cable(full_twist(3), {1, 1, 1}).word, full_twist(3)));
}

TEST_CASE("rule 1: branch point on two doubled bands") {
  auto fs = rule1(4, 1, tag);
  REQUIRE(fs.size() == 2);
  CHECK(braid_equal(fs[0].braid(), BraidWord(4, {2})));
  // 1 -> 4 below 2 and above 3
  CHECK(braid_equal(fs[1].braid(), BraidWord(4, {-3, 2, 1, -2, 3})));
  CHECK(degree_of(fs) == 2);
}

TEST_CASE("rule 2: node regenerates to the cabled node") {
  for (auto [w1, w2] : {std::pair{1, 2}, std::pair{2, 1}, std::pair{2, 2}}) {
    int n = w1 + w2;
    auto fs = rule2(n, 1, w1, w2, tag);
    CHECK(fs.size() == static_cast<std::size_t>(w1 * w2));
    for (const auto& f : fs) CHECK(f.exponent == 2);
    CHECK(braid_equal(product(fs, n), cable(sq(2, 1), {w1, w2}).word));
  }
  CHECK(braid_equal(product(rule2(4, 1, 2, 2, tag), 4) * sq(4, 1) * sq(4, 3), full_twist(4)));
}

TEST_CASE("rule 3: tangency regenerates to three cusps") {
  for (auto [w1, w2, j] : {std::tuple{1, 2, 2}, std::tuple{2, 1, 1}}) {
    auto fs = rule3(3, 1, w1, w2, tag);
    REQUIRE(fs.size() == 3);
    CHECK(degree_of(fs) == 9);
    BraidWord z = BraidWord::generator(3, j);
    // (X)_{Z}, X, (X)_{Z^-1} with (a)_b = b^-1 a b
    CHECK(braid_equal(fs[0].braid(), z.inverse() * fs[1].braid() * z));
    CHECK(braid_equal(fs[2].braid(), z * fs[1].braid() * z.inverse()));
    CHECK(braid_equal(product(fs, 3), cable(BraidWord(2, {1, 1, 1, 1}), {w1, w2}).word * z));
  }
  CHECK_THROWS_AS(rule3(4, 1, 2, 2, tag), UnsupportedEvent);
}

TEST_CASE("regeneration degree ledger") {
  Factor branch{2, BraidWord(2), 1, 2, 1, tag};
  Factor node{2, BraidWord(2), 1, 2, 2, tag};
  Factor tangency{2, BraidWord(2), 1, 2, 4, tag};
  CHECK(degree_of(regenerate_factor(branch, {2, 2})) == 2);
  CHECK(degree_of(regenerate_factor(node, {1, 2})) == 4);
  CHECK(degree_of(regenerate_factor(node, {2, 2})) == 8);
  CHECK(degree_of(regenerate_factor(tangency, {2, 1})) == 9);
  CHECK(degree_of(regenerate_factor(node, {1, 1})) == 2);
  CHECK_THROWS_AS(regenerate_factor(tangency, {2, 2}), UnsupportedEvent);
}

TEST_CASE("regeneration commutes with conjugation of the band") {
  // node on points 1,3 below point 2, all points doubled
  Factor node = Factor::from_half_twist(compile_sides(3, 1, 3, {Side::below}), 2, tag);
  auto fs = regenerate_factor(node, {2, 2, 2});
  CHECK(braid_equal(product(fs, 6), cable(node.braid(), {2, 2, 2}).word));
  CHECK(degree_of(fs) == 8);
}

TEST_CASE("vertex fragments of B1") {
  auto p = cpg_builder(1);
  CHECK(degree_of(vertex_fragment(p, 1)) == 1);
  CHECK(degree_of(vertex_fragment(p, 2)) == 27);
  for (int v = 3; v <= 8; ++v) CHECK(degree_of(vertex_fragment(p, v)) == 10);
  CHECK(vertex_model(p, 4).notation == "Z3[4',8 8'] Ztilde[4,4']");
  CHECK(vertex_model(p, 3).notation == "Z3[6 6',7] Ztilde[7,7']");
}

TEST_CASE("degenerate factorization of B1") {
  auto f = degenerate_bmf(cpg_builder(1));
  auto a = audit(f);
  CHECK(a.total == 56);
  CHECK(a.degree_ok());
  CHECK(a.permutation_identity);
}

TEST_CASE("B1 golden factorization") {
  auto f = assemble_bmf(cpg_builder(1));
  CHECK(f.serialize() == read_golden("b1.txt"));
  auto a = audit(f);
  CHECK(a.total == 240);
  CHECK(a.degree_ok());
  CHECK(a.permutation_identity);
}

TEST_CASE("B2 golden factorization") {
  auto f = assemble_bmf(cpg_builder(2));
  CHECK(f.serialize() == read_golden("b2.txt"));
  auto a = audit(f);
  CHECK(a.total == 34 * 33);
  CHECK(a.permutation_identity);
}

TEST_CASE("untabulated genus uses the default decoration") {
  auto p = cpg_builder(3);
  CHECK_FALSE(decoration_is_tabulated(p, 1, 3));
  auto a = audit(assemble_bmf(p));
  CHECK(a.total == 52 * 51);
  CHECK(a.permutation_identity);
}
