#include <doctest.h>

#include "braidforge/braid.hpp"

using namespace braidforge;

namespace {

BraidWord B(int n, const char* text) { return parse_braid(text, n); }

FreeWord G(int n, std::vector<int> letters) { return FreeWord(n, std::move(letters)); }

}  // namespace

TEST_CASE("degree") {
  CHECK(degree(B(3, "s1 s2^-1")) == 0);
  for (int n = 2; n <= 7; ++n) CHECK(degree(full_twist(n)) == n * (n - 1));
  CHECK(degree(B(4, "s2^3")) == 3);
}

TEST_CASE("permutation") {
  CHECK(permutation(BraidWord(3)).is_identity());
  CHECK(permutation(B(3, "s1 s2 s1")) == Permutation::transposition(3, 1, 3));
  // (12)(23)(12) composed by hand
  Permutation t12 = Permutation::transposition(3, 1, 2);
  Permutation t23 = Permutation::transposition(3, 2, 3);
  CHECK(permutation(B(3, "s1 s2 s1")) == t12 * t23 * t12);
  for (int n = 2; n <= 7; ++n) CHECK(permutation(full_twist(n)).is_identity());
  CHECK(permutation(B(4, "s1 s2")).to_cycles() == "(1 3 2)");
}

TEST_CASE("full twist") {
  CHECK(full_twist(2) == B(2, "s1^2"));
  CHECK(full_twist(3) == B(3, "s1 s2 s1 s2 s1 s2"));
  CHECK_THROWS_AS(full_twist(1), Error);
  CHECK(braid_equal(garside_delta(4).pow(2), full_twist(4)));
  for (int n = 2; n <= 6; ++n) {
    BraidWord d = full_twist(n);
    for (int i = 1; i < n; ++i) {
      BraidWord s = BraidWord::generator(n, i);
      CHECK(braid_equal(d * s, s * d));
    }
  }
}

TEST_CASE("artin action") {
  FreeWord g1 = FreeWord::generator(3, 1);
  CHECK(artin_action(BraidWord(3), G(3, {1, -2, 3})) == G(3, {1, -2, 3}));
  CHECK(artin_action(B(3, "s1"), g1) == G(3, {1, 2, -1}));
  CHECK(artin_action(B(3, "s1"), FreeWord::generator(3, 2)) == g1);
  CHECK(artin_action(B(3, "s1^-1"), g1) == FreeWord::generator(3, 2));
  CHECK(artin_action(B(3, "s1^-1"), FreeWord::generator(3, 2)) == G(3, {-2, 1, 2}));
  // action of uv is action of u after v
  BraidWord u = B(4, "s1 s3^-1 s2"), v = B(4, "s2^-1 s1 s1 s3");
  FreeWord w = G(4, {1, 2, -4, 3, 3});
  CHECK(artin_action(u * v, w) == artin_action(u, artin_action(v, w)));
  // the boundary word is fixed
  FreeWord boundary = G(4, {1, 2, 3, 4});
  CHECK(artin_action(u * v.inverse() * u, boundary) == boundary);
  CHECK_THROWS_AS(artin_action(u, g1), Error);
}

TEST_CASE("braid equality") {
  CHECK(braid_equal(B(3, "s1 s2 s1"), B(3, "s2 s1 s2")));
  CHECK(braid_equal(B(4, "s1 s3"), B(4, "s3 s1")));
  CHECK_FALSE(braid_equal(B(3, "s1"), B(3, "s2")));
  CHECK_FALSE(braid_equal(B(3, "s1 s2"), B(3, "s2 s1")));
  // same degree and permutation, different element
  CHECK_FALSE(braid_equal(B(3, "s1^2 s2^2"), B(3, "s2^2 s1^2")));
  CHECK(braid_equal(B(3, "s1 s1^-1 s2"), B(3, "s2")));
  CHECK_THROWS_AS(braid_equal(B(3, "s1"), B(4, "s1")), Error);
  CHECK(braid_hash(B(3, "s1 s2 s1")) == braid_hash(B(3, "s2 s1 s2")));
}

TEST_CASE("braid text syntax") {
  BraidWord w = B(5, "s1 s2^-1 s3^2 s4^-2");
  CHECK(w.letters() == std::vector<int>{1, -2, 3, 3, -4, -4});
  CHECK(format_braid(w) == "s1 s2^-1 s3^2 s4^-2");
  CHECK(format_braid(BraidWord(3)) == "e");
  CHECK(parse_braid("e", 3).empty());
  CHECK_THROWS_AS(parse_braid("s5", 5), ParseError);
  CHECK_THROWS_AS(parse_braid("x1", 5), ParseError);
  CHECK_THROWS_AS(parse_braid("s1^a", 5), ParseError);
}

TEST_CASE("block delta") {
  CHECK(block_delta(5, 2, 3) == B(5, "s2 s3 s2"));
  CHECK(block_delta(5, 4, 2) == B(5, "s4"));
  CHECK(braid_equal(block_delta(5, 2, 3).pow(2), full_twist(3).shifted(1, 5)));
}

TEST_CASE("free words") {
  FreeWord w = G(3, {1, 2, -2, 3, -1});
  CHECK(w.reduced() == G(3, {1, 3, -1}));
  CHECK(w.cyclically_reduced() == G(3, {3}));
  CHECK((G(3, {1, 2}) * G(3, {-2, -1})).empty());
  CHECK(G(3, {1, -2}).inverse() == G(3, {2, -1}));
  CHECK_THROWS_AS(G(3, {4}), Error);
}
