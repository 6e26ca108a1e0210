#include <doctest.h>

#include "braidforge/degeneration.hpp"
#include "braidforge/invariance.hpp"
#include "braidforge/regeneration.hpp"

using namespace braidforge;

namespace {

Factorization of(int n, std::vector<Factor> fs) {
  Factorization f;
  f.strands = n;
  f.factors = std::move(fs);
  return f;
}

Factorization node_block() { return of(4, rule2(4, 1, 2, 2, OriginTag::event(1))); }

}  // namespace

TEST_CASE("Hurwitz moves preserve the product and invert") {
  auto f = node_block();
  BraidWord p = f.product();
  std::vector<HurwitzMove> moves = {{1, false}, {3, true}, {2, false}, {1, true}};
  Factorization g = apply_moves(f, moves);
  CHECK(braid_equal(g.product(), p));
  Factorization back = apply_moves(g, inverse_moves(moves));
  for (std::size_t i = 0; i < f.factors.size(); ++i) CHECK(braid_equal(back.factors[i].braid(), f.factors[i].braid()));
  CHECK_THROWS_AS(hurwitz_move(f, 4), Error);
}

TEST_CASE("identity braid is certified at distance zero") {
  auto r = invariance_check(node_block(), BraidWord(4), 10);
  CHECK(r.verdict == Invariance::invariant);
  CHECK(r.method == "identity");
  CHECK(r.certificate.empty());
}

TEST_CASE("a factorization is invariant under its product") {
  auto f = of(3, {Factor{3, BraidWord(3), 1, 2, 1, OriginTag::event(1)}, Factor{3, BraidWord(3), 2, 2, 3, OriginTag::event(2)}});
  auto r = orbit_search(f, f.product(), 1000);
  CHECK(r.verdict == Invariance::invariant);
  CHECK(verify_certificate(f, f.product(), r.certificate));
}

TEST_CASE("node block is invariant under its band twists") {
  auto f = node_block();
  for (const auto& h : {BraidWord(4, {1}), BraidWord(4, {3}), BraidWord(4, {1, 1, -3}), BraidWord(4, {-1, 3, 3, 3})}) {
    auto r = certify_invariance(f, h);
    CHECK(r.verdict == Invariance::invariant);
    CHECK(r.method == "rules");
    CHECK(verify_certificate(f, h, r.certificate));
  }
  auto bfs = orbit_search(f, BraidWord(4, {1}), 100000);
  CHECK(bfs.verdict == Invariance::invariant);
  CHECK(bfs.states <= 100000);
  CHECK(verify_certificate(f, BraidWord(4, {1}), bfs.certificate));
}

TEST_CASE("orbit search is symmetric") {
  auto f = node_block();
  BraidWord h(4, {3});
  auto there = orbit_search(f, h, 100000);
  auto back = orbit_search(conjugate_factorization(f, h), h.inverse(), 100000);
  CHECK(there.verdict == Invariance::invariant);
  CHECK(back.verdict == Invariance::invariant);
}

TEST_CASE("wrong certificates are rejected") {
  auto f = node_block();
  CHECK_FALSE(verify_certificate(f, BraidWord(4, {1}), {}));
  CHECK_FALSE(verify_certificate(f, BraidWord(4, {1}), {{7, false}}));
}

TEST_CASE("budget exhaustion is not_decided") {
  auto f = node_block();
  auto r = orbit_search(f, BraidWord(4, {2}), 50);
  CHECK(r.verdict == Invariance::not_decided);
  CHECK(r.states <= 60);
}

TEST_CASE("H2 of B1 is invariant under Z22' Z55'") {
  auto p = cpg_builder(1);
  auto h2 = of(16, vertex_fragment(p, 2));
  for (const auto& h : {BraidWord(16, {3, 9}), BraidWord(16, {3, 3, -9, -9, -9})}) {
    auto r = certify_invariance(h2, h);
    CHECK(r.verdict == Invariance::invariant);
    CHECK(verify_certificate(h2, h, r.certificate));
  }
  CHECK(certify_invariance(h2, BraidWord(16, {5})).verdict == Invariance::not_decided);
}

TEST_CASE("B1 is invariant under the band twists of lines 1, 2, 4..8") {
  auto f = assemble_bmf(cpg_builder(1));
  BraidWord h(16, {1, 3, 7, 9, 11, 13, 15});
  auto r = certify_invariance(f, h);
  CHECK(r.verdict == Invariance::invariant);
  Factorization flat = of(16, f.factors);
  CHECK(verify_certificate(flat, h, r.certificate));
}
