#include <doctest.h>

#include <chrono>
#include <fstream>

#include "braidforge/degeneration.hpp"
#include "braidforge/derivation.hpp"
#include "braidforge/regeneration.hpp"

using namespace braidforge;

namespace {

DerivationContext small_context() {
  DerivationContext ctx;
  ctx.names.generators = plain_names(3);
  ctx.facts = parse_relations("[1, 3]", ctx.names);
  for (auto& r : parse_relations("<1, 2>", ctx.names)) ctx.facts.push_back(r);
  return ctx;
}

DerivationStep step(std::string op, std::string side, std::string word, std::vector<std::string> cites) {
  DerivationStep s;
  s.op = std::move(op);
  s.side = std::move(side);
  s.word = std::move(word);
  s.cites = std::move(cites);
  return s;
}

const DerivationContext& g1_context() {
  static const DerivationContext ctx =
      derivation_context(assemble_bmf(cpg_builder(1)), band_twists(8, {1, 2, 3, 4, 5, 6, 7, 8}));
  return ctx;
}

std::vector<DerivationScript> g1_scripts() {
  std::ifstream in(BRAIDFORGE_GOLDEN_DIR "/derivations_g1.json");
  REQUIRE(in.good());
  return scripts_from_json(nlohmann::json::parse(in));
}

}  // namespace

TEST_CASE("empty script on a known relation") {
  auto ctx = small_context();
  DerivationScript s{"known", "[1, 3]", "[3, 1]", {}, {}};
  CHECK(derivation_check(ctx, s).ok);
}

TEST_CASE("forward and backward scripts") {
  auto ctx = small_context();
  DerivationScript fwd{"fwd", "[1, 3]", "[2 1 2^-1, 2 3 2^-1]", {step("conjugate", "", "2^-1", {})}, {}};
  CHECK(derivation_check(ctx, fwd).ok);
  DerivationScript back{"back", "[1^-1 3 1, 1]", "[1^-1 3 1, 1]", {step("conjugate_side", "a", "1^-1", {"[1, 3]"})}, {}};
  CHECK(derivation_check(ctx, back).ok);
  DerivationScript braid{"braid", "<1, 2>", "<1, 2^-1 1 2>", {step("conjugate", "", "1", {})}, {}};
  auto r = derivation_check(ctx, braid);
  CHECK_FALSE(r.ok);
  CHECK(r.message.find("ended on") != std::string::npos);
}

TEST_CASE("unjustified steps are rejected") {
  auto ctx = small_context();
  DerivationScript bad_rewrite{"bad", "[1, 3]", "[2, 3]", {step("rewrite", "a", "2", {"<1, 2>"})}, {}};
  auto r = derivation_check(ctx, bad_rewrite);
  CHECK_FALSE(r.ok);
  CHECK(r.failed_step == 0);
  DerivationScript uncited{"uncited", "[1, 3]", "[1, 2 3 2^-1]", {step("conjugate_side", "b", "2^-1", {"[1, 3]"})}, {}};
  CHECK_FALSE(derivation_check(ctx, uncited).ok);
  DerivationScript unknown_cite{"unknown", "[1, 3]", "[1, 2]", {step("rewrite", "b", "2", {"[2, 3]"})}, {}};
  r = derivation_check(ctx, unknown_cite);
  CHECK_FALSE(r.ok);
  CHECK(r.message.find("not known") != std::string::npos);
  DerivationScript unknown_start{"start", "[2, 3]", "[2, 3 1]", {}, {}};
  CHECK_FALSE(derivation_check(ctx, unknown_start).ok);
  DerivationStep inv;
  inv.op = "invariance";
  inv.gen = "1";
  DerivationContext doubled;
  doubled.names.generators = doubled_names(2);
  doubled.facts = parse_relations("[1, 2]", doubled.names);
  DerivationScript uncertified{"inv", "[1, 2]", "[1, 2]", {inv}, {}};
  r = derivation_check(doubled, uncertified);
  CHECK_FALSE(r.ok);
  CHECK(r.message.find("certified") != std::string::npos);
}

TEST_CASE("let bindings replay every instance and record the targets") {
  auto ctx = small_context();
  DerivationScript s{"let", "[1, 3]", "[$x 1 $x^-1, $x 3 $x^-1]", {step("conjugate", "", "$x^-1", {})}, {{"x", {"2", "3"}}}};
  REQUIRE(derivation_check(ctx, s).ok);
  CHECK(ctx.known(parse_relations("[2 1 2^-1, 2 3 2^-1]", ctx.names)[0]));
  CHECK(ctx.known(parse_relations("[3 1 3^-1, 3]", ctx.names)[0]));
}

TEST_CASE("scripts round trip through json") {
  auto scripts = g1_scripts();
  nlohmann::json j{{"scripts", nlohmann::json::array()}};
  for (const auto& s : scripts) j["scripts"].push_back(to_json(s));
  auto again = scripts_from_json(j);
  REQUIRE(again.size() == scripts.size());
  CHECK(to_json(again.back()) == to_json(scripts.back()));
  CHECK_THROWS_AS(scripts_from_json(nlohmann::json::parse(R"({"scripts":[{"name":"x"}]})")), ParseError);
}

TEST_CASE("G1 context certifies every band twist except Z[3,3']") {
  const auto& ctx = g1_context();
  CHECK(ctx.invariance.size() == 7);
  for (const auto& h : ctx.invariance) CHECK_FALSE(h.letters() == std::vector<int>{5});
}

TEST_CASE("G1 derivation scripts replay") {
  DerivationContext ctx = g1_context();
  for (const auto& s : g1_scripts()) {
    auto t0 = std::chrono::steady_clock::now();
    auto r = derivation_check(ctx, s);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    INFO(s.name << " " << r.instance << " step " << r.failed_step << ": " << r.message);
    CHECK(r.ok);
    CHECK(secs < 1.0);
  }
  for (const char* text : {"<_2, _3>", "<_3, _5>", "<_2, _5>", "[2^-1 _3 2, _5]", "[2'^-1 _3 2', _5]",
                           "<8 4' 8^-1, 4>", "<3 4' 3^-1, 4>", "[3^-1 4 3, 8 4' 8^-1]",
                           "<3^-1 4 3, 5 6 7 8 4' 8^-1 7^-1 6^-1 5^-1>"})
    for (const auto& r : parse_relations(text, ctx.names)) {
      INFO(format_relation(r, ctx.names));
      CHECK(ctx.known(r));
    }
}
