#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "braidforge/braid.hpp"
#include "braidforge/presentation.hpp"
#include "braidforge/relations.hpp"

namespace braidforge {

// One equality-preserving move on the current relation.
//   rewrite:         side becomes `word`; side * word^-1 must be a conjugate of a cited relator
//   substitute:      every `gen` in both sides becomes `word`, cited as gen = word
//   conjugate:       both sides become c^-1 (.) c with c = `word`
//   conjugate_side:  `side` becomes c^-1 (.) c; cited bare commutations cover c against the other side
//   invariance:      both sides move by the loop action of Z[k,k']^power (`gen` = "k")
//   swap:            exchange the sides
struct DerivationStep {
  std::string op;
  std::string side;  // "a" or "b"
  std::string word;
  std::string gen;
  int power = 1;
  std::vector<std::string> cites;  // relation texts, underlines allowed
  std::string why;
};

struct DerivationScript {
  std::string name;
  // Either start is known and the steps end on target, or start is the target
  // and the steps end on a known relation.
  std::string start;
  std::string target;
  std::vector<DerivationStep> steps;
  // "$x" placeholders; the script is replayed once per value combination
  std::map<std::string, std::vector<std::string>> let;
};

struct DerivationContext {
  Presentation names;
  std::vector<Relation> facts;
  std::vector<BraidWord> invariance;  // certified; their inverses are implied

  bool known(const Relation& r) const;
};

struct DerivationResult {
  bool ok = false;
  std::string script;
  std::string instance;  // the let binding that failed, if any
  int failed_step = -1;  // -1: start or target
  std::string message;
  std::vector<std::string> trace;  // relation after each step of the last replayed instance
};

// Facts: normalized van Kampen relations of f closed under the candidates that
// invariance_check certifies (budget as there); names are the doubled names.
DerivationContext derivation_context(const Factorization& f, const std::vector<BraidWord>& candidates,
                                     std::size_t budget = 0);
// Z[k,k'] for every k whose band twist is in the list.
std::vector<BraidWord> band_twists(int ell, const std::vector<int>& ks);

std::vector<DerivationScript> scripts_from_json(const nlohmann::json& j);
nlohmann::json to_json(const DerivationScript& s);

// Replays every instance; on success the target instances join ctx.facts.
DerivationResult derivation_check(DerivationContext& ctx, const DerivationScript& s);

}  // namespace braidforge
