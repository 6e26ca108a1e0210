#pragma once

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "braidforge/artin.hpp"
#include "braidforge/derivation.hpp"
#include "braidforge/relations.hpp"

namespace braidforge::testing {

inline std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Sections of the G1 presentation produced by each kind of relation of A(T1).
inline const std::map<ArtinRelationKind, std::set<std::string>>& g1_table() {
  static const std::map<ArtinRelationKind, std::set<std::string>> t{
      {ArtinRelationKind::disjoint, {"(4)"}},          {ArtinRelationKind::adjacent, {"(2)", "(6)"}},
      {ArtinRelationKind::triple, {"(5)", "(7)"}},     {ArtinRelationKind::quadruple, {"(10)", "(11)"}},
      {ArtinRelationKind::circles, {"(12)"}},
  };
  return t;
}

// Problems found comparing A(T1) + rho1 with the G1 presentation; empty when they match.
inline std::vector<std::string> g1_correspondence_issues(const std::string& fixture_path) {
  std::vector<std::string> issues;
  ArtinHat hat = artin_hat_labeled(t1_graph());
  const Presentation& p = hat.presentation;
  auto fixture = parse_relation_file(read_text(fixture_path), p);

  std::map<std::vector<int>, std::set<std::string>> labels;
  for (const auto& f : fixture) labels[relator_key(f.relation.relator())].insert(f.label);
  std::set<std::vector<int>> artin_keys;
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    auto key = relator_key(p.relators[i]);
    artin_keys.insert(key);
    bool hit = false;
    for (const auto& l : labels[key]) hit = hit || g1_table().at(hat.kinds[i]).count(l);
    if (!hit) issues.push_back(to_string(hat.kinds[i]) + " relator " + format_word(p.relators[i], p) + " is not in the G1 presentation");
  }

  DerivationContext ctx;
  ctx.names = p;
  for (const auto& r : p.relators) ctx.facts.push_back({RelationShape::equal, r, FreeWord(p.rank(), {})});
  DerivationScript seven{"(7) from (iii)", "[3 2 3^-1, 5]", "[2^-1 3 2, 5]", {}, {}};
  seven.steps.push_back({"rewrite", "a", "2^-1 3 2", "", 1, {"<2, 3>"}, "braid relation"});
  auto res = derivation_check(ctx, seven);
  if (!res.ok) issues.push_back("(7) does not follow from A(T1): " + res.message);

  int rho = 0;
  for (const auto& f : fixture) {
    auto key = relator_key(f.relation.relator());
    if (f.label == "(9)") {
      ++rho;
      continue;
    }
    if (!artin_keys.count(key) && !ctx.known(f.relation))
      issues.push_back(f.label + " relation " + format_relation(f.relation, p) + " is not produced by A(T1)");
  }
  if (rho != 1) issues.push_back("expected one rho1 relation, found " + std::to_string(rho));
  return issues;
}

}  // namespace braidforge::testing
