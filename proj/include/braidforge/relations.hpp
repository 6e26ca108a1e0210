#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "braidforge/braid.hpp"
#include "braidforge/factorization.hpp"
#include "braidforge/presentation.hpp"

namespace braidforge {

// A = B, [A,B] = e or <A,B> = e.
enum class RelationShape { equal, commute, braid };

struct Relation {
  RelationShape shape = RelationShape::equal;
  FreeWord a;
  FreeWord b;

  FreeWord relator() const;
};

// Syntax: "a = b", "[a, b]", "<a, b>" with words as in parse_word. A leading
// underscore on a generator ("_2") stands for both 2 and 2'; parse_relations
// returns every instance.
std::vector<Relation> parse_relations(std::string_view text, const Presentation& p);
std::string format_relation(const Relation& r, const Presentation& p);

struct LabeledRelation {
  std::string label;  // from the last "# label" line, may be empty
  Relation relation;
};
// One relation text per line; "# label" lines set the label of the following ones.
std::vector<LabeledRelation> parse_relation_file(std::string_view text, const Presentation& p);

// Cyclic reduction of the relator, least rotation of it and of its inverse.
std::vector<int> relator_key(const FreeWord& w);

Relation van_kampen_relation(const Factor& f);
// Factor of the complex conjugate curve: the path reflected in the real axis.
Factor complex_conjugate(const Factor& f);
// Action of a braid on loops in the g-base used by van_kampen_pair.
FreeWord loop_action(const BraidWord& h, const FreeWord& w);

struct NormalizeOptions {
  std::vector<BraidWord> invariance;  // braids the factorization is invariant under
  int rounds = 1;
};

// Van Kampen relations of f and of its complex conjugate, closed under the
// invariance braids and their inverses, with conjugators peeled off a side when
// every letter of the other side commutes with them by a bare commutation in the set,
// and x ... x^-1 pairs cancelled when the enclosed letters commute with x.
std::vector<Relation> normalized_relations(const Factorization& f, const NormalizeOptions& opt);
// [x][y] set for every bare commutation [x, y] among the relations, 1-based.
std::vector<std::vector<bool>> commuting_table(const std::vector<Relation>& rels, int rank);
// Cancels x ... x^-1 pairs whose enclosed letters all commute with x; commuting[i][j] on 1-based indices.
FreeWord commute_reduce(const FreeWord& w, const std::vector<std::vector<bool>>& commuting);
Relation peel(const Relation& r, const std::vector<std::vector<bool>>& commuting);

// Targets not present in the set (compared by relator_key).
std::vector<Relation> unmatched(const std::vector<Relation>& targets, const std::vector<Relation>& set);

}  // namespace braidforge
