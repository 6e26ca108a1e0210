#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "braidforge/braid.hpp"
#include "braidforge/factorization.hpp"
#include "braidforge/plan.hpp"

namespace braidforge {

struct Presentation {
  std::vector<std::string> generators;
  std::vector<FreeWord> relators;

  int rank() const { return static_cast<int>(generators.size()); }
  int index_of(std::string_view name) const;  // 1-based, throws on unknown names
  void add(FreeWord r);
};

// Word syntax: space separated generator names with optional ^k, "e" for the identity.
FreeWord parse_word(std::string_view text, const Presentation& p);
std::string format_word(const FreeWord& w, const Presentation& p);

nlohmann::json to_json(const Presentation& p);
Presentation presentation_from_json(const nlohmann::json& j);

// Common relator shapes.
FreeWord commutator(const FreeWord& a, const FreeWord& b);   // a b a^-1 b^-1
FreeWord triple(const FreeWord& a, const FreeWord& b);       // a b a b^-1 a^-1 b^-1
FreeWord conj(const FreeWord& a, const FreeWord& b);         // a_b = b^-1 a b

// "1", "1'", "2", ... for 2*ell strands; "1".."n" otherwise.
std::vector<std::string> doubled_names(int ell);
std::vector<std::string> plain_names(int n);

// Loops (A, B) around the endpoints of a half-twist factor, in the g-base whose
// loops leave a base point below the real axis; (A) V = B.
struct VanKampenPair {
  FreeWord a;
  FreeWord b;
};
VanKampenPair van_kampen_pair(const Factor& f);
// Relator of one factor: A B^-1, [A,B] or <A,B> for exponents 1, 2, 3.
FreeWord van_kampen_relator(const Factor& f);
Presentation van_kampen(const Factorization& f, bool projective, std::vector<std::string> names = {});

Presentation btilde(int n);
// (x, y) in the fiber product over degree and permutation.
bool btilde2_member(const BraidWord& x, const BraidWord& y);

struct Identification {
  std::string a;
  std::string b;
};
Presentation coxeter_quotient(const Presentation& p, const std::vector<Identification>& extra = {});

// Tietze moves: drops empty and repeated relators (up to rotation and inversion) and
// eliminates a generator occurring once in a relator while the total relator length
// stays within growth times the original. kept receives the surviving original indices (1-based).
Presentation simplify_presentation(const Presentation& p, std::vector<int>* kept = nullptr, double growth = 2.0);

// Every relator maps to the identity under the assignment (one permutation per generator).
bool perm_rep_check(const Presentation& p, const std::vector<Permutation>& assignment);
// Gamma_j, Gamma_j' -> transposition of the two planes through L_j.
std::vector<Permutation> plane_transpositions(const DegenerationPlan& plan);

}  // namespace braidforge
