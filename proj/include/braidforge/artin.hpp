#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "braidforge/plan.hpp"
#include "braidforge/presentation.hpp"

namespace braidforge {

struct ArtinEdge {
  std::string name;
  std::string u;
  std::string v;
};

// (iii): [u, v w v^-1] for edges meeting only at one vertex.
struct ArtinTriple {
  std::string u, v, w;
};

// (iv): u at one end of the parallel pair v, v2 and w at the other.
struct ArtinQuad {
  std::string u, v, v2, w;
};

// (v): <x_n^-1 y1 x_n, x_{n-1} .. x_1 y2 x_1^-1 .. x_{n-1}^-1>.
struct ArtinCircles {
  std::vector<std::string> x;
  std::string y1, y2;
};

struct ArtinGraph {
  std::vector<std::string> vertices;
  std::vector<ArtinEdge> edges;
  std::vector<ArtinTriple> triples;
  std::vector<ArtinQuad> quads;
  std::vector<ArtinCircles> circles;

  const ArtinEdge& edge(const std::string& name) const;
  std::vector<std::string> edges_at(const std::string& vertex) const;
  int degree(const std::string& vertex) const;
  int shared_vertices(const std::string& e, const std::string& f) const;
};

enum class ArtinRelationKind { disjoint, adjacent, triple, quadruple, circles };
std::string to_string(ArtinRelationKind k);

struct ArtinHat {
  Presentation presentation;
  std::vector<ArtinRelationKind> kinds;  // one per relator
};

// Connected, no repeated edges, every valence <= 3. Planarity is not checked.
bool satisfies_otimes(const ArtinGraph& t);

// Throws when a vertex carries three edges meeting only there without a triple
// annotation, or parallel edges without a quadruple annotation.
ArtinHat artin_hat_labeled(const ArtinGraph& t);
Presentation artin_hat(const ArtinGraph& t);

// Identifies v1 in t1 with v2 in t2; requires d(v1) = i < 3 and d(v2) <= 3 - i and
// disjoint edge names. Other vertices of t2 are renamed on collision. A glued vertex
// of valence 3 is annotated with its t1 edges first.
ArtinGraph glue_graphs(const ArtinGraph& t1, const std::string& v1, const ArtinGraph& t2, const std::string& v2);
// A(t1) * A(t2) with the cross commutators and the relations at the glued vertex.
Presentation amalgam_presentation(const ArtinGraph& t1, const std::string& v1, const ArtinGraph& t2,
                                  const std::string& v2);

// Planes as vertices "P<k>", line L_j as edge "j" between its two planes.
ArtinGraph plane_graph(const DegenerationPlan& plan);
// Plane graph of cpg_builder(1) with 4' parallel to 4 and its annotations.
ArtinGraph t1_graph();
// Block b >= 2 of T_g: a connector edge from vertex "A" to the block, then the block
// lines of cpg_builder numbering with its parallel edge and annotations.
ArtinGraph t0_graph(int block);
// T1 glued with t0_graph(2..g), block b at the first plane of block b-1.
ArtinGraph tg_graph(int g);

// {"vertices": [...], "edges": [{"name", "u", "v"}], "triples": [[u, v, w]],
//  "quads": [[u, v, v', w]], "circles": [{"x": [...], "y": [y1, y2]}]}
nlohmann::json to_json(const ArtinGraph& t);
ArtinGraph artin_graph_from_json(const nlohmann::json& j);

struct AbelianInvariants {
  int free_rank = 0;
  std::vector<long long> torsion;  // invariant factors > 1, each dividing the next
  bool operator==(const AbelianInvariants&) const = default;
};
AbelianInvariants abelianize(const Presentation& p);
// Smith invariants of an integer matrix (nonzero diagonal entries).
nlohmann::json to_json(const AbelianInvariants& a);
std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> m);

}  // namespace braidforge
