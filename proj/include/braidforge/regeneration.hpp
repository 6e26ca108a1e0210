#pragma once

#include <string>
#include <vector>

#include "braidforge/factorization.hpp"
#include "braidforge/line_bm.hpp"
#include "braidforge/plan.hpp"

namespace braidforge {

struct Cabled {
  BraidWord word;
  std::vector<int> widths;  // widths after the word, in fiber order
};

// Zero-framed cabling: fiber point k is replaced by widths[k-1] parallel strands.
Cabled cable(const BraidWord& w, const std::vector<int>& widths);

// Regenerated factors on adjacent points starting at q of an n-strand fiber.
// rule1: branch Z_{ij} on (i,i',j,j') -> Z_{i'j}, Z^{(j)}_{i,j'} (below i', above j).
std::vector<Factor> rule1(int n, int q, OriginTag tag);
// rule2: node Z^2 with band widths (w1,w2); partner points are passed above.
std::vector<Factor> rule2(int n, int q, int w1, int w2, OriginTag tag);
// rule3: tangency Z^4 with one doubled band -> [X^Z, X, X^{Z^-1}], a^b = b^-1 a b.
std::vector<Factor> rule3(int n, int q, int w1, int w2, OriginTag tag);

// Regenerates one factor whose fiber points carry the given widths (1 or 2).
std::vector<Factor> regenerate_factor(const Factor& f, const std::vector<int>& widths);
Factorization regenerate(const Factorization& f, const std::vector<int>& widths);

// Strand rank of a ramification line (1-based).
int line_rank(const DegenerationPlan& p, int line);
// Lines i < j disjoint from L_j, increasing.
std::vector<int> parasitic_partners(const DegenerationPlan& p, int j);
// Decoration of Z^2_{ii',jj'}: from the plan's table when listed, else the default rule.
ParasiticEntry parasitic_decoration(const DegenerationPlan& p, int i, int j);
bool decoration_is_tabulated(const DegenerationPlan& p, int i, int j);
// Path on ell strands between the two lines.
PathSpec parasitic_path(const DegenerationPlan& p, const ParasiticEntry& e);
std::string parasitic_notation(const ParasiticEntry& e, bool doubled = true);

// Lefschetz configuration of a vertex before its last doubling, with the widths to apply.
struct VertexModel {
  EventList events;
  std::vector<int> widths;
  std::vector<int> lines;  // lines through the vertex, increasing
  std::string notation;
};
VertexModel vertex_model(const DegenerationPlan& p, int vertex);

// Regenerated local factorization of the vertex embedded in 2*ell strands.
std::vector<Factor> vertex_fragment(const DegenerationPlan& p, int vertex);

// prod_{i=m}^{1} C_i H_i on 2*ell strands.
Factorization assemble_bmf(const DegenerationPlan& p);

}  // namespace braidforge
