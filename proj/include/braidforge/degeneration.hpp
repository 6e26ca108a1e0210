#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "braidforge/plan.hpp"

namespace braidforge {

// v(x): number of distinct non-border lines through the vertex.
int valence(const DegenerationPlan& p, int vertex);

struct GraphS0 {
  std::vector<int> vertices;  // multi-line points followed by Y, each sorted
  std::vector<int> multi;     // v(x) > 1
  std::vector<int> y;         // 2-points
  std::vector<std::pair<int, int>> edges;  // one per non-border line
  std::vector<std::array<int, 3>> triangles;
  int m_bar() const { return static_cast<int>(vertices.size()); }
  int ell_bar() const { return static_cast<int>(edges.size()); }
  int n_bar() const { return static_cast<int>(triangles.size()); }
};

GraphS0 graph_s0(const DegenerationPlan& p);

struct EulerReport {
  int m_bar = 0;
  int ell_bar = 0;
  int n_bar = 0;
  bool holds = false;
  std::string exempt;  // non-empty when the plan declares the planar identity inapplicable
  int value() const { return m_bar - ell_bar + n_bar; }
};

EulerReport euler_check(const DegenerationPlan& p);

struct Classification {
  std::vector<int> boundary;  // V_B
  std::vector<int> interior;  // V_B^c
};

Classification classify_vertices(const DegenerationPlan& p);
bool check_condition4(const DegenerationPlan& p);

struct QSet {
  std::vector<int> q;
  std::vector<int> unknown;  // v(p) > 3 with a type outside the known table
};

QSet q_set(const DegenerationPlan& p);

struct MainConditionReport {
  int ell = 0;
  int m = 0;
  int n = 0;
  int m_bar = 0;
  int n_bar = 0;
  bool holds = false;        // l - m <= n - 1
  bool declared = false;     // Conditions (2) and (3) asserted true
  bool n_le_ell_plus_1 = false;
  bool chain_lower = false;  // max(n, m_bar + n) < l + 1
  bool chain_upper = false;  // l + 1 <= m + n
};

MainConditionReport main_condition(const DegenerationPlan& p);

struct DualGraph {
  int n = 0;  // planes 1..n
  std::vector<int> line_ids;
  std::vector<std::pair<int, int>> edges;  // plane pair per line, parallel to line_ids
  bool connected() const;
};

DualGraph dual_graph(const DegenerationPlan& p);

struct SpanningTree {
  std::vector<int> kept;                   // line ids
  std::vector<std::pair<int, int>> erased;  // (Q vertex, line id)
};

class SubtreeFailure : public Error {
 public:
  using Error::Error;
};

// Deterministic backtracking; throws SubtreeFailure when no erasure choice works.
SpanningTree spanning_subtree(const DegenerationPlan& p);
bool is_spanning_tree(const DualGraph& g, const std::vector<int>& kept);

// Plan on a triangulated lattice region; wrap > 0 identifies x with x + wrap.
using LatticePoint = std::pair<int, int>;
using LatticeTriangle = std::array<LatticePoint, 3>;
DegenerationPlan lattice_plan(const std::string& name, const std::vector<LatticeTriangle>& triangles, int wrap = 0);
// Unit squares split along the antidiagonal.
std::vector<LatticeTriangle> squares_to_triangles(const std::vector<LatticePoint>& squares);

// Bundled fixtures.
DegenerationPlan fixture_f122();
DegenerationPlan fixture_cp1_torus23();
DegenerationPlan fixture_cp1_cp1();
DegenerationPlan fixture_no_interior();
DegenerationPlan fixture_far_boundary();
DegenerationPlan fixture_single_triangle();
DegenerationPlan cpg_builder(int g);
// Printed parasitic decorations for g = 1, 2; empty otherwise.
std::vector<ParasiticEntry> cpg_parasitic_table(int g);
std::vector<DegenerationPlan> bundled_plans();

// Random staircase region of at most `cells` unit squares.
DegenerationPlan random_plan(std::uint64_t seed, int cells);

}  // namespace braidforge
