#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "braidforge/degeneration.hpp"

namespace braidforge {

std::vector<LatticeTriangle> squares_to_triangles(const std::vector<LatticePoint>& squares) {
  std::vector<LatticeTriangle> out;
  for (auto [x, y] : squares) {
    out.push_back({LatticePoint{x, y}, LatticePoint{x + 1, y}, LatticePoint{x, y + 1}});
    out.push_back({LatticePoint{x + 1, y}, LatticePoint{x + 1, y + 1}, LatticePoint{x, y + 1}});
  }
  return out;
}

DegenerationPlan lattice_plan(const std::string& name, const std::vector<LatticeTriangle>& triangles, int wrap) {
  auto norm = [wrap](LatticePoint q) {
    if (wrap > 0) q.first = ((q.first % wrap) + wrap) % wrap;
    return q;
  };
  std::map<LatticePoint, int> ids;
  std::set<LatticePoint> pts;
  for (const auto& t : triangles)
    for (const auto& q : t) pts.insert(norm(q));
  // row-major numbering
  std::vector<LatticePoint> order(pts.begin(), pts.end());
  std::sort(order.begin(), order.end(),
            [](const LatticePoint& a, const LatticePoint& b) { return std::tie(a.second, a.first) < std::tie(b.second, b.first); });
  for (std::size_t k = 0; k < order.size(); ++k) ids[order[k]] = static_cast<int>(k) + 1;

  DegenerationPlan p;
  p.name = name;
  std::map<std::pair<int, int>, int> edge_count;
  std::map<int, int> tri_count;
  for (const auto& t : triangles) {
    std::vector<int> cell;
    for (const auto& q : t) cell.push_back(ids.at(norm(q)));
    std::set<int> distinct(cell.begin(), cell.end());
    if (distinct.size() != 3) throw Error("lattice plan: degenerate triangle after wrapping");
    p.planes.push_back(cell);
    for (int v : cell) ++tri_count[v];
    for (int a = 0; a < 3; ++a) {
      int u = cell[a], w = cell[(a + 1) % 3];
      ++edge_count[{std::min(u, w), std::max(u, w)}];
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& [e, c] : edge_count) {
    if (c > 2) throw Error("lattice plan: edge in more than two triangles");
    edges.push_back(e);
  }
  // lines ordered by larger endpoint, then smaller
  std::sort(edges.begin(), edges.end(),
            [](const auto& a, const auto& b) { return std::tie(a.second, a.first) < std::tie(b.second, b.first); });
  int next = 1;
  for (const auto& e : edges)
    if (edge_count[e] == 2) p.lines.push_back({next++, e.first, e.second, false});
  for (const auto& e : edges)
    if (edge_count[e] == 1) p.lines.push_back({next++, e.first, e.second, true});
  for (const auto& q : order) {
    PlanVertex v;
    v.id = ids[q];
    for (const auto& l : p.lines)
      if (!l.border && (l.s == v.id || l.t == v.id)) v.lines.push_back(l.id);
    if (!v.lines.empty()) v.local_type = std::to_string(tri_count[v.id]) + "-point";
    p.vertices.push_back(v);
  }
  p.cond2 = true;
  p.cond3 = true;
  return p;
}

DegenerationPlan fixture_f122() {
  auto t = squares_to_triangles({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}});
  t.push_back({LatticePoint{3, 0}, LatticePoint{4, 0}, LatticePoint{3, 1}});
  t.push_back({LatticePoint{2, 1}, LatticePoint{3, 1}, LatticePoint{2, 2}});
  DegenerationPlan p = lattice_plan("F_{1,(2,2)}", t);
  p.embedding_dim = 8;
  return p;
}

DegenerationPlan fixture_cp1_torus23() {
  return lattice_plan("CP1 x T (2,3)", squares_to_triangles({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}}), 3);
}

DegenerationPlan fixture_cp1_cp1() {
  return lattice_plan("CP1 x CP1", squares_to_triangles({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
}

DegenerationPlan fixture_no_interior() {
  return lattice_plan("strip without interior vertices", squares_to_triangles({{0, 0}, {1, 0}}));
}

DegenerationPlan fixture_far_boundary() {
  return lattice_plan("boundary vertex far from the interior",
                      squares_to_triangles({{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}, {3, 0}}));
}

DegenerationPlan fixture_single_triangle() {
  return lattice_plan("single triangle", {{LatticePoint{0, 0}, LatticePoint{1, 0}, LatticePoint{0, 1}},
                                          {LatticePoint{1, 0}, LatticePoint{2, 0}, LatticePoint{1, 1}},
                                          {LatticePoint{0, 1}, LatticePoint{1, 1}, LatticePoint{0, 2}},
                                          {LatticePoint{1, 0}, LatticePoint{1, 1}, LatticePoint{0, 1}}});
}

DegenerationPlan cpg_builder(int g) {
  if (g < 1) throw Error("cpg_builder: g must be at least 1");
  // roles r1..r4 on the lower row, r5..r8 on the upper row of each block
  auto vid = [g](int b, int r) { return r <= 4 ? 4 * b + r : 4 * g + 4 * b + (r - 4); };
  const int corner = 8 * g + 1;
  static const std::pair<int, int> block_lines[] = {{1, 5}, {2, 5}, {2, 6}, {4, 6},
                                                    {2, 7}, {3, 7}, {3, 8}, {4, 8}};
  std::vector<std::pair<int, int>> ends;
  for (int b = 0; b < g; ++b) {
    for (auto [r1, r2] : block_lines) ends.emplace_back(vid(b, r1), vid(b, r2));
    if (b + 1 < g) ends.emplace_back(vid(b, 8), vid(b + 1, 1));
  }
  for (auto& e : ends)
    if (e.first > e.second) std::swap(e.first, e.second);
  std::sort(ends.begin(), ends.end(),
            [](const auto& a, const auto& b) { return std::tie(a.second, a.first) < std::tie(b.second, b.first); });

  DegenerationPlan p;
  p.name = "CP1 x C_" + std::to_string(g);
  p.embedding_dim = 8 * g + 1;
  for (std::size_t k = 0; k < ends.size(); ++k)
    p.lines.push_back({static_cast<int>(k) + 1, ends[k].first, ends[k].second, false});
  for (int b = 0; b < g; ++b) {
    std::vector<int> s1 = {vid(b, 3), vid(b, 4), vid(b, 8)};
    if (b + 1 < g) s1.push_back(vid(b + 1, 1));
    p.planes.push_back(s1);
    p.planes.push_back({vid(b, 3), vid(b, 7), vid(b, 8)});
    p.planes.push_back({vid(b, 2), vid(b, 3), vid(b, 7)});
    p.planes.push_back({vid(b, 2), vid(b, 5), vid(b, 6), vid(b, 7)});
    p.planes.push_back({vid(b, 1), vid(b, 2), vid(b, 5)});
    p.planes.push_back({vid(b, 1), vid(b, 5), b == 0 ? corner : vid(b - 1, 8)});
    p.planes.push_back({vid(b, 4), vid(b, 6), vid(b, 8)});
    p.planes.push_back({vid(b, 2), vid(b, 4), vid(b, 6)});
  }
  for (int id = 1; id <= 8 * g + 1; ++id) {
    PlanVertex v;
    v.id = id;
    for (const auto& l : p.lines)
      if (l.s == id || l.t == id) v.lines.push_back(l.id);
    p.vertices.push_back(v);
  }
  auto set_type = [&p](int id, const std::string& type, const std::string& variant) {
    for (auto& v : p.vertices)
      if (v.id == id) {
        v.local_type = type;
        v.variant = variant;
      }
  };
  for (int b = 0; b < g; ++b) {
    set_type(vid(b, 1), b == 0 ? "2-point" : "3-point", b == 0 ? "" : "aa'b");
    set_type(vid(b, 2), "conic-3-point", "");
    set_type(vid(b, 3), "3-point", "aa'b");
    set_type(vid(b, 4), "3-point", "a'bb'");
    set_type(vid(b, 5), "3-point", "a'bb'");
    set_type(vid(b, 6), "3-point", "aa'b");
    set_type(vid(b, 7), "3-point", "a'bb'");
    if (b + 1 < g) set_type(vid(b, 8), "conic-3-point", "");
    else set_type(vid(b, 8), "3-point", "a'bb'");
  }
  p.parasitic = cpg_parasitic_table(g);
  p.cond2 = true;
  p.cond3 = true;
  p.euler_exempt = "genus " + std::to_string(g) + " factor: m - l + n = " + std::to_string(1 - g);
  return p;
}

std::vector<DegenerationPlan> bundled_plans() {
  return {fixture_f122(),        fixture_cp1_torus23(),     fixture_cp1_cp1(), fixture_no_interior(),
          fixture_far_boundary(), fixture_single_triangle(), cpg_builder(1),    cpg_builder(2)};
}

DegenerationPlan random_plan(std::uint64_t seed, int cells) {
  std::mt19937_64 rng(seed);
  cells = std::max(cells, 1);
  std::vector<LatticePoint> squares;
  int remaining = cells, prev = cells, x = 0;
  while (remaining > 0) {
    int h = std::uniform_int_distribution<int>(1, std::min(prev, remaining))(rng);
    for (int y = 0; y < h; ++y) squares.emplace_back(x, y);
    remaining -= h;
    prev = h;
    ++x;
    if (x > 1 && std::uniform_int_distribution<int>(0, 3)(rng) == 0) break;
  }
  return lattice_plan("random staircase " + std::to_string(seed), squares_to_triangles(squares));
}

}  // namespace braidforge
