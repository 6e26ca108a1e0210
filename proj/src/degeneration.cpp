#include "braidforge/degeneration.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace braidforge {

int valence(const DegenerationPlan& p, int vertex) {
  int v = 0;
  for (const auto& l : p.lines)
    if (!l.border && (l.s == vertex || l.t == vertex)) ++v;
  return v;
}

GraphS0 graph_s0(const DegenerationPlan& p) {
  GraphS0 g;
  for (const auto& v : p.vertices) {
    int val = valence(p, v.id);
    if (val > 1) g.multi.push_back(v.id);
    else if (val == 1) g.y.push_back(v.id);
  }
  std::sort(g.multi.begin(), g.multi.end());
  std::sort(g.y.begin(), g.y.end());
  g.vertices = g.multi;
  g.vertices.insert(g.vertices.end(), g.y.begin(), g.y.end());
  std::set<std::pair<int, int>> adj;
  for (const auto& l : p.lines) {
    if (l.border) continue;
    g.edges.emplace_back(l.s, l.t);
    adj.insert({l.s, l.t});
    adj.insert({l.t, l.s});
  }
  std::vector<int> sorted = g.vertices;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t a = 0; a < sorted.size(); ++a)
    for (std::size_t b = a + 1; b < sorted.size(); ++b) {
      if (!adj.count({sorted[a], sorted[b]})) continue;
      for (std::size_t c = b + 1; c < sorted.size(); ++c)
        if (adj.count({sorted[a], sorted[c]}) && adj.count({sorted[b], sorted[c]}))
          g.triangles.push_back({sorted[a], sorted[b], sorted[c]});
    }
  return g;
}

EulerReport euler_check(const DegenerationPlan& p) {
  GraphS0 g = graph_s0(p);
  EulerReport r;
  r.m_bar = g.m_bar();
  r.ell_bar = g.ell_bar();
  r.n_bar = g.n_bar();
  r.holds = r.value() == 1;
  r.exempt = p.euler_exempt;
  return r;
}

Classification classify_vertices(const DegenerationPlan& p) {
  GraphS0 g = graph_s0(p);
  std::map<int, int> count;
  for (const auto& t : g.triangles)
    for (int v : t) ++count[v];
  Classification c;
  for (int v : g.vertices) (count[v] >= 2 ? c.interior : c.boundary).push_back(v);
  std::sort(c.boundary.begin(), c.boundary.end());
  std::sort(c.interior.begin(), c.interior.end());
  return c;
}

bool check_condition4(const DegenerationPlan& p) {
  Classification c = classify_vertices(p);
  std::set<int> interior(c.interior.begin(), c.interior.end());
  for (int b : c.boundary) {
    bool found = false;
    for (const auto& l : p.lines) {
      if (l.border) continue;
      if ((l.s == b && interior.count(l.t)) || (l.t == b && interior.count(l.s))) found = true;
    }
    if (!found) return false;
  }
  return !c.boundary.empty() || !c.interior.empty();
}

QSet q_set(const DegenerationPlan& p) {
  static const std::set<std::string> known = {"4-point", "5-point", "6-point"};
  QSet q;
  for (const auto& v : p.vertices) {
    if (valence(p, v.id) <= 3) continue;
    (known.count(v.local_type) ? q.q : q.unknown).push_back(v.id);
  }
  std::sort(q.q.begin(), q.q.end());
  std::sort(q.unknown.begin(), q.unknown.end());
  return q;
}

MainConditionReport main_condition(const DegenerationPlan& p) {
  MainConditionReport r;
  GraphS0 g = graph_s0(p);
  r.ell = p.ell();
  r.m = static_cast<int>(q_set(p).q.size());
  r.n = p.n_planes();
  r.m_bar = g.m_bar();
  r.n_bar = g.n_bar();
  r.holds = r.ell - r.m <= r.n - 1;
  r.declared = p.cond2.value_or(false) && p.cond3.value_or(false);
  r.n_le_ell_plus_1 = r.n <= r.ell + 1;
  r.chain_lower = std::max(r.n, r.m_bar + r.n) < r.ell + 1;
  r.chain_upper = r.ell + 1 <= r.m + r.n;
  return r;
}

DualGraph dual_graph(const DegenerationPlan& p) {
  DualGraph g;
  g.n = p.n_planes();
  for (int id : p.ramification_lines()) {
    auto pl = p.planes_of_line(id);
    if (pl.size() != 2) throw Error("dual graph: line " + std::to_string(id) + " does not lie in two planes");
    g.line_ids.push_back(id);
    g.edges.emplace_back(pl[0], pl[1]);
  }
  return g;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n + 1) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

bool connected_without(const DualGraph& g, const std::set<int>& erased) {
  UnionFind uf(g.n);
  int comps = g.n;
  for (std::size_t k = 0; k < g.line_ids.size(); ++k)
    if (!erased.count(g.line_ids[k]) && uf.unite(g.edges[k].first, g.edges[k].second)) --comps;
  return comps <= 1;
}

struct Search {
  const DegenerationPlan& plan;
  const DualGraph& g;
  std::vector<int> q;
  std::map<int, std::pair<int, int>> ends;  // line id -> plane pair
  std::vector<std::pair<int, int>> chosen;
  std::set<int> erased;
  int need = 0;

  bool neighbors(int x, int y) const {
    for (const auto& l : plan.lines)
      if (!l.border && ((l.s == x && l.t == y) || (l.s == y && l.t == x))) return true;
    return false;
  }

  bool disjoint(int la, int lb) const {
    auto a = ends.at(la), b = ends.at(lb);
    return a.first != b.first && a.first != b.second && a.second != b.first && a.second != b.second;
  }

  bool run(std::size_t idx) {
    if (static_cast<int>(chosen.size()) == need) return true;
    if (idx == q.size()) return false;
    int remaining = static_cast<int>(q.size() - idx);
    if (static_cast<int>(chosen.size()) + remaining < need) return false;
    int x = q[idx];
    std::vector<int> cand = plan.vertex(x).lines;
    std::sort(cand.begin(), cand.end());
    for (int line : cand) {
      if (erased.count(line)) continue;
      bool ok = true;
      for (auto [y, ly] : chosen)
        if (neighbors(x, y) && !disjoint(line, ly)) ok = false;
      if (!ok) continue;
      erased.insert(line);
      if (connected_without(g, erased)) {
        chosen.emplace_back(x, line);
        if (run(idx + 1)) return true;
        chosen.pop_back();
      }
      erased.erase(line);
    }
    return run(idx + 1);  // x not among the chosen k points
  }
};

}  // namespace

bool DualGraph::connected() const { return connected_without(*this, {}); }

bool is_spanning_tree(const DualGraph& g, const std::vector<int>& kept) {
  if (static_cast<int>(kept.size()) != g.n - 1) return false;
  UnionFind uf(g.n);
  for (int id : kept) {
    auto it = std::find(g.line_ids.begin(), g.line_ids.end(), id);
    if (it == g.line_ids.end()) return false;
    const auto& e = g.edges[static_cast<std::size_t>(it - g.line_ids.begin())];
    if (!uf.unite(e.first, e.second)) return false;
  }
  return true;
}

SpanningTree spanning_subtree(const DegenerationPlan& p) {
  MainConditionReport r = main_condition(p);
  if (!r.declared) throw Error("spanning subtree: Conditions (2) and (3) are not declared on the plan");
  if (!r.holds) throw SubtreeFailure("spanning subtree: main condition l - m <= n - 1 fails");
  DualGraph g = dual_graph(p);
  if (!g.connected()) throw SubtreeFailure("spanning subtree: dual graph is disconnected");
  Search s{p, g, q_set(p).q, {}, {}, {}, r.ell - (r.n - 1)};
  for (std::size_t k = 0; k < g.line_ids.size(); ++k) s.ends[g.line_ids[k]] = g.edges[k];
  if (!s.run(0)) throw SubtreeFailure("spanning subtree: no valid erasure choice found");
  SpanningTree t;
  t.erased = s.chosen;
  for (int id : g.line_ids)
    if (!s.erased.count(id)) t.kept.push_back(id);
  if (!is_spanning_tree(g, t.kept)) throw SubtreeFailure("spanning subtree: result is not a tree");
  return t;
}

}  // namespace braidforge
