#include "braidforge/artin.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "braidforge/degeneration.hpp"

namespace braidforge {

const ArtinEdge& ArtinGraph::edge(const std::string& name) const {
  for (const auto& e : edges)
    if (e.name == name) return e;
  throw Error("artin graph: unknown edge " + name);
}

std::vector<std::string> ArtinGraph::edges_at(const std::string& vertex) const {
  std::vector<std::string> out;
  for (const auto& e : edges)
    if (e.u == vertex || e.v == vertex) out.push_back(e.name);
  return out;
}

int ArtinGraph::degree(const std::string& vertex) const { return static_cast<int>(edges_at(vertex).size()); }

int ArtinGraph::shared_vertices(const std::string& e, const std::string& f) const {
  const ArtinEdge& a = edge(e);
  const ArtinEdge& b = edge(f);
  std::set<std::string> x{a.u, a.v};
  int n = 0;
  for (const auto& s : std::set<std::string>{b.u, b.v}) n += static_cast<int>(x.count(s));
  return n;
}

std::string to_string(ArtinRelationKind k) {
  switch (k) {
    case ArtinRelationKind::disjoint: return "disjoint";
    case ArtinRelationKind::adjacent: return "adjacent";
    case ArtinRelationKind::triple: return "triple";
    case ArtinRelationKind::quadruple: return "quadruple";
    case ArtinRelationKind::circles: return "circles";
  }
  return "?";
}

namespace {

void check_graph(const ArtinGraph& t) {
  std::set<std::string> vs(t.vertices.begin(), t.vertices.end());
  if (vs.size() != t.vertices.size()) throw Error("artin graph: repeated vertex name");
  std::set<std::string> names;
  for (const auto& e : t.edges) {
    if (!names.insert(e.name).second) throw Error("artin graph: repeated edge name " + e.name);
    if (!vs.count(e.u) || !vs.count(e.v)) throw Error("artin graph: edge " + e.name + " has an unknown end");
    if (e.u == e.v) throw Error("artin graph: loop edge " + e.name);
  }
}

bool meet_once_at_one_vertex(const ArtinGraph& t, const std::string& a, const std::string& b, const std::string& c) {
  if (t.shared_vertices(a, b) != 1 || t.shared_vertices(a, c) != 1 || t.shared_vertices(b, c) != 1) return false;
  const ArtinEdge& x = t.edge(a);
  for (const auto& v : {x.u, x.v}) {
    auto at = t.edges_at(v);
    if (std::count(at.begin(), at.end(), b) && std::count(at.begin(), at.end(), c)) return true;
  }
  return false;
}

std::string common_vertex(const ArtinGraph& t, const std::string& a, const std::string& b) {
  const ArtinEdge& x = t.edge(a);
  const ArtinEdge& y = t.edge(b);
  for (const auto& v : {x.u, x.v})
    if (v == y.u || v == y.v) return v;
  return {};
}

void check_quad(const ArtinGraph& t, const ArtinQuad& q) {
  const std::string what = "artin graph: quadruple (" + q.u + "," + q.v + "," + q.v2 + "," + q.w + ")";
  if (t.shared_vertices(q.v, q.v2) != 2) throw Error(what + ": v, v' are not parallel");
  if (t.shared_vertices(q.u, q.v) != 1 || t.shared_vertices(q.w, q.v) != 1)
    throw Error(what + ": u, w must meet v in one vertex");
  if (common_vertex(t, q.u, q.v) == common_vertex(t, q.w, q.v)) throw Error(what + ": u, w meet v at the same end");
}

}  // namespace

bool satisfies_otimes(const ArtinGraph& t) {
  check_graph(t);
  if (t.vertices.empty()) return false;
  for (const auto& v : t.vertices)
    if (t.degree(v) > 3) return false;
  for (std::size_t i = 0; i < t.edges.size(); ++i)
    for (std::size_t j = i + 1; j < t.edges.size(); ++j)
      if (t.shared_vertices(t.edges[i].name, t.edges[j].name) == 2) return false;
  std::set<std::string> seen{t.vertices.front()};
  std::vector<std::string> stack{t.vertices.front()};
  while (!stack.empty()) {
    std::string v = stack.back();
    stack.pop_back();
    for (const auto& e : t.edges) {
      std::string w = e.u == v ? e.v : e.v == v ? e.u : std::string{};
      if (!w.empty() && seen.insert(w).second) stack.push_back(w);
    }
  }
  return seen.size() == t.vertices.size();
}

ArtinHat artin_hat_labeled(const ArtinGraph& t) {
  check_graph(t);
  ArtinHat out;
  Presentation& p = out.presentation;
  for (const auto& e : t.edges) p.generators.push_back(e.name);
  const int n = p.rank();
  auto gen = [&](const std::string& name) { return FreeWord::generator(n, p.index_of(name)); };
  auto push = [&](FreeWord r, ArtinRelationKind k) {
    p.add(std::move(r));
    out.kinds.push_back(k);
  };

  std::set<std::set<std::string>> annotated;
  for (const auto& tr : t.triples) {
    if (!meet_once_at_one_vertex(t, tr.u, tr.v, tr.w))
      throw Error("artin graph: triple (" + tr.u + "," + tr.v + "," + tr.w + ") does not meet in one vertex");
    annotated.insert({tr.u, tr.v, tr.w});
  }
  for (const auto& v : t.vertices) {
    auto at = t.edges_at(v);
    for (std::size_t a = 0; a < at.size(); ++a)
      for (std::size_t b = a + 1; b < at.size(); ++b)
        for (std::size_t c = b + 1; c < at.size(); ++c)
          if (meet_once_at_one_vertex(t, at[a], at[b], at[c]) && !annotated.count({at[a], at[b], at[c]}))
            throw Error("artin graph: vertex " + v + " has unannotated edges " + at[a] + ", " + at[b] + ", " + at[c]);
  }
  std::set<std::set<std::string>> parallel;
  for (const auto& q : t.quads) {
    check_quad(t, q);
    parallel.insert({q.v, q.v2});
  }
  for (std::size_t i = 0; i < t.edges.size(); ++i)
    for (std::size_t j = i + 1; j < t.edges.size(); ++j)
      if (t.shared_vertices(t.edges[i].name, t.edges[j].name) == 2 &&
          !parallel.count({t.edges[i].name, t.edges[j].name}))
        throw Error("artin graph: parallel edges " + t.edges[i].name + ", " + t.edges[j].name + " lack a quadruple");

  for (std::size_t i = 0; i < t.edges.size(); ++i)
    for (std::size_t j = i + 1; j < t.edges.size(); ++j)
      if (t.shared_vertices(t.edges[i].name, t.edges[j].name) == 0)
        push(commutator(gen(t.edges[i].name), gen(t.edges[j].name)), ArtinRelationKind::disjoint);
  for (std::size_t i = 0; i < t.edges.size(); ++i)
    for (std::size_t j = i + 1; j < t.edges.size(); ++j)
      if (t.shared_vertices(t.edges[i].name, t.edges[j].name) == 1)
        push(triple(gen(t.edges[i].name), gen(t.edges[j].name)), ArtinRelationKind::adjacent);
  for (const auto& tr : t.triples)
    push(commutator(gen(tr.u), gen(tr.v) * gen(tr.w) * gen(tr.v).inverse()), ArtinRelationKind::triple);
  for (const auto& q : t.quads) {
    FreeWord u = gen(q.u), v = gen(q.v), v2 = gen(q.v2), w = gen(q.w);
    push(triple(w * v2 * w.inverse(), v), ArtinRelationKind::quadruple);
    push(triple(u * v2 * u.inverse(), v), ArtinRelationKind::quadruple);
    push(commutator(u.inverse() * v * u, w * v2 * w.inverse()), ArtinRelationKind::quadruple);
  }
  for (const auto& c : t.circles) {
    if (c.x.empty()) throw Error("artin graph: empty circle");
    if (t.shared_vertices(c.y1, c.y2) != 2) throw Error("artin graph: circle edges " + c.y1 + ", " + c.y2 + " are not parallel");
    FreeWord xn = gen(c.x.back());
    FreeWord path(n, {});
    for (std::size_t k = 0; k + 1 < c.x.size(); ++k) path = gen(c.x[k]) * path;
    push(triple(xn.inverse() * gen(c.y1) * xn, path * gen(c.y2) * path.inverse()), ArtinRelationKind::circles);
  }
  return out;
}

Presentation artin_hat(const ArtinGraph& t) { return artin_hat_labeled(t).presentation; }

ArtinGraph glue_graphs(const ArtinGraph& t1, const std::string& v1, const ArtinGraph& t2, const std::string& v2) {
  check_graph(t1);
  check_graph(t2);
  if (std::find(t1.vertices.begin(), t1.vertices.end(), v1) == t1.vertices.end())
    throw Error("glue_graphs: unknown vertex " + v1);
  if (std::find(t2.vertices.begin(), t2.vertices.end(), v2) == t2.vertices.end())
    throw Error("glue_graphs: unknown vertex " + v2);
  const int i = t1.degree(v1);
  if (i >= 3 || t2.degree(v2) > 3 - i)
    throw Error("glue_graphs: degrees " + std::to_string(i) + ", " + std::to_string(t2.degree(v2)) + " cannot be glued");
  for (const auto& e : t2.edges)
    for (const auto& f : t1.edges)
      if (e.name == f.name) throw Error("glue_graphs: edge " + e.name + " occurs in both graphs");

  ArtinGraph out = t1;
  std::set<std::string> used(t1.vertices.begin(), t1.vertices.end());
  std::map<std::string, std::string> rename{{v2, v1}};
  for (const auto& v : t2.vertices) {
    if (v == v2) continue;
    std::string name = v;
    while (used.count(name)) name += "_2";
    used.insert(name);
    rename[v] = name;
    out.vertices.push_back(name);
  }
  for (const auto& e : t2.edges) out.edges.push_back({e.name, rename.at(e.u), rename.at(e.v)});
  out.triples.insert(out.triples.end(), t2.triples.begin(), t2.triples.end());
  out.quads.insert(out.quads.end(), t2.quads.begin(), t2.quads.end());
  out.circles.insert(out.circles.end(), t2.circles.begin(), t2.circles.end());
  auto at = t1.edges_at(v1);
  for (const auto& e : t2.edges_at(v2)) at.push_back(e);
  if (at.size() == 3 && meet_once_at_one_vertex(out, at[0], at[1], at[2]))
    out.triples.push_back({at[0], at[1], at[2]});
  return out;
}

Presentation amalgam_presentation(const ArtinGraph& t1, const std::string& v1, const ArtinGraph& t2,
                                  const std::string& v2) {
  ArtinGraph glued = glue_graphs(t1, v1, t2, v2);
  Presentation a = artin_hat(t1);
  Presentation b = artin_hat(t2);
  Presentation p;
  p.generators = a.generators;
  p.generators.insert(p.generators.end(), b.generators.begin(), b.generators.end());
  const int n = p.rank();
  auto lift = [&](const FreeWord& w, int offset) {
    std::vector<int> ls = w.letters();
    for (int& l : ls) l += l > 0 ? offset : -offset;
    return FreeWord(n, ls);
  };
  for (const auto& r : a.relators) p.add(lift(r, 0));
  for (const auto& r : b.relators) p.add(lift(r, a.rank()));
  auto gen = [&](const std::string& name) { return FreeWord::generator(n, p.index_of(name)); };
  auto at1 = t1.edges_at(v1);
  auto at2 = t2.edges_at(v2);
  for (const auto& e : t1.edges)
    for (const auto& f : t2.edges) {
      bool near = std::count(at1.begin(), at1.end(), e.name) && std::count(at2.begin(), at2.end(), f.name);
      if (!near) p.add(commutator(gen(e.name), gen(f.name)));
    }
  std::vector<std::string> ev = at1;
  ev.insert(ev.end(), at2.begin(), at2.end());
  for (const auto& e : at1)
    for (const auto& f : at2) p.add(triple(gen(e), gen(f)));
  if (ev.size() == 3 && glued.triples.size() > t1.triples.size() + t2.triples.size())
    p.add(commutator(gen(ev[0]), gen(ev[1]) * gen(ev[2]) * gen(ev[1]).inverse()));
  return p;
}

ArtinGraph plane_graph(const DegenerationPlan& plan) {
  ArtinGraph t;
  for (int k = 1; k <= plan.n_planes(); ++k) t.vertices.push_back("P" + std::to_string(k));
  for (int j : plan.ramification_lines()) {
    auto pl = plan.planes_of_line(j);
    if (pl.size() != 2) throw Error("plane_graph: line " + std::to_string(j) + " is not in two planes");
    t.edges.push_back({std::to_string(j), "P" + std::to_string(pl[0]), "P" + std::to_string(pl[1])});
  }
  return t;
}

ArtinGraph t1_graph() {
  ArtinGraph t = plane_graph(cpg_builder(1));
  const ArtinEdge four = t.edge("4");
  t.edges.push_back({"4'", four.u, four.v});
  t.triples.push_back({"5", "3", "2"});
  t.quads.push_back({"3", "4", "4'", "8"});
  t.circles.push_back({{"8", "7", "6", "5", "3"}, "4", "4'"});
  return t;
}

ArtinGraph t0_graph(int block) {
  if (block < 2) throw Error("t0_graph: block must be >= 2");
  const ArtinGraph t1 = plane_graph(cpg_builder(1));
  const int o = 9 * (block - 1);
  const int shift = 8 * (block - 1);
  auto name = [&](int j) { return std::to_string(o + j); };
  auto plane = [&](const std::string& v) { return "P" + std::to_string(std::stoi(v.substr(1)) + shift); };
  ArtinGraph t;
  t.vertices.push_back("A");
  for (int k = 1; k <= 8; ++k) t.vertices.push_back("P" + std::to_string(shift + k));
  t.edges.push_back({std::to_string(o), "A", plane("P6")});  // the free end of the block's line 1
  for (const auto& e : t1.edges) t.edges.push_back({name(std::stoi(e.name)), plane(e.u), plane(e.v)});
  const ArtinEdge four = t.edge(name(4));
  t.edges.push_back({name(4) + "'", four.u, four.v});
  t.triples.push_back({name(5), name(3), name(2)});
  t.quads.push_back({name(3), name(4), name(4) + "'", name(8)});
  t.circles.push_back({{name(8), name(7), name(6), name(5), name(3)}, name(4), name(4) + "'"});
  return t;
}

ArtinGraph tg_graph(int g) {
  if (g < 1) throw Error("tg_graph: genus must be >= 1");
  ArtinGraph t = t1_graph();
  for (int b = 2; b <= g; ++b) t = glue_graphs(t, "P" + std::to_string(8 * (b - 2) + 1), t0_graph(b), "A");
  return t;
}

nlohmann::json to_json(const ArtinGraph& t) {
  nlohmann::json j;
  j["vertices"] = t.vertices;
  j["edges"] = nlohmann::json::array();
  for (const auto& e : t.edges) j["edges"].push_back({{"name", e.name}, {"u", e.u}, {"v", e.v}});
  j["triples"] = nlohmann::json::array();
  for (const auto& x : t.triples) j["triples"].push_back({x.u, x.v, x.w});
  j["quads"] = nlohmann::json::array();
  for (const auto& q : t.quads) j["quads"].push_back({q.u, q.v, q.v2, q.w});
  j["circles"] = nlohmann::json::array();
  for (const auto& c : t.circles) j["circles"].push_back({{"x", c.x}, {"y", {c.y1, c.y2}}});
  return j;
}

ArtinGraph artin_graph_from_json(const nlohmann::json& j) {
  try {
    ArtinGraph t;
    t.vertices = j.at("vertices").get<std::vector<std::string>>();
    for (const auto& e : j.at("edges"))
      t.edges.push_back({e.at("name").get<std::string>(), e.at("u").get<std::string>(), e.at("v").get<std::string>()});
    for (const auto& x : j.value("triples", nlohmann::json::array())) {
      auto v = x.get<std::vector<std::string>>();
      if (v.size() != 3) throw ParseError("artin graph: a triple needs three edges");
      t.triples.push_back({v[0], v[1], v[2]});
    }
    for (const auto& x : j.value("quads", nlohmann::json::array())) {
      auto v = x.get<std::vector<std::string>>();
      if (v.size() != 4) throw ParseError("artin graph: a quadruple needs four edges");
      t.quads.push_back({v[0], v[1], v[2], v[3]});
    }
    for (const auto& x : j.value("circles", nlohmann::json::array())) {
      auto y = x.at("y").get<std::vector<std::string>>();
      if (y.size() != 2) throw ParseError("artin graph: circles need two y edges");
      t.circles.push_back({x.at("x").get<std::vector<std::string>>(), y[0], y[1]});
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("artin graph: ") + e.what());
  }
}

nlohmann::json to_json(const AbelianInvariants& a) { return {{"free_rank", a.free_rank}, {"torsion", a.torsion}}; }

namespace {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("smith_diagonal: integer overflow");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("smith_diagonal: integer overflow");
  return r;
}

}  // namespace

std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<long long> diag;
  auto row_op = [&](std::size_t dst, std::size_t src, long long q) {
    for (std::size_t c = 0; c < cols; ++c) m[dst][c] = checked_add(m[dst][c], -checked_mul(q, m[src][c]));
  };
  auto col_op = [&](std::size_t dst, std::size_t src, long long q) {
    for (std::size_t r = 0; r < rows; ++r) m[r][dst] = checked_add(m[r][dst], -checked_mul(q, m[r][src]));
  };
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    std::size_t pr = rows, pc = cols;
    long long best = 0;
    for (std::size_t r = t; r < rows; ++r)
      for (std::size_t c = t; c < cols; ++c)
        if (m[r][c] != 0 && (best == 0 || std::llabs(m[r][c]) < best)) {
          best = std::llabs(m[r][c]);
          pr = r;
          pc = c;
        }
    if (best == 0) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);
    for (;;) {
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r)
        if (m[r][t] != 0) {
          row_op(r, t, m[r][t] / m[t][t]);
          if (m[r][t] != 0) {
            std::swap(m[t], m[r]);
            clean = false;
          }
        }
      for (std::size_t c = t + 1; c < cols; ++c)
        if (m[t][c] != 0) {
          col_op(c, t, m[t][c] / m[t][t]);
          if (m[t][c] != 0) {
            for (auto& row : m) std::swap(row[t], row[c]);
            clean = false;
          }
        }
      if (!clean) continue;
      std::size_t bad = rows;
      for (std::size_t r = t + 1; r < rows && bad == rows; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (m[r][c] % m[t][t] != 0) {
            bad = r;
            break;
          }
      if (bad == rows) break;
      for (std::size_t c = 0; c < cols; ++c) m[t][c] = checked_add(m[t][c], m[bad][c]);
    }
    diag.push_back(std::llabs(m[t][t]));
  }
  return diag;
}

AbelianInvariants abelianize(const Presentation& p) {
  const int n = p.rank();
  std::vector<std::vector<long long>> m;
  for (const auto& r : p.relators) {
    std::vector<long long> row(n, 0);
    for (int l : r.letters()) row[std::abs(l) - 1] += l > 0 ? 1 : -1;
    if (std::any_of(row.begin(), row.end(), [](long long x) { return x != 0; })) m.push_back(row);
  }
  AbelianInvariants out;
  auto diag = m.empty() ? std::vector<long long>{} : smith_diagonal(m);
  out.free_rank = n - static_cast<int>(diag.size());
  for (long long d : diag)
    if (d > 1) out.torsion.push_back(d);
  return out;
}

}  // namespace braidforge
