#include "braidforge/regeneration.hpp"

#include <algorithm>
#include <numeric>

namespace braidforge {

Cabled cable(const BraidWord& w, const std::vector<int>& widths) {
  if (static_cast<int>(widths.size()) != w.strands()) throw Error("cable: width count does not match strands");
  for (int x : widths)
    if (x < 1) throw Error("cable: widths must be positive");
  Cabled out{BraidWord(std::accumulate(widths.begin(), widths.end(), 0)), widths};
  std::vector<int> letters;
  for (int l : w.letters()) {
    int k = std::abs(l);
    int s = 1 + std::accumulate(out.widths.begin(), out.widths.begin() + (k - 1), 0);
    int w1 = out.widths[k - 1], w2 = out.widths[k];
    // an inverse letter is the inverse of the positive crossing from the swapped widths
    if (l < 0) std::swap(w1, w2);
    std::vector<int> block;
    for (int r = 0; r < w2; ++r)
      for (int t = s + w1 - 1 + r; t >= s + r; --t) block.push_back(t);
    if (l < 0) {
      std::reverse(block.begin(), block.end());
      for (int& x : block) x = -x;
    }
    letters.insert(letters.end(), block.begin(), block.end());
    std::swap(out.widths[k - 1], out.widths[k]);
  }
  out.word = BraidWord(out.word.strands(), std::move(letters));
  return out;
}

namespace {

Factor twist(int n, int a, int b, const std::vector<Side>& sides, int e, OriginTag tag) {
  return Factor::from_half_twist(compile_sides(n, a, b, sides), e, tag);
}

Factor conjugate(Factor f, const BraidWord& w) { return f.conjugated_by(w); }

}  // namespace

std::vector<Factor> rule1(int n, int q, OriginTag tag) {
  return {twist(n, q + 1, q + 2, {}, 1, tag), twist(n, q, q + 3, {Side::below, Side::above}, 1, tag)};
}

std::vector<Factor> rule2(int n, int q, int w1, int w2, OriginTag tag) {
  const Side A = Side::above;
  if (w1 == 1 && w2 == 1) return {twist(n, q, q + 1, {}, 2, tag)};
  if (w1 == 1 && w2 == 2) return {twist(n, q, q + 2, {A}, 2, tag), twist(n, q, q + 1, {}, 2, tag)};
  if (w1 == 2 && w2 == 1) return {twist(n, q + 1, q + 2, {}, 2, tag), twist(n, q, q + 2, {A}, 2, tag)};
  if (w1 == 2 && w2 == 2)
    return {twist(n, q + 1, q + 3, {A}, 2, tag), twist(n, q, q + 3, {A, A}, 2, tag),
            twist(n, q + 1, q + 2, {}, 2, tag), twist(n, q, q + 2, {A}, 2, tag)};
  throw UnsupportedEvent("rule2: unsupported band widths");
}

std::vector<Factor> rule3(int n, int q, int w1, int w2, OriginTag tag) {
  int x_at = 0, z_at = 0;
  if (w1 == 1 && w2 == 2) {
    x_at = q;
    z_at = q + 1;
  } else if (w1 == 2 && w2 == 1) {
    x_at = q + 1;
    z_at = q;
  } else {
    throw UnsupportedEvent("rule3: tangency needs exactly one doubled band");
  }
  Factor x = twist(n, x_at, x_at + 1, {}, 3, tag);
  BraidWord z = BraidWord::generator(n, z_at);
  return {conjugate(x, z.inverse()), x, conjugate(x, z)};
}

std::vector<Factor> regenerate_factor(const Factor& f, const std::vector<int>& widths) {
  Cabled c = cable(f.conj, widths);
  int n = c.word.strands();
  int q = 1 + std::accumulate(c.widths.begin(), c.widths.begin() + (f.first - 1), 0);
  std::vector<Factor> local;
  if (f.size != 2) {
    for (int k = f.first; k < f.first + f.size; ++k)
      if (c.widths[k - 1] != 1) throw UnsupportedEvent("regeneration of a k-fold block with doubled bands");
    local.push_back(Factor{n, BraidWord(n), q, f.size, f.exponent, f.tag});
  } else {
    int w1 = c.widths[f.first - 1], w2 = c.widths[f.first];
    if (w1 == 1 && w2 == 1) {
      local.push_back(Factor{n, BraidWord(n), q, 2, f.exponent, f.tag});
    } else if (f.exponent == 1) {
      if (w1 != 2 || w2 != 2) throw UnsupportedEvent("rule1: branch point needs both bands doubled");
      local = rule1(n, q, f.tag);
    } else if (f.exponent == 2) {
      local = rule2(n, q, w1, w2, f.tag);
    } else if (f.exponent == 4) {
      local = rule3(n, q, w1, w2, f.tag);
    } else {
      throw UnsupportedEvent("no regeneration rule for exponent " + std::to_string(f.exponent));
    }
  }
  for (auto& x : local) x = x.conjugated_by(c.word);
  return local;
}

Factorization regenerate(const Factorization& f, const std::vector<int>& widths) {
  Factorization out;
  out.strands = std::accumulate(widths.begin(), widths.end(), 0);
  for (const auto& b : f.blocks) {
    std::vector<Factor> fs;
    for (std::size_t k = b.begin; k < b.end; ++k) {
      auto r = regenerate_factor(f.factors[k], widths);
      fs.insert(fs.end(), r.begin(), r.end());
    }
    out.append_block(b.name, b.notation, fs);
  }
  if (f.blocks.empty())
    for (const auto& x : f.factors)
      for (const auto& y : regenerate_factor(x, widths)) out.append(y);
  return out;
}

int line_rank(const DegenerationPlan& p, int line) {
  auto ids = p.ramification_lines();
  auto it = std::find(ids.begin(), ids.end(), line);
  if (it == ids.end()) throw Error("line " + std::to_string(line) + " is not a ramification line");
  return static_cast<int>(it - ids.begin()) + 1;
}

std::vector<int> parasitic_partners(const DegenerationPlan& p, int j) {
  const PlanLine& lj = p.line(j);
  std::vector<int> out;
  for (int i : p.ramification_lines()) {
    if (i >= j) continue;
    const PlanLine& li = p.line(i);
    if (li.s != lj.s && li.s != lj.t && li.t != lj.s && li.t != lj.t) out.push_back(i);
  }
  return out;
}

bool decoration_is_tabulated(const DegenerationPlan& p, int i, int j) {
  return std::any_of(p.parasitic.begin(), p.parasitic.end(),
                     [i, j](const ParasiticEntry& e) { return e.i == i && e.j == j; });
}

ParasiticEntry parasitic_decoration(const DegenerationPlan& p, int i, int j) {
  for (const auto& e : p.parasitic)
    if (e.i == i && e.j == j) return e;
  ParasiticEntry e;
  e.i = i;
  e.j = j;
  if (line_rank(p, j) - line_rank(p, i) == 1) {
    e.side = Side::below;
    e.plain = true;
    return e;
  }
  // above, dipping below the runs of lines that meet L_j at its larger endpoint
  e.side = Side::above;
  const PlanLine& lj = p.line(j);
  int run_start = 0, run_end = 0;
  for (int k : p.ramification_lines()) {
    if (k <= i || k >= j) continue;
    const PlanLine& lk = p.line(k);
    bool hit = lk.s == lj.t || lk.t == lj.t;
    if (hit && run_start && line_rank(p, k) == line_rank(p, run_end) + 1) {
      run_end = k;
    } else if (hit) {
      if (run_start) e.detours.push_back({run_start, run_end, Side::below});
      run_start = run_end = k;
    }
  }
  if (run_start) e.detours.push_back({run_start, run_end, Side::below});
  return e;
}

PathSpec parasitic_path(const DegenerationPlan& p, const ParasiticEntry& e) {
  PathSpec path;
  path.strands = p.ell();
  path.a = line_rank(p, e.i);
  path.b = line_rank(p, e.j);
  path.side = e.plain ? Side::below : e.side;
  for (const auto& d : e.detours) path.detours.push_back({line_rank(p, d.from), line_rank(p, d.to), d.side});
  return path;
}

std::string parasitic_notation(const ParasiticEntry& e, bool doubled) {
  std::string s = "Z";
  if (!e.plain) s += e.side == Side::above ? "bar" : "under";
  auto pt = [doubled](int x) { return doubled ? std::to_string(x) + " " + std::to_string(x) + "'" : std::to_string(x); };
  s += "2[" + pt(e.i) + "," + pt(e.j);
  for (const auto& d : e.detours) {
    s += ";";
    s += d.side == Side::below ? "under(" : "over(";
    s += std::to_string(d.from) + "-" + std::to_string(d.to) + (doubled ? "'" : "") + ")";
  }
  return s + "]";
}

VertexModel vertex_model(const DegenerationPlan& p, int vertex) {
  const PlanVertex& v = p.vertex(vertex);
  VertexModel m;
  m.lines = v.lines;
  std::sort(m.lines.begin(), m.lines.end());
  auto id = [](int x) { return std::to_string(x); };
  if (m.lines.empty()) return m;
  if (v.local_type == "2-point" && m.lines.size() == 1) {
    m.notation = "Z[" + id(m.lines[0]) + "," + id(m.lines[0]) + "']";
    return m;
  }
  if (v.local_type == "3-point" && m.lines.size() == 2) {
    std::string a = id(m.lines[0]), b = id(m.lines[1]);
    if (v.variant == "a'bb'") {
      m.events = EventList{3, {{EventKind::tangent, 2, 3, {}}, {EventKind::branch, 1, 2, {}}}};
      m.widths = {1, 1, 2};
      m.notation = "Z3[" + a + "'," + b + " " + b + "'] Ztilde[" + a + "," + a + "']";
      return m;
    }
    if (v.variant == "aa'b") {
      m.events = EventList{3, {{EventKind::tangent, 1, 2, {}}, {EventKind::branch, 2, 3, {}}}};
      m.widths = {2, 1, 1};
      m.notation = "Z3[" + a + " " + a + "'," + b + "] Ztilde[" + b + "," + b + "']";
      return m;
    }
    throw UnsupportedEvent("3-point vertex " + id(vertex) + " has no variant");
  }
  if (v.local_type == "conic-3-point" && m.lines.size() == 3) {
    m.events = EventList{4,
                         {{EventKind::tangent, 1, 2, {}},
                          {EventKind::tangent, 3, 4, {}},
                          {EventKind::branch, 2, 3, {}},
                          {EventKind::node, 1, 4, {Pass::gap, Pass::gap}}}};
    m.widths = {2, 1, 1, 2};
    m.notation = "phi(" + id(m.lines[0]) + "," + id(m.lines[1]) + "," + id(m.lines[2]) + ")";
    return m;
  }
  throw UnsupportedEvent("no regeneration model for vertex " + id(vertex) + " of type '" + v.local_type + "'");
}

std::vector<Factor> vertex_fragment(const DegenerationPlan& p, int vertex) {
  VertexModel m = vertex_model(p, vertex);
  const int n = 2 * p.ell();
  OriginTag tag = OriginTag::vertex(vertex);
  if (m.lines.empty()) return {};
  if (m.events.events.empty()) {
    int r = line_rank(p, m.lines[0]);
    return {Factor{n, BraidWord(n), 2 * r - 1, 2, 1, tag}};
  }
  Factorization local = regenerate(lefschetz_pipeline(m.events), m.widths);
  std::vector<int> points;
  for (int l : m.lines) {
    int r = line_rank(p, l);
    points.push_back(2 * r - 1);
    points.push_back(2 * r);
  }
  BraidWord loc = localization_conjugator(n, points);
  int offset = points.front() - 1;
  std::vector<Factor> out;
  for (const auto& f : local.factors) {
    Factor g{n, f.conj.shifted(offset, n), f.first + offset, f.size, f.exponent, tag};
    out.push_back(g.conjugated_by(loc));
  }
  return out;
}

Factorization assemble_bmf(const DegenerationPlan& p) {
  auto issues = validate_plan(p);
  if (!issues.empty()) throw Error("assemble_bmf: invalid plan: " + issues.front().what);
  const int ell = p.ell();
  Factorization out;
  out.strands = 2 * ell;
  std::vector<int> vids;
  for (const auto& v : p.vertices)
    if (!v.lines.empty()) vids.push_back(v.id);
  std::sort(vids.rbegin(), vids.rend());
  const std::vector<int> doubled(static_cast<std::size_t>(ell), 2);
  for (int v : vids) {
    std::vector<int> js;
    for (int j : p.ramification_lines())
      if (p.line(j).s == v && !parasitic_partners(p, j).empty()) js.push_back(j);
    std::string c_notation;
    for (int j : js) c_notation += (c_notation.empty() ? "D" : " D") + std::to_string(j);
    out.append_block("C" + std::to_string(v), c_notation.empty() ? "id" : c_notation, {});
    for (int j : js) {
      std::vector<Factor> fs;
      std::string notation;
      for (int i : parasitic_partners(p, j)) {
        ParasiticEntry e = parasitic_decoration(p, i, j);
        Factor node = Factor::from_half_twist(compile_path(parasitic_path(p, e)), 2, OriginTag::parasitic(i, j));
        auto r = regenerate_factor(node, doubled);
        fs.insert(fs.end(), r.begin(), r.end());
        notation += (notation.empty() ? "" : " ") + parasitic_notation(e);
      }
      out.append_block("D" + std::to_string(j), notation, fs);
    }
    out.append_block("H" + std::to_string(v), vertex_model(p, v).notation, vertex_fragment(p, v));
  }
  return out;
}

}  // namespace braidforge
