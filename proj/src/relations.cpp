#include "braidforge/relations.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <set>
#include <sstream>

namespace braidforge {

namespace {

FreeWord reversed(const FreeWord& w) {
  std::vector<int> l = w.letters();
  std::reverse(l.begin(), l.end());
  return FreeWord(w.rank(), std::move(l));
}

BraidWord mirrored(const BraidWord& w) {
  std::vector<int> l = w.letters();
  for (int& x : l) x = -x;
  return BraidWord(w.strands(), std::move(l));
}

std::string trim(std::string s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

// every instance of the underscore shorthand
std::vector<std::string> expand_underlines(const std::string& text) {
  static const std::regex under("_([0-9]+)");
  std::smatch m;
  if (!std::regex_search(text, m, under)) return {text};
  std::string head = m.prefix().str(), tail = m.suffix().str(), g = m[1].str();
  std::vector<std::string> out;
  for (const auto& rest : expand_underlines(tail)) {
    out.push_back(head + g + rest);
    out.push_back(head + g + "'" + rest);
  }
  return out;
}

Relation parse_one(const std::string& text, const Presentation& p) {
  std::string t = trim(text);
  if (t.size() >= 2 && (t.front() == '[' || t.front() == '<')) {
    char close = t.front() == '[' ? ']' : '>';
    if (t.back() != close) throw ParseError("relation: unbalanced brackets in '" + t + "'");
    auto comma = t.find(',');
    if (comma == std::string::npos) throw ParseError("relation: missing comma in '" + t + "'");
    return {t.front() == '[' ? RelationShape::commute : RelationShape::braid,
            parse_word(t.substr(1, comma - 1), p), parse_word(t.substr(comma + 1, t.size() - comma - 2), p)};
  }
  auto eq = t.find('=');
  if (eq == std::string::npos) return {RelationShape::equal, parse_word(t, p), FreeWord(p.rank(), {})};
  return {RelationShape::equal, parse_word(t.substr(0, eq), p), parse_word(t.substr(eq + 1), p)};
}

bool commutes_with(int letter, const FreeWord& w, const std::vector<std::vector<bool>>& c) {
  for (int l : w.letters())
    if (!c[std::abs(letter)][std::abs(l)]) return false;
  return true;
}

}  // namespace

std::vector<std::vector<bool>> commuting_table(const std::vector<Relation>& rels, int rank) {
  std::vector<std::vector<bool>> c(rank + 1, std::vector<bool>(rank + 1, false));
  for (int i = 1; i <= rank; ++i) c[i][i] = true;
  for (const auto& r : rels) {
    if (r.shape != RelationShape::commute || r.a.letters().size() != 1 || r.b.letters().size() != 1) continue;
    int x = std::abs(r.a.letters()[0]), y = std::abs(r.b.letters()[0]);
    c[x][y] = c[y][x] = true;
  }
  return c;
}

FreeWord commute_reduce(const FreeWord& w, const std::vector<std::vector<bool>>& c) {
  std::vector<int> l = w.reduced().letters();
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < l.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < l.size(); ++j) {
        if (l[j] == -l[i]) {
          l.erase(l.begin() + j);
          l.erase(l.begin() + i);
          changed = true;
          break;
        }
        if (!c[std::abs(l[i])][std::abs(l[j])]) break;
      }
  }
  return FreeWord(w.rank(), std::move(l));
}

namespace {

// w = c^-1 w' c with c a single letter
bool conjugated(const FreeWord& w) {
  const auto& l = w.letters();
  return l.size() >= 3 && l.front() == -l.back();
}

FreeWord strip(const FreeWord& w) {
  const auto& l = w.letters();
  return FreeWord(w.rank(), std::vector<int>(l.begin() + 1, l.end() - 1));
}

std::pair<int, std::vector<int>> shape_key(const Relation& r) {
  return {static_cast<int>(r.shape), relator_key(r.relator())};
}

}  // namespace

FreeWord Relation::relator() const {
  switch (shape) {
    case RelationShape::equal:
      return (a * b.inverse()).reduced();
    case RelationShape::commute:
      return commutator(a, b);
    case RelationShape::braid:
      return triple(a, b);
  }
  return {};
}

std::vector<Relation> parse_relations(std::string_view text, const Presentation& p) {
  std::vector<Relation> out;
  for (const auto& inst : expand_underlines(std::string(text))) out.push_back(parse_one(inst, p));
  return out;
}

std::vector<LabeledRelation> parse_relation_file(std::string_view text, const Presentation& p) {
  std::vector<LabeledRelation> out;
  std::string label;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    auto e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);
    if (line[0] == '#') {
      auto l = line.find_first_not_of("# \t");
      label = l == std::string::npos ? std::string{} : line.substr(l);
      continue;
    }
    for (auto& r : parse_relations(line, p)) out.push_back({label, std::move(r)});
  }
  return out;
}

std::string format_relation(const Relation& r, const Presentation& p) {
  switch (r.shape) {
    case RelationShape::equal:
      return format_word(r.a, p) + " = " + format_word(r.b, p);
    case RelationShape::commute:
      return "[" + format_word(r.a, p) + ", " + format_word(r.b, p) + "]";
    case RelationShape::braid:
      return "<" + format_word(r.a, p) + ", " + format_word(r.b, p) + ">";
  }
  return {};
}

std::vector<int> relator_key(const FreeWord& w) {
  std::vector<int> best;
  bool first = true;
  for (const FreeWord& v : {w.cyclically_reduced(), w.inverse().cyclically_reduced()}) {
    std::vector<int> l = v.letters();
    for (std::size_t i = 0; i < std::max<std::size_t>(l.size(), 1); ++i) {
      if (first || l < best) best = l;
      first = false;
      if (!l.empty()) std::rotate(l.begin(), l.begin() + 1, l.end());
    }
  }
  return best;
}

Relation van_kampen_relation(const Factor& f) {
  auto [a, b] = van_kampen_pair(f);
  switch (f.exponent) {
    case 1:
      return {RelationShape::equal, a, b};
    case 2:
      return {RelationShape::commute, a, b};
    case 3:
      return {RelationShape::braid, a, b};
    default:
      throw Error("van_kampen: exponent " + std::to_string(f.exponent) + " has no relation");
  }
}

Factor complex_conjugate(const Factor& f) {
  Factor out = f;
  out.conj = mirrored(f.conj);
  return out;
}

FreeWord loop_action(const BraidWord& h, const FreeWord& w) {
  return reversed(artin_action(mirrored(h), reversed(w)).reduced());
}

Relation peel(const Relation& r, const std::vector<std::vector<bool>>& c) {
  Relation out{r.shape, r.a, r.b};
  for (bool changed = true; changed;) {
    changed = false;
    out.a = commute_reduce(out.a, c);
    out.b = commute_reduce(out.b, c);
    const auto& la = out.a.letters();
    const auto& lb = out.b.letters();
    if (conjugated(out.a) && conjugated(out.b) && la.back() == lb.back()) {
      out.a = strip(out.a);
      out.b = strip(out.b);
      changed = true;
    } else if (conjugated(out.a) && commutes_with(la.back(), out.b, c)) {
      out.a = strip(out.a);
      changed = true;
    } else if (conjugated(out.b) && commutes_with(lb.back(), out.a, c)) {
      out.b = strip(out.b);
      changed = true;
    }
  }
  return out;
}

std::vector<Relation> normalized_relations(const Factorization& f, const NormalizeOptions& opt) {
  const int n = f.strands;
  std::vector<Relation> rels;
  std::set<std::pair<int, std::vector<int>>> seen;
  auto add = [&](Relation r) {
    if (seen.insert(shape_key(r)).second) rels.push_back(std::move(r));
  };
  for (const auto& x : f.factors) {
    add(van_kampen_relation(x));
    add(van_kampen_relation(complex_conjugate(x)));
  }
  auto settle = [&] {
    for (std::size_t before = 0; before != rels.size();) {
      before = rels.size();
      auto c = commuting_table(rels, n);
      std::vector<Relation> cur = rels;
      for (const auto& r : cur) add(peel(r, c));
    }
  };
  settle();
  for (int round = 0; round < opt.rounds; ++round) {
    std::vector<Relation> cur = rels;
    for (const auto& h : opt.invariance)
      for (const BraidWord& g : {h, h.inverse()})
        for (const auto& r : cur) add({r.shape, loop_action(g, r.a), loop_action(g, r.b)});
    settle();
  }
  return rels;
}

std::vector<Relation> unmatched(const std::vector<Relation>& targets, const std::vector<Relation>& set) {
  std::set<std::vector<int>> keys;
  for (const auto& r : set) keys.insert(relator_key(r.relator()));
  std::vector<Relation> out;
  for (const auto& t : targets)
    if (!keys.count(relator_key(t.relator()))) out.push_back(t);
  return out;
}

}  // namespace braidforge
