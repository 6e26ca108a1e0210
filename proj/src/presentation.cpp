#include "braidforge/presentation.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "braidforge/relations.hpp"

namespace braidforge {

int Presentation::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i] == name) return static_cast<int>(i) + 1;
  throw ParseError("unknown generator '" + std::string(name) + "'");
}

void Presentation::add(FreeWord r) {
  if (r.rank() != rank()) throw Error("Presentation: relator rank mismatch");
  relators.push_back(r.reduced());
}

FreeWord parse_word(std::string_view text, const Presentation& p) {
  std::vector<int> letters;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "e") continue;
    int power = 1;
    auto caret = tok.find('^');
    std::string name = tok.substr(0, caret);
    if (caret != std::string::npos) {
      std::string_view num(tok);
      num.remove_prefix(caret + 1);
      auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), power);
      if (ec != std::errc() || ptr != num.data() + num.size() || power == 0)
        throw ParseError("bad exponent in '" + tok + "'");
    }
    int g = p.index_of(name);
    for (int i = 0; i < std::abs(power); ++i) letters.push_back(power > 0 ? g : -g);
  }
  return FreeWord(p.rank(), std::move(letters));
}

std::string format_word(const FreeWord& w, const Presentation& p) {
  const auto& l = w.letters();
  if (l.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < l.size();) {
    std::size_t j = i;
    while (j < l.size() && l[j] == l[i]) ++j;
    int run = static_cast<int>(j - i) * (l[i] > 0 ? 1 : -1);
    if (!out.empty()) out += ' ';
    out += p.generators[std::abs(l[i]) - 1];
    if (run != 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

nlohmann::json to_json(const Presentation& p) {
  nlohmann::json rel = nlohmann::json::array();
  for (const auto& r : p.relators) rel.push_back(format_word(r, p));
  return {{"generators", p.generators}, {"relators", rel}};
}

Presentation presentation_from_json(const nlohmann::json& j) {
  Presentation p;
  try {
    p.generators = j.at("generators").get<std::vector<std::string>>();
    for (const auto& r : j.at("relators")) p.relators.push_back(parse_word(r.get<std::string>(), p));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("presentation: ") + e.what());
  }
  return p;
}

FreeWord commutator(const FreeWord& a, const FreeWord& b) { return (a * b * a.inverse() * b.inverse()).reduced(); }

FreeWord triple(const FreeWord& a, const FreeWord& b) {
  return (a * b * a * b.inverse() * a.inverse() * b.inverse()).reduced();
}

FreeWord conj(const FreeWord& a, const FreeWord& b) { return (b.inverse() * a * b).reduced(); }

std::vector<std::string> doubled_names(int ell) {
  std::vector<std::string> out;
  for (int k = 1; k <= ell; ++k) {
    out.push_back(std::to_string(k));
    out.push_back(std::to_string(k) + "'");
  }
  return out;
}

std::vector<std::string> plain_names(int n) {
  std::vector<std::string> out;
  for (int k = 1; k <= n; ++k) out.push_back(std::to_string(k));
  return out;
}

VanKampenPair van_kampen_pair(const Factor& f) {
  if (f.size != 2) throw Error("van_kampen: factor is not a half-twist power");
  const int n = f.strands;
  // reflect to the picture with the base point above, then read the loops back
  std::vector<int> mirrored = f.conj.letters();
  for (int& x : mirrored) x = -x;
  BraidWord c(n, std::move(mirrored));
  auto loop = [&](int k) {
    std::vector<int> l = artin_action(c, FreeWord::generator(n, k)).reduced().letters();
    std::reverse(l.begin(), l.end());
    return FreeWord(n, std::move(l));
  };
  return {loop(f.first + 1), loop(f.first)};
}

FreeWord van_kampen_relator(const Factor& f) {
  auto [a, b] = van_kampen_pair(f);
  switch (f.exponent) {
    case 1:
      return (a * b.inverse()).reduced();
    case 2:
      return commutator(a, b);
    case 3:
      return triple(a, b);
    default:
      throw Error("van_kampen: exponent " + std::to_string(f.exponent) + " has no relation");
  }
}

Presentation van_kampen(const Factorization& f, bool projective, std::vector<std::string> names) {
  Presentation p;
  p.generators = names.empty() ? plain_names(f.strands) : std::move(names);
  if (p.rank() != f.strands) throw Error("van_kampen: name count does not match strands");
  for (const auto& x : f.factors) p.add(van_kampen_relator(x));
  if (projective) {
    std::vector<int> all;
    for (int k = 1; k <= f.strands; ++k) all.push_back(k);
    p.add(FreeWord(f.strands, all));
  }
  return p;
}

Presentation btilde(int n) {
  if (n <= 3) throw Error("btilde: needs n > 3");
  Presentation p;
  for (int i = 1; i < n; ++i) p.generators.push_back("x" + std::to_string(i));
  const int r = n - 1;
  auto x = [r](int i) { return FreeWord::generator(r, i); };
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j) p.add(j == i + 1 ? triple(x(i), x(j)) : commutator(x(i), x(j)));
  // [x2, x3^-1 x1^-1 x2 x1 x3]
  FreeWord inner = x(3).inverse() * x(1).inverse() * x(2) * x(1) * x(3);
  p.add(commutator(x(2), inner));
  return p;
}

bool btilde2_member(const BraidWord& x, const BraidWord& y) {
  if (x.strands() != y.strands()) return false;
  return degree(x) == degree(y) && permutation(x) == permutation(y);
}

Presentation coxeter_quotient(const Presentation& p, const std::vector<Identification>& extra) {
  Presentation q = p;
  for (int k = 1; k <= p.rank(); ++k) q.add(FreeWord(p.rank(), {k, k}));
  for (const auto& id : extra) q.add(FreeWord(p.rank(), {p.index_of(id.a), -p.index_of(id.b)}));
  return q;
}

Presentation simplify_presentation(const Presentation& p, std::vector<int>* kept, double growth) {
  std::vector<int> alive(p.rank());
  for (int k = 0; k < p.rank(); ++k) alive[k] = k + 1;
  std::vector<std::vector<int>> rels;
  std::size_t start_length = 0;
  for (const auto& r : p.relators) {
    rels.push_back(r.cyclically_reduced().letters());
    start_length += r.length();
  }
  const auto limit = static_cast<std::size_t>(growth * static_cast<double>(std::max<std::size_t>(start_length, 1)));
  auto dedupe = [&] {
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> out;
    for (auto& r : rels) {
      FreeWord w(p.rank(), r);
      w = w.cyclically_reduced();
      if (w.empty()) continue;
      if (seen.insert(relator_key(w)).second) out.push_back(w.letters());
    }
    rels = std::move(out);
  };
  dedupe();
  for (;;) {
    int best_rel = -1, best_gen = 0;
    for (std::size_t i = 0; i < rels.size(); ++i) {
      if (best_rel >= 0 && rels[i].size() >= rels[best_rel].size()) continue;
      std::map<int, int> count;
      for (int l : rels[i]) ++count[std::abs(l)];
      for (auto [g, c] : count)
        if (c == 1) {
          best_rel = static_cast<int>(i);
          best_gen = g;
          break;
        }
    }
    if (best_rel < 0) break;
    const std::vector<int>& r = rels[best_rel];
    std::size_t at = 0;
    while (std::abs(r[at]) != best_gen) ++at;
    // r = u x^e v, so x = (u^-1 v^-1)^e
    std::vector<int> value;
    for (std::size_t k = at + 1; k < r.size(); ++k) value.push_back(r[k]);
    for (std::size_t k = 0; k < at; ++k) value.push_back(r[k]);
    if (r[at] > 0) {
      std::reverse(value.begin(), value.end());
      for (int& l : value) l = -l;
    }
    std::vector<std::vector<int>> next;
    std::size_t total = 0;
    for (std::size_t i = 0; i < rels.size(); ++i) {
      if (static_cast<int>(i) == best_rel) continue;
      std::vector<int> w;
      for (int l : rels[i]) {
        if (std::abs(l) != best_gen) {
          w.push_back(l);
        } else if (l > 0) {
          w.insert(w.end(), value.begin(), value.end());
        } else {
          for (auto it = value.rbegin(); it != value.rend(); ++it) w.push_back(-*it);
        }
      }
      free_reduce(w);
      total += w.size();
      next.push_back(std::move(w));
    }
    if (total > limit) break;
    for (auto& w : next)
      for (int& l : w)
        if (std::abs(l) > best_gen) l += l > 0 ? -1 : 1;
    alive.erase(alive.begin() + (best_gen - 1));
    rels = std::move(next);
    dedupe();
  }
  Presentation q;
  for (int k : alive) q.generators.push_back(p.generators[k - 1]);
  for (auto& r : rels) q.relators.push_back(FreeWord(q.rank(), r));
  if (kept) *kept = alive;
  return q;
}

bool perm_rep_check(const Presentation& p, const std::vector<Permutation>& assignment) {
  if (static_cast<int>(assignment.size()) != p.rank()) throw Error("perm_rep_check: assignment size mismatch");
  if (assignment.empty()) return true;
  const std::size_t n = assignment.front().size();
  std::vector<Permutation> inverse;
  for (const auto& a : assignment) inverse.push_back(a.inverse());
  for (const auto& r : p.relators) {
    Permutation acc(n);
    for (int l : r.letters()) acc = acc * (l > 0 ? assignment[l - 1] : inverse[-l - 1]);
    if (!acc.is_identity()) return false;
  }
  return true;
}

std::vector<Permutation> plane_transpositions(const DegenerationPlan& plan) {
  std::vector<Permutation> out;
  for (int id : plan.ramification_lines()) {
    auto planes = plan.planes_of_line(id);
    if (planes.size() != 2) throw Error("plane_transpositions: line " + std::to_string(id) + " is not on two planes");
    auto t = Permutation::transposition(static_cast<std::size_t>(plan.n_planes()), planes[0], planes[1]);
    out.push_back(t);
    out.push_back(t);
  }
  return out;
}

}  // namespace braidforge
