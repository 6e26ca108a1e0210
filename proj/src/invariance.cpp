#include "braidforge/invariance.hpp"

#include <cstdlib>
#include <deque>
#include <map>
#include <optional>
#include <tuple>

namespace braidforge {

Factorization apply_moves(const Factorization& f, const std::vector<HurwitzMove>& moves) {
  Factorization g = f;
  for (const auto& m : moves) g = hurwitz_move(g, m.k, m.inverse);
  g.blocks.clear();
  return g;
}

std::vector<HurwitzMove> inverse_moves(const std::vector<HurwitzMove>& moves) {
  std::vector<HurwitzMove> out;
  for (auto it = moves.rbegin(); it != moves.rend(); ++it) out.push_back({it->k, !it->inverse});
  return out;
}

bool verify_certificate(const Factorization& f, const BraidWord& h, const std::vector<HurwitzMove>& moves) {
  for (const auto& m : moves)
    if (m.k < 1 || m.k >= static_cast<int>(f.factors.size())) return false;
  Factorization g = apply_moves(f, moves);
  Factorization target = conjugate_factorization(f, h);
  for (std::size_t i = 0; i < f.factors.size(); ++i)
    if (!braid_equal(g.factors[i].braid(), target.factors[i].braid())) return false;
  return true;
}

namespace {

Factorization segment(const Factorization& f, std::size_t begin, std::size_t length) {
  Factorization s;
  s.strands = f.strands;
  s.factors.assign(f.factors.begin() + static_cast<std::ptrdiff_t>(begin),
                   f.factors.begin() + static_cast<std::ptrdiff_t>(begin + length));
  return s;
}

std::vector<HurwitzMove> shifted(const std::vector<HurwitzMove>& moves, int by) {
  std::vector<HurwitzMove> out = moves;
  for (auto& m : out) m.k += by;
  return out;
}

// Moves carrying f onto f conjugated by sigma_k^sign, or false.
bool certify_generator(const Factorization& f, int k, int sign, std::vector<HurwitzMove>& out) {
  BraidWord s = BraidWord::generator(f.strands, k);
  if (sign < 0) s = s.inverse();
  const std::size_t m = f.factors.size();
  // step[i]: (segment length, moves) certifying a suffix from i
  std::vector<std::optional<std::pair<std::size_t, std::vector<HurwitzMove>>>> step(m + 1);
  std::vector<bool> ok(m + 1, false);
  ok[m] = true;
  for (std::size_t i = m; i-- > 0;) {
    BraidWord g = f.factors[i].braid();
    if (ok[i + 1] && braid_equal(g * s, s * g)) {
      step[i] = std::pair{std::size_t{1}, std::vector<HurwitzMove>{}};
      ok[i] = true;
      continue;
    }
    for (const auto& lemma : invariance_lemmas()) {
      auto len = static_cast<std::size_t>(lemma.length);
      if (i + len > m || !ok[i + len]) continue;
      Factorization seg = segment(f, i, len);
      for (const auto& moves : {lemma.moves, inverse_moves(lemma.moves)})
        if (!ok[i] && verify_certificate(seg, s, moves)) {
          step[i] = std::pair{len, shifted(moves, static_cast<int>(i))};
          ok[i] = true;
        }
      if (ok[i]) break;
    }
  }
  if (!ok[0]) return false;
  for (std::size_t i = 0; i < m; i += step[i]->first) out.insert(out.end(), step[i]->second.begin(), step[i]->second.end());
  return true;
}

struct NormalFormLess {
  bool operator()(const NormalForm& a, const NormalForm& b) const {
    return std::tie(a.strands, a.inf, a.simples) < std::tie(b.strands, b.inf, b.simples);
  }
};

class Interner {
 public:
  int id(const BraidWord& w) {
    NormalForm nf = left_normal_form(w);
    auto [it, fresh] = ids_.emplace(nf, static_cast<int>(words_.size()));
    if (fresh) words_.push_back(to_word(nf));
    return it->second;
  }
  // a b a^-1
  int conj(int a, int b) {
    auto [it, fresh] = fwd_.emplace(std::pair{a, b}, -1);
    if (fresh) it->second = id(words_[a] * words_[b] * words_[a].inverse());
    return it->second;
  }
  // b^-1 a b
  int conj_inv(int a, int b) {
    auto [it, fresh] = bwd_.emplace(std::pair{a, b}, -1);
    if (fresh) it->second = id(words_[b].inverse() * words_[a] * words_[b]);
    return it->second;
  }

 private:
  std::map<NormalForm, int, NormalFormLess> ids_;
  std::vector<BraidWord> words_;
  std::map<std::pair<int, int>, int> fwd_, bwd_;
};

using State = std::vector<int>;

struct SearchSide {
  std::map<State, int> index;
  std::vector<State> states;
  std::vector<int> parent;
  std::vector<HurwitzMove> via;
  std::deque<int> frontier;

  int add(State s, int from, HurwitzMove m) {
    auto [it, fresh] = index.emplace(s, static_cast<int>(states.size()));
    if (!fresh) return -1;
    states.push_back(std::move(s));
    parent.push_back(from);
    via.push_back(m);
    frontier.push_back(it->second);
    return it->second;
  }
  std::vector<HurwitzMove> path_to(int node) const {
    std::vector<HurwitzMove> out;
    for (; parent[node] >= 0; node = parent[node]) out.push_back(via[node]);
    return {out.rbegin(), out.rend()};
  }
};

State moved(Interner& in, const State& s, HurwitzMove m) {
  State t = s;
  int a = s[m.k - 1], b = s[m.k];
  if (!m.inverse) {
    t[m.k - 1] = in.conj(a, b);
    t[m.k] = a;
  } else {
    t[m.k - 1] = b;
    t[m.k] = in.conj_inv(a, b);
  }
  return t;
}

}  // namespace

const std::vector<InvarianceLemma>& invariance_lemmas() {
  static const std::vector<InvarianceLemma> lemmas = {
      {"node block, first band", 4, {{3, false}, {1, false}}},
      {"node block, second band", 4, {{2, false}, {3, false}, {1, false}, {2, true}}},
      {"3-point, single band", 4,
       {{3, false}, {2, false}, {1, false}, {1, false}, {2, false}, {3, false}, {1, false}, {2, false}, {1, false}, {1, false}}},
      {"cusp triple", 3, {{2, false}, {1, false}}},
      {"node pair", 2, {{1, false}}},
  };
  return lemmas;
}

InvarianceResult certify_invariance(const Factorization& f, const BraidWord& h) {
  InvarianceResult r;
  r.method = "rules";
  if (braid_is_identity(h)) {
    r.verdict = Invariance::invariant;
    r.method = "identity";
    return r;
  }
  // syllables sigma_k^p in order
  std::vector<std::pair<int, int>> syllables;
  for (int l : h.letters()) {
    int k = std::abs(l), e = l > 0 ? 1 : -1;
    if (!syllables.empty() && syllables.back().first == k)
      syllables.back().second += e;
    else
      syllables.emplace_back(k, e);
  }
  // f -> f_{h1 h2} is the certificate of h2 followed by that of h1
  std::vector<HurwitzMove> moves;
  for (auto it = syllables.rbegin(); it != syllables.rend(); ++it) {
    auto [k, p] = *it;
    if (p == 0) continue;
    std::vector<HurwitzMove> one;
    if (!certify_generator(f, k, p > 0 ? 1 : -1, one)) return r;
    for (int t = 0; t < std::abs(p); ++t) moves.insert(moves.end(), one.begin(), one.end());
  }
  if (!verify_certificate(f, h, moves)) return r;
  r.verdict = Invariance::invariant;
  r.certificate = std::move(moves);
  return r;
}

InvarianceResult orbit_search(const Factorization& f, const BraidWord& h, std::size_t budget) {
  InvarianceResult r;
  r.method = "bfs";
  Interner in;
  State start, goal;
  for (const auto& x : f.factors) start.push_back(in.id(x.braid()));
  for (const auto& x : conjugate_factorization(f, h).factors) goal.push_back(in.id(x.braid()));
  SearchSide fwd, bwd;
  fwd.add(start, -1, {});
  bwd.add(goal, -1, {});
  auto finish = [&](int a, int b) {
    r.verdict = Invariance::invariant;
    auto tail = bwd.path_to(b);
    r.certificate = fwd.path_to(a);
    auto back = inverse_moves(tail);
    r.certificate.insert(r.certificate.end(), back.begin(), back.end());
    r.states = fwd.states.size() + bwd.states.size();
    return r;
  };
  if (start == goal) return finish(0, 0);
  const int m = static_cast<int>(start.size());
  while (!fwd.frontier.empty() && !bwd.frontier.empty()) {
    if (fwd.states.size() + bwd.states.size() >= budget) break;
    bool forward = fwd.frontier.size() <= bwd.frontier.size();
    SearchSide& me = forward ? fwd : bwd;
    SearchSide& other = forward ? bwd : fwd;
    // expand one full layer
    std::size_t layer = me.frontier.size();
    for (std::size_t t = 0; t < layer; ++t) {
      int node = me.frontier.front();
      me.frontier.pop_front();
      for (int k = 1; k < m; ++k)
        for (bool inv : {false, true}) {
          HurwitzMove mv{k, inv};
          State next = moved(in, me.states[node], mv);
          int added = me.add(next, node, mv);
          if (added < 0) continue;
          auto hit = other.index.find(me.states[added]);
          if (hit != other.index.end()) return forward ? finish(added, hit->second) : finish(hit->second, added);
          if (fwd.states.size() + bwd.states.size() >= budget) {
            r.states = fwd.states.size() + bwd.states.size();
            return r;
          }
        }
    }
  }
  r.states = fwd.states.size() + bwd.states.size();
  return r;
}

InvarianceResult invariance_check(const Factorization& f, const BraidWord& h, std::size_t budget) {
  InvarianceResult r = certify_invariance(f, h);
  if (r.verdict == Invariance::invariant) return r;
  return orbit_search(f, h, budget);
}

}  // namespace braidforge
