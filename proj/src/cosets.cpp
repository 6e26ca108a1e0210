#include "braidforge/cosets.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_map>

namespace braidforge {

int CosetTable::apply(int coset, int letter) const {
  return act[coset][letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1];
}

namespace {

int column(int letter) { return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1; }

class Enumerator {
 public:
  Enumerator(int rank, std::size_t max_cosets) : cols_(2 * rank), max_(max_cosets) { new_coset(); }

  bool live(int c) const { return forward_[c] == c; }
  int size() const { return static_cast<int>(table_.size()); }

  void define(int c, int x) {
    int d = new_coset();
    table_[c][x] = d;
    table_[d][x ^ 1] = c;
  }

  void scan_and_fill(int c, const std::vector<int>& word) {
    if (word.empty()) return;
    int f = c, b = c;
    int i = 0, j = static_cast<int>(word.size()) - 1;
    for (;;) {
      while (i <= j && table_[f][column(word[i])] >= 0) f = table_[f][column(word[i++])];
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && table_[b][column(word[j]) ^ 1] >= 0) b = table_[b][column(word[j--]) ^ 1];
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        table_[f][column(word[i])] = b;
        table_[b][column(word[i]) ^ 1] = f;
        return;
      }
      define(f, column(word[i]));
    }
  }

  std::vector<std::vector<int>>& table() { return table_; }

  CosetTable compact(int rank) {
    std::vector<int> number(table_.size(), -1);
    std::vector<int> order{0};
    number[0] = 0;
    for (std::size_t k = 0; k < order.size(); ++k)
      for (int x = 0; x < cols_; ++x) {
        int d = table_[order[k]][x];
        if (d >= 0 && number[d] < 0) {
          number[d] = static_cast<int>(order.size());
          order.push_back(d);
        }
      }
    CosetTable out;
    out.rank = rank;
    for (int c : order) {
      std::vector<int> row(cols_);
      for (int x = 0; x < cols_; ++x) row[x] = number[table_[c][x]];
      out.act.push_back(std::move(row));
    }
    return out;
  }

 private:
  int new_coset() {
    if (++alive_ > max_) throw Error("todd_coxeter: more than " + std::to_string(max_) + " cosets");
    table_.emplace_back(cols_, -1);
    forward_.push_back(size() - 1);
    return size() - 1;
  }

  int rep(int c) {
    int r = c;
    while (forward_[r] != r) r = forward_[r];
    while (forward_[c] != r) {
      int next = forward_[c];
      forward_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(int a, int b, std::deque<int>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    forward_[b] = a;
    --alive_;
    queue.push_back(b);
  }

  void coincidence(int a, int b) {
    std::deque<int> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      int g = queue.front();
      queue.pop_front();
      for (int x = 0; x < cols_; ++x) {
        int d = table_[g][x];
        if (d < 0) continue;
        table_[d][x ^ 1] = -1;
        int mu = rep(g), nu = rep(d);
        if (table_[mu][x] >= 0) {
          merge(nu, table_[mu][x], queue);
        } else if (table_[nu][x ^ 1] >= 0) {
          merge(mu, table_[nu][x ^ 1], queue);
        } else {
          table_[mu][x] = nu;
          table_[nu][x ^ 1] = mu;
        }
      }
    }
  }

  int cols_;
  std::size_t max_;
  std::size_t alive_ = 0;
  std::vector<std::vector<int>> table_;
  std::vector<int> forward_;
};

std::uint64_t power_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  a %= p;
  for (; e; e >>= 1, a = a * a % p)
    if (e & 1) r = r * a % p;
  return r;
}

std::uint32_t inverse_mod(long long a, std::uint32_t p) {
  long long x = ((a % static_cast<long long>(p)) + p) % p;
  if (x == 0) throw Error("inverse_mod: zero divisor");
  return static_cast<std::uint32_t>(power_mod(static_cast<std::uint64_t>(x), p - 2, p));
}

std::uint32_t residue(long long a, std::uint32_t p) {
  return static_cast<std::uint32_t>(((a % static_cast<long long>(p)) + p) % p);
}

// Incremental row echelon form over Z/p on dense rows.
class Echelon {
 public:
  Echelon(int cols, std::uint32_t p) : cols_(cols), p_(p), pivot_(cols, -1) {}

  int rank() const { return static_cast<int>(rows_.size()); }

  void add(std::vector<std::uint64_t> v) {
    for (int j = 0; j < cols_; ++j) {
      if (v[j] == 0) continue;
      int k = pivot_[j];
      if (k < 0) {
        std::uint64_t inv = inverse_mod(static_cast<long long>(v[j]), p_);
        for (int t = j; t < cols_; ++t) v[t] = v[t] * inv % p_;
        pivot_[j] = rank();
        rows_.push_back(std::move(v));
        return;
      }
      const std::uint64_t f = p_ - v[j];
      const auto& r = rows_[k];
      for (int t = j; t < cols_; ++t)
        if (r[t]) v[t] = (v[t] + f * r[t]) % p_;
    }
  }

 private:
  int cols_;
  std::uint64_t p_;
  std::vector<int> pivot_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

using Dense = std::vector<std::uint64_t>;

// m <- m * M(s_k), m is d x d row-major
void right_multiply(Dense& m, const YoungRep& rep, int k) {
  const int d = rep.dim;
  const auto& dg = rep.diag[k - 1];
  const auto& pt = rep.partner[k - 1];
  const auto& of = rep.off[k - 1];
  const std::uint64_t p = rep.prime;
  std::vector<std::uint64_t> row(d);
  for (int i = 0; i < d; ++i) {
    std::uint64_t* a = &m[static_cast<std::size_t>(i) * d];
    for (int t = 0; t < d; ++t) {
      std::uint64_t v = a[t] * dg[t] % p;
      if (pt[t] >= 0) v = (v + a[pt[t]] * of[t]) % p;
      row[t] = v;
    }
    std::copy(row.begin(), row.end(), a);
  }
}

struct Generator {
  std::vector<int> word;          // adjacent transpositions of the image
  std::vector<int> inverse_word;  // of the inverse image
};

}  // namespace

CosetTable todd_coxeter(const Presentation& p, const std::vector<FreeWord>& subgroup, std::size_t max_cosets) {
  Enumerator e(p.rank(), max_cosets);
  for (const auto& h : subgroup) e.scan_and_fill(0, h.reduced().letters());
  std::vector<std::vector<int>> rels;
  for (const auto& r : p.relators) rels.push_back(r.cyclically_reduced().letters());
  for (int c = 0; c < e.size(); ++c) {
    for (const auto& r : rels) {
      if (!e.live(c)) break;
      e.scan_and_fill(c, r);
    }
    if (!e.live(c)) continue;
    for (int x = 0; x < 2 * p.rank(); ++x)
      if (e.live(c) && e.table()[c][x] < 0) e.define(c, x);
  }
  return e.compact(p.rank());
}

bool generates_symmetric(const std::vector<Permutation>& assignment) {
  if (assignment.empty()) return false;
  const std::size_t n = assignment.front().size();
  if (n <= 1) return true;
  bool transpositions = true;
  for (const auto& a : assignment) {
    int moved = 0;
    for (std::size_t i = 0; i < n; ++i) moved += a[i] != static_cast<int>(i);
    transpositions = transpositions && (moved == 2 || moved == 0);
  }
  if (transpositions) {
    std::vector<int> comp(n);
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
    for (const auto& a : assignment)
      for (std::size_t i = 0; i < n; ++i)
        if (a[i] != static_cast<int>(i)) comp[find(static_cast<int>(i))] = find(a[i]);
    for (std::size_t i = 0; i < n; ++i)
      if (find(static_cast<int>(i)) != find(0)) return false;
    return true;
  }
  long long order = 1;
  for (std::size_t k = 2; k <= n; ++k) order *= static_cast<long long>(k);
  if (n > 9) throw Error("generates_symmetric: only transposition images are supported beyond S_9");
  std::map<std::vector<int>, int> seen{{Permutation(n).images(), 0}};
  std::vector<Permutation> queue{Permutation(n)};
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (const auto& a : assignment) {
      Permutation q = queue[k] * a;
      if (seen.emplace(q.images(), 0).second) queue.push_back(q);
    }
  return static_cast<long long>(queue.size()) == order;
}

CosetTable kernel_cosets(const Presentation& p, const std::vector<Permutation>& assignment, std::size_t max_index,
                         bool reverse_order) {
  if (static_cast<int>(assignment.size()) != p.rank()) throw Error("kernel_cosets: assignment size mismatch");
  if (!perm_rep_check(p, assignment)) throw Error("kernel_cosets: the assignment does not satisfy the relators");
  const std::size_t n = assignment.empty() ? 0 : assignment.front().size();
  std::vector<int> order(2 * p.rank());
  std::iota(order.begin(), order.end(), 0);
  if (reverse_order) std::reverse(order.begin(), order.end());
  std::vector<Permutation> images;
  for (const auto& a : assignment) {
    images.push_back(a);
    images.push_back(a.inverse());
  }
  std::map<std::vector<int>, int> number{{Permutation(n).images(), 0}};
  std::vector<Permutation> elems{Permutation(n)};
  CosetTable t;
  t.rank = p.rank();
  for (std::size_t k = 0; k < elems.size(); ++k) {
    std::vector<int> row(2 * p.rank());
    for (int x : order) {
      Permutation q = elems[k] * images[x];
      auto [it, added] = number.emplace(q.images(), static_cast<int>(elems.size()));
      if (added) {
        if (elems.size() >= max_index) throw Error("kernel_cosets: index exceeds " + std::to_string(max_index));
        elems.push_back(q);
      }
      row[x] = it->second;
    }
    t.act.push_back(std::move(row));
  }
  return t;
}

SchreierMatrix schreier_matrix(const Presentation& p, const CosetTable& t) {
  const int m = p.rank();
  const int n = t.index();
  std::vector<char> tree(static_cast<std::size_t>(n) * m, 0);
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  std::vector<int> queue{0};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    int c = queue[k];
    for (int x = 0; x < 2 * m; ++x) {
      int d = t.act[c][x];
      if (seen[d]) continue;
      seen[d] = 1;
      queue.push_back(d);
      // the edge c -x-> d is the Schreier generator (c, g) or (d, g)
      tree[static_cast<std::size_t>(x % 2 == 0 ? c : d) * m + x / 2] = 1;
    }
  }
  std::vector<int> col(static_cast<std::size_t>(n) * m, -1);
  SchreierMatrix out;
  for (std::size_t k = 0; k < col.size(); ++k)
    if (!tree[k]) col[k] = out.cols++;
  for (const auto& r : p.relators) {
    const std::vector<int> ls = r.cyclically_reduced().letters();
    if (ls.empty()) continue;
    for (int c = 0; c < n; ++c) {
      std::map<int, long long> row;
      int cur = c;
      for (int l : ls) {
        int g = std::abs(l) - 1;
        if (l > 0) {
          int k = col[static_cast<std::size_t>(cur) * m + g];
          if (k >= 0) row[k] += 1;
          cur = t.act[cur][2 * g];
        } else {
          cur = t.act[cur][2 * g + 1];
          int k = col[static_cast<std::size_t>(cur) * m + g];
          if (k >= 0) row[k] -= 1;
        }
      }
      if (cur != c) throw Error("schreier_matrix: relator does not close at coset " + std::to_string(c));
      std::vector<std::pair<int, long long>> sparse;
      for (auto [k, v] : row)
        if (v != 0) sparse.emplace_back(k, v);
      if (!sparse.empty()) out.rows.push_back(std::move(sparse));
    }
  }
  return out;
}

int sparse_rank_mod(const SchreierMatrix& m, std::uint32_t prime) {
  const std::uint64_t p = prime;
  std::unordered_map<int, std::vector<std::pair<int, std::uint64_t>>> pivots;
  for (const auto& input : m.rows) {
    std::vector<std::pair<int, std::uint64_t>> row;
    for (auto [k, v] : input) {
      std::uint32_t r = residue(v, prime);
      if (r) row.emplace_back(k, r);
    }
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        std::uint64_t inv = inverse_mod(static_cast<long long>(row.front().second), prime);
        for (auto& e : row) e.second = e.second * inv % p;
        int lead = row.front().first;
        pivots.emplace(lead, std::move(row));
        break;
      }
      const auto& piv = it->second;
      const std::uint64_t f = p - row.front().second;
      std::vector<std::pair<int, std::uint64_t>> next;
      std::size_t a = 0, b = 0;
      while (a < row.size() || b < piv.size()) {
        if (b == piv.size() || (a < row.size() && row[a].first < piv[b].first)) {
          next.push_back(row[a++]);
        } else if (a == row.size() || piv[b].first < row[a].first) {
          next.emplace_back(piv[b].first, f * piv[b].second % p);
          ++b;
        } else {
          std::uint64_t v = (row[a].second + f * piv[b].second) % p;
          if (v) next.emplace_back(row[a].first, v);
          ++a;
          ++b;
        }
      }
      row = std::move(next);
    }
  }
  return static_cast<int>(pivots.size());
}

std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int max) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(left, max); k >= 1; --k) {
      cur.push_back(k);
      rec(left - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

YoungRep young_rep(const std::vector<int>& partition, std::uint32_t prime) {
  YoungRep rep;
  rep.prime = prime;
  rep.n = std::accumulate(partition.begin(), partition.end(), 0);
  const int n = rep.n;
  // standard tableaux as row_of[k], k = 0..n-1 for entries 1..n
  std::vector<std::vector<int>> tableaux;
  std::vector<int> filled(partition.size(), 0), row_of(n);
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      tableaux.push_back(row_of);
      return;
    }
    for (std::size_t r = 0; r < partition.size(); ++r)
      if (filled[r] < partition[r] && (r == 0 || filled[r - 1] > filled[r])) {
        ++filled[r];
        row_of[k] = static_cast<int>(r);
        rec(k + 1);
        --filled[r];
      }
  };
  rec(0);
  rep.dim = static_cast<int>(tableaux.size());
  std::map<std::vector<int>, int> index;
  for (int t = 0; t < rep.dim; ++t) index[tableaux[t]] = t;
  std::vector<std::vector<int>> content(rep.dim, std::vector<int>(n));
  for (int t = 0; t < rep.dim; ++t) {
    std::vector<int> len(partition.size(), 0);
    for (int k = 0; k < n; ++k) {
      int r = tableaux[t][k];
      content[t][k] = len[r]++ - r;
    }
  }
  for (int k = 1; k < n; ++k) {
    std::vector<std::uint32_t> dg(rep.dim), of(rep.dim, 0);
    std::vector<int> pt(rep.dim, -1);
    for (int t = 0; t < rep.dim; ++t) {
      const int a = content[t][k] - content[t][k - 1];  // axial distance from k to k+1
      dg[t] = inverse_mod(a, prime);
      if (a == 1 || a == -1) continue;
      std::vector<int> swapped = tableaux[t];
      std::swap(swapped[k - 1], swapped[k]);
      pt[t] = index.at(swapped);
      of[t] = a > 0 ? 1u : residue(1 - static_cast<long long>(inverse_mod(a, prime)) * inverse_mod(a, prime) % prime,
                                   prime);
    }
    rep.diag.push_back(std::move(dg));
    rep.partner.push_back(std::move(pt));
    rep.off.push_back(std::move(of));
  }
  return rep;
}

std::vector<int> adjacent_word(const Permutation& p) {
  std::vector<int> img = p.images();
  std::vector<int> word;
  for (bool again = true; again;) {
    again = false;
    for (std::size_t i = 0; i + 1 < img.size(); ++i)
      if (img[i] > img[i + 1]) {
        // p = s_i * (s_i * p), and s_i * p swaps positions i, i+1
        std::swap(img[i], img[i + 1]);
        word.push_back(static_cast<int>(i) + 1);
        again = true;
      }
  }
  return word;
}

std::vector<std::uint32_t> rep_matrix(const YoungRep& rep, const Permutation& p) {
  const int d = rep.dim;
  Dense m(static_cast<std::size_t>(d) * d, 0);
  for (int i = 0; i < d; ++i) m[static_cast<std::size_t>(i) * d + i] = 1;
  for (int k : adjacent_word(p)) right_multiply(m, rep, k);
  return {m.begin(), m.end()};
}

namespace {

// Free rank of H1 of the kernel: sum over irreducibles of dim * (m d - rank d1 - rank d2).
long long character_rank(const Presentation& p, const std::vector<Permutation>& assignment, std::uint32_t prime) {
  const int n = static_cast<int>(assignment.front().size());
  const int m = p.rank();
  std::vector<Generator> gens;
  for (const auto& a : assignment) gens.push_back({adjacent_word(a), adjacent_word(a.inverse())});
  long long total = 0;
  for (const auto& lambda : partitions(n)) {
    YoungRep rep = young_rep(lambda, prime);
    const int d = rep.dim;
    const std::size_t dd = static_cast<std::size_t>(d) * d;
    const int cols = m * d;
    auto apply = [&](Dense& mat, const std::vector<int>& word) {
      for (int k : word) right_multiply(mat, rep, k);
    };
    Dense id(dd, 0);
    for (int i = 0; i < d; ++i) id[static_cast<std::size_t>(i) * d + i] = 1;
    // d1 has rows x_g - 1; its rank over all g, computed on the transpose: column space of the stack
    Echelon e1(d, prime);
    for (int g = 0; g < m; ++g) {
      Dense x = id;
      apply(x, gens[g].word);
      for (int i = 0; i < d; ++i) {
        std::vector<std::uint64_t> row(d);
        for (int j = 0; j < d; ++j)
          row[j] = (x[static_cast<std::size_t>(i) * d + j] + prime - (i == j ? 1 : 0)) % prime;
        e1.add(std::move(row));
      }
    }
    const int rank1 = e1.rank();
    const int max2 = cols - rank1;
    Echelon e2(cols, prime);
    for (const auto& r : p.relators) {
      if (e2.rank() == max2) break;
      std::vector<Dense> fox(m);
      Dense prefix = id;
      for (int l : r.letters()) {
        const int g = std::abs(l) - 1;
        if (fox[g].empty()) fox[g].assign(dd, 0);
        if (l > 0) {
          for (std::size_t k = 0; k < dd; ++k) fox[g][k] = (fox[g][k] + prefix[k]) % prime;
          apply(prefix, gens[g].word);
        } else {
          apply(prefix, gens[g].inverse_word);
          for (std::size_t k = 0; k < dd; ++k) fox[g][k] = (fox[g][k] + prime - prefix[k]) % prime;
        }
      }
      for (std::size_t k = 0; k < dd; ++k)
        if (prefix[k] != id[k]) throw Error("kernel_h1: a relator does not map to the identity");
      for (int i = 0; i < d && e2.rank() < max2; ++i) {
        std::vector<std::uint64_t> row(cols, 0);
        for (int g = 0; g < m; ++g)
          if (!fox[g].empty())
            std::copy_n(&fox[g][static_cast<std::size_t>(i) * d], d, &row[static_cast<std::size_t>(g) * d]);
        e2.add(std::move(row));
      }
    }
    total += static_cast<long long>(d) * (max2 - e2.rank());
  }
  return total;
}

}  // namespace

KernelH1Result kernel_h1(const Presentation& p, const std::vector<Permutation>& assignment,
                         const KernelH1Options& opt) {
  if (static_cast<int>(assignment.size()) != p.rank()) throw Error("kernel_h1: assignment size mismatch");
  if (!perm_rep_check(p, assignment)) throw Error("kernel_h1: the assignment does not satisfy the relators");
  if (!generates_symmetric(assignment)) throw Error("kernel_h1: the assignment is not onto the symmetric group");
  if (opt.primes.empty()) throw Error("kernel_h1: no primes");
  const std::size_t n = assignment.front().size();
  long long order = 1;
  for (std::size_t k = 2; k <= n; ++k) order = order > (1LL << 50) ? order : order * static_cast<long long>(k);
  std::string method = opt.method;
  if (method == "auto") method = order <= static_cast<long long>(opt.schreier_limit) ? "schreier" : "characters";
  if (method == "characters" && static_cast<int>(n) > opt.max_degree)
    throw Error("kernel_h1: S_" + std::to_string(n) + " exceeds the character method budget");
  if (method != "schreier" && method != "characters") throw Error("kernel_h1: unknown method " + method);

  KernelH1Result out;
  out.method = method;
  out.index = order;
  if (method == "schreier") {
    CosetTable t = kernel_cosets(p, assignment, opt.max_index, opt.reverse_order);
    SchreierMatrix sm = schreier_matrix(p, t);
    for (auto prime : opt.primes) out.rank_per_prime.push_back(sm.cols - sparse_rank_mod(sm, prime));
    if (static_cast<long long>(sm.rows.size()) * sm.cols <= 250'000) {
      std::vector<std::vector<long long>> dense;
      for (const auto& row : sm.rows) {
        std::vector<long long> v(sm.cols, 0);
        for (auto [k, x] : row) v[k] = x;
        dense.push_back(std::move(v));
      }
      try {
        auto diag = dense.empty() ? std::vector<long long>{} : smith_diagonal(std::move(dense));
        out.h1.free_rank = sm.cols - static_cast<int>(diag.size());
        for (long long x : diag)
          if (x > 1) out.h1.torsion.push_back(x);
        out.torsion_known = true;
      } catch (const Error&) {
        out.torsion_known = false;
      }
    }
  } else {
    Presentation q = p;
    std::vector<Permutation> a = assignment;
    if (opt.simplify) {
      std::vector<int> kept;
      q = simplify_presentation(p, &kept);
      a.clear();
      for (int k : kept) a.push_back(assignment[k - 1]);
    }
    for (auto prime : opt.primes) out.rank_per_prime.push_back(static_cast<int>(character_rank(q, a, prime)));
  }
  out.primes_agree = std::adjacent_find(out.rank_per_prime.begin(), out.rank_per_prime.end(),
                                        std::not_equal_to<>()) == out.rank_per_prime.end();
  if (!out.torsion_known) out.h1.free_rank = *std::max_element(out.rank_per_prime.begin(), out.rank_per_prime.end());
  return out;
}

}  // namespace braidforge
