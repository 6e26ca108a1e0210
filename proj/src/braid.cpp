#include "braidforge/braid.hpp"

#include <charconv>
#include <cstdlib>
#include <sstream>

namespace braidforge {

// Permutation

Permutation::Permutation(std::size_t n) : images_(n) {
  for (std::size_t i = 0; i < n; ++i) images_[i] = static_cast<int>(i);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || seen[x])
      throw Error("Permutation: images are not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::transposition(std::size_t n, int a, int b) {
  if (a < 1 || b < 1 || static_cast<std::size_t>(a) > n || static_cast<std::size_t>(b) > n)
    throw Error("Permutation::transposition: point out of range");
  Permutation p(n);
  std::swap(p.images_[a - 1], p.images_[b - 1]);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<int>(i);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (other.size() != size()) throw Error("Permutation: size mismatch");
  Permutation p;
  p.images_.resize(size());
  for (std::size_t i = 0; i < size(); ++i) p.images_[i] = other.images_[images_[i]];
  return p;
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(size(), false);
  for (std::size_t i = 0; i < size(); ++i) {
    if (seen[i] || images_[i] == static_cast<int>(i)) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(images_[j]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

// FreeWord

void free_reduce(std::vector<int>& letters) {
  std::size_t top = 0;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (top > 0 && letters[top - 1] == -letters[i]) {
      --top;
    } else {
      letters[top++] = letters[i];
    }
  }
  letters.resize(top);
}

FreeWord::FreeWord(int rank, std::vector<int> letters) : rank_(rank), letters_(std::move(letters)) {
  for (int x : letters_)
    if (x == 0 || std::abs(x) > rank_) throw Error("FreeWord: generator index out of range");
}

FreeWord FreeWord::generator(int rank, int k) { return FreeWord(rank, {k}); }

FreeWord FreeWord::operator*(const FreeWord& other) const {
  if (other.rank_ != rank_) throw Error("FreeWord: rank mismatch");
  FreeWord w;
  w.rank_ = rank_;
  w.letters_.reserve(letters_.size() + other.letters_.size());
  w.letters_ = letters_;
  w.letters_.insert(w.letters_.end(), other.letters_.begin(), other.letters_.end());
  free_reduce(w.letters_);
  return w;
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  w.rank_ = rank_;
  w.letters_.assign(letters_.rbegin(), letters_.rend());
  for (int& x : w.letters_) x = -x;
  return w;
}

FreeWord FreeWord::reduced() const {
  FreeWord w = *this;
  free_reduce(w.letters_);
  return w;
}

FreeWord FreeWord::cyclically_reduced() const {
  FreeWord w = reduced();
  std::size_t lo = 0, hi = w.letters_.size();
  while (hi - lo >= 2 && w.letters_[lo] == -w.letters_[hi - 1]) {
    ++lo;
    --hi;
  }
  w.letters_ = std::vector<int>(w.letters_.begin() + static_cast<std::ptrdiff_t>(lo),
                                w.letters_.begin() + static_cast<std::ptrdiff_t>(hi));
  return w;
}

// BraidWord

BraidWord::BraidWord(int strands) : strands_(strands) {
  if (strands < 1) throw Error("BraidWord: strand count must be positive");
}

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands < 1) throw Error("BraidWord: strand count must be positive");
  for (int x : letters_)
    if (x == 0 || std::abs(x) >= strands_) throw Error("BraidWord: generator index out of range");
}

BraidWord BraidWord::generator(int strands, int i, int sign) {
  return BraidWord(strands, {sign >= 0 ? i : -i});
}

BraidWord BraidWord::operator*(const BraidWord& other) const {
  BraidWord w = *this;
  w *= other;
  return w;
}

BraidWord& BraidWord::operator*=(const BraidWord& other) {
  if (other.strands_ != strands_) throw Error("BraidWord: strand mismatch");
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

BraidWord BraidWord::inverse() const {
  BraidWord w(strands_);
  w.letters_.assign(letters_.rbegin(), letters_.rend());
  for (int& x : w.letters_) x = -x;
  return w;
}

BraidWord BraidWord::pow(int e) const {
  BraidWord base = e >= 0 ? *this : inverse();
  BraidWord w(strands_);
  for (int k = 0; k < std::abs(e); ++k) w *= base;
  return w;
}

BraidWord BraidWord::reduced() const {
  BraidWord w = *this;
  free_reduce(w.letters_);
  return w;
}

BraidWord BraidWord::shifted(int offset, int strands) const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (int x : letters_) out.push_back(x > 0 ? x + offset : x - offset);
  return BraidWord(strands, std::move(out));
}

int degree(const BraidWord& w) {
  int d = 0;
  for (int x : w.letters()) d += x > 0 ? 1 : -1;
  return d;
}

Permutation permutation(const BraidWord& w) {
  // Track which strand sits at each position; p[i] = final position of the strand starting at i.
  std::vector<int> at(static_cast<std::size_t>(w.strands()));
  for (int i = 0; i < w.strands(); ++i) at[i] = i;
  for (int x : w.letters()) {
    int i = std::abs(x) - 1;
    std::swap(at[i], at[i + 1]);
  }
  std::vector<int> images(at.size());
  for (std::size_t pos = 0; pos < at.size(); ++pos) images[at[pos]] = static_cast<int>(pos);
  return Permutation(std::move(images));
}

BraidWord full_twist(int n) {
  if (n < 2) throw Error("full_twist: n must be at least 2");
  std::vector<int> letters;
  for (int r = 0; r < n; ++r)
    for (int i = 1; i < n; ++i) letters.push_back(i);
  return BraidWord(n, std::move(letters));
}

BraidWord garside_delta(int n) { return block_delta(n, 1, n); }

BraidWord block_delta(int n, int first, int k) {
  if (k < 1 || first < 1 || first + k - 1 > n) throw Error("block_delta: block out of range");
  std::vector<int> letters;
  for (int r = k - 1; r >= 1; --r)
    for (int i = 0; i < r; ++i) letters.push_back(first + i);
  return BraidWord(n, std::move(letters));
}

// Artin action

namespace {

std::vector<int> concat3(const std::vector<int>& a, const std::vector<int>& b,
                         const std::vector<int>& c) {
  std::vector<int> out;
  out.reserve(a.size() + b.size() + c.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  out.insert(out.end(), c.begin(), c.end());
  free_reduce(out);
  return out;
}

std::vector<int> inverted(const std::vector<int>& a) {
  std::vector<int> out(a.rbegin(), a.rend());
  for (int& x : out) x = -x;
  return out;
}

}  // namespace

std::vector<FreeWord> artin_images(const BraidWord& w) {
  const int n = w.strands();
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) t[i] = {i + 1};
  // t holds the images under the prefix read so far; phi_{pl} = phi_p o phi_l.
  for (int x : w.letters()) {
    int k = std::abs(x) - 1;
    std::vector<int> a = std::move(t[k]);
    std::vector<int> b = std::move(t[k + 1]);
    if (x > 0) {
      t[k] = concat3(a, b, inverted(a));
      t[k + 1] = std::move(a);
    } else {
      t[k + 1] = concat3(inverted(b), a, b);
      t[k] = std::move(b);
    }
  }
  std::vector<FreeWord> out;
  out.reserve(t.size());
  for (auto& letters : t) out.emplace_back(n, std::move(letters));
  return out;
}

FreeWord substitute(const FreeWord& g, const std::vector<FreeWord>& images) {
  std::vector<int> out;
  for (int x : g.letters()) {
    const auto& img = images.at(static_cast<std::size_t>(std::abs(x) - 1)).letters();
    if (x > 0) {
      out.insert(out.end(), img.begin(), img.end());
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it) out.push_back(-*it);
    }
  }
  free_reduce(out);
  int rank = images.empty() ? g.rank() : images.front().rank();
  return FreeWord(rank, std::move(out));
}

FreeWord artin_action(const BraidWord& w, const FreeWord& g) {
  if (w.strands() != g.rank()) throw Error("artin_action: rank mismatch");
  return substitute(g, artin_images(w));
}

namespace {

using Simple = std::vector<int>;

Simple inverse_perm(const Simple& a) {
  Simple inv(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) inv[a[i]] = static_cast<int>(i);
  return inv;
}

bool is_identity_perm(const Simple& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != static_cast<int>(i)) return false;
  return true;
}

bool is_delta_perm(const Simple& a) {
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i)
    if (a[i] != n - 1 - i) return false;
  return true;
}

Simple tau(const Simple& a) {
  const int n = static_cast<int>(a.size());
  Simple t(a.size());
  for (int i = 0; i < n; ++i) t[i] = n - 1 - a[n - 1 - i];
  return t;
}

// Makes (a, b) left-weighted; returns true if anything moved.
bool left_weight(Simple& a, Simple& b) {
  const int n = static_cast<int>(a.size());
  Simple ainv = inverse_perm(a);
  bool changed = false;
  bool again = true;
  while (again) {
    again = false;
    for (int j = 0; j + 1 < n; ++j) {
      // j in S(b) but not in F(a)
      if (b[j] > b[j + 1] && ainv[j] < ainv[j + 1]) {
        std::swap(ainv[j], ainv[j + 1]);
        a[ainv[j]] = j;
        a[ainv[j + 1]] = j + 1;
        std::swap(b[j], b[j + 1]);
        changed = again = true;
      }
    }
  }
  return changed;
}

}  // namespace

NormalForm left_normal_form(const BraidWord& w) {
  const int n = w.strands();
  NormalForm nf;
  nf.strands = n;
  // w = Delta^-N * y_1 ... y_k with y_t = tau^(N - c_t)(x_t)
  std::vector<std::pair<Simple, int>> raw;
  int negatives = 0;
  Simple cur;
  int cur_c = 0;
  auto flush = [&]() {
    if (!cur.empty()) raw.emplace_back(std::move(cur), cur_c);
    cur.clear();
  };
  for (int l : w.letters()) {
    int j = std::abs(l) - 1;
    if (l > 0) {
      if (!cur.empty() && cur_c == negatives) {
        Simple inv = inverse_perm(cur);
        if (inv[j] < inv[j + 1]) {
          std::swap(cur[inv[j]], cur[inv[j + 1]]);
          continue;
        }
      }
      flush();
      cur.resize(n);
      for (int i = 0; i < n; ++i) cur[i] = i;
      std::swap(cur[j], cur[j + 1]);
      cur_c = negatives;
    } else {
      flush();
      Simple x(n);
      for (int i = 0; i < n; ++i) {
        int s = i == j ? j + 1 : i == j + 1 ? j : i;
        x[i] = n - 1 - s;
      }
      raw.emplace_back(std::move(x), negatives);
      ++negatives;
    }
  }
  flush();
  nf.inf = -negatives;
  std::vector<Simple>& L = nf.simples;
  for (auto& [y, c] : raw) {
    Simple s = (negatives - c) % 2 ? tau(y) : y;
    if (is_identity_perm(s)) continue;
    L.push_back(std::move(s));
    for (std::size_t i = L.size() - 1; i > 0; --i)
      if (!left_weight(L[i - 1], L[i])) break;
    while (!L.empty() && is_identity_perm(L.back())) L.pop_back();
  }
  std::size_t lead = 0;
  while (lead < L.size() && is_delta_perm(L[lead])) ++lead;
  nf.inf += static_cast<int>(lead);
  L.erase(L.begin(), L.begin() + static_cast<std::ptrdiff_t>(lead));
  return nf;
}

BraidWord to_word(const NormalForm& nf) {
  const int n = nf.strands;
  auto spell = [n](Simple p, std::vector<int>& out) {
    for (bool moved = true; moved;) {
      moved = false;
      for (int j = 1; j < n; ++j)
        if (p[j - 1] > p[j]) {
          out.push_back(j);
          std::swap(p[j - 1], p[j]);
          moved = true;
        }
    }
  };
  Simple delta(n);
  for (int i = 0; i < n; ++i) delta[i] = n - 1 - i;
  std::vector<int> d;
  spell(delta, d);
  std::vector<int> letters;
  for (int t = 0; t < std::abs(nf.inf); ++t)
    if (nf.inf > 0) {
      letters.insert(letters.end(), d.begin(), d.end());
    } else {
      for (auto it = d.rbegin(); it != d.rend(); ++it) letters.push_back(-*it);
    }
  for (const auto& s : nf.simples) spell(s, letters);
  return BraidWord(n, std::move(letters));
}

bool braid_equal(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) throw Error("braid_equal: strand mismatch");
  if (degree(u) != degree(v)) return false;
  if (!(permutation(u) == permutation(v))) return false;
  return left_normal_form(u) == left_normal_form(v);
}

bool braid_is_identity(const BraidWord& w) {
  NormalForm nf = left_normal_form(w);
  return nf.inf == 0 && nf.simples.empty();
}

std::uint64_t braid_hash(const BraidWord& w) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 1099511628211ULL;
  };
  NormalForm nf = left_normal_form(w);
  mix(static_cast<std::uint64_t>(nf.strands));
  mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(nf.inf)));
  for (const auto& s : nf.simples)
    for (int x : s) mix(static_cast<std::uint64_t>(x));
  return h;
}

// Text syntax

BraidWord parse_braid(std::string_view text, int strands) {
  std::vector<int> letters;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "e" || tok == "1") continue;
    if (tok.size() < 2 || tok[0] != 's') throw ParseError("parse_braid: bad token '" + tok + "'");
    std::string_view body(tok);
    body.remove_prefix(1);
    int idx = 0, power = 1;
    auto caret = body.find('^');
    auto idx_part = body.substr(0, caret);
    auto r = std::from_chars(idx_part.data(), idx_part.data() + idx_part.size(), idx);
    if (r.ec != std::errc() || r.ptr != idx_part.data() + idx_part.size())
      throw ParseError("parse_braid: bad index in '" + tok + "'");
    if (caret != std::string_view::npos) {
      auto p = body.substr(caret + 1);
      auto r2 = std::from_chars(p.data(), p.data() + p.size(), power);
      if (r2.ec != std::errc() || r2.ptr != p.data() + p.size())
        throw ParseError("parse_braid: bad exponent in '" + tok + "'");
    }
    if (idx < 1 || idx >= strands) throw ParseError("parse_braid: index out of range in '" + tok + "'");
    for (int k = 0; k < std::abs(power); ++k) letters.push_back(power > 0 ? idx : -idx);
  }
  return BraidWord(strands, std::move(letters));
}

std::string format_braid(const BraidWord& w) {
  if (w.empty()) return "e";
  std::string out;
  const auto& l = w.letters();
  for (std::size_t i = 0; i < l.size();) {
    std::size_t j = i;
    while (j < l.size() && l[j] == l[i]) ++j;
    int run = static_cast<int>(j - i) * (l[i] > 0 ? 1 : -1);
    if (!out.empty()) out += ' ';
    out += "s" + std::to_string(std::abs(l[i]));
    if (run != 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

}  // namespace braidforge
