#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace braidforge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Permutation of {0..n-1}; p[i] is the image of i.
// Products compose left to right: (p * q)(i) = q(p(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t n);
  explicit Permutation(std::vector<int> images);

  static Permutation transposition(std::size_t n, int a, int b);  // 1-based

  std::size_t size() const { return images_.size(); }
  int operator[](std::size_t i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation operator*(const Permutation& other) const;
  bool operator==(const Permutation& other) const = default;

  std::string to_cycles() const;  // 1-based cycle notation, "()" for identity

 private:
  std::vector<int> images_;
};

// Word in the free group of rank n; letter +k is Gamma_k, -k its inverse.
class FreeWord {
 public:
  FreeWord() = default;
  FreeWord(int rank, std::vector<int> letters);

  static FreeWord generator(int rank, int k);

  int rank() const { return rank_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  FreeWord operator*(const FreeWord& other) const;
  FreeWord inverse() const;
  FreeWord reduced() const;
  FreeWord cyclically_reduced() const;

  bool operator==(const FreeWord& other) const = default;

 private:
  int rank_ = 0;
  std::vector<int> letters_;
};

void free_reduce(std::vector<int>& letters);

// Word in the Artin generators of B_n; letter +i is sigma_i, -i its inverse.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(int strands);
  BraidWord(int strands, std::vector<int> letters);

  static BraidWord generator(int strands, int i, int sign = 1);

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  BraidWord operator*(const BraidWord& other) const;
  BraidWord& operator*=(const BraidWord& other);
  BraidWord inverse() const;
  BraidWord pow(int e) const;
  BraidWord reduced() const;

  // Same letters with every index shifted by `offset` on `strands` strands.
  BraidWord shifted(int offset, int strands) const;

  bool operator==(const BraidWord& other) const = default;

 private:
  int strands_ = 1;
  std::vector<int> letters_;
};

int degree(const BraidWord& w);
Permutation permutation(const BraidWord& w);

BraidWord full_twist(int n);
BraidWord garside_delta(int n);
// Garside element of the contiguous block first..first+k-1 (1-based) inside B_n.
BraidWord block_delta(int n, int first, int k);

// Images of Gamma_1..Gamma_n under the left Artin action of w.
std::vector<FreeWord> artin_images(const BraidWord& w);
FreeWord artin_action(const BraidWord& w, const FreeWord& g);
FreeWord substitute(const FreeWord& g, const std::vector<FreeWord>& images);

// Left normal form Delta^inf * s_1 ... s_k; each simple factor is stored as the
// permutation sending a strand's start position to its end position (0-based).
struct NormalForm {
  int strands = 1;
  int inf = 0;
  std::vector<std::vector<int>> simples;
  bool operator==(const NormalForm&) const = default;
};

NormalForm left_normal_form(const BraidWord& w);
// Word spelling of a normal form; equal elements give identical words.
BraidWord to_word(const NormalForm& nf);

bool braid_equal(const BraidWord& u, const BraidWord& v);
bool braid_is_identity(const BraidWord& w);

// Stable hash of the element represented by w (via its normal form).
std::uint64_t braid_hash(const BraidWord& w);

// Text syntax: "s1 s2^-1 s3^2"; "e" or "" for the identity.
BraidWord parse_braid(std::string_view text, int strands);
std::string format_braid(const BraidWord& w);

}  // namespace braidforge
