#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "braidforge/artin.hpp"
#include "braidforge/braid.hpp"
#include "braidforge/presentation.hpp"

namespace braidforge {

// Right action of the generators on cosets; coset 0 is the subgroup.
struct CosetTable {
  int rank = 0;
  // act[c][2g] = c . x_{g+1}, act[c][2g+1] = c . x_{g+1}^-1
  std::vector<std::vector<int>> act;

  int index() const { return static_cast<int>(act.size()); }
  int apply(int coset, int letter) const;
};

// HLT coset enumeration of the subgroup generated by the given words.
// Throws when more than max_cosets cosets are alive at once.
CosetTable todd_coxeter(const Presentation& p, const std::vector<FreeWord>& subgroup, std::size_t max_cosets = 1'000'000);

// Cosets of the kernel of the assignment, i.e. the right regular action of its image,
// enumerated breadth first (generators in reverse order when asked).
CosetTable kernel_cosets(const Presentation& p, const std::vector<Permutation>& assignment, std::size_t max_index,
                         bool reverse_order = false);

// Abelianized Reidemeister-Schreier relation matrix over the non-tree Schreier generators
// of a breadth-first spanning tree.
struct SchreierMatrix {
  int cols = 0;
  std::vector<std::vector<std::pair<int, long long>>> rows;  // sorted by column
};
SchreierMatrix schreier_matrix(const Presentation& p, const CosetTable& t);
int sparse_rank_mod(const SchreierMatrix& m, std::uint32_t prime);

// Irreducible representation of S_n for a partition, in Young's seminormal form mod a prime.
struct YoungRep {
  int n = 0;
  int dim = 0;
  std::uint32_t prime = 0;
  // s_k v_T = diag[k][T] v_T + off[k][T] v_{partner[k][T]}, k = 1..n-1 (index k-1)
  std::vector<std::vector<std::uint32_t>> diag;
  std::vector<std::vector<int>> partner;
  std::vector<std::vector<std::uint32_t>> off;
};
std::vector<std::vector<int>> partitions(int n);
YoungRep young_rep(const std::vector<int>& partition, std::uint32_t prime);
// Adjacent transpositions s_{k1} * s_{k2} * ... (left-to-right product) equal to p.
std::vector<int> adjacent_word(const Permutation& p);
// Dense dim x dim matrix (row-major) of a permutation.
std::vector<std::uint32_t> rep_matrix(const YoungRep& rep, const Permutation& p);

// Whether the assignment generates the full symmetric group.
bool generates_symmetric(const std::vector<Permutation>& assignment);

struct KernelH1Options {
  std::string method = "auto";  // "schreier", "characters" or "auto" (schreier up to schreier_limit)
  std::size_t schreier_limit = 5040;
  std::size_t max_index = 1'000'000;  // coset enumeration budget
  int max_degree = 9;                 // largest n for the character method
  bool reverse_order = false;
  std::vector<std::uint32_t> primes{1000000007u, 998244353u};
  bool simplify = true;  // Tietze moves before the character method
};

struct KernelH1Result {
  std::string method;
  long long index = 0;
  AbelianInvariants h1;
  bool torsion_known = false;
  std::vector<int> rank_per_prime;  // free rank computed modulo each prime
  bool primes_agree = false;
};

// H1 of the kernel of the assignment; requires perm_rep_check and a surjection onto S_n.
KernelH1Result kernel_h1(const Presentation& p, const std::vector<Permutation>& assignment,
                         const KernelH1Options& opt = {});

}  // namespace braidforge
