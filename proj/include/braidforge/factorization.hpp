#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "braidforge/braid.hpp"
#include "braidforge/path.hpp"

namespace braidforge {

struct OriginTag {
  enum class Kind { vertex, parasitic, extra_branch, event };
  Kind kind = Kind::event;
  int i = 0;
  int j = 0;

  static OriginTag vertex(int v) { return {Kind::vertex, v, 0}; }
  static OriginTag parasitic(int i, int j) { return {Kind::parasitic, i, j}; }
  static OriginTag extra_branch(int line) { return {Kind::extra_branch, line, 0}; }
  static OriginTag event(int e) { return {Kind::event, e, 0}; }

  std::string to_string() const;
  bool operator==(const OriginTag&) const = default;
};

// conj * Delta(block)^exponent * conj^-1, Delta(block) the Garside element of the
// contiguous points first..first+size-1; size 2 is a half-twist power.
struct Factor {
  int strands = 0;
  BraidWord conj;
  int first = 1;
  int size = 2;
  int exponent = 1;
  OriginTag tag;

  static Factor from_half_twist(const HalfTwist& h, int exponent, OriginTag tag);

  BraidWord braid() const;
  BraidWord core() const;  // Delta(block)^exponent without the conjugator
  int degree() const { return exponent * size * (size - 1) / 2; }
  bool is_half_twist() const { return size == 2; }
  HalfTwist half_twist() const;
  // X -> w X w^-1
  Factor conjugated_by(const BraidWord& w) const;
};

// A named group of consecutive factors carrying the paper-style notation.
struct Block {
  std::string name;
  std::string notation;
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct Factorization {
  int strands = 0;
  std::vector<Factor> factors;
  std::vector<Block> blocks;

  void append(const Factor& f) { factors.push_back(f); }
  // Appends all factors of `other` as one block.
  void append_block(const std::string& name, const std::string& notation,
                    const std::vector<Factor>& fs);

  BraidWord product() const;
  int total_degree() const;
  std::string serialize() const;  // one "name = notation" line per block
};

struct DegreeAudit {
  int expected = 0;
  int total = 0;
  bool permutation_identity = false;
  bool degree_ok() const { return expected == total; }
};

DegreeAudit audit(const Factorization& f);

// (a, b) -> (a b a^-1, a) at positions k, k+1 (1-based); inverse: (a, b) -> (b, b^-1 a b).
Factorization hurwitz_move(const Factorization& f, int k, bool inverse = false);

// Each factor X -> h^-1 X h.
Factorization conjugate_factorization(const Factorization& f, const BraidWord& h);

nlohmann::json to_json(const Factor& f);
nlohmann::json to_json(const Factorization& f);
Factorization factorization_from_json(const nlohmann::json& j);

}  // namespace braidforge
