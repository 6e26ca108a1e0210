#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "braidforge/factorization.hpp"

namespace braidforge {

struct HurwitzMove {
  int k = 1;  // 1-based position
  bool inverse = false;
  bool operator==(const HurwitzMove&) const = default;
};

Factorization apply_moves(const Factorization& f, const std::vector<HurwitzMove>& moves);
std::vector<HurwitzMove> inverse_moves(const std::vector<HurwitzMove>& moves);
// True when the moves carry f factor-for-factor onto f conjugated by h.
bool verify_certificate(const Factorization& f, const BraidWord& h, const std::vector<HurwitzMove>& moves);

enum class Invariance { invariant, not_decided };

struct InvarianceResult {
  Invariance verdict = Invariance::not_decided;
  std::string method;                    // identity, rules, bfs
  std::vector<HurwitzMove> certificate;  // f -> f conjugated by h
  std::size_t states = 0;
};

// Local lemma: a segment of consecutive factors with a fixed move pattern
// realizing its conjugation by one generator.
struct InvarianceLemma {
  std::string name;
  int length = 0;
  std::vector<HurwitzMove> moves;
};
const std::vector<InvarianceLemma>& invariance_lemmas();

// Rule-based: h is split into syllables sigma_k^p; each syllable is certified
// segment by segment (commuting factor or a lemma); certificates are verified.
InvarianceResult certify_invariance(const Factorization& f, const BraidWord& h);
// Bidirectional BFS over the Hurwitz orbit; `budget` bounds the visited states.
InvarianceResult orbit_search(const Factorization& f, const BraidWord& h, std::size_t budget);
// Certifier first, BFS fallback.
InvarianceResult invariance_check(const Factorization& f, const BraidWord& h, std::size_t budget);

}  // namespace braidforge
