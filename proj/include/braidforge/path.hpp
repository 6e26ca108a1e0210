#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "braidforge/braid.hpp"

namespace braidforge {

enum class Side { below, above };

struct Detour {
  int from = 0;  // interval of marked points, from <= to
  int to = 0;
  Side side = Side::above;
  bool operator==(const Detour&) const = default;
};

// Path between marked points a < b on the real axis, passing every point
// strictly between them on `side` except inside the detour intervals.
struct PathSpec {
  int strands = 0;
  int a = 0;
  int b = 0;
  Side side = Side::below;
  std::vector<Detour> detours;

  void validate() const;
  // Side taken at intermediate point k (a < k < b).
  Side side_at(int k) const;
  bool operator==(const PathSpec&) const = default;
};

// conjugator * (sigma_{b-1}..sigma_{a+1} sigma_a sigma_{a+1}^-1..sigma_{b-1}^-1) * conjugator^-1
struct HalfTwist {
  int strands = 0;
  int a = 0;
  int b = 0;
  BraidWord conjugator;

  BraidWord expand() const;
  // Equivalent adjacent form: (conj, k) with expand() == conj sigma_k conj^-1.
  BraidWord adjacent_conjugator() const;
};

// Below-axis band word sigma_{b-1}..sigma_{a+1}.
BraidWord band_word(int strands, int a, int b);

HalfTwist compile_path(const PathSpec& p);
// Half-twist along a path whose side at each intermediate point is given explicitly.
HalfTwist compile_sides(int strands, int a, int b, const std::vector<Side>& sides);

// Syntax: Z[a,b], Z[a,b;above], Z[a,b;below;detour=(c,d,above)], several detours allowed.
PathSpec parse_path(std::string_view text, int strands);
std::string format_path(const PathSpec& p);

// Word w with w sigma_{first+i-1} w^-1 = below half-twist between points[i] and points[i+1],
// for increasing marked points; moves the points to first..first+k-1 along below paths.
BraidWord localization_conjugator(int strands, const std::vector<int>& points);

}  // namespace braidforge
