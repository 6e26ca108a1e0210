#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "braidforge/braid.hpp"
#include "braidforge/path.hpp"

namespace braidforge {

struct PlanLine {
  int id = 0;
  int s = 0;  // endpoint vertex ids, s < t after normalization
  int t = 0;
  bool border = false;
};

struct PlanVertex {
  int id = 0;
  std::vector<int> lines;  // incident non-border lines
  std::string local_type;  // "2-point", "3-point", "conic-3-point", "4-point", ..., "" if none
  std::string variant;     // 3-point chirality: "a'bb'" or "aa'b"
};

// One factor Z^2_{ii',jj'} of a parasitic list D_j.
struct ParasiticEntry {
  int i = 0;
  int j = 0;
  Side side = Side::above;
  bool plain = false;           // printed without bar; implies below
  std::vector<Detour> detours;  // intervals in line indices
};

struct DegenerationPlan {
  std::string name;
  int embedding_dim = 0;  // marker CP^N, 0 if unknown
  std::vector<std::vector<int>> planes;
  std::vector<PlanLine> lines;
  std::vector<PlanVertex> vertices;
  std::optional<bool> cond2;
  std::optional<bool> cond3;
  std::string euler_exempt;  // reason the planar Euler identity does not apply
  // Explicit parasitic lists; pairs not listed use the default decoration rule.
  std::vector<ParasiticEntry> parasitic;

  const PlanLine& line(int id) const;
  const PlanVertex& vertex(int id) const;
  bool has_vertex(int id) const;
  std::vector<int> ramification_lines() const;  // non-border line ids, sorted
  int ell() const;                              // number of non-border lines
  int n_planes() const { return static_cast<int>(planes.size()); }
  // Planes containing both endpoints of the line.
  std::vector<int> planes_of_line(int id) const;
};

struct PlanIssue {
  std::string what;
};

// Structural validation; returns the list of violated invariants (empty if valid).
std::vector<PlanIssue> validate_plan(const DegenerationPlan& p);

DegenerationPlan plan_from_json(const nlohmann::json& j);
nlohmann::json to_json(const DegenerationPlan& p);

DegenerationPlan load_plan(const std::string& path);  // "-" reads stdin

}  // namespace braidforge
