#include "braidforge/plan.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

namespace braidforge {

const PlanLine& DegenerationPlan::line(int id) const {
  for (const auto& l : lines)
    if (l.id == id) return l;
  throw Error("plan: no line " + std::to_string(id));
}

const PlanVertex& DegenerationPlan::vertex(int id) const {
  for (const auto& v : vertices)
    if (v.id == id) return v;
  throw Error("plan: no vertex " + std::to_string(id));
}

bool DegenerationPlan::has_vertex(int id) const {
  return std::any_of(vertices.begin(), vertices.end(), [id](const PlanVertex& v) { return v.id == id; });
}

std::vector<int> DegenerationPlan::ramification_lines() const {
  std::vector<int> out;
  for (const auto& l : lines)
    if (!l.border) out.push_back(l.id);
  std::sort(out.begin(), out.end());
  return out;
}

int DegenerationPlan::ell() const { return static_cast<int>(ramification_lines().size()); }

std::vector<int> DegenerationPlan::planes_of_line(int id) const {
  const PlanLine& l = line(id);
  std::vector<int> out;
  for (std::size_t k = 0; k < planes.size(); ++k) {
    const auto& c = planes[k];
    if (std::find(c.begin(), c.end(), l.s) != c.end() && std::find(c.begin(), c.end(), l.t) != c.end())
      out.push_back(static_cast<int>(k) + 1);
  }
  return out;
}

std::vector<PlanIssue> validate_plan(const DegenerationPlan& p) {
  std::vector<PlanIssue> issues;
  auto add = [&issues](std::string s) { issues.push_back({std::move(s)}); };
  if (p.lines.empty()) add("plan has no lines");
  if (p.planes.empty()) add("plan has no planes");
  std::set<int> vids;
  for (const auto& v : p.vertices)
    if (!vids.insert(v.id).second) add("duplicate vertex id " + std::to_string(v.id));
  std::set<int> lids;
  for (const auto& l : p.lines) {
    if (!lids.insert(l.id).second) add("duplicate line id " + std::to_string(l.id));
    if (!vids.count(l.s) || !vids.count(l.t)) add("line " + std::to_string(l.id) + " has an unknown endpoint");
    if (l.s == l.t) add("line " + std::to_string(l.id) + " is a loop");
  }
  for (std::size_t k = 0; k < p.planes.size(); ++k) {
    if (p.planes[k].size() < 3) add("plane " + std::to_string(k + 1) + " has fewer than three corners");
    for (int v : p.planes[k])
      if (!vids.count(v)) add("plane " + std::to_string(k + 1) + " has an unknown corner");
  }
  if (!issues.empty()) return issues;
  for (const auto& l : p.lines) {
    auto pl = p.planes_of_line(l.id);
    if (!l.border && pl.size() != 2)
      add("line " + std::to_string(l.id) + " lies in " + std::to_string(pl.size()) + " planes, expected 2");
    if (l.border && pl.size() != 1)
      add("border line " + std::to_string(l.id) + " lies in " + std::to_string(pl.size()) + " planes, expected 1");
  }
  for (const auto& v : p.vertices) {
    std::set<int> incident;
    for (const auto& l : p.lines)
      if (!l.border && (l.s == v.id || l.t == v.id)) incident.insert(l.id);
    std::set<int> declared(v.lines.begin(), v.lines.end());
    if (declared != incident) add("vertex " + std::to_string(v.id) + " incident line list does not match lines");
    if (!v.variant.empty() && v.variant != "a'bb'" && v.variant != "aa'b")
      add("vertex " + std::to_string(v.id) + " has unknown variant '" + v.variant + "'");
  }
  for (const auto& e : p.parasitic)
    if (!lids.count(e.i) || !lids.count(e.j) || e.i >= e.j)
      add("parasitic entry (" + std::to_string(e.i) + "," + std::to_string(e.j) + ") is invalid");
  return issues;
}

namespace {

Side side_from(const std::string& s) {
  if (s == "above") return Side::above;
  if (s == "below") return Side::below;
  throw ParseError("bad side '" + s + "'");
}

std::string side_name(Side s) { return s == Side::above ? "above" : "below"; }

}  // namespace

DegenerationPlan plan_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw ParseError("plan must be a JSON object");
    DegenerationPlan p;
    p.name = j.value("name", std::string());
    p.embedding_dim = j.value("embedding_dim", 0);
    p.planes = j.at("planes").get<std::vector<std::vector<int>>>();
    for (const auto& x : j.at("lines")) {
      PlanLine l;
      l.id = x.at("id").get<int>();
      auto ends = x.at("ends").get<std::vector<int>>();
      if (ends.size() != 2) throw ParseError("line " + std::to_string(l.id) + " needs two ends");
      l.s = std::min(ends[0], ends[1]);
      l.t = std::max(ends[0], ends[1]);
      l.border = x.value("border", false);
      p.lines.push_back(l);
    }
    for (const auto& x : j.at("vertices")) {
      PlanVertex v;
      v.id = x.at("id").get<int>();
      v.lines = x.value("lines", std::vector<int>{});
      v.local_type = x.value("local_type", std::string());
      v.variant = x.value("variant", std::string());
      p.vertices.push_back(v);
    }
    if (j.contains("declared")) {
      const auto& d = j.at("declared");
      if (d.contains("cond2") && !d.at("cond2").is_null()) p.cond2 = d.at("cond2").get<bool>();
      if (d.contains("cond3") && !d.at("cond3").is_null()) p.cond3 = d.at("cond3").get<bool>();
    }
    p.euler_exempt = j.value("euler_exempt", std::string());
    if (j.contains("parasitic")) {
      for (const auto& x : j.at("parasitic")) {
        ParasiticEntry e;
        e.i = x.at("i").get<int>();
        e.j = x.at("j").get<int>();
        e.side = side_from(x.value("side", std::string("above")));
        e.plain = x.value("plain", false);
        for (const auto& d : x.value("detours", nlohmann::json::array()))
          e.detours.push_back({d.at(0).get<int>(), d.at(1).get<int>(), side_from(d.at(2).get<std::string>())});
        p.parasitic.push_back(e);
      }
    }
    if (p.lines.empty() && p.planes.empty()) throw ParseError("empty plan");
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("plan json: ") + e.what());
  }
}

nlohmann::json to_json(const DegenerationPlan& p) {
  nlohmann::json lines = nlohmann::json::array();
  for (const auto& l : p.lines) lines.push_back({{"id", l.id}, {"ends", {l.s, l.t}}, {"border", l.border}});
  nlohmann::json vertices = nlohmann::json::array();
  for (const auto& v : p.vertices) {
    nlohmann::json x = {{"id", v.id}, {"lines", v.lines}, {"local_type", v.local_type}};
    if (!v.variant.empty()) x["variant"] = v.variant;
    vertices.push_back(x);
  }
  nlohmann::json j = {{"name", p.name}, {"planes", p.planes}, {"lines", lines}, {"vertices", vertices}};
  if (p.embedding_dim) j["embedding_dim"] = p.embedding_dim;
  nlohmann::json declared = nlohmann::json::object();
  if (p.cond2) declared["cond2"] = *p.cond2;
  if (p.cond3) declared["cond3"] = *p.cond3;
  j["declared"] = declared;
  if (!p.euler_exempt.empty()) j["euler_exempt"] = p.euler_exempt;
  if (!p.parasitic.empty()) {
    nlohmann::json par = nlohmann::json::array();
    for (const auto& e : p.parasitic) {
      nlohmann::json d = nlohmann::json::array();
      for (const auto& x : e.detours) d.push_back({x.from, x.to, side_name(x.side)});
      par.push_back({{"i", e.i}, {"j", e.j}, {"side", side_name(e.side)}, {"plain", e.plain}, {"detours", d}});
    }
    j["parasitic"] = par;
  }
  return j;
}

DegenerationPlan load_plan(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open plan file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("plan json: ") + e.what());
  }
  return plan_from_json(j);
}

}  // namespace braidforge
