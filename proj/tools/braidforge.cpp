#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "braidforge/artin.hpp"
#include "braidforge/cosets.hpp"
#include "braidforge/degeneration.hpp"
#include "braidforge/derivation.hpp"
#include "braidforge/invariance.hpp"
#include "braidforge/line_bm.hpp"
#include "braidforge/presentation.hpp"
#include "braidforge/regeneration.hpp"

using namespace braidforge;
using nlohmann::json;

namespace {

constexpr int kReportSchema = 1;

struct CheckFailure {
  std::string what;
};

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    ss << in.rdbuf();
  }
  return ss.str();
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_input(path));
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Presentation load_presentation(const std::string& path) {
  try {
    return presentation_from_json(read_json(path));
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void emit(const json& j, bool as_json, const std::string& text) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

std::string presentation_text(const Presentation& p) {
  std::string s = "generators:";
  for (const auto& g : p.generators) s += " " + g;
  s += "\n";
  for (const auto& r : p.relators) s += format_word(r, p) + "\n";
  return s;
}

Factorization compute_bmf(const DegenerationPlan& plan, const std::string& mode) {
  if (mode == "degenerate") return degenerate_bmf(plan);
  if (mode == "regenerated") return assemble_bmf(plan);
  throw ParseError("unknown bmf mode '" + mode + "'");
}

// A factorization file or a plan file.
Factorization load_factorization(const std::string& path, const std::string& mode) {
  json j = read_json(path);
  try {
    if (j.is_object() && j.contains("factors")) return factorization_from_json(j);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return compute_bmf(plan_from_json(j), mode);
}

std::vector<std::string> names_for(const Factorization& f, bool doubled) {
  return doubled && f.strands % 2 == 0 ? doubled_names(f.strands / 2) : plain_names(f.strands);
}

struct Check {
  std::string name;
  std::string status;  // pass, fail, not_decided
  std::string details;
};

json report_json(const std::string& subject, const std::vector<Check>& checks, const json& metrics) {
  json j{{"schema", kReportSchema}, {"subject", subject}, {"metrics", metrics}};
  j["checks"] = json::array();
  for (const auto& c : checks) j["checks"].push_back({{"name", c.name}, {"status", c.status}, {"details", c.details}});
  return j;
}

std::string report_text(const std::string& subject, const std::vector<Check>& checks, const json& metrics) {
  std::ostringstream s;
  s << "subject: " << subject << "\n";
  for (const auto& [k, v] : metrics.items()) s << "  " << k << " = " << v.dump() << "\n";
  for (const auto& c : checks) s << c.status << "  " << c.name << (c.details.empty() ? "" : "  (" + c.details + ")") << "\n";
  return s.str();
}

bool has_check(const std::vector<std::string>& selected, const std::string& name) {
  for (const auto& s : selected)
    if (s == "all" || s == name) return true;
  return false;
}

int run_pipeline(const std::string& path, const std::vector<std::string>& selected, bool as_json,
                 std::size_t budget) {
  DegenerationPlan plan = load_plan(path);
  std::vector<Check> checks;
  json metrics;
  auto add = [&](const std::string& name, bool ok, const std::string& details = {}) {
    checks.push_back({name, ok ? "pass" : "fail", details});
  };

  auto issues = validate_plan(plan);
  std::string first = issues.empty() ? std::string{} : issues.front().what;
  add("validate", issues.empty(), first);
  if (!issues.empty()) {
    emit(report_json(plan.name, checks, metrics), as_json, report_text(plan.name, checks, metrics));
    return 1;
  }
  EulerReport eu = euler_check(plan);
  if (!eu.exempt.empty())
    checks.push_back({"euler", "not_decided", "exempt: " + eu.exempt});
  else
    add("euler", eu.holds, "m-l+n = " + std::to_string(eu.value()));
  Classification cl = classify_vertices(plan);
  metrics["boundary_vertices"] = cl.boundary.size();
  metrics["interior_vertices"] = cl.interior.size();
  MainConditionReport mc = main_condition(plan);
  metrics["ell"] = mc.ell;
  metrics["m"] = mc.m;
  metrics["n"] = mc.n;
  metrics["main_condition"] = mc.holds;
  checks.push_back({"main_condition", mc.holds ? "pass" : "not_decided",
                    "l - m = " + std::to_string(mc.ell - mc.m) + ", n - 1 = " + std::to_string(mc.n - 1)});
  if (has_check(selected, "tree") && !mc.holds) {
    checks.push_back({"tree", "not_decided", "main condition does not hold"});
  } else if (has_check(selected, "tree")) {
    try {
      SpanningTree t = spanning_subtree(plan);
      add("tree", is_spanning_tree(dual_graph(plan), t.kept), std::to_string(t.kept.size()) + " edges kept");
    } catch (const SubtreeFailure& e) {
      add("tree", false, e.what());
    }
  }
  Factorization bmf = assemble_bmf(plan);
  DegreeAudit au = audit(bmf);
  metrics["strands"] = bmf.strands;
  metrics["degree"] = au.total;
  add("degree_audit", au.degree_ok(), std::to_string(au.total) + " of " + std::to_string(au.expected));
  add("permutation_audit", au.permutation_identity);
  if (has_check(selected, "vankampen") || has_check(selected, "perm_rep")) {
    Presentation p = van_kampen(bmf, true, doubled_names(plan.ell()));
    metrics["relators"] = p.relators.size();
    add("vankampen", p.relators.size() == bmf.factors.size() + 1);
    add("perm_rep", perm_rep_check(p, plane_transpositions(plan)));
  }
  if (has_check(selected, "kernel_h1")) {
    Presentation p = coxeter_quotient(van_kampen(bmf, true, doubled_names(plan.ell())));
    KernelH1Options opt;
    opt.max_index = budget;
    try {
      KernelH1Result r = kernel_h1(p, plane_transpositions(plan), opt);
      metrics["kernel_h1_rank"] = r.h1.free_rank;
      add("kernel_h1", r.primes_agree, r.method + ", index " + std::to_string(r.index));
    } catch (const Error& e) {
      checks.push_back({"kernel_h1", "not_decided", e.what()});
    }
  }
  emit(report_json(plan.name, checks, metrics), as_json, report_text(plan.name, checks, metrics));
  for (const auto& c : checks)
    if (c.status == "fail") return 1;
  return 0;
}

std::vector<Permutation> assignment_from_json(const json& j, int rank) {
  std::vector<Permutation> out;
  for (const auto& x : j) {
    auto images = x.get<std::vector<int>>();
    for (int& v : images) --v;
    out.emplace_back(images);
  }
  if (static_cast<int>(out.size()) != rank) throw ParseError("assignment needs one permutation per generator");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"braid monodromy factorizations and fundamental groups of degenerated surfaces"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  std::size_t budget = 100000;
  std::uint64_t seed = 1;
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_option("--budget", budget, "state or index budget");
  app.add_option("--seed", seed, "seed for randomized checks");

  std::string input = "-";
  std::string mode = "regenerated";
  bool projective = false;
  int genus = 1;

  auto* plan_cmd = app.add_subcommand("plan", "degeneration plans");
  plan_cmd->require_subcommand(1);
  auto* validate = plan_cmd->add_subcommand("validate", "check plan invariants");
  validate->add_option("plan", input)->required();
  auto* classify = plan_cmd->add_subcommand("classify", "vertex classes, Q set and main condition");
  classify->add_option("plan", input)->required();
  auto* tree = plan_cmd->add_subcommand("tree", "spanning subtree of the dual graph");
  tree->add_option("plan", input)->required();
  auto* gen = plan_cmd->add_subcommand("gen-cpg", "plan of CP1 x C_g");
  gen->add_option("--g", genus, "genus")->required()->check(CLI::PositiveNumber);

  auto* bmf_cmd = app.add_subcommand("bmf", "braid monodromy factorizations");
  bmf_cmd->require_subcommand(1);
  auto* compute = bmf_cmd->add_subcommand("compute", "factorization of a plan");
  compute->add_option("plan", input)->required();
  compute->add_option("--mode", mode, "degenerate or regenerated");
  auto* audit_cmd = bmf_cmd->add_subcommand("audit", "degree and permutation audit");
  audit_cmd->add_option("input", input, "plan or factorization file")->required();
  audit_cmd->add_option("--mode", mode, "degenerate or regenerated");
  auto* inv = bmf_cmd->add_subcommand("invariance", "invariance under conjugation by a braid");
  std::string braid_text;
  inv->add_option("input", input, "plan or factorization file")->required();
  inv->add_option("--braid", braid_text, "braid word, e.g. \"s1 s3^-1\"")->required();
  inv->add_option("--mode", mode, "degenerate or regenerated");

  auto* group_cmd = app.add_subcommand("group", "fundamental group presentations");
  group_cmd->require_subcommand(1);
  auto* vk = group_cmd->add_subcommand("vankampen", "presentation from a factorization");
  vk->add_option("input", input, "plan or factorization file")->required();
  vk->add_flag("--projective", projective, "add the product of all generators");
  auto* artin = group_cmd->add_subcommand("artin", "generalized Artin group of a graph");
  std::string graph_file;
  std::string builtin;
  artin->add_option("--graph", graph_file, "graph file");
  artin->add_option("--builtin", builtin, "t1, or tg:G");
  auto* coxeter = group_cmd->add_subcommand("coxeter", "quotient by the squares of the generators");
  std::vector<std::string> identify;
  coxeter->add_option("presentation", input)->required();
  coxeter->add_option("--identify", identify, "extra identifications a=b");
  auto* abel = group_cmd->add_subcommand("abelianize", "abelian invariants");
  abel->add_option("presentation", input)->required();
  auto* kh1 = group_cmd->add_subcommand("kernel-h1", "H1 of the kernel of a map to S_n");
  int sym = 0;
  std::string method = "auto";
  kh1->add_option("input", input, "plan file, or presentation file with an \"assignment\"")->required();
  kh1->add_option("--sym", sym, "degree n of S_n (checked against the assignment)");
  kh1->add_option("--method", method, "auto, schreier or characters");

  auto* check_cmd = app.add_subcommand("check", "proof replay");
  check_cmd->require_subcommand(1);
  auto* deriv = check_cmd->add_subcommand("derivation", "replay derivation scripts");
  std::string plan_file;
  std::vector<int> twists;
  deriv->add_option("scripts", input)->required();
  deriv->add_option("--plan", plan_file, "plan whose van Kampen relations are the facts")->required();
  deriv->add_option("--invariance", twists, "lines k with certified Z[k,k'] (default: all)")->delimiter(',');

  auto* run = app.add_subcommand("run", "pipeline report for a plan");
  std::vector<std::string> selected{"all"};
  run->add_option("plan", input)->required();
  run->add_option("--checks", selected, "all, or names among tree, vankampen, perm_rep, kernel_h1")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) {
      DegenerationPlan p = load_plan(input);
      auto issues = validate_plan(p);
      json j = json::array();
      std::string text;
      for (const auto& i : issues) {
        j.push_back(i.what);
        text += i.what + "\n";
      }
      emit(j, as_json, issues.empty() ? "valid\n" : text);
      return issues.empty() ? 0 : 1;
    }
    if (classify->parsed()) {
      DegenerationPlan p = load_plan(input);
      Classification c = classify_vertices(p);
      QSet q = q_set(p);
      MainConditionReport m = main_condition(p);
      EulerReport e = euler_check(p);
      json j{{"boundary", c.boundary}, {"interior", c.interior}, {"q", q.q},       {"q_unknown", q.unknown},
             {"ell", m.ell},           {"m", m.m},               {"n", m.n},       {"main_condition", m.holds},
             {"condition4", check_condition4(p)}, {"euler", e.value()}, {"euler_exempt", e.exempt}};
      std::ostringstream s;
      s << "V_B: " << join(c.boundary) << "\nV_B^c: " << join(c.interior) << "\nQ: " << join(q.q) << "\n"
        << "l = " << m.ell << ", m = " << m.m << ", n = " << m.n << ", l - m <= n - 1: " << (m.holds ? "yes" : "no")
        << "\n";
      emit(j, as_json, s.str());
      return 0;
    }
    if (tree->parsed()) {
      DegenerationPlan p = load_plan(input);
      try {
        SpanningTree t = spanning_subtree(p);
        json erased = json::array();
        for (auto [v, l] : t.erased) erased.push_back({v, l});
        emit(json{{"kept", t.kept}, {"erased", erased}}, as_json, "kept lines: " + join(t.kept) + "\n");
        return 0;
      } catch (const SubtreeFailure& e) {
        throw CheckFailure{e.what()};
      }
    }
    if (gen->parsed()) {
      std::cout << to_json(cpg_builder(genus)).dump(2) << "\n";
      return 0;
    }
    if (compute->parsed()) {
      Factorization f = compute_bmf(load_plan(input), mode);
      emit(to_json(f), as_json, f.serialize());
      return 0;
    }
    if (audit_cmd->parsed()) {
      Factorization f = load_factorization(input, mode);
      DegreeAudit a = audit(f);
      json j{{"expected", a.expected}, {"total", a.total}, {"permutation_identity", a.permutation_identity}};
      emit(j, as_json,
           "degree " + std::to_string(a.total) + " of " + std::to_string(a.expected) +
               ", permutation " + (a.permutation_identity ? "identity" : "not identity") + "\n");
      if (!a.degree_ok() || !a.permutation_identity) throw CheckFailure{"audit failed"};
      return 0;
    }
    if (inv->parsed()) {
      Factorization f = load_factorization(input, mode);
      InvarianceResult r = invariance_check(f, parse_braid(braid_text, f.strands), budget);
      const bool ok = r.verdict == Invariance::invariant;
      json j{{"verdict", ok ? "invariant" : "not_decided"}, {"method", r.method}, {"states", r.states},
             {"certificate_length", r.certificate.size()}};
      emit(j, as_json, std::string(ok ? "invariant" : "not_decided") + " (" + r.method + ")\n");
      return 0;
    }
    if (vk->parsed()) {
      Factorization f = load_factorization(input, mode);
      Presentation p = van_kampen(f, projective, names_for(f, true));
      emit(to_json(p), as_json, presentation_text(p));
      return 0;
    }
    if (artin->parsed()) {
      ArtinGraph t;
      if (!graph_file.empty()) {
        t = artin_graph_from_json(read_json(graph_file));
      } else if (builtin == "t1") {
        t = t1_graph();
      } else if (builtin.rfind("tg:", 0) == 0) {
        t = tg_graph(std::stoi(builtin.substr(3)));
      } else {
        throw ParseError("group artin needs --graph FILE or --builtin t1|tg:G");
      }
      Presentation p = artin_hat(t);
      emit(to_json(p), as_json, presentation_text(p));
      return 0;
    }
    if (coxeter->parsed()) {
      Presentation p = load_presentation(input);
      std::vector<Identification> ids;
      for (const auto& s : identify) {
        auto eq = s.find('=');
        if (eq == std::string::npos) throw ParseError("identification needs a=b: " + s);
        ids.push_back({s.substr(0, eq), s.substr(eq + 1)});
      }
      Presentation q = coxeter_quotient(p, ids);
      emit(to_json(q), as_json, presentation_text(q));
      return 0;
    }
    if (abel->parsed()) {
      AbelianInvariants a = abelianize(load_presentation(input));
      std::string text = "Z^" + std::to_string(a.free_rank);
      for (long long t : a.torsion) text += " + Z/" + std::to_string(t);
      emit(to_json(a), as_json, text + "\n");
      return 0;
    }
    if (kh1->parsed()) {
      json j = read_json(input);
      Presentation p;
      std::vector<Permutation> a;
      if (j.contains("assignment")) {
        p = presentation_from_json(j);
        a = assignment_from_json(j.at("assignment"), p.rank());
      } else {
        DegenerationPlan plan = plan_from_json(j);
        p = coxeter_quotient(van_kampen(assemble_bmf(plan), true, doubled_names(plan.ell())));
        a = plane_transpositions(plan);
      }
      if (sym > 0 && !a.empty() && static_cast<int>(a.front().size()) != sym)
        throw ParseError("--sym does not match the assignment degree");
      KernelH1Options opt;
      opt.method = method;
      opt.max_index = budget;
      KernelH1Result r = kernel_h1(p, a, opt);
      json out{{"method", r.method},
               {"index", r.index},
               {"h1", to_json(r.h1)},
               {"torsion_known", r.torsion_known},
               {"rank_per_prime", r.rank_per_prime},
               {"primes_agree", r.primes_agree}};
      std::string text = "index " + std::to_string(r.index) + ", free rank " + std::to_string(r.h1.free_rank) +
                         " (" + r.method + ", primes " + (r.primes_agree ? "agree" : "disagree") + ")\n";
      emit(out, as_json, text);
      if (!r.primes_agree) throw CheckFailure{"modular ranks disagree"};
      return 0;
    }
    if (deriv->parsed()) {
      DegenerationPlan plan = load_plan(plan_file);
      Factorization f = assemble_bmf(plan);
      if (twists.empty())
        for (int k = 1; k <= plan.ell(); ++k) twists.push_back(k);
      DerivationContext ctx = derivation_context(f, band_twists(plan.ell(), twists), budget);
      bool all = true;
      json out = json::array();
      std::string text;
      for (const auto& s : scripts_from_json(read_json(input))) {
        DerivationResult r = derivation_check(ctx, s);
        all = all && r.ok;
        out.push_back({{"script", s.name}, {"ok", r.ok}, {"failed_step", r.failed_step}, {"message", r.message}});
        text += std::string(r.ok ? "pass  " : "fail  ") + s.name + (r.ok ? "" : "  (" + r.message + ")") + "\n";
      }
      emit(out, as_json, text);
      if (!all) throw CheckFailure{"derivation failed"};
      return 0;
    }
    if (run->parsed()) return run_pipeline(input, selected, as_json, budget);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const CheckFailure& e) {
    std::cerr << "check failed: " << e.what << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
