#include <algorithm>

#include "braidforge/line_bm.hpp"
#include "braidforge/regeneration.hpp"

namespace braidforge {

Factorization degenerate_bmf(const DegenerationPlan& p) {
  auto issues = validate_plan(p);
  if (!issues.empty()) throw Error("degenerate_bmf: invalid plan: " + issues.front().what);
  const int ell = p.ell();
  Factorization out;
  out.strands = ell;
  std::vector<int> vids;
  for (const auto& v : p.vertices)
    if (!v.lines.empty()) vids.push_back(v.id);
  std::sort(vids.rbegin(), vids.rend());
  for (int v : vids) {
    std::vector<int> js;
    for (int j : p.ramification_lines())
      if (p.line(j).s == v && !parasitic_partners(p, j).empty()) js.push_back(j);
    std::string c_notation;
    for (int j : js) c_notation += (c_notation.empty() ? "D" : " D") + std::to_string(j);
    out.append_block("C" + std::to_string(v), c_notation.empty() ? "id" : c_notation, {});
    for (int j : js) {
      std::vector<Factor> fs;
      std::string notation;
      for (int i : parasitic_partners(p, j)) {
        ParasiticEntry e = parasitic_decoration(p, i, j);
        fs.push_back(Factor::from_half_twist(compile_path(parasitic_path(p, e)), 2, OriginTag::parasitic(i, j)));
        notation += (notation.empty() ? "" : " ") + parasitic_notation(e, false);
      }
      out.append_block("D" + std::to_string(j), notation, fs);
    }
    std::vector<int> lines = p.vertex(v).lines;
    std::sort(lines.begin(), lines.end());
    std::vector<Factor> fs;
    std::string notation = "id";
    if (lines.size() >= 2) {
      std::vector<int> ranks;
      notation = "Delta2<";
      for (int l : lines) {
        ranks.push_back(line_rank(p, l));
        notation += (ranks.size() > 1 ? "," : "") + std::to_string(l);
      }
      notation += ">";
      fs.push_back(Factor{ell, localization_conjugator(ell, ranks), ranks.front(), static_cast<int>(ranks.size()), 2,
                          OriginTag::vertex(v)});
    }
    out.append_block("Delta" + std::to_string(v), notation, fs);
  }
  return out;
}

}  // namespace braidforge
