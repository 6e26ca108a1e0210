#include "braidforge/derivation.hpp"

#include <set>

#include "braidforge/invariance.hpp"

namespace braidforge {

namespace {

std::string bind(std::string text, const std::map<std::string, std::string>& values) {
  for (const auto& [name, value] : values) {
    const std::string key = "$" + name;
    for (auto pos = text.find(key); pos != std::string::npos; pos = text.find(key, pos + value.size()))
      text.replace(pos, key.size(), value);
  }
  return text;
}

std::vector<std::map<std::string, std::string>> bindings(const std::map<std::string, std::vector<std::string>>& let) {
  std::vector<std::map<std::string, std::string>> out{{}};
  for (const auto& [name, values] : let) {
    std::vector<std::map<std::string, std::string>> next;
    for (const auto& b : out)
      for (const auto& v : values) {
        auto c = b;
        c[name] = v;
        next.push_back(std::move(c));
      }
    out = std::move(next);
  }
  return out;
}

std::string describe(const std::map<std::string, std::string>& b) {
  std::string out;
  for (const auto& [k, v] : b) out += (out.empty() ? "" : ", ") + k + "=" + v;
  return out;
}

Relation single(const std::string& text, const Presentation& p) {
  auto rs = parse_relations(text, p);
  if (rs.size() != 1) throw ParseError("derivation: '" + text + "' must be a single relation");
  return rs.front();
}

struct Failure {
  std::string message;
};

// all instances of the cited relations, each required to be known
std::vector<Relation> cited(const DerivationContext& ctx, const std::vector<std::string>& texts) {
  std::vector<Relation> out;
  for (const auto& t : texts)
    for (auto& r : parse_relations(t, ctx.names)) {
      if (!ctx.known(r)) throw Failure{"cited relation " + format_relation(r, ctx.names) + " is not known"};
      out.push_back(std::move(r));
    }
  if (out.empty()) throw Failure{"no relation cited"};
  return out;
}

FreeWord& side_of(Relation& r, const std::string& side) {
  if (side == "a") return r.a;
  if (side == "b") return r.b;
  throw ParseError("derivation: side must be a or b");
}

void apply(DerivationContext& ctx, Relation& cur, const DerivationStep& s) {
  const Presentation& p = ctx.names;
  if (s.op == "rewrite") {
    FreeWord& w = side_of(cur, s.side);
    FreeWord next = parse_word(s.word, p);
    FreeWord diff = (w * next.inverse()).reduced();
    if (!diff.letters().empty()) {
      auto rels = cited(ctx, s.cites);
      // bare commutations cancel letters, one other cited relator may remain
      auto table = commuting_table(rels, p.rank());
      FreeWord rest = commute_reduce(diff, table);
      bool found = rest.letters().empty();
      for (const auto& r : rels) found = found || relator_key(r.relator()) == relator_key(rest);
      if (!found) throw Failure{"rewrite difference " + format_word(rest, p) + " is not a cited relator"};
    }
    w = next.reduced();
  } else if (s.op == "substitute") {
    int g = p.index_of(s.gen);
    FreeWord u = parse_word(s.word, p);
    Relation def{RelationShape::equal, FreeWord::generator(p.rank(), g), u};
    auto key = relator_key(def.relator());
    bool found = false;
    for (const auto& r : cited(ctx, s.cites)) found = found || relator_key(r.relator()) == key;
    if (!found) throw Failure{"substitution " + format_relation(def, p) + " is not cited"};
    auto subst = [&](const FreeWord& w) {
      std::vector<int> out;
      for (int l : w.letters()) {
        if (std::abs(l) != g) {
          out.push_back(l);
          continue;
        }
        const std::vector<int> piece = l > 0 ? u.letters() : u.inverse().letters();
        out.insert(out.end(), piece.begin(), piece.end());
      }
      return FreeWord(p.rank(), std::move(out)).reduced();
    };
    cur.a = subst(cur.a);
    cur.b = subst(cur.b);
  } else if (s.op == "conjugate") {
    FreeWord c = parse_word(s.word, p);
    cur.a = (c.inverse() * cur.a * c).reduced();
    cur.b = (c.inverse() * cur.b * c).reduced();
  } else if (s.op == "conjugate_side") {
    FreeWord c = parse_word(s.word, p);
    FreeWord& w = side_of(cur, s.side);
    const FreeWord& other = s.side == "a" ? cur.b : cur.a;
    auto rels = cited(ctx, s.cites);
    bool direct = false;
    for (const auto& r : rels)
      direct = direct || (r.shape == RelationShape::commute &&
                          ((r.a == c.reduced() && r.b == other) || (r.b == c.reduced() && r.a == other)));
    if (!direct) {
      auto table = commuting_table(rels, p.rank());
      for (int x : c.letters())
        for (int y : other.letters())
          if (!table[std::abs(x)][std::abs(y)])
            throw Failure{"no cited commutation between " + p.generators[std::abs(x) - 1] + " and " +
                          p.generators[std::abs(y) - 1]};
    }
    w = (c.inverse() * w * c).reduced();
  } else if (s.op == "invariance") {
    int k = std::stoi(s.gen);
    if (k < 1 || 2 * k > p.rank()) throw Failure{"invariance index out of range"};
    BraidWord z(p.rank(), {2 * k - 1});
    bool certified = false;
    for (const auto& h : ctx.invariance) certified = certified || braid_equal(h, z) || braid_equal(h, z.inverse());
    if (!certified) throw Failure{"Z[" + s.gen + "," + s.gen + "'] is not a certified invariance"};
    BraidWord h(p.rank(), std::vector<int>(std::abs(s.power), s.power > 0 ? 2 * k - 1 : 1 - 2 * k));
    cur.a = loop_action(h, cur.a);
    cur.b = loop_action(h, cur.b);
  } else if (s.op == "swap") {
    std::swap(cur.a, cur.b);
  } else {
    throw ParseError("derivation: unknown step '" + s.op + "'");
  }
}

}  // namespace

bool DerivationContext::known(const Relation& r) const {
  auto key = relator_key(r.relator());
  if (key.empty()) return true;
  for (const auto& f : facts)
    if (relator_key(f.relator()) == key) return true;
  return false;
}

DerivationContext derivation_context(const Factorization& f, const std::vector<BraidWord>& candidates,
                                     std::size_t budget) {
  if (f.strands % 2 != 0) throw Error("derivation_context: expects a doubled fiber");
  DerivationContext ctx;
  ctx.names.generators = doubled_names(f.strands / 2);
  for (const auto& h : candidates)
    if (invariance_check(f, h, budget).verdict == Invariance::invariant) ctx.invariance.push_back(h);
  NormalizeOptions opt;
  opt.invariance = ctx.invariance;
  ctx.facts = normalized_relations(f, opt);
  return ctx;
}

std::vector<BraidWord> band_twists(int ell, const std::vector<int>& ks) {
  std::vector<BraidWord> out;
  for (int k : ks) {
    if (k < 1 || k > ell) throw Error("band_twists: index out of range");
    out.push_back(BraidWord(2 * ell, {2 * k - 1}));
  }
  return out;
}

std::vector<DerivationScript> scripts_from_json(const nlohmann::json& j) {
  std::vector<DerivationScript> out;
  try {
    for (const auto& js : j.at("scripts")) {
      DerivationScript s;
      s.name = js.at("name").get<std::string>();
      s.start = js.at("start").get<std::string>();
      s.target = js.at("target").get<std::string>();
      if (js.contains("let")) s.let = js.at("let").get<std::map<std::string, std::vector<std::string>>>();
      for (const auto& st : js.at("steps")) {
        DerivationStep d;
        d.op = st.at("op").get<std::string>();
        d.side = st.value("side", "");
        d.word = st.value("word", "");
        d.gen = st.value("gen", "");
        d.power = st.value("power", 1);
        d.why = st.value("why", "");
        if (st.contains("cites")) d.cites = st.at("cites").get<std::vector<std::string>>();
        s.steps.push_back(std::move(d));
      }
      out.push_back(std::move(s));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("derivation script: ") + e.what());
  }
  return out;
}

nlohmann::json to_json(const DerivationScript& s) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& d : s.steps) {
    nlohmann::json st{{"op", d.op}};
    if (!d.side.empty()) st["side"] = d.side;
    if (!d.word.empty()) st["word"] = d.word;
    if (!d.gen.empty()) st["gen"] = d.gen;
    if (d.power != 1) st["power"] = d.power;
    if (!d.cites.empty()) st["cites"] = d.cites;
    if (!d.why.empty()) st["why"] = d.why;
    steps.push_back(st);
  }
  nlohmann::json j{{"name", s.name}, {"start", s.start}, {"target", s.target}, {"steps", steps}};
  if (!s.let.empty()) j["let"] = s.let;
  return j;
}

DerivationResult derivation_check(DerivationContext& ctx, const DerivationScript& s) {
  DerivationResult res;
  res.script = s.name;
  std::vector<Relation> proven;
  for (const auto& b : bindings(s.let)) {
    res.instance = describe(b);
    res.failed_step = -1;
    res.trace.clear();
    try {
      Relation cur = single(bind(s.start, b), ctx.names);
      Relation target = single(bind(s.target, b), ctx.names);
      // forward from a known relation to the target, or backward from the target to a known relation
      const bool backward = relator_key(cur.relator()) == relator_key(target.relator());
      res.trace.push_back(format_relation(cur, ctx.names));
      if (!backward && !ctx.known(cur)) {
        res.message = "start " + format_relation(cur, ctx.names) + " is not known";
        return res;
      }
      for (std::size_t i = 0; i < s.steps.size(); ++i) {
        res.failed_step = static_cast<int>(i);
        DerivationStep st = s.steps[i];
        st.word = bind(st.word, b);
        st.gen = bind(st.gen, b);
        for (auto& c : st.cites) c = bind(c, b);
        apply(ctx, cur, st);
        res.trace.push_back(format_relation(cur, ctx.names));
      }
      res.failed_step = -1;
      if (backward && !ctx.known(cur)) {
        res.message = "ended on " + format_relation(cur, ctx.names) + ", which is not known";
        return res;
      }
      if (!backward && relator_key(cur.relator()) != relator_key(target.relator())) {
        res.message = "ended on " + format_relation(cur, ctx.names) + ", target " + format_relation(target, ctx.names);
        return res;
      }
      proven.push_back(target);
    } catch (const Failure& f) {
      res.message = f.message;
      return res;
    }
  }
  for (auto& r : proven) ctx.facts.push_back(std::move(r));
  res.ok = true;
  res.instance.clear();
  res.message = "ok";
  return res;
}

}  // namespace braidforge
