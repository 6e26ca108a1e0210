#include "braidforge/factorization.hpp"

namespace braidforge {

std::string OriginTag::to_string() const {
  switch (kind) {
    case Kind::vertex:
      return "vertex(" + std::to_string(i) + ")";
    case Kind::parasitic:
      return "parasitic(" + std::to_string(i) + "," + std::to_string(j) + ")";
    case Kind::extra_branch:
      return "extra_branch(" + std::to_string(i) + ")";
    case Kind::event:
      return "event(" + std::to_string(i) + ")";
  }
  return "?";
}

Factor Factor::from_half_twist(const HalfTwist& h, int exponent, OriginTag tag) {
  return Factor{h.strands, h.adjacent_conjugator(), h.a, 2, exponent, tag};
}

BraidWord Factor::core() const { return block_delta(strands, first, size).pow(exponent); }

BraidWord Factor::braid() const { return conj * core() * conj.inverse(); }

HalfTwist Factor::half_twist() const {
  if (size != 2) throw Error("Factor::half_twist: factor is not a half-twist power");
  return HalfTwist{strands, first, first + 1, conj};
}

Factor Factor::conjugated_by(const BraidWord& w) const {
  Factor f = *this;
  f.conj = (w * conj).reduced();
  return f;
}

void Factorization::append_block(const std::string& name, const std::string& notation,
                                 const std::vector<Factor>& fs) {
  Block b{name, notation, factors.size(), factors.size() + fs.size()};
  factors.insert(factors.end(), fs.begin(), fs.end());
  blocks.push_back(b);
}

BraidWord Factorization::product() const {
  BraidWord w(strands);
  for (const auto& f : factors) w *= f.braid();
  return w;
}

int Factorization::total_degree() const {
  int d = 0;
  for (const auto& f : factors) d += f.degree();
  return d;
}

std::string Factorization::serialize() const {
  std::string out;
  for (const auto& b : blocks) out += b.name + " = " + b.notation + "\n";
  return out;
}

DegreeAudit audit(const Factorization& f) {
  DegreeAudit a;
  a.expected = f.strands * (f.strands - 1);
  a.total = f.total_degree();
  Permutation p(static_cast<std::size_t>(f.strands));
  for (const auto& x : f.factors) p = p * permutation(x.braid());
  a.permutation_identity = p.is_identity();
  return a;
}

Factorization hurwitz_move(const Factorization& f, int k, bool inverse) {
  if (k < 1 || k >= static_cast<int>(f.factors.size())) throw Error("hurwitz_move: k out of range");
  Factorization g = f;
  g.blocks.clear();
  const Factor& a = f.factors[k - 1];
  const Factor& b = f.factors[k];
  if (!inverse) {
    g.factors[k - 1] = b.conjugated_by(a.braid());
    g.factors[k] = a;
  } else {
    g.factors[k - 1] = b;
    g.factors[k] = a.conjugated_by(b.braid().inverse());
  }
  return g;
}

Factorization conjugate_factorization(const Factorization& f, const BraidWord& h) {
  Factorization g = f;
  for (auto& x : g.factors) x = x.conjugated_by(h.inverse());
  return g;
}

nlohmann::json to_json(const Factor& f) {
  return {{"conj", format_braid(f.conj)},
          {"first", f.first},
          {"size", f.size},
          {"exponent", f.exponent},
          {"tag", f.tag.to_string()},
          {"degree", f.degree()}};
}

nlohmann::json to_json(const Factorization& f) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : f.blocks)
    blocks.push_back({{"name", b.name}, {"notation", b.notation}, {"begin", b.begin}, {"end", b.end}});
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& x : f.factors) factors.push_back(to_json(x));
  return {{"schema", "braidforge.factorization/1"},
          {"strands", f.strands},
          {"blocks", blocks},
          {"factors", factors}};
}

namespace {

OriginTag parse_tag(const std::string& s) {
  auto open = s.find('(');
  auto close = s.find(')');
  if (open == std::string::npos || close == std::string::npos) throw ParseError("bad tag '" + s + "'");
  std::string kind = s.substr(0, open);
  std::string args = s.substr(open + 1, close - open - 1);
  int i = 0, j = 0;
  auto comma = args.find(',');
  try {
    i = std::stoi(args.substr(0, comma));
    if (comma != std::string::npos) j = std::stoi(args.substr(comma + 1));
  } catch (const std::exception&) {
    throw ParseError("bad tag '" + s + "'");
  }
  if (kind == "vertex") return OriginTag::vertex(i);
  if (kind == "parasitic") return OriginTag::parasitic(i, j);
  if (kind == "extra_branch") return OriginTag::extra_branch(i);
  if (kind == "event") return OriginTag::event(i);
  throw ParseError("bad tag '" + s + "'");
}

}  // namespace

Factorization factorization_from_json(const nlohmann::json& j) {
  try {
    Factorization f;
    f.strands = j.at("strands").get<int>();
    for (const auto& x : j.at("factors")) {
      Factor fa;
      fa.strands = f.strands;
      fa.conj = parse_braid(x.at("conj").get<std::string>(), f.strands);
      fa.first = x.at("first").get<int>();
      fa.size = x.value("size", 2);
      fa.exponent = x.at("exponent").get<int>();
      fa.tag = parse_tag(x.value("tag", std::string("event(0)")));
      if (fa.first < 1 || fa.first + fa.size - 1 > f.strands) throw ParseError("factor block out of range");
      f.factors.push_back(fa);
    }
    if (j.contains("blocks"))
      for (const auto& b : j.at("blocks"))
        f.blocks.push_back({b.at("name").get<std::string>(), b.at("notation").get<std::string>(),
                            b.at("begin").get<std::size_t>(), b.at("end").get<std::size_t>()});
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("factorization json: ") + e.what());
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

}  // namespace braidforge
