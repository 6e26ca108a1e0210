#include "braidforge/path.hpp"

#include <regex>

namespace braidforge {

void PathSpec::validate() const {
  if (a < 1 || b > strands || a >= b) throw Error("PathSpec: endpoints out of range");
  for (const auto& d : detours) {
    if (d.from > d.to) throw Error("PathSpec: empty detour interval");
    if (d.from <= a || d.to >= b) throw Error("PathSpec: detour interval not between endpoints");
  }
}

Side PathSpec::side_at(int k) const {
  Side s = side;
  for (const auto& d : detours)
    if (k >= d.from && k <= d.to) s = d.side;
  return s;
}

BraidWord band_word(int strands, int a, int b) {
  std::vector<int> letters;
  for (int k = b - 1; k > a; --k) letters.push_back(k);
  return BraidWord(strands, std::move(letters));
}

BraidWord HalfTwist::expand() const {
  BraidWord band = band_word(strands, a, b);
  return conjugator * band * BraidWord::generator(strands, a) * band.inverse() *
         conjugator.inverse();
}

BraidWord HalfTwist::adjacent_conjugator() const {
  return (conjugator * band_word(strands, a, b)).reduced();
}

HalfTwist compile_sides(int strands, int a, int b, const std::vector<Side>& sides) {
  if (static_cast<int>(sides.size()) != b - a - 1) throw Error("compile_sides: side count mismatch");
  std::vector<int> letters;
  for (int k = b - 1; k > a; --k) letters.push_back(sides[k - a - 1] == Side::below ? k : -k);
  BraidWord s(strands, std::move(letters));
  return HalfTwist{strands, a, b, (s * band_word(strands, a, b).inverse()).reduced()};
}

HalfTwist compile_path(const PathSpec& p) {
  p.validate();
  std::vector<Side> sides;
  for (int k = p.a + 1; k < p.b; ++k) sides.push_back(p.side_at(k));
  return compile_sides(p.strands, p.a, p.b, sides);
}

namespace {

Side parse_side(const std::string& s) {
  if (s == "below") return Side::below;
  if (s == "above") return Side::above;
  throw ParseError("parse_path: bad side '" + s + "'");
}

const char* side_name(Side s) { return s == Side::below ? "below" : "above"; }

}  // namespace

PathSpec parse_path(std::string_view text, int strands) {
  static const std::regex head(R"(^\s*Z\[\s*(\d+)\s*,\s*(\d+)\s*((?:;[^\]]*)?)\]\s*$)");
  static const std::regex detour(R"(^detour=\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(below|above)\s*\)$)");
  std::string s(text);
  std::smatch m;
  if (!std::regex_match(s, m, head)) throw ParseError("parse_path: bad path '" + s + "'");
  PathSpec p;
  p.strands = strands;
  p.a = std::stoi(m[1]);
  p.b = std::stoi(m[2]);
  std::string rest = m[3];
  std::size_t pos = 0;
  while (pos < rest.size()) {
    std::size_t next = rest.find(';', pos + 1);
    std::string item = rest.substr(pos + 1, next == std::string::npos ? std::string::npos : next - pos - 1);
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    std::smatch dm;
    if (item == "below" || item == "above") {
      p.side = parse_side(item);
    } else if (std::regex_match(item, dm, detour)) {
      p.detours.push_back({std::stoi(dm[1]), std::stoi(dm[2]), parse_side(dm[3])});
    } else {
      throw ParseError("parse_path: bad decoration '" + item + "'");
    }
    if (next == std::string::npos) break;
    pos = next;
  }
  try {
    p.validate();
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
  return p;
}

std::string format_path(const PathSpec& p) {
  std::string out = "Z[" + std::to_string(p.a) + "," + std::to_string(p.b);
  if (p.side == Side::above || !p.detours.empty()) out += std::string(";") + side_name(p.side);
  for (const auto& d : p.detours)
    out += ";detour=(" + std::to_string(d.from) + "," + std::to_string(d.to) + "," + side_name(d.side) + ")";
  return out + "]";
}

BraidWord localization_conjugator(int strands, const std::vector<int>& points) {
  BraidWord w(strands);
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i] <= points[i - 1]) throw Error("localization_conjugator: points must increase");
    w *= band_word(strands, points[0] + static_cast<int>(i) - 1, points[i]);
  }
  return w;
}

}  // namespace braidforge
