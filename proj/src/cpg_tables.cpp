#include "braidforge/degeneration.hpp"

namespace braidforge {

namespace {

enum class Style { bar, under, plain };

struct Row {
  int j;
  std::vector<int> is;
  Style style;
  int detour_from = 0;
  int detour_to = 0;
};

std::vector<int> range(int a, int b) {
  std::vector<int> out;
  for (int i = a; i <= b; ++i) out.push_back(i);
  return out;
}

std::vector<ParasiticEntry> expand(const std::vector<Row>& rows) {
  std::vector<ParasiticEntry> out;
  for (const auto& r : rows)
    for (int i : r.is) {
      ParasiticEntry e;
      e.i = i;
      e.j = r.j;
      e.side = r.style == Style::bar ? Side::above : Side::below;
      e.plain = r.style == Style::plain;
      if (r.detour_from) e.detours.push_back({r.detour_from, r.detour_to, Side::below});
      out.push_back(e);
    }
  return out;
}

const std::vector<Row>& rows_g1() {
  static const std::vector<Row> rows = {
      {3, {1}, Style::bar},
      {4, {1}, Style::under},
      {4, {2}, Style::plain},
      {5, {1}, Style::bar},
      {5, {4}, Style::plain},
      {6, range(1, 4), Style::bar, 5, 5},
      {7, range(1, 5), Style::bar},
      {8, {1, 2, 3, 5, 6}, Style::bar},
  };
  return rows;
}

const std::vector<Row>& rows_g2() {
  static const std::vector<Row> rows = {
      {3, {1}, Style::bar},
      {4, {1, 2}, Style::bar, 3, 3},
      {5, {1}, Style::bar},
      {5, {4}, Style::plain},
      {6, range(1, 4), Style::bar, 5, 5},
      {7, range(1, 5), Style::bar},
      {8, {1, 2, 3, 5}, Style::bar, 7, 7},
      {8, {6}, Style::bar},
      {9, range(1, 6), Style::bar, 7, 8},
      {10, range(1, 8), Style::bar},
      {11, range(1, 9), Style::bar, 10, 10},
      {12, range(1, 10), Style::bar},
      {13, range(1, 11), Style::bar, 12, 12},
      {14, range(1, 10), Style::bar},
      {14, {13}, Style::plain},
      {15, range(1, 13), Style::bar, 14, 14},
      {16, range(1, 14), Style::bar},
      {17, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 14}, Style::bar, 16, 16},
      {17, {15}, Style::bar},
  };
  return rows;
}

}  // namespace

std::vector<ParasiticEntry> cpg_parasitic_table(int g) {
  if (g == 1) return expand(rows_g1());
  if (g == 2) return expand(rows_g2());
  return {};
}

}  // namespace braidforge
