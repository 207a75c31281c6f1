#include <algorithm>
#include <map>

#include "groth/bijections.hpp"

namespace groth {

namespace {

using Codes = std::span<std::uint8_t>;

bool primed_code(std::uint8_t c) { return c & 1; }

// Cells holding a or b grouped into components of consecutive diagonals,
// each component listed from the lowest diagonal to the highest.
std::vector<std::vector<int>> components(const ShapeGeometry& g, Codes codes, std::uint8_t a, std::uint8_t b) {
  std::map<int, int> by_diag;
  for (int k = 0; k < g.size; ++k) {
    auto c = codes[static_cast<std::size_t>(k)];
    if (c != a && c != b) continue;
    int d = g.col[static_cast<std::size_t>(k)] - g.row[static_cast<std::size_t>(k)];
    if (!by_diag.emplace(d, k).second) throw DomainError("order swap: two swapped letters on one diagonal");
  }
  std::vector<std::vector<int>> out;
  int last = 0;
  for (auto [d, k] : by_diag) {
    if (out.empty() || d != last + 1) out.emplace_back();
    out.back().push_back(k);
    last = d;
  }
  return out;
}

// Up map for unprimed code i and primed code jp; down map when up == false.
void swap_mixed(const ShapeGeometry& g, Codes codes, std::uint8_t i, std::uint8_t jp, bool up) {
  for (const auto& comp : components(g, codes, i, jp)) {
    std::map<int, std::uint8_t> placed;
    const int first = up ? comp.back() : comp.front();
    const int last = up ? comp.front() : comp.back();
    for (int k : comp) {
      if (k == first) continue;
      auto ks = static_cast<std::size_t>(k);
      std::uint8_t c = codes[ks];
      int target = c == i ? (up ? g.right[ks] : g.left[ks]) : (up ? g.up[ks] : g.down[ks]);
      if (target < 0 || std::find(comp.begin(), comp.end(), target) == comp.end() || !placed.emplace(target, c).second)
        throw DomainError("order swap: a moved entry leaves its component");
    }
    if (!placed.emplace(last, codes[static_cast<std::size_t>(first)]).second)
      throw DomainError("order swap: component refill collides");
    for (auto [k, c] : placed) codes[static_cast<std::size_t>(k)] = c;
  }
}

// Bender-Knuth exchange of adjacent letters a < b of the same kind, followed
// by the relabelling a <-> b. Unprimed letters are exchanged row by row,
// primed letters column by column.
void swap_same(const ShapeGeometry& g, Codes codes, std::uint8_t a, std::uint8_t b) {
  const bool primed = primed_code(a);
  auto at = [&](int k) { return k < 0 ? std::uint8_t{0} : codes[static_cast<std::size_t>(k)]; };
  std::vector<char> is_free(static_cast<std::size_t>(g.size), 0);
  for (int k = 0; k < g.size; ++k) {
    auto ks = static_cast<std::size_t>(k);
    auto c = codes[ks];
    if (c == a) is_free[ks] = at(primed ? g.right[ks] : g.down[ks]) != b;
    if (c == b) is_free[ks] = at(primed ? g.left[ks] : g.up[ks]) != a;
  }
  // Group free cells into lines (rows for unprimed, columns for primed).
  std::map<int, std::vector<int>> lines;
  for (int k = 0; k < g.size; ++k)
    if (is_free[static_cast<std::size_t>(k)])
      lines[primed ? g.col[static_cast<std::size_t>(k)] : g.row[static_cast<std::size_t>(k)]].push_back(k);
  for (auto& [line, cells] : lines) {
    auto pos = [&](int k) { return primed ? g.row[static_cast<std::size_t>(k)] : g.col[static_cast<std::size_t>(k)]; };
    std::sort(cells.begin(), cells.end(), [&](int x, int y) { return pos(x) < pos(y); });
    int na = 0;
    for (std::size_t p = 0; p < cells.size(); ++p) {
      if (p > 0 && pos(cells[p]) != pos(cells[p - 1]) + 1)
        throw DomainError("Bender-Knuth exchange: free letters are not contiguous");
      if (codes[static_cast<std::size_t>(cells[p])] == a) ++na;
    }
    int nb = static_cast<int>(cells.size()) - na;
    for (std::size_t p = 0; p < cells.size(); ++p)
      codes[static_cast<std::size_t>(cells[p])] = static_cast<int>(p) < nb ? a : b;
  }
  for (auto& c : codes) {
    if (c == a)
      c = b;
    else if (c == b)
      c = a;
  }
}

bool pt_under(const ShapeGeometry& g, Codes codes, const TotalOrder& order) {
  for (int k = 0; k < g.size; ++k) {
    auto c = codes[static_cast<std::size_t>(k)];
    int l = g.left[static_cast<std::size_t>(k)], u = g.up[static_cast<std::size_t>(k)];
    if (l >= 0) {
      auto x = codes[static_cast<std::size_t>(l)];
      if (order.rank_code(x) > order.rank_code(c) || (x == c && primed_code(c))) return false;
    }
    if (u >= 0) {
      auto x = codes[static_cast<std::size_t>(u)];
      if (order.rank_code(x) > order.rank_code(c) || (x == c && !primed_code(c))) return false;
    }
  }
  return true;
}

int differing_position(const TotalOrder& from, const TotalOrder& to) {
  const auto& a = from.sequence();
  const auto& b = to.sequence();
  if (a.size() != b.size()) throw DomainError("orders on different letter sets");
  for (std::size_t k = 0; k + 1 < a.size(); ++k)
    if (a[k] != b[k]) {
      if (a[k] == b[k + 1] && a[k + 1] == b[k] && std::equal(a.begin() + static_cast<long>(k) + 2, a.end(), b.begin() + static_cast<long>(k) + 2))
        return static_cast<int>(k);
      break;
    }
  throw DomainError("orders do not differ by one adjacent exchange");
}

void check_domain(Codes codes, const TotalOrder& order) {
  for (auto c : codes)
    if (c == 0 || c > 2 * order.max_value()) throw DomainError("tableau has a box outside the order's letters");
}

}  // namespace

void adjacent_swap_codes(const ShapeGeometry& g, const TotalOrder& from, int k, Codes codes) {
  const auto& seq = from.sequence();
  if (k < 0 || k + 1 >= static_cast<int>(seq.size())) throw DomainError("swap position out of range");
  Letter a = seq[static_cast<std::size_t>(k)], b = seq[static_cast<std::size_t>(k + 1)];
  auto ca = static_cast<std::uint8_t>(a.code()), cb = static_cast<std::uint8_t>(b.code());
  if (a.primed == b.primed)
    swap_same(g, codes, ca, cb);
  else if (!a.primed)
    swap_mixed(g, codes, ca, cb, true);
  else
    swap_mixed(g, codes, cb, ca, false);
}

Tableau adjacent_swap(const Tableau& t, const TotalOrder& from, int k) {
  ShapeGeometry g(t.shape());
  auto codes = to_codes(t);
  check_domain(codes, from);
  if (!pt_under(g, codes, from)) throw DomainError("input is not a primed tableau under the source order");
  adjacent_swap_codes(g, from, k, codes);
  TotalOrder to = from.swapped(k);
  if (!pt_under(g, codes, to)) throw DomainError("adjacent swap produced a tableau outside the target order");
  return from_codes(t.shape(), codes);
}

Tableau order_swap_up(const Tableau& t, const TotalOrder& from, const TotalOrder& to) {
  int k = differing_position(from, to);
  const auto& s = from.sequence();
  if (s[static_cast<std::size_t>(k)].primed || !s[static_cast<std::size_t>(k + 1)].primed)
    throw DomainError("up map needs i immediately before j' in the source order");
  return adjacent_swap(t, from, k);
}

Tableau order_swap_down(const Tableau& t, const TotalOrder& from, const TotalOrder& to) {
  int k = differing_position(from, to);
  const auto& s = from.sequence();
  if (!s[static_cast<std::size_t>(k)].primed || s[static_cast<std::size_t>(k + 1)].primed)
    throw DomainError("down map needs j' immediately before i in the source order");
  return adjacent_swap(t, from, k);
}

std::vector<int> bubble_path(const TotalOrder& from, const TotalOrder& to) {
  if (from.max_value() != to.max_value()) throw DomainError("orders on different letter sets");
  std::vector<int> target;
  for (Letter a : from.sequence()) target.push_back(to.rank(a));
  std::vector<int> path;
  for (std::size_t pass = 0; pass < target.size(); ++pass) {
    bool moved = false;
    for (std::size_t k = 0; k + 1 < target.size(); ++k)
      if (target[k] > target[k + 1]) {
        std::swap(target[k], target[k + 1]);
        path.push_back(static_cast<int>(k));
        moved = true;
      }
    if (!moved) break;
  }
  return path;
}

Tableau reorder(const Tableau& t, const TotalOrder& from, const TotalOrder& to) {
  ShapeGeometry g(t.shape());
  auto codes = to_codes(t);
  check_domain(codes, from);
  if (!pt_under(g, codes, from)) throw DomainError("input is not a primed tableau under the source order");
  TotalOrder cur = from;
  for (int k : bubble_path(from, to)) {
    adjacent_swap_codes(g, cur, k, codes);
    cur = cur.swapped(k);
  }
  if (!pt_under(g, codes, to)) throw DomainError("reorder produced a tableau outside the target order");
  return from_codes(t.shape(), codes);
}

}  // namespace groth
