#include <algorithm>
#include <map>

#include "groth/bijections.hpp"

namespace groth {

namespace {

using Rows = std::vector<std::vector<std::uint8_t>>;  // letter codes, 0 = empty box

Rows to_rows(const Tableau& t) {
  Rows rows;
  for (int r = 1; r <= t.shape().rows(); ++r) {
    rows.emplace_back();
    for (int c = 1; c <= t.shape().row_end(r); ++c) {
      auto a = t.letter(r, c);
      rows.back().push_back(a ? static_cast<std::uint8_t>(a->code()) : 0);
    }
  }
  return rows;
}

Tableau from_rows(const Rows& rows) {
  std::vector<int> parts;
  for (const auto& row : rows)
    if (!row.empty()) parts.push_back(static_cast<int>(row.size()));
  Tableau t{SkewShape(Partition(parts))};
  for (std::size_t r = 0; r < parts.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      if (rows[r][c]) t.set(static_cast<int>(r + 1), static_cast<int>(c + 1), Letter::from_code(rows[r][c]));
  return t;
}

bool has(const Rows& rows, int r, int c) {
  return r >= 1 && r <= static_cast<int>(rows.size()) && c >= 1 && c <= static_cast<int>(rows[static_cast<std::size_t>(r - 1)].size());
}

std::uint8_t& cell(Rows& rows, int r, int c) {
  return rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)];
}

std::string where(int r, int c) { return "(" + std::to_string(r) + "," + std::to_string(c) + ")"; }

}  // namespace

JdtPair jdt_forward(const Tableau& t, Trace* trace) {
  if (!validate(t, Family::UT)) throw DomainError("jdt_forward: input is not an underfull tableau");
  const Partition lambda = t.shape().outer();
  Rows rows = to_rows(t);
  std::map<std::pair<int, int>, int> labels;
  std::vector<std::pair<int, int>> starts;
  Trace panels;
  for (int i = lambda.first(); i >= 2; --i) {
    for (int r = static_cast<int>(rows.size()); r >= 1; --r) {
      if (!has(rows, r, i) || cell(rows, r, i) != 0) continue;
      starts.emplace_back(r, i);
      if (trace) panels.push_back(TraceStep{"slide into " + where(r, i), from_rows(rows), r, i});
      int rr = r, cc = i;
      while (true) {
        bool right = has(rows, rr, cc + 1), below = has(rows, rr + 1, cc);
        if (!right && !below) {
          rows[static_cast<std::size_t>(rr - 1)].pop_back();
          labels[{rr, cc}] = i - 1;
          break;
        }
        bool take_below;
        if (right && below) {
          Letter a = Letter::from_code(cell(rows, rr, cc + 1)), b = Letter::from_code(cell(rows, rr + 1, cc));
          take_below = b < a || (a == b && !a.primed);
        } else {
          take_below = below;
        }
        int nr = take_below ? rr + 1 : rr, nc = take_below ? cc : cc + 1;
        cell(rows, rr, cc) = cell(rows, nr, nc);
        cell(rows, nr, nc) = 0;
        rr = nr;
        cc = nc;
      }
    }
  }
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  Tableau p = from_rows(rows);
  if (trace) {
    trace->insert(trace->end(), panels.begin(), panels.end());
    trace->push_back(TraceStep{"result", p});
  }
  Tableau q(SkewShape(lambda, p.shape().outer()));
  for (const auto& [pos, label] : labels) q.set(pos.first, pos.second, Letter::primed_of(label));
  if (!validate(p, Family::PT) || !validate(q, Family::UFT))
    throw DomainError("jdt_forward: internal invariant violated");
  return JdtPair{std::move(p), std::move(q)};
}

Tableau jdt_backward(const JdtPair& pair, const Partition& lambda, Trace* trace) {
  const auto& qs = pair.q.shape();
  if (qs.outer() != lambda || qs.inner() != pair.p.shape().outer() || !pair.p.shape().straight())
    throw DomainError("jdt_backward: shapes of P and Q do not nest as lambda/mu");
  if (!validate(pair.p, Family::PT) || !validate(pair.q, Family::UFT))
    throw DomainError("jdt_backward: P must be a PT and Q a UFT");
  Rows rows = to_rows(pair.p);
  rows.resize(static_cast<std::size_t>(lambda.length()));
  std::map<int, std::vector<std::pair<int, int>>> by_label;
  for (int r = 1; r <= qs.rows(); ++r)
    for (int c = qs.row_begin(r); c <= qs.row_end(r); ++c) by_label[pair.q.letter(r, c)->value].emplace_back(r, c);
  if (trace) trace->push_back(TraceStep{"input", from_rows(rows)});
  for (auto& [k, cells] : by_label) {
    const int i = k + 1;
    std::sort(cells.begin(), cells.end());  // top to bottom
    for (auto [r, c] : cells) {
      auto& row = rows[static_cast<std::size_t>(r - 1)];
      bool addable = static_cast<int>(row.size()) == c - 1 && (r == 1 || has(rows, r - 1, c));
      if (!addable) throw DomainError("jdt_backward: labelled box is not an addable corner");
      row.push_back(0);
      int rr = r, cc = c;
      while (true) {
        if (cc > i) {
          bool up = rr > 1 && has(rows, rr - 1, cc);
          bool take_up = false;
          if (up) {
            Letter a = Letter::from_code(cell(rows, rr, cc - 1)), b = Letter::from_code(cell(rows, rr - 1, cc));
            take_up = a < b || (a == b && !a.primed);
          }
          int nr = take_up ? rr - 1 : rr, nc = take_up ? cc : cc - 1;
          cell(rows, rr, cc) = cell(rows, nr, nc);
          cell(rows, nr, nc) = 0;
          rr = nr;
          cc = nc;
          continue;
        }
        if (rr == 1 || cell(rows, rr - 1, cc) == 0) break;
        Letter a = Letter::from_code(cell(rows, rr - 1, cc));
        std::uint8_t ec = 0;
        for (int q = cc - 1; q >= 1 && !ec; --q) ec = cell(rows, rr, q);
        if (!ec) break;
        Letter e = Letter::from_code(ec);
        if (!(e < a || (e == a && !a.primed))) break;
        cell(rows, rr, cc) = cell(rows, rr - 1, cc);
        cell(rows, rr - 1, cc) = 0;
        --rr;
      }
      if (trace) trace->push_back(TraceStep{"reverse slide from " + where(r, c), from_rows(rows), rr, cc});
    }
  }
  Tableau t = from_rows(rows);
  if (t.shape().outer() != lambda || !validate(t, Family::UT))
    throw DomainError("jdt_backward: pair is not in the image of the slides");
  if (!(jdt_forward(t) == pair)) throw DomainError("jdt_backward: pair is not in the image of the slides");
  return t;
}

}  // namespace groth
