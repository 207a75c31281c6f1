#include <algorithm>
#include <map>

#include "groth/bijections.hpp"
#include "groth/json_io.hpp"

namespace groth {

namespace {

using Columns = std::vector<std::vector<BoxFill>>;

Columns to_columns(const Tableau& t) {
  const auto& sh = t.shape();
  Columns cols(static_cast<std::size_t>(sh.outer().first()));
  for (int r = 1; r <= sh.rows(); ++r)
    for (int c = 1; c <= sh.row_end(r); ++c) cols[static_cast<std::size_t>(c - 1)].push_back(t.at(r, c));
  return cols;
}

Tableau from_columns(const Columns& cols) {
  std::vector<int> heights;
  for (const auto& col : cols)
    if (!col.empty()) heights.push_back(static_cast<int>(col.size()));
  if (!std::is_sorted(heights.begin(), heights.end(), std::greater<>()))
    throw DomainError("insertion produced a non-partition shape");
  Tableau t{SkewShape(conjugate(Partition(heights)))};
  for (std::size_t c = 0; c < heights.size(); ++c)
    for (std::size_t r = 0; r < cols[c].size(); ++r) t.at(static_cast<int>(r + 1), static_cast<int>(c + 1)) = cols[c][r];
  return t;
}

// Does x, inserted into a column, bump y?
bool bumps(Letter x, Letter y) { return x.primed ? y.code() > x.code() : y.code() >= x.code(); }

void snapshot(Trace* trace, const Columns& cols, std::string note) {
  if (trace) trace->push_back(TraceStep{std::move(note), from_columns(cols)});
}

}  // namespace

RskPair rsk_forward(const Tableau& t, Trace* trace) {
  if (!validate(t, Family::OT)) throw DomainError("rsk_forward: input is not an overfull tableau");
  const Partition mu = t.shape().outer();
  Columns cols = to_columns(t);
  std::map<std::pair<int, int>, int> labels;  // appended box -> column it came from
  snapshot(trace, cols, "input");
  for (int i = mu.first(); i >= 1; --i) {
    std::vector<std::pair<Letter, int>> batch;  // (letter, source row)
    auto& col = cols[static_cast<std::size_t>(i - 1)];
    for (std::size_t r = 0; r < col.size(); ++r) {
      auto letters = col[r].letters();
      for (std::size_t k = 1; k < letters.size(); ++k) batch.emplace_back(letters[k], static_cast<int>(r));
    }
    std::stable_sort(batch.begin(), batch.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    for (auto [letter, src] : batch) {
      cols[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(src)].remove(letter);
      Letter x = letter;
      std::size_t c = static_cast<std::size_t>(i);  // 0-based index of column i+1
      while (true) {
        if (c == cols.size()) cols.emplace_back();
        auto& target = cols[c];
        auto it = std::find_if(target.begin(), target.end(), [&](const BoxFill& f) { return bumps(x, f.min()); });
        if (it == target.end()) {
          target.push_back(BoxFill::of(x));
          labels[{static_cast<int>(target.size()), static_cast<int>(c + 1)}] = i;
          break;
        }
        Letter y = it->min();
        *it = BoxFill::of(x);
        x = y;
        ++c;
      }
      snapshot(trace, cols,
               "insert " + letter.to_string() + " from (" + std::to_string(src + 1) + "," + std::to_string(i) + ")");
    }
  }
  Tableau p = from_columns(cols);
  Tableau q(SkewShape(p.shape().outer(), mu));
  for (const auto& [cell, label] : labels) q.set(cell.first, cell.second, Letter::unprimed_of(label));
  if (!validate(p, Family::PT) || !validate(q, Family::OFT))
    throw DomainError("rsk_forward: internal invariant violated");
  return RskPair{std::move(p), std::move(q)};
}

Tableau rsk_backward(const RskPair& pair, const Partition& mu, Trace* trace) {
  const auto& qs = pair.q.shape();
  if (qs.inner() != mu || qs.outer() != pair.p.shape().outer() || !pair.p.shape().straight())
    throw DomainError("rsk_backward: shapes of P and Q do not nest as lambda/mu");
  if (!validate(pair.p, Family::PT) || !validate(pair.q, Family::OFT))
    throw DomainError("rsk_backward: P must be a PT and Q an OFT");
  Columns cols = to_columns(pair.p);
  std::map<int, std::vector<std::pair<int, int>>> by_label;
  for (int r = 1; r <= qs.rows(); ++r)
    for (int c = qs.row_begin(r); c <= qs.row_end(r); ++c)
      by_label[pair.q.letter(r, c)->value].emplace_back(r, c);
  snapshot(trace, cols, "input");
  for (auto& [i, cells] : by_label) {
    std::sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
    for (auto [r, c] : cells) {
      auto& col = cols[static_cast<std::size_t>(c - 1)];
      bool corner = static_cast<int>(col.size()) == r &&
                    (static_cast<std::size_t>(c) >= cols.size() || cols[static_cast<std::size_t>(c)].size() < col.size());
      if (!corner) throw DomainError("rsk_backward: labelled box is not a removable corner");
      Letter y = col.back().min();
      col.pop_back();
      for (int cc = c - 1; cc > i; --cc) {
        auto& target = cols[static_cast<std::size_t>(cc - 1)];
        auto it = std::find_if(target.rbegin(), target.rend(), [&](const BoxFill& f) {
          return y.primed ? f.min().code() < y.code() : f.min().code() <= y.code();
        });
        if (it == target.rend()) throw DomainError("rsk_backward: reverse bump failed");
        Letter z = it->min();
        *it = BoxFill::of(y);
        y = z;
      }
      auto& home = cols[static_cast<std::size_t>(i - 1)];
      auto it = std::find_if(home.rbegin(), home.rend(), [&](const BoxFill& f) {
        return y.primed ? f.min().code() < y.code() : f.min().code() <= y.code();
      });
      if (it == home.rend()) throw DomainError("rsk_backward: no box can absorb a returned letter");
      it->add(y);
      while (!cols.empty() && cols.back().empty()) cols.pop_back();
      snapshot(trace, cols, "return " + y.to_string() + " to column " + std::to_string(i));
    }
  }
  Tableau t = from_columns(cols);
  if (t.shape().outer() != mu || !validate(t, Family::OT))
    throw DomainError("rsk_backward: pair is not in the image of the insertion");
  if (!(rsk_forward(t) == pair)) throw DomainError("rsk_backward: pair is not in the image of the insertion");
  return t;
}

}  // namespace groth
