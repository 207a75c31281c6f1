#include "groth/enumerate.hpp"

#include <algorithm>

namespace groth {

namespace {

bool row_ok(Letter a, Letter b) { return a < b || (a == b && !a.primed); }
bool col_ok(Letter a, Letter c) { return a < c || (a == c && a.primed); }

// All box fills with 1..max_size entries, sorted by their letter sequences.
std::vector<BoxFill> candidate_fills(LetterCaps caps, int max_size) {
  std::vector<BoxFill> out;
  std::vector<Letter> pool;
  for (int v = 1; v <= std::max(caps.unprimed, caps.primed); ++v) {
    if (v <= caps.primed) pool.push_back(Letter::primed_of(v));
    if (v <= caps.unprimed) pool.push_back(Letter::unprimed_of(v));
  }
  BoxFill cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int room) {
    if (k == pool.size()) {
      if (!cur.empty()) out.push_back(cur);
      return;
    }
    Letter a = pool[k];
    int max_copies = a.primed ? std::min(room, 1) : room;
    for (int m = 0; m <= max_copies; ++m) {
      for (int t = 0; t < m; ++t) cur.add(a);
      rec(k + 1, room - m);
      for (int t = 0; t < m; ++t) cur.remove(a);
    }
  };
  rec(0, max_size);
  std::sort(out.begin(), out.end(), [](const BoxFill& a, const BoxFill& b) { return a.letters() < b.letters(); });
  return out;
}

struct SingleLetterSearch {
  const ShapeGeometry& geom;
  std::vector<std::uint8_t> codes;
  std::vector<std::vector<std::uint8_t>> candidates;  // per cell, increasing
  std::function<bool(int, std::uint8_t)> ok;
  const CodeVisitor& visit;

  void run(int k) {
    if (k == geom.size) {
      visit(codes);
      return;
    }
    for (std::uint8_t c : candidates[static_cast<std::size_t>(k)]) {
      if (!ok(k, c)) continue;
      codes[static_cast<std::size_t>(k)] = c;
      run(k + 1);
    }
    codes[static_cast<std::size_t>(k)] = 0;
  }
};

void search_single(const ShapeGeometry& geom, std::vector<std::vector<std::uint8_t>> candidates,
                   std::function<bool(int, std::uint8_t, const std::vector<std::uint8_t>&)> ok,
                   const CodeVisitor& visit) {
  SingleLetterSearch s{geom, std::vector<std::uint8_t>(static_cast<std::size_t>(geom.size), 0), std::move(candidates),
                       nullptr, visit};
  s.ok = [&](int k, std::uint8_t c) { return ok(k, c, s.codes); };
  s.run(0);
}

std::vector<Tableau> collect_codes(const SkewShape& shape,
                                   const std::function<void(const CodeVisitor&)>& gen) {
  std::vector<Tableau> out;
  gen([&](std::span<const std::uint8_t> codes) { out.push_back(from_codes(shape, codes)); });
  return out;
}

}  // namespace

void for_each_OT(const Partition& mu, LetterCaps caps, int extra_entries, const TableauVisitor& visit) {
  if (extra_entries < 0) return;
  SkewShape shape(mu);
  ShapeGeometry geom(shape);
  const auto fills = candidate_fills(caps, 1 + extra_entries);
  Tableau t(shape);
  auto cells = t.cells();
  std::function<void(int, int)> rec = [&](int k, int budget) {
    if (k == geom.size) {
      visit(t);
      return;
    }
    int l = geom.left[static_cast<std::size_t>(k)], u = geom.up[static_cast<std::size_t>(k)];
    for (const auto& f : fills) {
      int extra = f.size() - 1;
      if (extra > budget) continue;
      Letter m = f.min();
      if (l >= 0 && !row_ok(cells[static_cast<std::size_t>(l)].max(), m)) continue;
      if (u >= 0 && !col_ok(cells[static_cast<std::size_t>(u)].max(), m)) continue;
      cells[static_cast<std::size_t>(k)] = f;
      rec(k + 1, budget - extra);
    }
    cells[static_cast<std::size_t>(k)].clear();
  };
  rec(0, extra_entries);
}

void for_each_UT(const Partition& lambda, LetterCaps caps, const TableauVisitor& visit) {
  SkewShape shape(lambda);
  ShapeGeometry geom(shape);
  std::vector<std::uint8_t> letters;
  for (int v = 1; v <= std::max(caps.unprimed, caps.primed); ++v) {
    if (v <= caps.primed) letters.push_back(static_cast<std::uint8_t>(Letter::primed_of(v).code()));
    if (v <= caps.unprimed) letters.push_back(static_cast<std::uint8_t>(Letter::unprimed_of(v).code()));
  }
  std::vector<std::vector<std::uint8_t>> cand(static_cast<std::size_t>(geom.size));
  for (int k = 0; k < geom.size; ++k) {
    auto& c = cand[static_cast<std::size_t>(k)];
    if (geom.col[static_cast<std::size_t>(k)] > 1) c.push_back(0);
    c.insert(c.end(), letters.begin(), letters.end());
  }
  // last_in_row[k]: code of the rightmost nonempty cell in k's row at or left of k.
  std::vector<std::uint8_t> last_in_row(static_cast<std::size_t>(geom.size), 0);
  auto ok = [&](int k, std::uint8_t c, const std::vector<std::uint8_t>& codes) {
    auto ks = static_cast<std::size_t>(k);
    std::uint8_t prev = geom.left[ks] >= 0 ? last_in_row[static_cast<std::size_t>(geom.left[ks])] : 0;
    if (c && prev && !row_ok(Letter::from_code(prev), Letter::from_code(c))) return false;
    std::uint8_t here = c ? c : prev;
    int u = geom.up[ks];
    if (u >= 0 && codes[static_cast<std::size_t>(u)] && here &&
        !col_ok(Letter::from_code(codes[static_cast<std::size_t>(u)]), Letter::from_code(here)))
      return false;
    last_in_row[ks] = here;
    return true;
  };
  search_single(geom, std::move(cand), ok,
                [&](std::span<const std::uint8_t> codes) { visit(from_codes(shape, codes)); });
}

void for_each_PT_order_codes(const ShapeGeometry& geom, const TotalOrder& order, int max_value,
                             const CodeVisitor& visit) {
  if (order.max_value() < max_value) throw DomainError("order does not cover the requested letters");
  std::vector<std::uint8_t> seq;  // codes in order
  for (Letter a : order.sequence())
    if (a.value <= max_value) seq.push_back(static_cast<std::uint8_t>(a.code()));
  std::vector<int> rank(static_cast<std::size_t>(2 * max_value + 1), -1);
  for (std::size_t p = 0; p < seq.size(); ++p) rank[seq[p]] = static_cast<int>(p);
  std::vector<std::uint8_t> codes(static_cast<std::size_t>(geom.size), 0);
  std::function<void(int)> rec = [&](int k) {
    if (k == geom.size) {
      visit(codes);
      return;
    }
    auto ks = static_cast<std::size_t>(k);
    int l = geom.left[ks], u = geom.up[ks];
    int lc = l >= 0 ? codes[static_cast<std::size_t>(l)] : 0;
    int uc = u >= 0 ? codes[static_cast<std::size_t>(u)] : 0;
    int start = std::max(lc ? rank[static_cast<std::size_t>(lc)] : 0, uc ? rank[static_cast<std::size_t>(uc)] : 0);
    for (std::size_t p = static_cast<std::size_t>(start); p < seq.size(); ++p) {
      std::uint8_t c = seq[p];
      if (c == lc && (c & 1)) continue;   // repeated primed letter in a row
      if (c == uc && !(c & 1)) continue;  // repeated unprimed letter in a column
      codes[ks] = c;
      rec(k + 1);
    }
    codes[ks] = 0;
  };
  rec(0);
}

std::vector<Tableau> enum_OT(const Partition& mu, EnumBounds bounds) {
  std::vector<Tableau> out;
  for_each_OT(mu, {bounds.max_value, bounds.max_value}, bounds.extra_entries,
              [&](const Tableau& t) { out.push_back(t); });
  return out;
}

std::vector<Tableau> enum_UT(const Partition& lambda, EnumBounds bounds) {
  std::vector<Tableau> out;
  for_each_UT(lambda, {bounds.max_value, bounds.max_value}, [&](const Tableau& t) { out.push_back(t); });
  return out;
}

std::vector<Tableau> enum_PT(const Partition& lambda, int max_value) {
  return enum_PT_order(SkewShape(lambda), TotalOrder::standard(max_value), max_value);
}

std::vector<Tableau> enum_PT_order(const SkewShape& shape, const TotalOrder& order, int max_value) {
  ShapeGeometry geom(shape);
  return collect_codes(shape, [&](const CodeVisitor& v) { for_each_PT_order_codes(geom, order, max_value, v); });
}

void for_each_flagged_codes(Family family, const ShapeGeometry& geom, const CodeVisitor& visit) {
  const SkewShape& shape = geom.shape;
  if (!shape.same_row_count()) return;
  auto key = [](std::uint8_t c) {
    Letter a = Letter::from_code(c);
    return a.primed ? a.value : -a.value;
  };
  std::vector<std::vector<std::uint8_t>> cand(static_cast<std::size_t>(geom.size));
  for (int k = 0; k < geom.size; ++k) {
    int r = geom.row[static_cast<std::size_t>(k)];
    auto& c = cand[static_cast<std::size_t>(k)];
    // Unprimed v needs v <= mu_r, primed v' needs v < lambda_r.
    for (int v = 1; v <= std::max(shape.inner().row(r), shape.outer().row(r) - 1); ++v) {
      bool primed_ok = family != Family::OFT && v < shape.outer().row(r);
      bool unprimed_ok = family != Family::UFT && v <= shape.inner().row(r);
      if (family == Family::PFT && primed_ok) c.push_back(static_cast<std::uint8_t>(Letter::primed_of(v).code()));
      if (unprimed_ok) c.push_back(static_cast<std::uint8_t>(Letter::unprimed_of(v).code()));
      if (family == Family::UFT && primed_ok) c.push_back(static_cast<std::uint8_t>(Letter::primed_of(v).code()));
    }
  }
  if (family == Family::OFT) {
    auto ok = [&](int k, std::uint8_t c, const std::vector<std::uint8_t>& codes) {
      int l = geom.left[static_cast<std::size_t>(k)], u = geom.up[static_cast<std::size_t>(k)];
      if (l >= 0 && codes[static_cast<std::size_t>(l)] < c) return false;
      if (u >= 0 && codes[static_cast<std::size_t>(u)] <= c) return false;
      return true;
    };
    search_single(geom, std::move(cand), ok, visit);
  } else if (family == Family::UFT) {
    auto ok = [&](int k, std::uint8_t c, const std::vector<std::uint8_t>& codes) {
      int l = geom.left[static_cast<std::size_t>(k)], u = geom.up[static_cast<std::size_t>(k)];
      if (l >= 0 && codes[static_cast<std::size_t>(l)] >= c) return false;
      if (u >= 0 && codes[static_cast<std::size_t>(u)] > c) return false;
      return true;
    };
    search_single(geom, std::move(cand), ok, visit);
  } else if (family == Family::PFT) {
    auto ok = [&](int k, std::uint8_t c, const std::vector<std::uint8_t>& codes) {
      int l = geom.left[static_cast<std::size_t>(k)], u = geom.up[static_cast<std::size_t>(k)];
      if (l >= 0) {
        std::uint8_t a = codes[static_cast<std::size_t>(l)];
        if (key(a) > key(c) || (a == c && (c & 1))) return false;
      }
      if (u >= 0) {
        std::uint8_t a = codes[static_cast<std::size_t>(u)];
        if (key(a) > key(c) || (a == c && !(c & 1))) return false;
      }
      return true;
    };
    search_single(geom, std::move(cand), ok, visit);
  } else {
    throw DomainError("for_each_flagged_codes: " + to_string(family) + " is not a flagged family");
  }
}

std::vector<Tableau> enum_OFT(const SkewShape& shape) {
  ShapeGeometry geom(shape);
  return collect_codes(shape, [&](const CodeVisitor& v) { for_each_flagged_codes(Family::OFT, geom, v); });
}

std::vector<Tableau> enum_UFT(const SkewShape& shape) {
  ShapeGeometry geom(shape);
  return collect_codes(shape, [&](const CodeVisitor& v) { for_each_flagged_codes(Family::UFT, geom, v); });
}

std::vector<Tableau> enum_PFT(const SkewShape& shape) {
  ShapeGeometry geom(shape);
  return collect_codes(shape, [&](const CodeVisitor& v) { for_each_flagged_codes(Family::PFT, geom, v); });
}

void for_each_tableau(Family family, const SkewShape& shape, EnumBounds bounds, const TableauVisitor& visit) {
  auto need_straight = [&] {
    if (!shape.straight()) throw DomainError(to_string(family) + " is only defined on straight shapes");
  };
  ShapeGeometry geom(shape);
  auto as_tableau = [&](std::span<const std::uint8_t> codes) { visit(from_codes(shape, codes)); };
  switch (family) {
    case Family::OT:
      need_straight();
      for_each_OT(shape.outer(), {bounds.max_value, bounds.max_value}, bounds.extra_entries, visit);
      return;
    case Family::UT:
      need_straight();
      for_each_UT(shape.outer(), {bounds.max_value, bounds.max_value}, visit);
      return;
    case Family::PT:
      for_each_PT_order_codes(geom, TotalOrder::standard(bounds.max_value), bounds.max_value, as_tableau);
      return;
    default:
      for_each_flagged_codes(family, geom, as_tableau);
  }
}

}  // namespace groth
