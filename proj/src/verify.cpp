#include "groth/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "groth/bijections.hpp"
#include "groth/enumerate.hpp"
#include "groth/series.hpp"
#include "groth/symfunc.hpp"

namespace groth {

int resolve_jobs(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("GROTHLIB_JOBS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

json VerifyReport::to_json() const {
  return json{{"identity", identity}, {"ranges", ranges},       {"instances", instances},
              {"status", status()},   {"failures", failures}, {"seconds", seconds}};
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  os << identity << " [" << ranges << "]: " << status() << ", " << instances << " instances, " << failures.size()
     << " failures";
  for (std::size_t k = 0; k < failures.size() && k < 20; ++k) os << "\n  " << failures[k];
  if (failures.size() > 20) os << "\n  ... " << failures.size() - 20 << " more";
  return os.str();
}

namespace {

// Work item results, merged in task order so reports are deterministic.
struct Partial {
  long long instances = 0;
  std::vector<std::string> failures;
  void fail(std::string s) { failures.push_back(std::move(s)); }
};

void run_tasks(std::size_t n, int jobs, VerifyReport& report, const std::function<void(std::size_t, Partial&)>& task) {
  std::vector<Partial> parts(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        task(i, parts[i]);
      } catch (const std::exception& e) {
        parts[i].fail(std::string("exception: ") + e.what());
      }
    }
  };
  int w = std::max(1, std::min<int>(jobs, static_cast<int>(n)));
  std::vector<std::thread> pool;
  for (int k = 1; k < w; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& p : parts) {
    report.instances += p.instances;
    for (auto& f : p.failures) report.failures.push_back(std::move(f));
  }
}

std::vector<Partition> shapes(const VerifyParams& p, int default_max) {
  if (p.size) return partitions_of(*p.size);
  return partitions_up_to(p.max_size.value_or(default_max));
}

std::string range_text(const VerifyParams& p, int default_max) {
  if (p.size) return "|lambda|=" + std::to_string(*p.size);
  return "|lambda|<=" + std::to_string(p.max_size.value_or(default_max));
}

bool rows_fit(const Partition& p, int n) { return p.length() <= n; }

// ------------------------------------------------------------------ fact1

void check_fact1(const Partition& lambda, Partial& out) {
  const int n = lambda.size();
  Series f = pt_generating(lambda, n);
  DoubleSchurExpansion left = expand_schur_xy(f);
  DoubleSchurExpansion right = expand_schur_xy(f.swap_xy());
  std::set<std::pair<Partition, Partition>> keys;
  for (const auto& [k, c] : left.terms) keys.insert(k);
  for (const auto& [k, c] : right.terms) keys.insert({conjugate(k.first), conjugate(k.second)});
  for (const auto& [mu, nu] : keys) {
    Partition mc = conjugate(mu), nc = conjugate(nu);
    if (!rows_fit(mu, n) || !rows_fit(nu, n) || !rows_fit(mc, n) || !rows_fit(nc, n)) continue;
    ++out.instances;
    if (left.at(mu, nu) != right.at(mc, nc))
      out.fail("lambda=" + lambda.to_string() + " coefficient of " + mu.to_string() + "x" + nu.to_string() +
               " is " + left.at(mu, nu).to_text() + " but the conjugate side has " + right.at(mc, nc).to_text());
  }
}

// ------------------------------------------------------------------ duo1

// omega of a against b, on partitions both sides represent faithfully.
void compare_omega(const std::string& what, const SchurExpansion& a, const SchurExpansion& b, int n,
                   std::optional<int> degree, Partial& out) {
  SchurExpansion oa = omega(a);
  std::set<Partition> keys;
  for (const auto& [p, c] : oa.terms) keys.insert(p);
  for (const auto& [p, c] : b.terms) keys.insert(p);
  for (const auto& p : keys) {
    if (!rows_fit(p, n) || p.first() > n || (degree && p.size() > *degree)) continue;
    ++out.instances;
    if (oa.at(p) != b.at(p))
      out.fail(what + ": s" + p.to_string() + " has " + oa.at(p).to_text() + " vs " + b.at(p).to_text());
  }
}

void compare_omega_xy(const std::string& what, const DoubleSchurExpansion& a, const DoubleSchurExpansion& b, int n,
                      std::optional<int> degree, Partial& out) {
  DoubleSchurExpansion oa = omega_xy(a);
  std::set<std::pair<Partition, Partition>> keys;
  for (const auto& [k, c] : oa.terms) keys.insert(k);
  for (const auto& [k, c] : b.terms) keys.insert(k);
  for (const auto& [mu, nu] : keys) {
    bool fits = rows_fit(mu, n) && rows_fit(nu, n) && mu.first() <= n && nu.first() <= n;
    if (!fits || (degree && mu.size() + nu.size() > *degree)) continue;
    ++out.instances;
    if (oa.at(mu, nu) != b.at(mu, nu))
      out.fail(what + ": s" + mu.to_string() + "(x)s" + nu.to_string() + "(y) has " + oa.at(mu, nu).to_text() +
               " vs " + b.at(mu, nu).to_text());
  }
}

void check_duo1(const Partition& lambda, Partial& out) {
  const int n = lambda.size();
  const int d = lambda.size() + 2;
  const std::string tag = "lambda=" + lambda.to_string();
  compare_omega(tag + " omega(1B) vs 1A'", expand_schur(refined(Variant::V1B, lambda, n, d)),
                expand_schur(refined(Variant::V1A, conjugate(lambda), n, d)), n, d, out);
  compare_omega(tag + " omega(2B) vs 2A'", expand_schur(refined(Variant::V2B, lambda, n, std::nullopt)),
                expand_schur(refined(Variant::V2A, conjugate(lambda), n, std::nullopt)), n, std::nullopt, out);
  Series gd = groth_dual(lambda, {n, n, 0, std::nullopt});
  compare_omega_xy(tag + " G*", expand_schur_xy(gd), expand_schur_xy(gd.swap_xy()), n, std::nullopt, out);
  Series g = groth(lambda, {n, n, 0, d});
  compare_omega_xy(tag + " G", expand_schur_xy(g), expand_schur_xy(g.swap_xy()), n, d, out);
}

// ------------------------------------------------------------------ duo2

void check_duo2(const Partition& mu, const std::vector<Partition>& all, Partial& out) {
  for (const auto& lambda : all) {
    const ZPoly delta = mu == lambda ? ZPoly::constant(1) : ZPoly{};
    ZPoly b = hall_pair(schur_expansion_via_flags(mu, FlagSide::G, false, lambda.size()),
                        schur_expansion_via_flags(lambda, FlagSide::Gdual, false));
    ZPoly a = hall_pair(schur_expansion_via_flags(conjugate(mu), FlagSide::G, true, lambda.size()),
                        schur_expansion_via_flags(conjugate(lambda), FlagSide::Gdual, true));
    out.instances += 2;
    if (b != delta)
      out.fail("<1B" + mu.to_string() + ", 2B" + lambda.to_string() + "> = " + b.to_text());
    if (a != delta)
      out.fail("<1A" + mu.to_string() + ", 2A" + lambda.to_string() + "> = " + a.to_text());
  }
}

// ------------------------------------------------------------------ fact2 / lemma-z

std::vector<std::pair<Partition, Partition>> flagged_pairs(const std::vector<Partition>& outers) {
  std::vector<std::pair<Partition, Partition>> out;
  for (const auto& lambda : outers)
    for (const auto& mu : subpartitions(lambda))
      if (mu != lambda && mu.length() == lambda.length()) out.emplace_back(lambda, mu);
  return out;
}

void check_fact2(const Partition& lambda, const Partition& mu, Partial& out) {
  ZPoly total;
  for (const auto& rho : subpartitions(lambda)) {
    if (!rho.contains(mu)) continue;
    auto ps = enum_OFT(SkewShape(rho, mu));
    auto qs = enum_UFT(SkewShape(lambda, rho));
    int sign = (rho.size() - mu.size()) % 2 ? -1 : 1;
    for (const auto& p : ps)
      for (const auto& q : qs) total.add_term((flag_weight(p) + flag_weight(q)).coords(), sign);
  }
  ++out.instances;
  if (!total.is_zero())
    out.fail(lambda.to_string() + "/" + mu.to_string() + ": signed sum is " + total.to_text());
}

void check_lemma_z(const Partition& lambda, const Partition& mu, Partial& out) {
  const SkewShape shape(lambda, mu);
  const std::string tag = shape.to_string();
  auto all = enum_PFT(shape);
  std::set<Tableau> pool(all.begin(), all.end());
  ZPoly signed_sum;
  for (const auto& r : all) {
    ++out.instances;
    Tableau s = iota(r);
    auto weight = left_weight(r) + right_weight(r);
    signed_sum.add_term(weight.coords(), unprimed_count(r) % 2 ? -1 : 1);
    if (!pool.count(s)) out.fail(tag + ": iota image outside the enumerated set: " + s.to_string());
    if (s == r) out.fail(tag + ": iota has a fixed point " + r.to_string());
    if (!(iota(s) == r)) out.fail(tag + ": iota is not an involution at " + r.to_string());
    if ((unprimed_count(r) + unprimed_count(s)) % 2 != 1) out.fail(tag + ": iota keeps the sign at " + r.to_string());
    if (!(left_weight(s) + right_weight(s) == weight)) out.fail(tag + ": iota changes lw+rw at " + r.to_string());
    auto [p, q] = split(r);
    if (!(superimpose(p, q) == r)) out.fail(tag + ": superimpose(split(R)) != R at " + r.to_string());
    if (!(left_weight(r) == flag_weight(p)) || !(right_weight(r) == flag_weight(q)) ||
        unprimed_count(r) != p.shape().outer().size() - mu.size())
      out.fail(tag + ": superimposition weight dictionary fails at " + r.to_string());
  }
  if (!signed_sum.is_zero()) out.fail(tag + ": signed sum over PFT is " + signed_sum.to_text());
  long long product_count = 0;
  for (const auto& rho : subpartitions(lambda)) {
    if (!rho.contains(mu)) continue;
    auto ps = enum_OFT(SkewShape(rho, mu));
    auto qs = enum_UFT(SkewShape(lambda, rho));
    product_count += static_cast<long long>(ps.size() * qs.size());
    for (const auto& p : ps)
      for (const auto& q : qs) {
        Tableau r = superimpose(p, q);
        if (!pool.count(r)) out.fail(tag + ": superimposition not a PFT: " + r.to_string());
        auto back = split(r);
        if (!(back.first == p) || !(back.second == q)) out.fail(tag + ": split(superimpose) != id at " + r.to_string());
      }
  }
  if (product_count != static_cast<long long>(all.size()))
    out.fail(tag + ": |PFT|=" + std::to_string(all.size()) + " but sum |OFT|*|UFT|=" + std::to_string(product_count));
}

// ------------------------------------------------------------------ lemma-rskjdt

void check_rsk(const Partition& mu, int n, int b, Partial& out) {
  const std::string tag = "OT" + mu.to_string();
  std::set<std::pair<Tableau, Tableau>> image;
  long long count = 0;
  for_each_OT(mu, {n, n}, b, [&](const Tableau& t) {
    ++count;
    ++out.instances;
    RskPair pr = rsk_forward(t);
    if (!(left_weight(pr.p) == left_weight(t)) || !(right_weight(pr.p) == right_weight(t)) ||
        !(flag_weight(pr.q) == overweight(t)))
      out.fail(tag + ": weight transport fails at " + t.to_string());
    try {
      if (!(rsk_backward(pr, mu) == t)) out.fail(tag + ": backward(forward(T)) != T at " + t.to_string());
    } catch (const DomainError& e) {
      out.fail(tag + ": backward rejects forward image of " + t.to_string() + ": " + e.what());
    }
    image.emplace(pr.p, pr.q);
  });
  if (static_cast<long long>(image.size()) != count) out.fail(tag + ": insertion is not injective");
  std::set<std::pair<Tableau, Tableau>> expected;
  for (const auto& lambda : superpartitions_same_rows(mu, mu.size() + b)) {
    auto qs = enum_OFT(SkewShape(lambda, mu));
    if (qs.empty()) continue;
    for (const auto& p : enum_PT(lambda, n))
      for (const auto& q : qs) expected.emplace(p, q);
  }
  if (image != expected)
    out.fail(tag + ": image has " + std::to_string(image.size()) + " pairs, bounded pair set has " +
             std::to_string(expected.size()) + (image.size() == expected.size() ? " (different elements)" : ""));
}

void check_jdt(const Partition& lambda, int n, Partial& out) {
  const std::string tag = "UT" + lambda.to_string();
  std::set<std::pair<Tableau, Tableau>> image;
  long long count = 0;
  for_each_UT(lambda, {n, n}, [&](const Tableau& t) {
    ++count;
    ++out.instances;
    JdtPair pr = jdt_forward(t);
    if (!(left_weight(pr.p) == left_weight(t)) || !(right_weight(pr.p) == right_weight(t)) ||
        !(flag_weight(pr.q) == underweight(t)))
      out.fail(tag + ": weight transport fails at " + t.to_string());
    try {
      if (!(jdt_backward(pr, lambda) == t)) out.fail(tag + ": backward(forward(T)) != T at " + t.to_string());
    } catch (const DomainError& e) {
      out.fail(tag + ": backward rejects forward image of " + t.to_string() + ": " + e.what());
    }
    image.emplace(pr.p, pr.q);
  });
  if (static_cast<long long>(image.size()) != count) out.fail(tag + ": slides are not injective");
  std::set<std::pair<Tableau, Tableau>> expected;
  for (const auto& mu : subpartitions(lambda)) {
    auto qs = enum_UFT(SkewShape(lambda, mu));
    if (qs.empty()) continue;
    for (const auto& p : enum_PT(mu, n))
      for (const auto& q : qs) expected.emplace(p, q);
  }
  if (image != expected)
    out.fail(tag + ": image has " + std::to_string(image.size()) + " pairs, bounded pair set has " +
             std::to_string(expected.size()));
}

// ------------------------------------------------------------------ lemma-ordering

struct OrderTable {
  std::vector<TotalOrder> orders;
  std::map<std::vector<Letter>, int> index;
  std::vector<std::array<int, 16>> neighbour;  // order id after swapping k, k+1
};

OrderTable all_orders(int n) {
  OrderTable t;
  std::vector<int> codes;
  for (int c = 1; c <= 2 * n; ++c) codes.push_back(c);
  do {
    std::vector<Letter> seq;
    for (int c : codes) seq.push_back(Letter::from_code(c));
    t.index.emplace(seq, static_cast<int>(t.orders.size()));
    t.orders.emplace_back(seq);
  } while (std::next_permutation(codes.begin(), codes.end()));
  for (const auto& o : t.orders) {
    std::array<int, 16> nb{};
    nb.fill(-1);
    for (int k = 0; k + 1 < 2 * n; ++k) nb[static_cast<std::size_t>(k)] = t.index.at(o.swapped(k).sequence());
    t.neighbour.push_back(nb);
  }
  return t;
}

int inversion_distance(const TotalOrder& a, const TotalOrder& b) { return static_cast<int>(bubble_path(a, b).size()); }

using Packed = std::uint64_t;

Packed pack(std::span<const std::uint8_t> codes) {
  Packed p = 0;
  for (auto c : codes) p = (p << 5) | c;
  return p;
}

void unpack(Packed p, std::span<std::uint8_t> codes) {
  for (std::size_t k = codes.size(); k-- > 0;) {
    codes[k] = static_cast<std::uint8_t>(p & 31);
    p >>= 5;
  }
}

// Letter-content signature (both weights at once).
Packed content(std::span<const std::uint8_t> codes) {
  std::array<std::uint8_t, 16> h{};
  for (auto c : codes) ++h[c];
  Packed s = 0;
  for (auto x : h) s = (s << 4) | x;
  return s;
}

void check_ordering_shape(const SkewShape& shape, const OrderTable& ot, int n, int max_swaps, Partial& out) {
  const std::string tag = shape.to_string();
  ShapeGeometry g(shape);
  const std::size_t norders = ot.orders.size();
  std::vector<std::vector<Packed>> sets(norders);
  for (std::size_t o = 0; o < norders; ++o) {
    for_each_PT_order_codes(g, ot.orders[o], n, [&](std::span<const std::uint8_t> c) { sets[o].push_back(pack(c)); });
    std::sort(sets[o].begin(), sets[o].end());
    if (sets[o].size() != sets[0].size())
      out.fail(tag + ": |PT| differs between " + ot.orders[0].to_string() + " and " + ot.orders[o].to_string());
  }
  const int nk = 2 * n - 1;
  // maps[o][k][idx] = index of the image in the neighbouring order's set.
  std::vector<std::vector<std::vector<int>>> maps(norders, std::vector<std::vector<int>>(static_cast<std::size_t>(nk)));
  std::vector<std::uint8_t> codes(static_cast<std::size_t>(g.size));
  for (std::size_t o = 0; o < norders; ++o)
    for (int k = 0; k < nk; ++k) {
      const auto& dst = sets[static_cast<std::size_t>(ot.neighbour[o][static_cast<std::size_t>(k)])];
      auto& m = maps[o][static_cast<std::size_t>(k)];
      m.resize(sets[o].size());
      for (std::size_t i = 0; i < sets[o].size(); ++i) {
        unpack(sets[o][i], codes);
        Packed before = content(codes);
        adjacent_swap_codes(g, ot.orders[o], k, codes);
        if (content(codes) != before) out.fail(tag + ": adjacent swap changes the weights");
        auto it = std::lower_bound(dst.begin(), dst.end(), pack(codes));
        if (it == dst.end() || *it != pack(codes)) {
          out.fail(tag + ": swap " + std::to_string(k) + " from " + ot.orders[o].to_string() + " leaves PT");
          m[i] = -1;
        } else {
          m[i] = static_cast<int>(it - dst.begin());
        }
      }
    }
  if (!out.failures.empty()) return;
  std::vector<int> image, mark;
  for (std::size_t o = 0; o < norders; ++o)
    for (std::size_t t = 0; t < norders; ++t) {
      auto path = bubble_path(ot.orders[o], ot.orders[t]);
      if (static_cast<int>(path.size()) > max_swaps) continue;
      ++out.instances;
      const auto& src = sets[o];
      image.resize(src.size());
      for (std::size_t i = 0; i < src.size(); ++i) image[i] = static_cast<int>(i);
      std::size_t cur = o;
      for (int k : path) {
        const auto& m = maps[cur][static_cast<std::size_t>(k)];
        for (auto& x : image) x = m[static_cast<std::size_t>(x)];
        cur = static_cast<std::size_t>(ot.neighbour[cur][static_cast<std::size_t>(k)]);
      }
      if (cur != t) {
        out.fail(tag + ": bubble path does not reach the target order");
        continue;
      }
      const auto& dst = sets[t];
      mark.assign(dst.size(), 0);
      bool ok = dst.size() == src.size();
      for (std::size_t i = 0; ok && i < src.size(); ++i) {
        auto x = static_cast<std::size_t>(image[i]);
        if (mark[x]++) ok = false;
        std::vector<std::uint8_t> a(codes.size()), b(codes.size());
        unpack(src[i], a);
        unpack(dst[x], b);
        if (content(a) != content(b)) ok = false;
      }
      if (!ok)
        out.fail(tag + ": reorder " + ot.orders[o].to_string() + " -> " + ot.orders[t].to_string() +
                 " is not a weight-preserving bijection");
    }
  // The library's reorder must agree with the composed step maps.
  const std::size_t std_id = static_cast<std::size_t>(ot.index.at(TotalOrder::standard(n).sequence()));
  for (std::size_t t = 0; t < norders; ++t) {
    if (inversion_distance(ot.orders[std_id], ot.orders[t]) > max_swaps) continue;
    for (Packed p : sets[std_id]) {
      unpack(p, codes);
      Tableau img = reorder(from_codes(shape, codes), ot.orders[std_id], ot.orders[t]);
      auto c2 = to_codes(img);
      if (!std::binary_search(sets[t].begin(), sets[t].end(), pack(c2)))
        out.fail(tag + ": reorder output outside the target set");
    }
  }
}

// ------------------------------------------------------------------ oracle

void check_oracle(const Partition& lambda, Partial& out) {
  const int n = lambda.size();
  const std::string tag = "lambda=" + lambda.to_string();
  ++out.instances;
  SchurExpansion direct = expand_schur(groth_dual(lambda, {n, 0, 0, std::nullopt}));
  SchurExpansion flags = schur_expansion_via_flags(lambda, FlagSide::Gdual, false);
  if (!(direct == flags)) out.fail(tag + ": expand_schur(G*) differs from the flag expansion");
  ++out.instances;
  Series low = refined(Variant::V1A, lambda, 3, lambda.size()).homogeneous_part(lambda.size()).with_nz(0);
  if (!(low == schur_poly(lambda, 3))) out.fail(tag + ": lowest part of 1A is not the Schur polynomial");
  // G via flags against the truncated series, on partitions with at most n rows.
  ++out.instances;
  const int cap = lambda.size() + 2;
  SchurExpansion g_direct = expand_schur(groth(lambda, {n, 0, 0, cap}));
  SchurExpansion g_flags = schur_expansion_via_flags(lambda, FlagSide::G, false, cap);
  std::set<Partition> keys;
  for (const auto& [p, c] : g_direct.terms) keys.insert(p);
  for (const auto& [p, c] : g_flags.terms) keys.insert(p);
  for (const auto& p : keys)
    if (rows_fit(p, n) && g_direct.at(p) != g_flags.at(p))
      out.fail(tag + ": G expansion differs at s" + p.to_string());
}

}  // namespace

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names{"fact1",         "fact2",          "duo1",    "duo2",
                                              "lemma-rskjdt",  "lemma-ordering", "lemma-z", "oracle"};
  return names;
}

VerifyReport verify(const std::string& identity, const VerifyParams& params) {
  auto start = std::chrono::steady_clock::now();
  VerifyReport rep;
  rep.identity = identity;
  const int jobs = resolve_jobs(params.jobs);
  if (identity == "fact1") {
    auto ls = shapes(params, 4);
    rep.ranges = range_text(params, 4) + ", n=|lambda|";
    run_tasks(ls.size(), jobs, rep, [&](std::size_t i, Partial& p) { check_fact1(ls[i], p); });
  } else if (identity == "duo1") {
    auto ls = shapes(params, 4);
    rep.ranges = range_text(params, 4) + ", n=|lambda|, D=|lambda|+2";
    run_tasks(ls.size(), jobs, rep, [&](std::size_t i, Partial& p) { check_duo1(ls[i], p); });
  } else if (identity == "duo2") {
    auto ls = shapes(params, 4);
    rep.ranges = range_text(params, 4) + " for both shapes";
    run_tasks(ls.size(), jobs, rep, [&](std::size_t i, Partial& p) { check_duo2(ls[i], ls, p); });
  } else if (identity == "fact2" || identity == "lemma-z") {
    auto pairs = flagged_pairs(shapes(params, 6));
    rep.ranges = range_text(params, 6) + ", mu strictly inside lambda with equal rows";
    bool z = identity == "lemma-z";
    run_tasks(pairs.size(), jobs, rep, [&](std::size_t i, Partial& p) {
      if (z)
        check_lemma_z(pairs[i].first, pairs[i].second, p);
      else
        check_fact2(pairs[i].first, pairs[i].second, p);
    });
  } else if (identity == "lemma-rskjdt") {
    const int n = params.max_value.value_or(3), b = params.extra.value_or(2);
    auto rs = shapes(params, 4);
    auto js = shapes(params, 5);
    rep.ranges = "RSK " + range_text(params, 4) + ", jdt " + range_text(params, 5) + ", N=" + std::to_string(n) +
                 ", B=" + std::to_string(b);
    run_tasks(rs.size() + js.size(), jobs, rep, [&](std::size_t i, Partial& p) {
      if (i < rs.size())
        check_rsk(rs[i], n, b, p);
      else
        check_jdt(js[i - rs.size()], n, p);
    });
  } else if (identity == "lemma-ordering") {
    const int n = params.max_value.value_or(3), d = params.max_swaps.value_or(3);
    if (n > 4) throw StructuralError("lemma-ordering supports values up to 4");
    OrderTable ot = all_orders(n);
    std::vector<SkewShape> skews;
    for (const auto& lambda : shapes(params, 5))
      for (const auto& mu : subpartitions(lambda)) skews.emplace_back(lambda, mu);
    rep.ranges = range_text(params, 5) + " (all inner shapes), values<=" + std::to_string(n) +
                 ", orders at distance<=" + std::to_string(d);
    run_tasks(skews.size(), jobs, rep, [&](std::size_t i, Partial& p) { check_ordering_shape(skews[i], ot, n, d, p); });
  } else if (identity == "oracle") {
    auto ls = shapes(params, 4);
    rep.ranges = range_text(params, 4);
    run_tasks(ls.size(), jobs, rep, [&](std::size_t i, Partial& p) { check_oracle(ls[i], p); });
  } else {
    throw StructuralError("unknown identity '" + identity + "'");
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace groth
