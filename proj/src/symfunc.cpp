#include "groth/symfunc.hpp"

#include <algorithm>
#include <mutex>

#include "groth/enumerate.hpp"

namespace groth {

// ---------------------------------------------------------------- ZPoly

namespace {

void strip(std::vector<int>& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

std::string zmono(const std::vector<int>& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!e[i]) continue;
    if (!s.empty()) s += '*';
    s += "z" + std::to_string(i + 1);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

}  // namespace

ZPoly ZPoly::constant(const mpz_class& c) {
  ZPoly p;
  p.add_term({}, c);
  return p;
}

ZPoly ZPoly::monomial(const WeightVector& e, const mpz_class& c) {
  ZPoly p;
  p.add_term(e.coords(), c);
  return p;
}

void ZPoly::add_term(std::vector<int> e, const mpz_class& c) {
  if (c == 0) return;
  strip(e);
  auto [it, inserted] = terms_.try_emplace(std::move(e), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ZPoly& ZPoly::operator+=(const ZPoly& b) {
  for (const auto& [e, c] : b.terms_) add_term(e, c);
  return *this;
}

ZPoly ZPoly::operator-() const {
  ZPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) { return a + (-b); }

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  ZPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      std::vector<int> e(std::max(ea.size(), eb.size()), 0);
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      r.add_term(std::move(e), ca * cb);
    }
  return r;
}

std::string ZPoly::to_text() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms_) {
    mpz_class a = abs(c);
    if (s.empty())
      s += sgn(c) < 0 ? "-" : "";
    else
      s += sgn(c) < 0 ? " - " : " + ";
    std::string m = zmono(e);
    if (m.empty())
      s += a.get_str();
    else
      s += (a == 1 ? "" : a.get_str() + "*") + m;
  }
  return s;
}

json ZPoly::to_json() const {
  json a = json::array();
  for (const auto& [e, c] : terms_) a.push_back(json{{"e", e}, {"c", c.fits_slong_p() ? json(c.get_si()) : json(c.get_str())}});
  return a;
}

// ---------------------------------------------------------------- expansions

ZPoly SchurExpansion::at(const Partition& p) const {
  auto it = terms.find(p);
  return it == terms.end() ? ZPoly{} : it->second;
}

void SchurExpansion::add(const Partition& p, const ZPoly& c) {
  auto& slot = terms[p];
  slot += c;
  if (slot.is_zero()) terms.erase(p);
}

json SchurExpansion::to_json() const {
  json ts = json::array();
  for (const auto& [p, c] : terms) ts.push_back(json{{"partition", p.parts()}, {"z", c.to_json()}});
  json j{{"basis", "schur"}, {"alphabet", std::string(1, alphabet)}, {"n", n}};
  if (cap) j["cap"] = *cap;
  j["terms"] = ts;
  return j;
}

std::string SchurExpansion::to_text() const {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& [p, c] : terms) {
    if (!s.empty()) s += '\n';
    s += "s" + p.to_string() + ": " + c.to_text();
  }
  return s;
}

ZPoly DoubleSchurExpansion::at(const Partition& mu, const Partition& nu) const {
  auto it = terms.find({mu, nu});
  return it == terms.end() ? ZPoly{} : it->second;
}

json DoubleSchurExpansion::to_json() const {
  json ts = json::array();
  for (const auto& [k, c] : terms)
    ts.push_back(json{{"x", k.first.parts()}, {"y", k.second.parts()}, {"z", c.to_json()}});
  return json{{"basis", "schur-schur"}, {"nx", nx}, {"ny", ny}, {"terms", ts}};
}

namespace {

using Kostka = std::map<std::vector<int>, long>;

Kostka compute_schur(const Partition& lambda, int n) {
  Kostka out;
  if (lambda.length() > n) return out;
  SkewShape shape(lambda);
  ShapeGeometry g(shape);
  std::vector<int> fill(static_cast<std::size_t>(g.size), 0);
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::function<void(int)> rec = [&](int k) {
    if (k == g.size) {
      ++out[weight];
      return;
    }
    auto ks = static_cast<std::size_t>(k);
    int lo = 1;
    if (g.left[ks] >= 0) lo = std::max(lo, fill[static_cast<std::size_t>(g.left[ks])]);
    if (g.up[ks] >= 0) lo = std::max(lo, fill[static_cast<std::size_t>(g.up[ks])] + 1);
    for (int v = lo; v <= n; ++v) {
      fill[ks] = v;
      ++weight[static_cast<std::size_t>(v - 1)];
      rec(k + 1);
      --weight[static_cast<std::size_t>(v - 1)];
    }
  };
  rec(0);
  return out;
}

const Kostka& schur_terms(const Partition& lambda, int n) {
  static std::mutex mu;
  static std::map<std::pair<Partition, int>, Kostka> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(lambda, n);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, compute_schur(lambda, n)).first;
  return it->second;
}

using Rest = std::map<std::vector<int>, mpz_class>;
using Grouped = std::map<std::vector<int>, Rest>;  // alphabet exponent -> coefficient

void add_into(Grouped& g, const std::vector<int>& a, const std::vector<int>& rest, const mpz_class& c) {
  if (c == 0) return;
  auto& r = g[a];
  auto [it, inserted] = r.try_emplace(rest, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) r.erase(it);
  }
  if (r.empty()) g.erase(a);
}

std::map<Partition, Rest> expand_grouped(Grouped g, int n) {
  for (int i = 0; i + 1 < n; ++i) {
    Grouped t;
    for (const auto& [a, r] : g) {
      auto b = a;
      std::swap(b[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i + 1)]);
      t.emplace(std::move(b), r);
    }
    if (t != g) throw DomainError("series is not symmetric in the expansion alphabet");
  }
  std::map<Partition, Rest> out;
  std::optional<std::vector<int>> previous;
  while (!g.empty()) {
    auto lead = std::prev(g.end());
    std::vector<int> a = lead->first;
    if (previous && !(a < *previous)) throw DomainError("Schur expansion failed to make progress");
    previous = a;
    if (!std::is_sorted(a.begin(), a.end(), std::greater<>()))
      throw DomainError("leading exponent is not a partition; input not symmetric");
    std::vector<int> parts(a);
    strip(parts);
    Partition rho(parts);
    Rest coeff = lead->second;
    for (const auto& [e, k] : schur_terms(rho, n))
      for (const auto& [rest, c] : coeff) add_into(g, e, rest, -c * k);
    out.emplace(rho, std::move(coeff));
  }
  return out;
}

std::vector<int> concat(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

bool all_zero(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [](int e) { return e == 0; });
}

ZPoly to_zpoly(const Rest& r) {
  ZPoly p;
  for (const auto& [e, c] : r) p.add_term(e, c);
  return p;
}

int max_rows(const std::map<Partition, ZPoly>& terms) {
  int n = 0;
  for (const auto& [p, c] : terms) n = std::max(n, p.length());
  return n;
}

}  // namespace

Series schur_poly(const Partition& lambda, int n) {
  Series s(Truncation{n, 0, 0, std::nullopt});
  for (const auto& [e, k] : schur_terms(lambda, n)) s.add_term(Monomial{e, {}, {}}, k);
  return s;
}

SchurExpansion expand_schur(const Series& f, char alphabet) {
  if (alphabet != 'x' && alphabet != 'y') throw StructuralError("alphabet must be x or y");
  Grouped g;
  for (const auto& [m, c] : f.terms()) {
    const auto& mine = alphabet == 'x' ? m.x : m.y;
    const auto& other = alphabet == 'x' ? m.y : m.x;
    if (!all_zero(other)) throw DomainError("expand_schur: the other alphabet occurs in the series");
    add_into(g, mine, m.z, c);
  }
  SchurExpansion e;
  e.alphabet = alphabet;
  e.n = alphabet == 'x' ? f.truncation().nx : f.truncation().ny;
  for (auto& [p, r] : expand_grouped(std::move(g), e.n)) e.add(p, to_zpoly(r));
  return e;
}

DoubleSchurExpansion expand_schur_xy(const Series& f) {
  const int ny = f.truncation().ny;
  Grouped g;
  for (const auto& [m, c] : f.terms()) add_into(g, m.x, concat(m.y, m.z), c);
  DoubleSchurExpansion out;
  out.nx = f.truncation().nx;
  out.ny = ny;
  for (auto& [mu, rest] : expand_grouped(std::move(g), out.nx)) {
    Grouped gy;
    for (const auto& [yz, c] : rest) {
      std::vector<int> y(yz.begin(), yz.begin() + ny), z(yz.begin() + ny, yz.end());
      add_into(gy, y, z, c);
    }
    for (auto& [nu, zr] : expand_grouped(std::move(gy), ny)) {
      ZPoly p = to_zpoly(zr);
      if (!p.is_zero()) out.terms[{mu, nu}] += p;
    }
  }
  return out;
}

Series to_series(const SchurExpansion& e, int nz) {
  Truncation t = e.alphabet == 'x' ? Truncation{e.n, 0, nz, std::nullopt} : Truncation{0, e.n, nz, std::nullopt};
  Series s(t);
  for (const auto& [p, c] : e.terms)
    for (const auto& [a, k] : schur_terms(p, e.n))
      for (const auto& [z, zc] : c.terms()) {
        std::vector<int> zz(static_cast<std::size_t>(nz), 0);
        if (z.size() > zz.size()) throw StructuralError("z exponent longer than nz");
        std::copy(z.begin(), z.end(), zz.begin());
        Monomial m = e.alphabet == 'x' ? Monomial{a, {}, zz} : Monomial{{}, a, zz};
        s.add_term(m, zc * k);
      }
  return s;
}

SchurExpansion omega(const SchurExpansion& e) {
  SchurExpansion r;
  r.alphabet = e.alphabet;
  r.cap = e.cap;
  for (const auto& [p, c] : e.terms) {
    r.terms.emplace(conjugate(p), c);
    r.n = std::max(r.n, p.first());
  }
  return r;
}

DoubleSchurExpansion omega_xy(const DoubleSchurExpansion& e) {
  DoubleSchurExpansion r;
  for (const auto& [k, c] : e.terms) {
    r.terms.emplace(std::make_pair(conjugate(k.first), conjugate(k.second)), c);
    r.nx = std::max(r.nx, k.first.first());
    r.ny = std::max(r.ny, k.second.first());
  }
  return r;
}

ZPoly hall_pair(const SchurExpansion& a, const SchurExpansion& b) {
  if (a.alphabet != b.alphabet) throw DomainError("hall_pair: expansions in different alphabets");
  ZPoly r;
  for (const auto& [p, c] : a.terms) {
    auto it = b.terms.find(p);
    if (it != b.terms.end()) r += c * it->second;
  }
  return r;
}

SchurExpansion schur_expansion_via_flags(const Partition& shape, FlagSide side, bool conjugated, int cap) {
  SchurExpansion e;
  e.alphabet = 'x';
  auto put = [&](const Partition& p, const ZPoly& c) { e.add(conjugated ? conjugate(p) : p, c); };
  if (side == FlagSide::G) {
    e.cap = cap;
    for (const auto& rho : superpartitions_same_rows(shape, cap)) {
      ZPoly c;
      int sign = (rho.size() - shape.size()) % 2 ? -1 : 1;
      for (const auto& q : enum_OFT(SkewShape(rho, shape))) c.add_term(flag_weight(q).coords(), sign);
      if (!c.is_zero()) put(rho, c);
    }
  } else {
    for (const auto& sigma : subpartitions(shape)) {
      ZPoly c;
      for (const auto& q : enum_UFT(SkewShape(shape, sigma))) c.add_term(flag_weight(q).coords(), 1);
      if (!c.is_zero()) put(sigma, c);
    }
  }
  e.n = max_rows(e.terms);
  return e;
}

}  // namespace groth
