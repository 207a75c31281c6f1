#include "groth/series.hpp"

#include <algorithm>
#include <numeric>

#include "groth/enumerate.hpp"

namespace groth {

namespace {

int sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

std::vector<int> padded(const WeightVector& w, int n) {
  if (static_cast<int>(w.coords().size()) > n) throw StructuralError("exponent vector longer than variable count");
  std::vector<int> out(static_cast<std::size_t>(n), 0);
  std::copy(w.coords().begin(), w.coords().end(), out.begin());
  return out;
}

void check_same_vars(const Truncation& a, const Truncation& b) {
  if (a.nx != b.nx || a.ny != b.ny || a.nz != b.nz) throw StructuralError("series have different variable counts");
}

std::optional<int> min_degree(std::optional<int> a, std::optional<int> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

std::string factor(char name, int index, int e, bool latex) {
  std::string s(1, name);
  s += latex ? "_" + (index >= 10 ? "{" + std::to_string(index) + "}" : std::to_string(index)) : std::to_string(index);
  if (e > 1) s += latex ? "^" + (e >= 10 ? "{" + std::to_string(e) + "}" : std::to_string(e)) : "^" + std::to_string(e);
  return s;
}

std::string monomial_string(const Monomial& m, bool latex) {
  std::vector<std::string> fs;
  auto add = [&](char name, const std::vector<int>& e) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) fs.push_back(factor(name, static_cast<int>(i + 1), e[i], latex));
  };
  add('z', m.z);
  add('x', m.x);
  add('y', m.y);
  std::string s;
  for (const auto& f : fs) {
    if (!s.empty() && !latex) s += '*';
    s += f;
  }
  return s;
}

std::string render(const Series::Terms& terms, bool latex) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    mpz_class a = abs(c);
    bool neg = sgn(c) < 0;
    if (first)
      out += neg ? "-" : "";
    else
      out += latex ? (neg ? "-" : "+") : (neg ? " - " : " + ");
    first = false;
    std::string mono = monomial_string(m, latex);
    if (mono.empty())
      out += a.get_str();
    else {
      if (a != 1) out += a.get_str() + (latex ? "" : "*");
      out += mono;
    }
  }
  return out;
}

}  // namespace

int Monomial::xy_degree() const { return sum(x) + sum(y); }
int Monomial::degree() const { return sum(x) + sum(y) + sum(z); }

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  if (a.x != b.x) return a.x > b.x;
  if (a.y != b.y) return a.y > b.y;
  return a.z > b.z;
}

Series::Series(Truncation trunc) : trunc_(trunc) {
  if (trunc.nx < 0 || trunc.ny < 0 || trunc.nz < 0) throw StructuralError("negative variable count");
}

Monomial Series::zero_monomial() const {
  return Monomial{std::vector<int>(static_cast<std::size_t>(trunc_.nx), 0),
                  std::vector<int>(static_cast<std::size_t>(trunc_.ny), 0),
                  std::vector<int>(static_cast<std::size_t>(trunc_.nz), 0)};
}

Series Series::one(Truncation trunc) {
  Series s(trunc);
  s.add_term(s.zero_monomial(), 1);
  return s;
}

Series Series::variable(Truncation trunc, char family, int index) {
  Series s(trunc);
  Monomial m = s.zero_monomial();
  auto& v = family == 'x' ? m.x : family == 'y' ? m.y : family == 'z' ? m.z : throw StructuralError("unknown family");
  if (index < 1 || index > static_cast<int>(v.size())) throw StructuralError("variable index out of range");
  v[static_cast<std::size_t>(index - 1)] = 1;
  s.add_term(m, 1);
  return s;
}

void Series::add_term(const Monomial& m, const mpz_class& c) {
  if (static_cast<int>(m.x.size()) != trunc_.nx || static_cast<int>(m.y.size()) != trunc_.ny ||
      static_cast<int>(m.z.size()) != trunc_.nz)
    throw StructuralError("monomial does not match the series' variable counts");
  if (c == 0) return;
  if (trunc_.degree && m.xy_degree() > *trunc_.degree) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

mpz_class Series::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

Series operator+(const Series& a, const Series& b) {
  Series r = a;
  r += b;
  return r;
}

Series& Series::operator+=(const Series& b) {
  check_same_vars(trunc_, b.trunc_);
  trunc_.degree = min_degree(trunc_.degree, b.trunc_.degree);
  if (trunc_.degree)
    for (auto it = terms_.begin(); it != terms_.end();)
      it = it->first.xy_degree() > *trunc_.degree ? terms_.erase(it) : std::next(it);
  for (const auto& [m, c] : b.terms_) add_term(m, c);
  return *this;
}

Series Series::operator-() const {
  Series r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series operator*(const Series& a, const Series& b) {
  check_same_vars(a.trunc_, b.trunc_);
  Truncation t = a.trunc_;
  t.degree = min_degree(a.trunc_.degree, b.trunc_.degree);
  Series r(t);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma;
      for (std::size_t i = 0; i < m.x.size(); ++i) m.x[i] += mb.x[i];
      for (std::size_t i = 0; i < m.y.size(); ++i) m.y[i] += mb.y[i];
      for (std::size_t i = 0; i < m.z.size(); ++i) m.z[i] += mb.z[i];
      r.add_term(m, ca * cb);
    }
  return r;
}

Series Series::swap_xy() const {
  Truncation t = trunc_;
  std::swap(t.nx, t.ny);
  Series r(t);
  for (const auto& [m, c] : terms_) r.add_term(Monomial{m.y, m.x, m.z}, c);
  return r;
}

Series Series::y_as_x() const {
  if (trunc_.nx != 0) throw DomainError("y_as_x requires an x-free series");
  return swap_xy();
}

Series Series::set_y_zero() const {
  Truncation t = trunc_;
  t.ny = 0;
  Series r(t);
  for (const auto& [m, c] : terms_)
    if (sum(m.y) == 0) r.add_term(Monomial{m.x, {}, m.z}, c);
  return r;
}

Series Series::set_x_zero() const {
  Truncation t = trunc_;
  t.nx = 0;
  Series r(t);
  for (const auto& [m, c] : terms_)
    if (sum(m.x) == 0) r.add_term(Monomial{{}, m.y, m.z}, c);
  return r;
}

Series Series::set_z_one() const {
  Truncation t = trunc_;
  t.nz = 0;
  Series r(t);
  for (const auto& [m, c] : terms_) r.add_term(Monomial{m.x, m.y, {}}, c);
  return r;
}

Series Series::homogeneous_part(int d) const {
  Series r(trunc_);
  for (const auto& [m, c] : terms_)
    if (m.xy_degree() == d) r.add_term(m, c);
  return r;
}

Series Series::transpose(char family, int i) const {
  Series r(trunc_);
  for (const auto& [m, c] : terms_) {
    Monomial n = m;
    auto& v = family == 'x' ? n.x : family == 'y' ? n.y : family == 'z' ? n.z : throw StructuralError("unknown family");
    if (i < 1 || i >= static_cast<int>(v.size())) throw StructuralError("transposition index out of range");
    std::swap(v[static_cast<std::size_t>(i - 1)], v[static_cast<std::size_t>(i)]);
    r.add_term(n, c);
  }
  return r;
}

bool Series::symmetric_in(char family) const {
  int n = family == 'x' ? trunc_.nx : family == 'y' ? trunc_.ny : trunc_.nz;
  for (int i = 1; i < n; ++i)
    if (!(transpose(family, i) == *this)) return false;
  return true;
}

Series Series::with_nz(int nz) const {
  Truncation t = trunc_;
  t.nz = nz;
  Series r(t);
  for (const auto& [m, c] : terms_) {
    Monomial n = m;
    for (std::size_t i = static_cast<std::size_t>(nz); i < n.z.size(); ++i)
      if (n.z[i]) throw StructuralError("cannot drop a z variable that occurs");
    n.z.resize(static_cast<std::size_t>(nz), 0);
    r.add_term(n, c);
  }
  return r;
}

std::string Series::to_text() const { return render(terms_, false); }
std::string Series::to_latex() const { return render(terms_, true); }

json Series::to_json() const {
  json terms = json::array();
  for (const auto& [m, c] : terms_) {
    json jc = c.fits_slong_p() ? json(c.get_si()) : json(c.get_str());
    terms.push_back(json{{"xe", m.x}, {"ye", m.y}, {"ze", m.z}, {"c", jc}});
  }
  json j{{"nx", trunc_.nx}, {"ny", trunc_.ny}, {"nz", trunc_.nz}};
  j["degree"] = trunc_.degree ? json(*trunc_.degree) : json(nullptr);
  j["terms"] = terms;
  return j;
}

Series groth(const Partition& lambda, const Truncation& trunc) {
  if (!trunc.degree) throw DomainError("groth needs a finite degree bound");
  Truncation t = trunc;
  t.nz = lambda.first();
  Series s(t);
  const int boxes = lambda.size();
  std::vector<int> column_len(static_cast<std::size_t>(lambda.first()));
  for (int c = 1; c <= lambda.first(); ++c) column_len[static_cast<std::size_t>(c - 1)] = conjugate(lambda).row(c);
  for_each_OT(lambda, {t.nx, t.ny}, *t.degree - boxes, [&](const Tableau& tab) {
    Monomial m = s.zero_monomial();
    int entries = 0;
    const auto& sh = tab.shape();
    for (int r = 1; r <= sh.rows(); ++r)
      for (int c = 1; c <= sh.row_end(r); ++c) {
        const auto& f = tab.at(r, c);
        for (int v : f.unprimed_values()) ++m.x[static_cast<std::size_t>(v - 1)];
        for (int v : f.primed_values()) ++m.y[static_cast<std::size_t>(v - 1)];
        m.z[static_cast<std::size_t>(c - 1)] += f.size() - 1;
        entries += f.size();
      }
    s.add_term(m, (entries - boxes) % 2 ? -1 : 1);
  });
  return s;
}

Series groth_dual(const Partition& lambda, const Truncation& trunc) {
  Truncation t = trunc;
  t.nz = std::max(0, lambda.first() - 1);
  Series s(t);
  for_each_UT(lambda, {t.nx, t.ny}, [&](const Tableau& tab) {
    Monomial m = s.zero_monomial();
    const auto& sh = tab.shape();
    for (int r = 1; r <= sh.rows(); ++r)
      for (int c = 1; c <= sh.row_end(r); ++c) {
        const auto& f = tab.at(r, c);
        if (f.empty()) {
          ++m.z[static_cast<std::size_t>(c - 2)];
          continue;
        }
        Letter a = *f.single();
        ++(a.primed ? m.y : m.x)[static_cast<std::size_t>(a.value - 1)];
      }
    s.add_term(m, 1);
  });
  return s;
}

std::string to_string(Variant v) {
  switch (v) {
    case Variant::V1A: return "1A";
    case Variant::V1B: return "1B";
    case Variant::V2A: return "2A";
    case Variant::V2B: return "2B";
  }
  return "?";
}

Variant parse_variant(const std::string& s) {
  for (Variant v : {Variant::V1A, Variant::V1B, Variant::V2A, Variant::V2B})
    if (to_string(v) == s) return v;
  throw StructuralError("unknown variant '" + s + "' (expected 1A, 1B, 2A or 2B)");
}

Series refined(Variant v, const Partition& lambda, int n, std::optional<int> degree, bool nonrefined) {
  Series s;
  switch (v) {
    case Variant::V1A: s = groth(conjugate(lambda), {0, n, 0, degree}).y_as_x(); break;
    case Variant::V1B: s = groth(lambda, {n, 0, 0, degree}); break;
    case Variant::V2A: s = groth_dual(conjugate(lambda), {0, n, 0, degree}).y_as_x(); break;
    case Variant::V2B: s = groth_dual(lambda, {n, 0, 0, degree}); break;
  }
  return nonrefined ? s.set_z_one() : s;
}

Series pt_generating(const Partition& lambda, int n) {
  Series s(Truncation{n, n, 0, std::nullopt});
  for (const auto& t : enum_PT(lambda, n)) s.add_term(Monomial{padded(left_weight(t), n), padded(right_weight(t), n), {}}, 1);
  return s;
}

}  // namespace groth
