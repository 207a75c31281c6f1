#pragma once

// Schur polynomials, Schur-basis expansion with Z[z] coefficients, omega,
// the Hall pairing, and the flag-based expansions of G and G*.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "groth/core.hpp"
#include "groth/json_io.hpp"
#include "groth/series.hpp"

namespace groth {

/// Polynomial in z with integer coefficients; exponent vectors are stored
/// without trailing zeros.
class ZPoly {
 public:
  using Terms = std::map<std::vector<int>, mpz_class>;

  ZPoly() = default;
  static ZPoly constant(const mpz_class& c);
  static ZPoly monomial(const WeightVector& e, const mpz_class& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(std::vector<int> e, const mpz_class& c);

  ZPoly& operator+=(const ZPoly& b);
  friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
  friend ZPoly operator-(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  ZPoly operator-() const;
  friend bool operator==(const ZPoly&, const ZPoly&) = default;

  std::string to_text() const;
  json to_json() const;

 private:
  Terms terms_;
};

struct SchurExpansion {
  char alphabet = 'x';
  int n = 0;  // variable count the expansion is faithful for
  std::optional<int> cap;  // set when the expansion was cut off at |rho| <= cap
  std::map<Partition, ZPoly> terms;

  ZPoly at(const Partition& p) const;
  void add(const Partition& p, const ZPoly& c);
  json to_json() const;
  std::string to_text() const;
  friend bool operator==(const SchurExpansion& a, const SchurExpansion& b) { return a.terms == b.terms; }
};

struct DoubleSchurExpansion {
  int nx = 0, ny = 0;
  std::map<std::pair<Partition, Partition>, ZPoly> terms;

  ZPoly at(const Partition& mu, const Partition& nu) const;
  json to_json() const;
  friend bool operator==(const DoubleSchurExpansion& a, const DoubleSchurExpansion& b) {
    return a.terms == b.terms;
  }
};

/// Sum over SSYT of shape lambda with entries <= n; x slot, no y or z.
Series schur_poly(const Partition& lambda, int n);

/// Expansion of a series symmetric in one alphabet ('x' or 'y'); the other
/// alphabet must not occur. DomainError if not symmetric.
SchurExpansion expand_schur(const Series& f, char alphabet = 'x');
/// Expansion in s_mu(x) s_nu(y).
DoubleSchurExpansion expand_schur_xy(const Series& f);
/// Rebuilds sum c_rho s_rho(alphabet) as a series with nz z variables.
Series to_series(const SchurExpansion& e, int nz);

SchurExpansion omega(const SchurExpansion& e);
DoubleSchurExpansion omega_xy(const DoubleSchurExpansion& e);
ZPoly hall_pair(const SchurExpansion& a, const SchurExpansion& b);

enum class FlagSide { G, Gdual };

/// G at mu: terms[rho] = (-1)^{|rho|-|mu|} sum_{Q in OFT(rho/mu)} z^{wt(Q)},
/// over rho with the rows of mu and |rho| <= cap. Gdual at lambda:
/// terms[sigma] = sum_{Q in UFT(lambda/sigma)} z^{wt(Q)} (cap unused).
/// conjugated reindexes rho -> rho'.
SchurExpansion schur_expansion_via_flags(const Partition& shape, FlagSide side, bool conjugated, int cap = 0);

}  // namespace groth
