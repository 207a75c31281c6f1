#pragma once

// Sparse exact series in three variable families x, y, z, truncated by the
// combined x,y degree, and the tableau generating functions built on them.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "groth/core.hpp"
#include "groth/json_io.hpp"

namespace groth {

struct Truncation {
  int nx = 0, ny = 0, nz = 0;
  std::optional<int> degree;  // bound on x,y total degree; nullopt = none

  friend bool operator==(const Truncation&, const Truncation&) = default;
};

/// Exponent vectors of fixed lengths nx, ny, nz.
struct Monomial {
  std::vector<int> x, y, z;

  int xy_degree() const;
  int degree() const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Canonical term order: total degree ascending, then the concatenated
/// (x, y, z) exponent vector in decreasing lexicographic order.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Series {
 public:
  using Terms = std::map<Monomial, mpz_class, MonomialOrder>;

  explicit Series(Truncation trunc = {});
  static Series one(Truncation trunc);
  /// family is 'x', 'y' or 'z'; index is 1-based.
  static Series variable(Truncation trunc, char family, int index);

  const Truncation& truncation() const { return trunc_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Adds c * m. Terms beyond the degree bound are dropped; StructuralError
  /// if the exponent lengths do not match the variable counts.
  void add_term(const Monomial& m, const mpz_class& c);
  mpz_class coeff(const Monomial& m) const;
  Monomial zero_monomial() const;

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  Series operator-() const;
  Series& operator+=(const Series& b);
  friend bool operator==(const Series& a, const Series& b) { return a.terms_ == b.terms_; }

  /// Exchange the x and y families.
  Series swap_xy() const;
  /// Move the y family into the x slot; requires nx == 0.
  Series y_as_x() const;
  /// Substitute y = 0 (terms involving y vanish; ny becomes 0).
  Series set_y_zero() const;
  Series set_x_zero() const;
  /// Substitute z = 1 (nz becomes 0).
  Series set_z_one() const;
  /// Terms of x,y degree exactly d.
  Series homogeneous_part(int d) const;
  /// Exchange variables i and i+1 of a family.
  Series transpose(char family, int i) const;
  bool symmetric_in(char family) const;
  /// Change the z count, padding exponents with zeros (StructuralError if a
  /// dropped z has a nonzero exponent).
  Series with_nz(int nz) const;

  std::string to_text() const;
  std::string to_latex() const;
  json to_json() const;

 private:
  Truncation trunc_;
  Terms terms_;
};

/// Sum over OT(lambda) with unprimed values <= nx, primed <= ny, x,y degree
/// <= D, signed by (-1)^(entries - boxes). DomainError if D is unbounded.
/// The z count of the result is lambda_1 (one z per column); trunc.nz is ignored.
Series groth(const Partition& lambda, const Truncation& trunc);
/// Sum over UT(lambda) with unprimed values <= nx, primed <= ny; z count lambda_1 - 1.
Series groth_dual(const Partition& lambda, const Truncation& trunc);

enum class Variant { V1A, V1B, V2A, V2B };
std::string to_string(Variant v);
Variant parse_variant(const std::string& s);

/// Refined polynomial in n variables (always in the x slot) with x degree
/// bound `degree` (required for 1A/1B). nonrefined substitutes z = 1.
Series refined(Variant v, const Partition& lambda, int n, std::optional<int> degree, bool nonrefined = false);

/// Sum of x^{lw} y^{rw} over PT(lambda) with values <= n (x and y both n).
Series pt_generating(const Partition& lambda, int n);

}  // namespace groth
