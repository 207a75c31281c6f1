#pragma once

// Shapes, letters, the uniform tableau carrier and the family validators.
//
// Coordinates are (row, column), 1-indexed, English orientation: row 1 is
// the top row and column 1 the leftmost column.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace groth {

/// Malformed input: a shape that is not a partition, a cell outside its
/// shape, a repeated primed letter in one box. Distinct from a tableau that
/// is well formed but fails a family's validity rules.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A well-formed argument outside an operation's domain (e.g. asking for the
/// overweight of something that is not an overfull tableau).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Primed sets are stored as bitmasks, so letter values are capped.
inline constexpr int kMaxLetterValue = 63;

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }
  /// Part i (1-based); 0 past the last row.
  int row(int i) const {
    return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }
  int first() const { return row(1); }
  bool contains(const Partition& inner) const;
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

Partition conjugate(const Partition& lambda);

/// All partitions of n, in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);
/// All partitions of size 0..n, grouped by size.
std::vector<Partition> partitions_up_to(int n);
/// All mu with mu contained in lambda.
std::vector<Partition> subpartitions(const Partition& lambda);
/// All rho containing mu with the same number of rows and |rho| <= max_size.
std::vector<Partition> superpartitions_same_rows(const Partition& mu, int max_size);

class SkewShape {
 public:
  SkewShape() = default;
  explicit SkewShape(Partition outer, Partition inner = {});

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  bool straight() const { return inner_.empty(); }
  int rows() const { return outer_.length(); }
  /// First and last column of row r; empty rows have first > last.
  int row_begin(int r) const { return inner_.row(r) + 1; }
  int row_end(int r) const { return outer_.row(r); }
  int row_size(int r) const { return outer_.row(r) - inner_.row(r); }
  bool contains(int r, int c) const {
    return r >= 1 && r <= rows() && c > inner_.row(r) && c <= outer_.row(r);
  }
  int num_cells() const { return outer_.size() - inner_.size(); }
  /// Number of boxes of the skew shape in column c.
  int column_size(int c) const;
  bool same_row_count() const { return outer_.length() == inner_.length(); }
  std::string to_string() const;

  friend bool operator==(const SkewShape&, const SkewShape&) = default;
  friend auto operator<=>(const SkewShape&, const SkewShape&) = default;

 private:
  Partition outer_;
  Partition inner_;
};

/// A letter of the primed alphabet 1' < 1 < 2' < 2 < ...
///
/// The integer code 2v - [primed] is injective and monotone for the standard
/// order, so it doubles as a compact cell encoding (0 = empty cell).
struct Letter {
  int value = 1;
  bool primed = false;

  constexpr int code() const { return 2 * value - (primed ? 1 : 0); }
  static constexpr Letter from_code(int c) { return Letter{(c + 1) / 2, c % 2 == 1}; }
  static constexpr Letter unprimed_of(int v) { return Letter{v, false}; }
  static constexpr Letter primed_of(int v) { return Letter{v, true}; }

  std::string to_string() const;

  friend constexpr bool operator==(Letter a, Letter b) {
    return a.value == b.value && a.primed == b.primed;
  }
  /// Standard order.
  friend constexpr auto operator<=>(Letter a, Letter b) { return a.code() <=> b.code(); }
};

/// Parses "3" or "3'".
Letter parse_letter(const std::string& text);

/// A total order on {1', 1, ..., N', N}.
class TotalOrder {
 public:
  explicit TotalOrder(std::vector<Letter> sequence);

  static TotalOrder standard(int n);       // 1' < 1 < 2' < 2 < ...
  static TotalOrder flagged(int n);        // ... < 2 < 1 < 1' < 2' < ...
  static TotalOrder unprimed_first(int n); // 1 < 2 < ... < 1' < 2' < ...
  static TotalOrder primed_first(int n);   // 1' < 2' < ... < 1 < 2 < ...

  int max_value() const { return max_value_; }
  const std::vector<Letter>& sequence() const { return sequence_; }
  bool covers(Letter a) const { return a.value >= 1 && a.value <= max_value_; }
  /// Position of a in the order; DomainError if a is outside the domain.
  int rank(Letter a) const;
  /// Unchecked rank by letter code.
  int rank_code(int code) const { return rank_[static_cast<std::size_t>(code)]; }
  bool less(Letter a, Letter b) const { return rank(a) < rank(b); }
  /// The order with positions k and k+1 (0-based) exchanged.
  TotalOrder swapped(int k) const;
  std::string to_string() const;

  friend bool operator==(const TotalOrder& a, const TotalOrder& b) {
    return a.sequence_ == b.sequence_;
  }

 private:
  std::vector<Letter> sequence_;
  std::vector<int> rank_;  // indexed by code
  int max_value_ = 0;
};

/// Box content: a set of primed letters and a multiset of unprimed letters.
class BoxFill {
 public:
  BoxFill() = default;
  static BoxFill of(Letter a) {
    BoxFill f;
    f.add(a);
    return f;
  }
  static BoxFill of(std::initializer_list<Letter> letters) {
    BoxFill f;
    for (Letter a : letters) f.add(a);
    return f;
  }

  /// Throws StructuralError on a repeated primed letter or a value out of range.
  void add(Letter a);
  /// Removes one copy; false if absent.
  bool remove(Letter a);
  void clear() {
    primed_ = 0;
    unprimed_.clear();
  }

  bool empty() const { return primed_ == 0 && unprimed_.empty(); }
  int size() const;
  bool contains(Letter a) const;
  std::optional<Letter> single() const;
  /// Smallest / largest entry in the standard order. Precondition: nonempty.
  Letter min() const;
  Letter max() const;
  std::vector<Letter> letters() const;
  std::vector<int> primed_values() const;
  std::vector<int> unprimed_values() const { return {unprimed_.begin(), unprimed_.end()}; }
  std::uint64_t primed_mask() const { return primed_; }
  int unprimed_count() const { return static_cast<int>(unprimed_.size()); }
  int primed_count() const;
  std::string to_string() const;  // "{1'12}"

  friend bool operator==(const BoxFill& a, const BoxFill& b) {
    return a.primed_ == b.primed_ && a.unprimed_ == b.unprimed_;
  }
  friend bool operator<(const BoxFill& a, const BoxFill& b) {
    if (a.primed_ != b.primed_) return a.primed_ < b.primed_;
    return a.unprimed_ < b.unprimed_;
  }

 private:
  std::uint64_t primed_ = 0;  // bit v set <=> v' present
  boost::container::small_vector<std::uint8_t, 3> unprimed_;  // sorted
};

/// A filling of a skew shape. One representation serves every family; the
/// validators decide membership.
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(SkewShape shape);

  const SkewShape& shape() const { return shape_; }
  bool contains(int r, int c) const { return shape_.contains(r, c); }
  int num_cells() const { return static_cast<int>(cells_.size()); }

  /// Throws StructuralError for a coordinate outside the shape.
  BoxFill& at(int r, int c);
  const BoxFill& at(int r, int c) const;
  /// The single letter of a one-entry box, otherwise nullopt.
  std::optional<Letter> letter(int r, int c) const { return at(r, c).single(); }
  void set(int r, int c, Letter a) { at(r, c) = BoxFill::of(a); }

  /// Cells of row r, columns row_begin(r)..row_end(r).
  std::span<const BoxFill> row(int r) const;
  /// All cells in row-major order.
  std::span<const BoxFill> cells() const { return cells_; }
  std::span<BoxFill> cells() { return cells_; }

  /// Text rendering, one line per row, boxes as {..}, skew cells as '*'.
  std::string to_string() const;

  friend bool operator==(const Tableau& a, const Tableau& b) {
    return a.shape_ == b.shape_ && a.cells_ == b.cells_;
  }
  friend bool operator<(const Tableau& a, const Tableau& b);

 private:
  std::size_t index(int r, int c) const;

  SkewShape shape_;
  std::vector<int> offset_;  // offset_[r-1] = index of the first cell of row r
  std::vector<BoxFill> cells_;
};

/// Cell adjacency of a skew shape in row-major cell order; -1 = no neighbour.
struct ShapeGeometry {
  explicit ShapeGeometry(const SkewShape& shape);

  int index(int r, int c) const;

  SkewShape shape;
  int size = 0;
  std::vector<int> row, col, left, right, up, down;
};

/// Single-letter cells as codes (0 = empty). StructuralError on a box holding
/// more than one entry.
std::vector<std::uint8_t> to_codes(const Tableau& t);
Tableau from_codes(const SkewShape& shape, std::span<const std::uint8_t> codes);

enum class Family { OT, UT, PT, OFT, UFT, PFT };

std::string to_string(Family f);
Family parse_family(const std::string& name);

/// True iff t satisfies every clause of the family's definition, including
/// the flag conditions read from t's skew shape. OT and UT are only defined on
/// straight shapes; OFT/UFT/PFT need equal row counts of outer and inner.
bool validate(const Tableau& t, Family family);

/// Membership in PT under an arbitrary total order. DomainError if a letter
/// lies outside the order's domain.
bool validate_pt_order(const Tableau& t, const TotalOrder& order);

/// Finitely supported vector of nonnegative counts; trailing zeros are not
/// significant.
class WeightVector {
 public:
  WeightVector() = default;
  WeightVector(std::initializer_list<int> coords) : coords_(coords) { normalize(); }
  explicit WeightVector(std::vector<int> coords) : coords_(std::move(coords)) { normalize(); }

  /// Coordinate i (1-based); 0 past the support.
  int operator()(int i) const {
    return i >= 1 && i <= static_cast<int>(coords_.size()) ? coords_[static_cast<std::size_t>(i - 1)] : 0;
  }
  const std::vector<int>& coords() const { return coords_; }
  int total() const;
  bool zero() const { return coords_.empty(); }
  std::string to_string() const;

  friend WeightVector operator+(const WeightVector& a, const WeightVector& b);
  friend bool operator==(const WeightVector&, const WeightVector&) = default;
  friend auto operator<=>(const WeightVector&, const WeightVector&) = default;

 private:
  void normalize() {
    while (!coords_.empty() && coords_.back() == 0) coords_.pop_back();
  }
  std::vector<int> coords_;
};

/// Counts of unprimed i.
WeightVector left_weight(const Tableau& t);
/// Counts of primed i'.
WeightVector right_weight(const Tableau& t);
/// Entries minus boxes, per column. DomainError unless t is an OT.
WeightVector overweight(const Tableau& t);
/// Coordinate i: boxes minus entries in column i+1. DomainError unless t is a UT.
WeightVector underweight(const Tableau& t);
/// OFT: counts of i; UFT: counts of i'. DomainError for other families.
WeightVector flag_weight(const Tableau& t);

int entry_count(const Tableau& t);
int unprimed_count(const Tableau& t);

}  // namespace groth
