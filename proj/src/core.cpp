#include "groth/core.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace groth {

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw StructuralError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw StructuralError("partition parts must be weakly decreasing");
  }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (int i = 1; i <= inner.length(); ++i)
    if (inner.row(i) > row(i)) return false;
  return true;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> parts;
  for (int c = 1; c <= lambda.first(); ++c) {
    int h = 0;
    while (h < lambda.length() && lambda.row(h + 1) >= c) ++h;
    parts.push_back(h);
  }
  return Partition(std::move(parts));
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

void sub_rec(const Partition& lambda, int r, int bound, std::vector<int>& cur, std::vector<Partition>& out) {
  out.emplace_back(cur);
  if (r > lambda.length()) return;
  for (int p = 1; p <= std::min(bound, lambda.row(r)); ++p) {
    cur.push_back(p);
    sub_rec(lambda, r + 1, p, cur, out);
    cur.pop_back();
  }
}

void super_rec(const Partition& mu, int r, int bound, int budget, std::vector<int>& cur,
               std::vector<Partition>& out) {
  if (r > mu.length()) {
    out.emplace_back(cur);
    return;
  }
  for (int p = mu.row(r); p <= std::min(bound, mu.row(r) + budget); ++p) {
    cur.push_back(p);
    super_rec(mu, r + 1, p, budget - (p - mu.row(r)), cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  if (n < 0) return out;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    auto ps = partitions_of(k);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

std::vector<Partition> subpartitions(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<int> cur;
  sub_rec(lambda, 1, lambda.first(), cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> superpartitions_same_rows(const Partition& mu, int max_size) {
  std::vector<Partition> out;
  if (mu.size() > max_size) return out;
  std::vector<int> cur;
  super_rec(mu, 1, mu.empty() ? 0 : max_size, max_size - mu.size(), cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- SkewShape

SkewShape::SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_)) throw StructuralError("inner shape not contained in outer shape");
}

int SkewShape::column_size(int c) const {
  int n = 0;
  for (int r = 1; r <= rows(); ++r)
    if (contains(r, c)) ++n;
  return n;
}

std::string SkewShape::to_string() const {
  if (straight()) return outer_.to_string();
  return outer_.to_string() + "/" + inner_.to_string();
}

// ---------------------------------------------------------------- Letter

std::string Letter::to_string() const { return std::to_string(value) + (primed ? "'" : ""); }

Letter parse_letter(const std::string& text) {
  std::string digits = text;
  bool primed = false;
  if (!digits.empty() && digits.back() == '\'') {
    primed = true;
    digits.pop_back();
  }
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
    throw StructuralError("bad letter '" + text + "'");
  int v = std::stoi(digits);
  if (v < 1 || v > kMaxLetterValue) throw StructuralError("letter value out of range: " + text);
  return Letter{v, primed};
}

// ---------------------------------------------------------------- TotalOrder

TotalOrder::TotalOrder(std::vector<Letter> sequence) : sequence_(std::move(sequence)) {
  if (sequence_.size() % 2 != 0) throw StructuralError("total order must list both n and n' for each value");
  max_value_ = static_cast<int>(sequence_.size() / 2);
  if (max_value_ > kMaxLetterValue) throw StructuralError("total order too large");
  rank_.assign(static_cast<std::size_t>(2 * max_value_ + 1), -1);
  for (std::size_t k = 0; k < sequence_.size(); ++k) {
    Letter a = sequence_[k];
    if (a.value < 1 || a.value > max_value_)
      throw StructuralError("total order letter " + a.to_string() + " outside {1',1,...,N',N}");
    auto& slot = rank_[static_cast<std::size_t>(a.code())];
    if (slot != -1) throw StructuralError("total order repeats letter " + a.to_string());
    slot = static_cast<int>(k);
  }
}

TotalOrder TotalOrder::standard(int n) {
  std::vector<Letter> seq;
  for (int v = 1; v <= n; ++v) {
    seq.push_back(Letter::primed_of(v));
    seq.push_back(Letter::unprimed_of(v));
  }
  return TotalOrder(std::move(seq));
}

TotalOrder TotalOrder::flagged(int n) {
  std::vector<Letter> seq;
  for (int v = n; v >= 1; --v) seq.push_back(Letter::unprimed_of(v));
  for (int v = 1; v <= n; ++v) seq.push_back(Letter::primed_of(v));
  return TotalOrder(std::move(seq));
}

TotalOrder TotalOrder::unprimed_first(int n) {
  std::vector<Letter> seq;
  for (int v = 1; v <= n; ++v) seq.push_back(Letter::unprimed_of(v));
  for (int v = 1; v <= n; ++v) seq.push_back(Letter::primed_of(v));
  return TotalOrder(std::move(seq));
}

TotalOrder TotalOrder::primed_first(int n) {
  std::vector<Letter> seq;
  for (int v = 1; v <= n; ++v) seq.push_back(Letter::primed_of(v));
  for (int v = 1; v <= n; ++v) seq.push_back(Letter::unprimed_of(v));
  return TotalOrder(std::move(seq));
}

int TotalOrder::rank(Letter a) const {
  if (!covers(a)) throw DomainError("letter " + a.to_string() + " outside the order's domain");
  return rank_[static_cast<std::size_t>(a.code())];
}

TotalOrder TotalOrder::swapped(int k) const {
  if (k < 0 || k + 1 >= static_cast<int>(sequence_.size())) throw DomainError("swap position out of range");
  auto seq = sequence_;
  std::swap(seq[static_cast<std::size_t>(k)], seq[static_cast<std::size_t>(k + 1)]);
  return TotalOrder(std::move(seq));
}

std::string TotalOrder::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < sequence_.size(); ++k) {
    if (k) s += '<';
    s += sequence_[k].to_string();
  }
  return s;
}

// ---------------------------------------------------------------- BoxFill

void BoxFill::add(Letter a) {
  if (a.value < 1 || a.value > kMaxLetterValue)
    throw StructuralError("letter value out of range: " + std::to_string(a.value));
  if (a.primed) {
    std::uint64_t bit = std::uint64_t{1} << a.value;
    if (primed_ & bit) throw StructuralError("primed letter " + a.to_string() + " repeated in one box");
    primed_ |= bit;
  } else {
    auto v = static_cast<std::uint8_t>(a.value);
    unprimed_.insert(std::upper_bound(unprimed_.begin(), unprimed_.end(), v), v);
  }
}

bool BoxFill::remove(Letter a) {
  if (a.value < 1 || a.value > kMaxLetterValue) return false;
  if (a.primed) {
    std::uint64_t bit = std::uint64_t{1} << a.value;
    if (!(primed_ & bit)) return false;
    primed_ &= ~bit;
    return true;
  }
  auto it = std::find(unprimed_.begin(), unprimed_.end(), static_cast<std::uint8_t>(a.value));
  if (it == unprimed_.end()) return false;
  unprimed_.erase(it);
  return true;
}

int BoxFill::primed_count() const { return std::popcount(primed_); }

int BoxFill::size() const { return primed_count() + unprimed_count(); }

bool BoxFill::contains(Letter a) const {
  if (a.value < 1 || a.value > kMaxLetterValue) return false;
  if (a.primed) return (primed_ >> a.value) & 1U;
  return std::find(unprimed_.begin(), unprimed_.end(), static_cast<std::uint8_t>(a.value)) != unprimed_.end();
}

std::optional<Letter> BoxFill::single() const {
  if (unprimed_.size() == 1 && primed_ == 0) return Letter::unprimed_of(unprimed_.front());
  if (unprimed_.empty() && std::has_single_bit(primed_)) return Letter::primed_of(std::countr_zero(primed_));
  return std::nullopt;
}

Letter BoxFill::min() const {
  int best = 1 << 20;
  if (primed_) best = Letter::primed_of(std::countr_zero(primed_)).code();
  if (!unprimed_.empty()) best = std::min(best, Letter::unprimed_of(unprimed_.front()).code());
  return Letter::from_code(best);
}

Letter BoxFill::max() const {
  int best = 0;
  if (primed_) best = Letter::primed_of(63 - std::countl_zero(primed_)).code();
  if (!unprimed_.empty()) best = std::max(best, Letter::unprimed_of(unprimed_.back()).code());
  return Letter::from_code(best);
}

std::vector<Letter> BoxFill::letters() const {
  std::vector<Letter> out;
  for (int v : primed_values()) out.push_back(Letter::primed_of(v));
  for (auto v : unprimed_) out.push_back(Letter::unprimed_of(v));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> BoxFill::primed_values() const {
  std::vector<int> out;
  for (std::uint64_t m = primed_; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::string BoxFill::to_string() const {
  std::string s = "{";
  for (Letter a : letters()) s += a.to_string();
  return s + "}";
}

// ---------------------------------------------------------------- Tableau

Tableau::Tableau(SkewShape shape) : shape_(std::move(shape)) {
  int n = 0;
  for (int r = 1; r <= shape_.rows(); ++r) {
    offset_.push_back(n);
    n += shape_.row_size(r);
  }
  cells_.resize(static_cast<std::size_t>(n));
}

std::size_t Tableau::index(int r, int c) const {
  if (!shape_.contains(r, c))
    throw StructuralError("cell (" + std::to_string(r) + "," + std::to_string(c) + ") outside shape " +
                          shape_.to_string());
  return static_cast<std::size_t>(offset_[static_cast<std::size_t>(r - 1)] + (c - shape_.row_begin(r)));
}

BoxFill& Tableau::at(int r, int c) { return cells_[index(r, c)]; }
const BoxFill& Tableau::at(int r, int c) const { return cells_[index(r, c)]; }

std::span<const BoxFill> Tableau::row(int r) const {
  if (r < 1 || r > shape_.rows()) return {};
  return std::span<const BoxFill>(cells_).subspan(static_cast<std::size_t>(offset_[static_cast<std::size_t>(r - 1)]),
                                                  static_cast<std::size_t>(shape_.row_size(r)));
}

std::string Tableau::to_string() const {
  std::string s;
  for (int r = 1; r <= shape_.rows(); ++r) {
    if (r > 1) s += ',';
    for (int c = 1; c < shape_.row_begin(r); ++c) s += '*';
    for (const auto& f : row(r)) s += f.to_string();
  }
  return s;
}

bool operator<(const Tableau& a, const Tableau& b) {
  if (a.shape_ != b.shape_) return a.shape_ < b.shape_;
  return std::lexicographical_compare(a.cells_.begin(), a.cells_.end(), b.cells_.begin(), b.cells_.end());
}

// ---------------------------------------------------------------- geometry

ShapeGeometry::ShapeGeometry(const SkewShape& s) : shape(s), size(s.num_cells()) {
  for (int r = 1; r <= s.rows(); ++r)
    for (int c = s.row_begin(r); c <= s.row_end(r); ++c) {
      row.push_back(r);
      col.push_back(c);
    }
  for (int k = 0; k < size; ++k) {
    int r = row[static_cast<std::size_t>(k)], c = col[static_cast<std::size_t>(k)];
    left.push_back(index(r, c - 1));
    right.push_back(index(r, c + 1));
    up.push_back(index(r - 1, c));
    down.push_back(index(r + 1, c));
  }
}

int ShapeGeometry::index(int r, int c) const {
  if (!shape.contains(r, c)) return -1;
  int k = 0;
  for (int q = 1; q < r; ++q) k += shape.row_size(q);
  return k + (c - shape.row_begin(r));
}

std::vector<std::uint8_t> to_codes(const Tableau& t) {
  std::vector<std::uint8_t> out;
  out.reserve(static_cast<std::size_t>(t.num_cells()));
  for (const auto& f : t.cells()) {
    if (f.empty()) {
      out.push_back(0);
      continue;
    }
    auto a = f.single();
    if (!a) throw StructuralError("box with more than one entry where one was expected");
    out.push_back(static_cast<std::uint8_t>(a->code()));
  }
  return out;
}

Tableau from_codes(const SkewShape& shape, std::span<const std::uint8_t> codes) {
  Tableau t(shape);
  auto cells = t.cells();
  if (codes.size() != cells.size()) throw StructuralError("code vector does not match shape");
  for (std::size_t k = 0; k < codes.size(); ++k)
    if (codes[k]) cells[k] = BoxFill::of(Letter::from_code(codes[k]));
  return t;
}

// ---------------------------------------------------------------- validators

std::string to_string(Family f) {
  switch (f) {
    case Family::OT: return "OT";
    case Family::UT: return "UT";
    case Family::PT: return "PT";
    case Family::OFT: return "OFT";
    case Family::UFT: return "UFT";
    case Family::PFT: return "PFT";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  for (Family f : {Family::OT, Family::UT, Family::PT, Family::OFT, Family::UFT, Family::PFT})
    if (to_string(f) == name) return f;
  throw StructuralError("unknown tableau family '" + name + "'");
}

namespace {

// a then b along a row: a < b, or equal and unprimed.
bool row_ok(Letter a, Letter b) { return a < b || (a == b && !a.primed); }
// a above c in a column: a < c, or equal and primed.
bool col_ok(Letter a, Letter c) { return a < c || (a == c && a.primed); }

bool validate_ot(const Tableau& t) {
  const auto& sh = t.shape();
  if (!sh.straight()) return false;
  for (int r = 1; r <= sh.rows(); ++r)
    for (int c = 1; c <= sh.row_end(r); ++c) {
      const auto& a = t.at(r, c);
      if (a.empty()) return false;
      if (sh.contains(r, c + 1)) {
        const auto& b = t.at(r, c + 1);
        if (!b.empty() && !row_ok(a.max(), b.min())) return false;
      }
      if (sh.contains(r + 1, c)) {
        const auto& d = t.at(r + 1, c);
        if (!d.empty() && !col_ok(a.max(), d.min())) return false;
      }
    }
  return true;
}

bool validate_ut(const Tableau& t) {
  const auto& sh = t.shape();
  if (!sh.straight()) return false;
  for (int r = 1; r <= sh.rows(); ++r) {
    std::optional<Letter> last;  // nearest nonempty box to the left
    for (int c = 1; c <= sh.row_end(r); ++c) {
      const auto& f = t.at(r, c);
      if (f.size() > 1) return false;
      if (c == 1 && f.empty()) return false;
      if (f.empty()) continue;
      Letter a = *f.single();
      if (last && !row_ok(*last, a)) return false;
      last = a;
    }
  }
  // Column clause: only for boxes with a box directly below; compare with the
  // rightmost nonempty box of the next row weakly left of the column.
  for (int r = 1; r < sh.rows(); ++r) {
    std::optional<Letter> below_left;
    for (int c = 1; c <= sh.row_end(r + 1); ++c) {
      if (auto b = t.letter(r + 1, c)) below_left = b;
      auto a = t.letter(r, c);
      if (a && below_left && !col_ok(*a, *below_left)) return false;
    }
  }
  return true;
}

bool validate_pt_std(const Tableau& t) {
  const auto& sh = t.shape();
  for (int r = 1; r <= sh.rows(); ++r)
    for (int c = sh.row_begin(r); c <= sh.row_end(r); ++c) {
      auto a = t.letter(r, c);
      if (!a) return false;
      if (sh.contains(r, c + 1)) {
        auto b = t.letter(r, c + 1);
        if (b && !row_ok(*a, *b)) return false;
      }
      if (sh.contains(r + 1, c)) {
        auto d = t.letter(r + 1, c);
        if (d && !col_ok(*a, *d)) return false;
      }
    }
  return true;
}

// Single-letter fillings where every entry has the given primality and passes
// the per-cell predicate, and adjacent pairs pass the row/column predicates.
template <class CellOk, class RowOk, class ColOk>
bool validate_single(const Tableau& t, bool primed, CellOk cell_ok, RowOk row_pred, ColOk col_pred) {
  const auto& sh = t.shape();
  if (!sh.same_row_count()) return false;
  for (int r = 1; r <= sh.rows(); ++r)
    for (int c = sh.row_begin(r); c <= sh.row_end(r); ++c) {
      auto a = t.letter(r, c);
      if (!a || a->primed != primed || !cell_ok(r, a->value)) return false;
      if (sh.contains(r, c + 1)) {
        auto b = t.letter(r, c + 1);
        if (b && b->primed == primed && !row_pred(a->value, b->value)) return false;
      }
      if (sh.contains(r + 1, c)) {
        auto d = t.letter(r + 1, c);
        if (d && d->primed == primed && !col_pred(a->value, d->value)) return false;
      }
    }
  return true;
}

// Position in the order ... < 2 < 1 < 1' < 2' < ...
int flagged_key(Letter a) { return a.primed ? a.value : -a.value; }

bool validate_pft(const Tableau& t) {
  const auto& sh = t.shape();
  if (!sh.same_row_count()) return false;
  for (int r = 1; r <= sh.rows(); ++r)
    for (int c = sh.row_begin(r); c <= sh.row_end(r); ++c) {
      auto a = t.letter(r, c);
      if (!a) return false;
      if (a->primed ? a->value >= sh.outer().row(r) : a->value > sh.inner().row(r)) return false;
      if (sh.contains(r, c + 1)) {
        auto b = t.letter(r, c + 1);
        if (!b || flagged_key(*a) > flagged_key(*b) || (*a == *b && a->primed)) return false;
      }
      if (sh.contains(r + 1, c)) {
        auto d = t.letter(r + 1, c);
        if (!d || flagged_key(*a) > flagged_key(*d) || (*a == *d && !a->primed)) return false;
      }
    }
  return true;
}

}  // namespace

bool validate(const Tableau& t, Family family) {
  switch (family) {
    case Family::OT: return validate_ot(t);
    case Family::UT: return validate_ut(t);
    case Family::PT: return validate_pt_std(t);
    case Family::OFT:
      return validate_single(
          t, false, [&](int r, int v) { return v <= t.shape().inner().row(r); },
          [](int a, int b) { return a >= b; }, [](int a, int c) { return a > c; });
    case Family::UFT:
      return validate_single(
          t, true, [&](int r, int v) { return v < t.shape().outer().row(r); },
          [](int a, int b) { return a < b; }, [](int a, int c) { return a <= c; });
    case Family::PFT: return validate_pft(t);
  }
  return false;
}

bool validate_pt_order(const Tableau& t, const TotalOrder& order) {
  const auto& sh = t.shape();
  for (const auto& f : t.cells())
    for (Letter a : f.letters()) (void)order.rank(a);  // domain check
  for (int r = 1; r <= sh.rows(); ++r)
    for (int c = sh.row_begin(r); c <= sh.row_end(r); ++c) {
      auto a = t.letter(r, c);
      if (!a) return false;
      if (sh.contains(r, c + 1)) {
        auto b = t.letter(r, c + 1);
        if (!b || order.rank(*a) > order.rank(*b) || (*a == *b && a->primed)) return false;
      }
      if (sh.contains(r + 1, c)) {
        auto d = t.letter(r + 1, c);
        if (!d || order.rank(*a) > order.rank(*d) || (*a == *d && !a->primed)) return false;
      }
    }
  return true;
}

// ---------------------------------------------------------------- weights

int WeightVector::total() const { return std::accumulate(coords_.begin(), coords_.end(), 0); }

std::string WeightVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(coords_[i]);
  }
  return s + ")";
}

WeightVector operator+(const WeightVector& a, const WeightVector& b) {
  std::vector<int> out(std::max(a.coords_.size(), b.coords_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a(static_cast<int>(i + 1)) + b(static_cast<int>(i + 1));
  return WeightVector(std::move(out));
}

WeightVector left_weight(const Tableau& t) {
  std::vector<int> w;
  for (const auto& f : t.cells())
    for (int v : f.unprimed_values()) {
      if (static_cast<int>(w.size()) < v) w.resize(static_cast<std::size_t>(v), 0);
      ++w[static_cast<std::size_t>(v - 1)];
    }
  return WeightVector(std::move(w));
}

WeightVector right_weight(const Tableau& t) {
  std::vector<int> w;
  for (const auto& f : t.cells())
    for (int v : f.primed_values()) {
      if (static_cast<int>(w.size()) < v) w.resize(static_cast<std::size_t>(v), 0);
      ++w[static_cast<std::size_t>(v - 1)];
    }
  return WeightVector(std::move(w));
}

WeightVector overweight(const Tableau& t) {
  if (!validate(t, Family::OT)) throw DomainError("overweight requires an overfull tableau");
  const auto& sh = t.shape();
  std::vector<int> w(static_cast<std::size_t>(sh.outer().first()), 0);
  for (int r = 1; r <= sh.rows(); ++r)
    for (int c = 1; c <= sh.row_end(r); ++c) w[static_cast<std::size_t>(c - 1)] += t.at(r, c).size() - 1;
  return WeightVector(std::move(w));
}

WeightVector underweight(const Tableau& t) {
  if (!validate(t, Family::UT)) throw DomainError("underweight requires an underfull tableau");
  const auto& sh = t.shape();
  std::vector<int> w(static_cast<std::size_t>(std::max(0, sh.outer().first() - 1)), 0);
  for (int r = 1; r <= sh.rows(); ++r)
    for (int c = 2; c <= sh.row_end(r); ++c)
      if (t.at(r, c).empty()) ++w[static_cast<std::size_t>(c - 2)];
  return WeightVector(std::move(w));
}

WeightVector flag_weight(const Tableau& t) {
  if (validate(t, Family::OFT)) return left_weight(t);
  if (validate(t, Family::UFT)) return right_weight(t);
  throw DomainError("flag_weight requires an over or under flagged tableau");
}

int entry_count(const Tableau& t) {
  int n = 0;
  for (const auto& f : t.cells()) n += f.size();
  return n;
}

int unprimed_count(const Tableau& t) {
  int n = 0;
  for (const auto& f : t.cells()) n += f.unprimed_count();
  return n;
}

}  // namespace groth
