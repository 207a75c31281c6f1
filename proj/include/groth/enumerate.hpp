#pragma once

// Exhaustive bounded generators for every tableau family. Each family has a
// callback form (no materialization) and a collecting form. Output order is
// deterministic: cells are filled in row-major order and candidates tried in
// increasing letter order.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "groth/core.hpp"

namespace groth {

struct EnumBounds {
  int max_value = 1;      // N: every letter value is at most N
  int extra_entries = 0;  // B: entries minus boxes (OT only)
};

/// Separate caps for unprimed and primed values (0 forbids that kind).
struct LetterCaps {
  int unprimed = 0;
  int primed = 0;
};

using TableauVisitor = std::function<void(const Tableau&)>;
using CodeVisitor = std::function<void(std::span<const std::uint8_t>)>;

void for_each_OT(const Partition& mu, LetterCaps caps, int extra_entries, const TableauVisitor& visit);
void for_each_UT(const Partition& lambda, LetterCaps caps, const TableauVisitor& visit);
/// PT under an arbitrary order, as code arrays over geom's cell order.
void for_each_PT_order_codes(const ShapeGeometry& geom, const TotalOrder& order, int max_value,
                             const CodeVisitor& visit);
/// OFT, UFT or PFT of geom's shape as code arrays; nothing when the row
/// counts differ. DomainError for a non-flagged family.
void for_each_flagged_codes(Family family, const ShapeGeometry& geom, const CodeVisitor& visit);

std::vector<Tableau> enum_OT(const Partition& mu, EnumBounds bounds);
std::vector<Tableau> enum_UT(const Partition& lambda, EnumBounds bounds);
std::vector<Tableau> enum_PT(const Partition& lambda, int max_value);
/// DomainError if the order does not cover values up to max_value.
std::vector<Tableau> enum_PT_order(const SkewShape& shape, const TotalOrder& order, int max_value);
std::vector<Tableau> enum_OFT(const SkewShape& shape);
std::vector<Tableau> enum_UFT(const SkewShape& shape);
std::vector<Tableau> enum_PFT(const SkewShape& shape);

/// Dispatch by family. OT/UT need a straight shape; PT accepts skew shapes.
void for_each_tableau(Family family, const SkewShape& shape, EnumBounds bounds, const TableauVisitor& visit);

}  // namespace groth
