#pragma once

// Primed column RSK, primed jeu de taquin, the order-swap maps, the
// sign-reversing involution on primed flagged tableaux, and the
// superimpose/split correspondence.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "groth/core.hpp"

namespace groth {

/// One panel of a bijection trace. A nonzero mark singles out a cell (the
/// hole about to slide, the flipped box, ...).
struct TraceStep {
  std::string note;
  Tableau tableau;
  int mark_row = 0;
  int mark_col = 0;
};
using Trace = std::vector<TraceStep>;

struct RskPair {
  Tableau p;  // PT(lambda)
  Tableau q;  // OFT(lambda/mu)
  friend bool operator==(const RskPair&, const RskPair&) = default;
};

struct JdtPair {
  Tableau p;  // PT(mu)
  Tableau q;  // UFT(lambda/mu)
  friend bool operator==(const JdtPair&, const JdtPair&) = default;
};

/// DomainError unless t is an OT.
RskPair rsk_forward(const Tableau& t, Trace* trace = nullptr);
/// DomainError if the pair is not the image of an OT of shape mu.
Tableau rsk_backward(const RskPair& pair, const Partition& mu, Trace* trace = nullptr);

/// DomainError unless t is a UT.
JdtPair jdt_forward(const Tableau& t, Trace* trace = nullptr);
Tableau jdt_backward(const JdtPair& pair, const Partition& lambda, Trace* trace = nullptr);

/// The up map between orders `from` and `to` that differ by exchanging an
/// adjacent i (first in `from`) and j' (second in `from`). DomainError for
/// any other pair of orders or if the output is not a PT under `to`.
Tableau order_swap_up(const Tableau& t, const TotalOrder& from, const TotalOrder& to);
/// The down map; `from` has j' immediately before i and `to` exchanges them.
Tableau order_swap_down(const Tableau& t, const TotalOrder& from, const TotalOrder& to);

/// Weight-preserving bijection PT_from -> PT_{from with positions k, k+1
/// exchanged}. Mixed pairs use the up/down maps; pairs of the same kind use a
/// Bender-Knuth exchange followed by relabelling. Works in place on a code
/// array over geom's cells. DomainError when an invariant of the map fails.
void adjacent_swap_codes(const ShapeGeometry& geom, const TotalOrder& from, int k, std::span<std::uint8_t> codes);
Tableau adjacent_swap(const Tableau& t, const TotalOrder& from, int k);

/// Positions of the adjacent exchanges a bubble sort performs turning `from`
/// into `to`. DomainError if the orders are on different letter sets.
std::vector<int> bubble_path(const TotalOrder& from, const TotalOrder& to);
Tableau reorder(const Tableau& t, const TotalOrder& from, const TotalOrder& to);

struct IotaSite {
  int m = 0;
  int row = 0;
  int col = 0;
};
/// The box the involution toggles. DomainError on an empty tableau.
IotaSite iota_site(const Tableau& t);
Tableau iota(const Tableau& t, Trace* trace = nullptr);

/// p in OFT(rho/mu), q in UFT(lambda/rho) -> PFT(lambda/mu).
Tableau superimpose(const Tableau& p, const Tableau& q);
/// Inverse of superimpose. DomainError if the unprimed cells do not form an
/// OFT of some rho/mu or the primed cells a UFT of lambda/rho.
std::pair<Tableau, Tableau> split(const Tableau& r);

}  // namespace groth
