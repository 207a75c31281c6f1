#include "groth/bijections.hpp"

namespace groth {

IotaSite iota_site(const Tableau& t) {
  const auto& sh = t.shape();
  IotaSite site;
  for (int r = 1; r <= sh.rows(); ++r)
    for (int c = sh.row_begin(r); c <= sh.row_end(r); ++c) {
      auto a = t.letter(r, c);
      if (!a) continue;
      // Smallest value first; then topmost row; then rightmost box.
      if (site.m == 0 || a->value < site.m || (a->value == site.m && (r < site.row || (r == site.row && c > site.col))))
        site = IotaSite{a->value, r, c};
    }
  if (site.m == 0) throw DomainError("iota: empty tableau has no smallest entry");
  return site;
}

Tableau iota(const Tableau& t, Trace* trace) {
  if (!validate(t, Family::PFT)) throw DomainError("iota: input is not a primed flagged tableau");
  IotaSite s = iota_site(t);
  Tableau out = t;
  Letter a = *t.letter(s.row, s.col);
  out.set(s.row, s.col, Letter{a.value, !a.primed});
  if (trace) {
    trace->push_back(TraceStep{"m=" + std::to_string(s.m) + " i=" + std::to_string(s.row) + " j=" + std::to_string(s.col), t,
                               s.row, s.col});
    trace->push_back(TraceStep{"result", out, s.row, s.col});
  }
  if (!validate(out, Family::PFT)) throw DomainError("iota: image left the primed flagged tableaux");
  return out;
}

Tableau superimpose(const Tableau& p, const Tableau& q) {
  const auto& ps = p.shape();
  const auto& qs = q.shape();
  if (ps.outer() != qs.inner()) throw DomainError("superimpose: shapes do not tile (outer of P must be inner of Q)");
  if (!validate(p, Family::OFT) || !validate(q, Family::UFT))
    throw DomainError("superimpose: P must be an OFT and Q a UFT");
  Tableau r(SkewShape(qs.outer(), ps.inner()));
  for (int row = 1; row <= ps.rows(); ++row)
    for (int c = ps.row_begin(row); c <= ps.row_end(row); ++c) r.at(row, c) = p.at(row, c);
  for (int row = 1; row <= qs.rows(); ++row)
    for (int c = qs.row_begin(row); c <= qs.row_end(row); ++c) r.at(row, c) = q.at(row, c);
  return r;
}

std::pair<Tableau, Tableau> split(const Tableau& r) {
  const auto& sh = r.shape();
  if (!validate(r, Family::PFT)) throw DomainError("split: input is not a primed flagged tableau");
  std::vector<int> rho_parts;
  for (int row = 1; row <= sh.rows(); ++row) {
    int end = sh.row_begin(row) - 1;
    for (int c = sh.row_begin(row); c <= sh.row_end(row); ++c) {
      if (r.letter(row, c)->primed) break;
      end = c;
    }
    for (int c = end + 1; c <= sh.row_end(row); ++c)
      if (!r.letter(row, c)->primed) throw DomainError("split: unprimed entry after a primed one in a row");
    rho_parts.push_back(end);
  }
  Partition rho;
  try {
    rho = Partition(rho_parts);
  } catch (const StructuralError&) {
    throw DomainError("split: unprimed region is not a skew shape");
  }
  if (!rho.contains(sh.inner()) || !sh.outer().contains(rho)) throw DomainError("split: unprimed region is not a skew shape");
  Tableau p(SkewShape(rho, sh.inner()));
  Tableau q(SkewShape(sh.outer(), rho));
  for (int row = 1; row <= sh.rows(); ++row)
    for (int c = sh.row_begin(row); c <= sh.row_end(row); ++c) (c <= rho.row(row) ? p : q).at(row, c) = r.at(row, c);
  if (!validate(p, Family::OFT) || !validate(q, Family::UFT)) throw DomainError("split: parts fail the flag conditions");
  return {std::move(p), std::move(q)};
}

}  // namespace groth
