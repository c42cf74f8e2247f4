#include "indep/geometry.hpp"

#include <bit>

namespace indep {

namespace {

void require_ground(GroundSet g, const Subset& s, const char* what) {
  if (s.ground() != g) throw UsageError(std::string(what) + ": subset from a different ground set");
}

Mask greedy_basis(const ClosureOperator& op, Mask a, Mask over) {
  Mask kept = 0;
  for (Mask rest = a; rest != 0; rest &= rest - 1) {
    const Mask bit = rest & (~rest + 1);
    if (!(op(over | kept) & bit)) kept |= bit;
  }
  return kept;
}

}  // namespace

bool is_independent_mask(const ClosureOperator& op, Mask a, Mask over) {
  for (Mask rest = a; rest != 0; rest &= rest - 1) {
    const Mask bit = rest & (~rest + 1);
    if (op(over | (a & ~bit)) & bit) return false;
  }
  return true;
}

bool is_independent(const ClosureOperator& op, const Subset& a, const Subset& over) {
  require_ground(op.ground(), a, "is_independent");
  require_ground(op.ground(), over, "is_independent");
  return is_independent_mask(op, a.bits(), over.bits());
}

DimResult basis_of(const Pregeometry& pg, const Subset& a, const Subset& over) {
  require_ground(pg.ground(), a, "basis_of");
  require_ground(pg.ground(), over, "basis_of");
  const Mask basis = greedy_basis(pg.closure(), a.bits(), over.bits());
  return DimResult{popcount(basis), Subset(pg.ground(), basis)};
}

unsigned dim_mask(const Pregeometry& pg, Mask a, Mask over) {
  return popcount(greedy_basis(pg.closure(), a, over));
}

unsigned dim(const Pregeometry& pg, const Subset& a, const Subset& over) {
  return basis_of(pg, a, over).value;
}

unsigned brute_dim_oracle(const Pregeometry& pg, const Subset& a, const Subset& over) {
  require_ground(pg.ground(), a, "brute_dim_oracle");
  require_ground(pg.ground(), over, "brute_dim_oracle");
  unsigned best = 0;
  for_each_submask(a.bits(), [&](Mask x) {
    if (popcount(x) > best && is_independent_mask(pg.closure(), x, over.bits())) best = popcount(x);
  });
  return best;
}

bool ModularityVerdict::consistent() const {
  for (const auto& c : conditions) {
    if (c.holds != conditions[0].holds) return false;
  }
  return true;
}

}  // namespace indep
