#pragma once

// Independence, bases and dimension for finite closure operators, plus the
// five-way modularity test for pregeometries.

#include <array>
#include <string>
#include <vector>

#include "indep/closure.hpp"
#include "indep/lattice.hpp"

namespace indep {

// Every a ∈ A satisfies a ∉ cl(B ∪ (A ∖ {a})). Defined for any closure operator.
bool is_independent(const ClosureOperator& op, const Subset& a, const Subset& over);
bool is_independent_mask(const ClosureOperator& op, Mask a, Mask over);

struct DimResult {
  unsigned value = 0;
  Subset basis;
  bool operator==(const DimResult&) const = default;
};

// Greedy basis of A over B: walk A in ascending element order and keep each
// element not yet in cl(B ∪ kept). Deterministic.
DimResult basis_of(const Pregeometry& pg, const Subset& a, const Subset& over);

unsigned dim(const Pregeometry& pg, const Subset& a, const Subset& over);
unsigned dim_mask(const Pregeometry& pg, Mask a, Mask over);

// Largest |X| over all X ⊆ A independent over B, by full enumeration. An
// oracle for dim that shares no code with the greedy route.
unsigned brute_dim_oracle(const Pregeometry& pg, const Subset& a, const Subset& over);

// Outcome of one of the five modularity conditions:
//   1  x ∈ cl(AB) ⟹ x ∈ cl(ab) for some a ∈ cl(A), b ∈ cl(B)  witness A;B;{x}
//   2  ⫝ᵃ satisfies right BMON                                 witness A;C;B;D
//   3  ⫝ᵃ = ⫝ᶜˡ                                                witness A;B;C
//   4  A ⫝ᶜˡ_{cl(A)∩cl(B)} B for all A, B                        witness A;B
//   5  dim(AB) + dim(A∩B) = dim A + dim B for closed A, B       witness A;B
// In condition 1 either of a, b may be absent (so cl(∅) = ∅ does not make the
// condition fail on A = ∅).
struct ModularityCondition {
  bool holds = true;
  std::vector<Subset> witness;
  std::string detail;
};

struct ModularityVerdict {
  std::array<ModularityCondition, 5> conditions;
  bool consistent() const;
  bool modular() const { return consistent() && conditions[0].holds; }
};

ModularityVerdict check_modular(const Pregeometry& pg);

}  // namespace indep
