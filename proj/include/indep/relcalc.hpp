#pragma once

// Ternary relations A ⫝_C B over subsets of a finite ground set, the built-in
// relations, and the relation transformers.
//
// A relation is a pure predicate over (A, B, C) masks, optionally backed by a
// materialized truth table of 2^(3n) bits. Transformers materialize the
// relation they wrap (when it fits the table cap), so stacked transformers
// evaluate each base relation once.

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "indep/closure.hpp"
#include "indep/lattice.hpp"

namespace indep {

// Table cap, as log2 of the number of bits: 3n must not exceed it.
inline constexpr unsigned kDefaultTableLog2Cap = 30;

class TruthTable {
 public:
  explicit TruthTable(GroundSet g);

  GroundSet ground() const noexcept { return ground_; }
  std::uint64_t index(Mask a, Mask b, Mask c) const noexcept {
    return (std::uint64_t{a} << (2 * ground_.size())) | (std::uint64_t{b} << ground_.size()) | c;
  }
  bool get(std::uint64_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
  bool get(Mask a, Mask b, Mask c) const noexcept { return get(index(a, b, c)); }
  void set(std::uint64_t i, bool v) noexcept {
    if (v) {
      words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    } else {
      words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
  }
  std::uint64_t triple_count() const noexcept { return std::uint64_t{1} << (3 * ground_.size()); }
  std::span<std::uint64_t> words() noexcept { return words_; }
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  bool operator==(const TruthTable&) const = default;

 private:
  GroundSet ground_;
  std::vector<std::uint64_t> words_;
};

class TernaryRelation {
 public:
  using Predicate = std::function<bool(Mask a, Mask b, Mask c)>;

  TernaryRelation(GroundSet g, std::string name, Predicate eval);
  TernaryRelation(std::string name, std::shared_ptr<const TruthTable> table);

  GroundSet ground() const noexcept { return ground_; }
  const std::string& name() const noexcept { return name_; }

  // A ⫝_C B, written (A, B, C).
  bool operator()(Mask a, Mask b, Mask c) const {
    return table_ ? table_->get(a, b, c) : (*eval_)(a, b, c);
  }
  bool holds(const Subset& a, const Subset& b, const Subset& c) const;

  bool materialized() const noexcept { return table_ != nullptr; }
  const TruthTable* table() const noexcept { return table_.get(); }
  std::shared_ptr<const TruthTable> shared_table() const noexcept { return table_; }

  TernaryRelation renamed(std::string name) const;

 private:
  GroundSet ground_;
  std::string name_;
  std::shared_ptr<const Predicate> eval_;
  std::shared_ptr<const TruthTable> table_;
};

// Fills the truth table by exhaustive evaluation (in parallel). Returns r
// unchanged if it is already materialized. Throws CapExceeded if 3n > cap.
TernaryRelation materialize(const TernaryRelation& r, unsigned log2_cap = kDefaultTableLog2Cap);

// Materializes when within the default cap, otherwise returns r as is.
TernaryRelation materialize_if_small(const TernaryRelation& r);

// A ∩ B ⊆ C.                                                       "int"
TernaryRelation rel_intersection(GroundSet g);
// Always true.                                                     "top"
TernaryRelation rel_always_true(GroundSet g);
// cl(AC) ∩ cl(BC) = cl(C).                                         "a"
TernaryRelation rel_a(const ClosureOperator& op);
// dim(A/BC) = dim(A/C). The definition quantifies over finite A₀ ⊆ A; on a
// finite ground set A itself is finite and the monotonicity of dim makes the
// two agree (checked in tests).                                    "cl"
TernaryRelation rel_cl(const Pregeometry& pg);

// A ⫝ᴹ_C B iff A ⫝_X B for every X with C ⊆ X ⊆ cl(BC).           name + "M"
TernaryRelation monotonise_M(const TernaryRelation& r, const ClosureOperator& op);
// A ⫝ᵐ_C B iff A ⫝_D B for every D with C ⊆ D ⊆ BC.               name + "m"
TernaryRelation monotonise_m(const TernaryRelation& r);
// A ⫝ᶜ_C B iff A ⫝_C cl(BC).                                       name + "c"
TernaryRelation closure_extend_c(const TernaryRelation& r, const ClosureOperator& op);
// A ⫝ᵒᵖᵖ_C B iff B ⫝_C A.                                         "opp(" name ")"
TernaryRelation opposite(const TernaryRelation& r);

// Seeded random relations for property checks. Bits come straight from
// mt19937_64, so the tables are identical on every platform.
TernaryRelation random_relation(GroundSet g, std::uint64_t seed, std::string name);
// Random relation satisfying right NOR and right MON: A ⫝_C B iff
// s(A, BC, C) where s is downward closed in its middle argument.
TernaryRelation random_normal_monotone_relation(GroundSet g, std::uint64_t seed, std::string name);
// As above with cl(BC) in place of BC, which adds right CLO.
TernaryRelation random_normal_monotone_closed_relation(const ClosureOperator& op, std::uint64_t seed,
                                                       std::string name);

}  // namespace indep
