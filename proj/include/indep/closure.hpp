#pragma once

// Finite closure operators, exchange detection, relativisation and
// restriction.
//
// A ClosureOperator is a validated total table Mask -> Mask. Validation is
// eager: every constructor checks reflexivity, monotonicity and idempotence
// and throws LawViolation otherwise, so downstream code may assume the laws.
// Finite character holds automatically on a finite ground set and is not
// checked.

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "indep/error.hpp"
#include "indep/lattice.hpp"

namespace indep {

enum class ClosureLaw { Reflexivity, Monotonicity, Idempotence };

std::string_view law_name(ClosureLaw law);

// Reflexivity: witness {A} with A ⊄ cl(A).
// Monotonicity: witness {A, A ∪ {e}} with cl(A) ⊄ cl(A ∪ {e}); the least such
// covering pair is reported.
// Idempotence: witness {A} with cl(cl(A)) ≠ cl(A).
class LawViolation : public Error {
 public:
  LawViolation(ClosureLaw law, std::vector<Subset> witness);
  ClosureLaw law() const noexcept { return law_; }
  const std::vector<Subset>& witness() const noexcept { return witness_; }

 private:
  ClosureLaw law_;
  std::vector<Subset> witness_;
};

class ClosureOperator {
 public:
  // The identity on the empty ground set.
  ClosureOperator();

  // table[A] = cl(A) for every code A < 2^n.
  static ClosureOperator from_table(GroundSet g, std::vector<Mask> table);

  // Least fixed point of the one-step generator above each subset. The
  // generator must be extensive (span(A) ⊇ A).
  static ClosureOperator from_spanner(GroundSet g, const std::function<Mask(Mask)>& span);

  static ClosureOperator trivial(GroundSet g);

  GroundSet ground() const noexcept { return ground_; }
  Mask operator()(Mask a) const noexcept { return (*table_)[a]; }
  Subset operator()(const Subset& a) const;
  bool is_closed(Mask a) const noexcept { return (*this)(a) == a; }
  std::span<const Mask> table() const noexcept { return *table_; }
  bool is_trivial() const;

  bool operator==(const ClosureOperator& other) const;

 private:
  ClosureOperator(GroundSet g, std::shared_ptr<const std::vector<Mask>> table)
      : ground_(g), table_(std::move(table)) {}

  GroundSet ground_;
  std::shared_ptr<const std::vector<Mask>> table_;
};

// First violated law with its witness, or nullopt when the table is a
// closure operator. Does not throw for law failures.
std::optional<LawViolation> find_law_violation(GroundSet g, std::span<const Mask> table);

// A closure operator whose exchange scan passed. Only has_exchange builds one.
class Pregeometry {
 public:
  const ClosureOperator& closure() const noexcept { return op_; }
  GroundSet ground() const noexcept { return op_.ground(); }
  Mask operator()(Mask a) const noexcept { return op_(a); }

 private:
  friend struct PregeometryAccess;
  explicit Pregeometry(ClosureOperator op) : op_(std::move(op)) {}
  ClosureOperator op_;
};

// a ∈ cl(A ∪ {b}) ∖ cl(A) but b ∉ cl(A ∪ {a}).
struct ExchangeWitness {
  Subset base;
  unsigned a = 0;
  unsigned b = 0;
  bool operator==(const ExchangeWitness&) const = default;
};

using ExchangeResult = std::variant<Pregeometry, ExchangeWitness>;

// Scans (A, a, b) in lexicographic order (A by code, then a, then b) and
// returns the first exchange violation, or a Pregeometry if there is none.
ExchangeResult has_exchange(const ClosureOperator& op);

// Convenience wrapper: throws UsageError carrying the witness if op fails
// exchange.
Pregeometry require_pregeometry(const ClosureOperator& op);

// Every exchange violation, in scan order.
std::vector<ExchangeWitness> exchange_violations(const ClosureOperator& op);

// A ↦ cl(A ∪ B) on the same ground set.
ClosureOperator relativize(const ClosureOperator& op, const Subset& b);

// A ↦ cl(A) ∩ B on ground B, relabeled so the elements of B in ascending
// order become 0..|B|-1.
ClosureOperator restrict_to(const ClosureOperator& op, const Subset& b);

}  // namespace indep
