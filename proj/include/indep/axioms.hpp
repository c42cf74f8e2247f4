#pragma once

// The axiom catalogue as executable checks over a TernaryRelation.
//
// Each axiom is a universally quantified implication over a fixed list of
// subset variables. check_axiom scans every instance in ascending
// lexicographic order of that variable list and reports the first
// violation, so witnesses are reproducible across runs and worker counts.
//
// Variable order per axiom (printed in this order):
//   EX            A;C          A ⫝_C C
//   SYM           A;B;C        A ⫝_C B ⟹ B ⫝_C A
//   NOR-R         A;B;C        A ⫝_C B ⟹ A ⫝_C BC
//   MON-R         A;B;C;D      A ⫝_C BD ⟹ A ⫝_C B
//   BMON-R        A;C;B;D      C ⊆ B ⊆ D, A ⫝_C D ⟹ A ⫝_B D
//   TRA-R         A;C;B;D      C ⊆ B ⊆ D, A ⫝_C B ∧ A ⫝_B D ⟹ A ⫝_C D
//   TRA-STRONG    A;B;C;D      A ⫝_C B ∧ A ⫝_BC D ⟹ A ⫝_C BD
//   BMON-STRONG   A;B;C;D      A ⫝_C BD ⟹ A ⫝_CD B
//   AREF          a;C          a ⫝_C a ⟹ a ∈ cl(C)          (a a singleton)
//   CLO-R         A;B;C        A ⫝_C B ⟹ A ⫝_C cl(B)
//   SCLO          A;B;C        A ⫝_C B ⟺ cl(AC) ⫝_cl(C) cl(BC)
//   FREE          A;B;C;D      A ⫝_C B, C ∩ AB ⊆ D ⊆ C ⟹ A ⫝_D B
// A left variant X-L is X-R checked on opposite(r); its witness uses the
// variables of that right-hand form. FIN and LOC hold automatically on a
// finite ground set and are reported as vacuous.

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "indep/closure.hpp"
#include "indep/relcalc.hpp"

namespace indep {

enum class AxiomId {
  FIN,
  EX,
  SYM,
  LOC,
  NOR_L,
  NOR_R,
  MON_L,
  MON_R,
  BMON_L,
  BMON_R,
  TRA_L,
  TRA_R,
  TRA_STRONG,
  BMON_STRONG,
  AREF,
  CLO_L,
  CLO_R,
  SCLO,
  FREE,
};

// Catalogue order; check_all reports in this order.
std::span<const AxiomId> all_axioms();
std::string_view axiom_name(AxiomId ax);
// Case-insensitive; accepts "bmon-r", "BMON_R", "bmonr" is rejected.
std::optional<AxiomId> parse_axiom(std::string_view text);
bool requires_closure(AxiomId ax);
bool is_vacuous_at_finite_scale(AxiomId ax);
// Names of the quantified variables, in scan order. Empty for FIN/LOC.
std::span<const std::string_view> axiom_variables(AxiomId ax);

enum class Status { Pass, Fail, Vacuous };
std::string_view status_name(Status s);

struct AxiomReport {
  AxiomId axiom = AxiomId::EX;
  std::string relation;
  Status status = Status::Pass;
  std::vector<Subset> witness;  // present iff status == Fail
  std::string note;
  std::chrono::nanoseconds elapsed{0};
};

// `closure` must be given for AREF, CLO-L/R and SCLO (MissingClosure
// otherwise). The relation is materialized for the scan when it fits the
// default table cap.
AxiomReport check_axiom(const TernaryRelation& r, AxiomId ax, const ClosureOperator* closure = nullptr);

// One report per axiom in catalogue order. Axioms needing a closure are
// skipped when none is given.
std::vector<AxiomReport> check_all(const TernaryRelation& r, const ClosureOperator* closure = nullptr);

// Evaluates one quantifier instance given as masks in the axiom's variable
// order. nullopt if the tuple is outside the quantifier's domain (e.g. the
// chain C ⊆ B ⊆ D fails), otherwise whether the implication holds there.
std::optional<bool> evaluate_axiom_instance(const TernaryRelation& r, AxiomId ax,
                                            const ClosureOperator* closure, std::span<const Mask> tuple);

// `RESULT <relation> <axiom> pass|fail|vacuous [witness=S1;S2;…]`
std::string result_line(const AxiomReport& report);
// Human form of the witness: "A={0,1} C={} B={2} D={2,3}".
std::string describe_witness(const AxiomReport& report);

enum class Comparison { Equal, Implies, Implied, Incomparable };
std::string_view comparison_name(Comparison c);

struct Triple {
  Subset a, b, c;
  bool operator==(const Triple&) const = default;
};

struct ComparisonResult {
  Comparison verdict = Comparison::Equal;
  // Least triple (ascending (A, B, C)) on which the relations differ.
  std::optional<Triple> least_difference;
  std::optional<Triple> least_only_first;   // r1 true, r2 false
  std::optional<Triple> least_only_second;  // r1 false, r2 true
  std::uint64_t only_first = 0;
  std::uint64_t only_second = 0;
};

// "Implies" means r1 ⊆ r2, i.e. r1 is the stronger relation.
ComparisonResult compare(const TernaryRelation& r1, const TernaryRelation& r2);

// Counterexample search.

struct ExchangeLaw {
  bool operator==(const ExchangeLaw&) const = default;
};
using Condition = std::variant<AxiomId, ExchangeLaw>;
std::string condition_name(const Condition& c);
// Axiom ids or "exchange".
std::optional<Condition> parse_condition(std::string_view text);

struct Candidate {
  std::string name;
  TernaryRelation relation;
  ClosureOperator closure;
};

// Returns the next candidate, or nullopt when the stream is exhausted.
using CandidateStream = std::function<std::optional<Candidate>()>;

struct SearchGoal {
  std::vector<Condition> premises;
  Condition target;
};

struct SearchHit {
  Candidate candidate;
  std::vector<Subset> witness;
  std::string description;  // witness in human form
};

struct SearchOutcome {
  std::optional<SearchHit> hit;
  std::uint64_t examined = 0;
};

// First candidate on which every premise holds and the target fails.
SearchOutcome search_counterexample(const SearchGoal& goal, const CandidateStream& stream);

// Every relation on a ground set of size n, in ascending order of the truth
// table read as a binary number (triple index i is bit i). Closure is
// trivial. Only n <= 1 is enumerable; larger n throws CapExceeded.
CandidateStream all_relations(GroundSet g);

}  // namespace indep
