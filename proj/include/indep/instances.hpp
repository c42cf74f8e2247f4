#pragma once

// The instance catalog: matroid families, the Gebert operator, finite graphs
// with their independence relations and free amalgamation, and finite
// ordered configurations with the interval dividing relation.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "indep/axioms.hpp"
#include "indep/closure.hpp"
#include "indep/relcalc.hpp"

namespace indep {

// Labeled simple graph on a ground set.
class Graph {
 public:
  using Edge = std::pair<unsigned, unsigned>;

  Graph() = default;
  // Throws UsageError on loops or endpoints outside the ground set.
  // Duplicate edges are merged.
  static Graph from_edges(GroundSet g, std::span<const Edge> edges);
  // adjacency[v] = neighbours of v. Throws UsageError unless symmetric and
  // irreflexive.
  static Graph from_adjacency(GroundSet g, std::vector<Mask> adjacency);
  // Edge i of the code, read from the low bit, is the i-th pair (u < v) in
  // order (0,1), (0,2), …, (1,2), …
  static Graph from_code(GroundSet g, std::uint64_t code);
  static std::uint64_t pair_count(GroundSet g) noexcept {
    return std::uint64_t{g.size()} * (g.size() > 0 ? g.size() - 1 : 0) / 2;
  }

  GroundSet vertices() const noexcept { return ground_; }
  bool adjacent(unsigned u, unsigned v) const noexcept { return (adj_[u] >> v) & 1U; }
  Mask neighbours(unsigned v) const noexcept { return adj_[v]; }
  // Sorted, u < v.
  std::vector<Edge> edges() const;
  // Every edge with both endpoints in m lies inside one of the two parts.
  bool edges_within(Mask m, Mask part1, Mask part2) const noexcept;
  bool agrees_on(const Graph& other, Mask m) const noexcept;

  bool operator==(const Graph&) const = default;

 private:
  GroundSet ground_{};
  std::vector<Mask> adj_;
};

// An isomorphism g1 → g2 that is the identity on `fixed`, if one exists.
std::optional<std::vector<unsigned>> isomorphism_over(const Graph& g1, const Graph& g2, Mask fixed);

struct Amalgam {
  Graph graph;
  Subset left;   // G1 ∖ C
  Subset right;  // G2 ∖ C
  Subset base;   // C
};

// Both graphs share the base C = {0, …, k-1}. The result keeps C as
// 0..k-1, relabels G1 ∖ C to follow it and G2 ∖ C after that, and adds no
// edge between the two sides. Throws BaseMismatch if the graphs induce
// different subgraphs on C, UsageError if the result exceeds 16 vertices.
Amalgam free_amalgam(const Graph& g1, const Graph& g2, unsigned base_size);

// A ∩ B ⊆ C and every edge inside ABC lies within AC or within BC.   "st"
TernaryRelation rel_st(const Graph& g);
// A ∩ B ⊆ C; the edges play no role.                                  "a"
TernaryRelation rel_a_graph(const Graph& g);

using Rational = boost::rational<std::int64_t>;

// Points of a dense linear order, labeled 0..n-1 in increasing order.
class OrderedConfig {
 public:
  OrderedConfig() = default;
  // Throws UsageError unless strictly increasing and at most 16 points.
  explicit OrderedConfig(std::vector<Rational> points);
  GroundSet ground() const noexcept { return GroundSet(static_cast<unsigned>(points_.size())); }
  std::span<const Rational> points() const noexcept { return points_; }
  bool operator==(const OrderedConfig&) const = default;

 private:
  std::vector<Rational> points_;
};

// "3", "-1/2", "0.25".
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& q);

enum class IntervalMode { Inclusive, Strict };

// For all b1 ≤ b2 in B (b1 < b2 if Strict): if A meets [b1, b2] then so
// does C.                                                          "div"
TernaryRelation rel_div(const OrderedConfig& cfg, IntervalMode mode = IntervalMode::Inclusive);

// Matroid families, all validated as closure operators.
ClosureOperator uniform_closure(unsigned rank, unsigned size);
// cl(A) = {0, …, max A}, cl(∅) = ∅.
ClosureOperator gebert_closure(unsigned size);

enum class Field { GF2, GF3 };
unsigned field_order(Field f);
// vectors[i] holds the coordinates of element i, each in [0, p).
ClosureOperator linear_closure(Field f, const std::vector<std::vector<unsigned>>& vectors);

enum class InstanceKind { Trivial, Gebert, Uniform, Linear, Table, Graph, Order };
std::string_view kind_name(InstanceKind k);

struct Instance {
  std::string name;
  InstanceKind kind = InstanceKind::Trivial;
  std::string provenance;
  ClosureOperator closure;  // identity for graphs and orders
  std::optional<Graph> graph;
  std::optional<OrderedConfig> order;
  std::optional<bool> expected_modular;  // catalog pregeometries only

  GroundSet ground() const noexcept { return closure.ground(); }
  std::optional<Pregeometry> pregeometry() const;
};

const std::vector<Instance>& catalog();
const Instance* find_instance(std::string_view name);

// A catalog name, else a path to an instance file.
Instance load_instance(std::string_view name_or_path);

// Line-oriented `key = value` text; '#' starts a comment. Keys: type, size,
// rank, field, vectors, edges, points, and `cl {…} = {…}` lines for tables.
// Unknown keys, keys that do not apply to the type and malformed values
// throw ParseError naming the key.
Instance parse_instance(std::string_view text, std::string name);

// Relation ids:
//   int top a cl st div       base relations (st needs a graph, div an
//                             order, cl a pregeometry)
//   <base>[M|m|c]…            transformers applied left to right, e.g. amc
//   opp(<id>)                 opposite
TernaryRelation relation_by_id(const Instance& inst, std::string_view id,
                               IntervalMode mode = IntervalMode::Inclusive);

struct RelationInfo {
  std::string_view id;
  std::string_view description;
};
std::span<const RelationInfo> relation_catalog();

// Catalog instances as counterexample-search candidates, each paired with
// the given relation id. Instances where the id does not apply are skipped.
CandidateStream catalog_candidates(std::string relation_id, unsigned max_size = kMaxGroundSize);

}  // namespace indep
