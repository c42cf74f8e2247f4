#include "indep/relcalc.hpp"

#include <random>

#include "indep/geometry.hpp"
#include "indep/parallel.hpp"

namespace indep {

TruthTable::TruthTable(GroundSet g)
    : ground_(g), words_(((std::uint64_t{1} << (3 * g.size())) + 63) / 64, 0) {}

TernaryRelation::TernaryRelation(GroundSet g, std::string name, Predicate eval)
    : ground_(g), name_(std::move(name)), eval_(std::make_shared<const Predicate>(std::move(eval))) {}

TernaryRelation::TernaryRelation(std::string name, std::shared_ptr<const TruthTable> table)
    : ground_(table->ground()), name_(std::move(name)), table_(std::move(table)) {
  eval_ = std::make_shared<const Predicate>(
      [t = table_](Mask a, Mask b, Mask c) { return t->get(a, b, c); });
}

bool TernaryRelation::holds(const Subset& a, const Subset& b, const Subset& c) const {
  if (a.ground() != ground_ || b.ground() != ground_ || c.ground() != ground_) {
    throw UsageError("relation " + name_ + " evaluated on subsets of a different ground set");
  }
  return (*this)(a.bits(), b.bits(), c.bits());
}

TernaryRelation TernaryRelation::renamed(std::string name) const {
  TernaryRelation copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

TernaryRelation materialize(const TernaryRelation& r, unsigned log2_cap) {
  if (r.materialized()) return r;
  const GroundSet g = r.ground();
  const unsigned n = g.size();
  if (3 * n > log2_cap) {
    throw CapExceeded("truth table for " + r.name() + " needs 2^" + std::to_string(3 * n) +
                      " bits, over the cap of 2^" + std::to_string(log2_cap));
  }
  auto table = std::make_shared<TruthTable>(g);
  const Mask count = g.subset_count();
  if (n < 3) {
    for (Mask a = 0; a < count; ++a)
      for (Mask b = 0; b < count; ++b)
        for (Mask c = 0; c < count; ++c) table->set(table->index(a, b, c), r(a, b, c));
  } else {
    // Each A owns 2^(2n) >= 64 consecutive bits, so workers never share a word.
    auto& t = *table;
    parallel_for(count, [&](std::uint64_t ai) {
      const Mask a = static_cast<Mask>(ai);
      for (Mask b = 0; b < count; ++b)
        for (Mask c = 0; c < count; ++c) t.set(t.index(a, b, c), r(a, b, c));
    });
  }
  return TernaryRelation(r.name(), std::move(table));
}

TernaryRelation materialize_if_small(const TernaryRelation& r) {
  if (r.materialized() || 3 * r.ground().size() > kDefaultTableLog2Cap) return r;
  return materialize(r);
}

TernaryRelation rel_intersection(GroundSet g) {
  return TernaryRelation(g, "int", [](Mask a, Mask b, Mask c) { return is_submask(a & b, c); });
}

TernaryRelation rel_always_true(GroundSet g) {
  return TernaryRelation(g, "top", [](Mask, Mask, Mask) { return true; });
}

TernaryRelation rel_a(const ClosureOperator& op) {
  return TernaryRelation(op.ground(), "a", [op](Mask a, Mask b, Mask c) {
    return (op(a | c) & op(b | c)) == op(c);
  });
}

TernaryRelation rel_cl(const Pregeometry& pg) {
  return TernaryRelation(pg.ground(), "cl", [pg](Mask a, Mask b, Mask c) {
    return dim_mask(pg, a, b | c) == dim_mask(pg, a, c);
  });
}

namespace {

void require_same_ground(const TernaryRelation& r, const ClosureOperator& op, const char* what) {
  if (r.ground() != op.ground()) {
    throw UsageError(std::string(what) + ": relation and closure operator have different ground sets");
  }
}

}  // namespace

TernaryRelation monotonise_M(const TernaryRelation& r, const ClosureOperator& op) {
  require_same_ground(r, op, "monotonise_M");
  TernaryRelation inner = materialize_if_small(r);
  return TernaryRelation(r.ground(), r.name() + "M", [inner, op](Mask a, Mask b, Mask c) {
    return !for_each_between(c, op(b | c), [&](Mask x) { return !inner(a, b, x); });
  });
}

TernaryRelation monotonise_m(const TernaryRelation& r) {
  TernaryRelation inner = materialize_if_small(r);
  return TernaryRelation(r.ground(), r.name() + "m", [inner](Mask a, Mask b, Mask c) {
    return !for_each_between(c, b | c, [&](Mask d) { return !inner(a, b, d); });
  });
}

TernaryRelation closure_extend_c(const TernaryRelation& r, const ClosureOperator& op) {
  require_same_ground(r, op, "closure_extend_c");
  TernaryRelation inner = materialize_if_small(r);
  return TernaryRelation(r.ground(), r.name() + "c",
                         [inner, op](Mask a, Mask b, Mask c) { return inner(a, op(b | c), c); });
}

TernaryRelation opposite(const TernaryRelation& r) {
  TernaryRelation inner = materialize_if_small(r);
  return TernaryRelation(r.ground(), "opp(" + r.name() + ")",
                         [inner](Mask a, Mask b, Mask c) { return inner(b, a, c); });
}

namespace {

// At the sizes this is used for (3n <= cap) the table always fits.
std::shared_ptr<TruthTable> random_table(GroundSet g, std::mt19937_64& rng) {
  auto table = std::make_shared<TruthTable>(g);
  for (auto& w : table->words()) w = rng();
  const std::uint64_t used = table->triple_count();
  if (used < 64) table->words()[0] &= (std::uint64_t{1} << used) - 1;
  return table;
}

// s(A, E, C) := t(A, E', C) for all E' ⊆ E, with t true with probability 7/8.
// `middle(b, c)` picks the E that r(A, B, C) reads.
template <class Middle>
TernaryRelation downward_closed_relation(GroundSet g, std::uint64_t seed, std::string name,
                                         Middle middle) {
  std::mt19937_64 rng(seed);
  auto t1 = random_table(g, rng);
  auto t2 = random_table(g, rng);
  auto t3 = random_table(g, rng);
  const Mask count = g.subset_count();
  auto s = std::make_shared<TruthTable>(g);
  std::vector<char> column(count);
  for (Mask a = 0; a < count; ++a) {
    for (Mask c = 0; c < count; ++c) {
      for (Mask e = 0; e < count; ++e) {
        const auto i = s->index(a, e, c);
        column[e] = t1->get(i) || t2->get(i) || t3->get(i);
      }
      for (unsigned bit = 0; bit < g.size(); ++bit) {
        for (Mask e = 0; e < count; ++e) {
          if (e & (Mask{1} << bit)) column[e] = column[e] && column[e ^ (Mask{1} << bit)];
        }
      }
      for (Mask e = 0; e < count; ++e) s->set(s->index(a, e, c), column[e] != 0);
    }
  }
  auto out = std::make_shared<TruthTable>(g);
  for (Mask a = 0; a < count; ++a)
    for (Mask b = 0; b < count; ++b)
      for (Mask c = 0; c < count; ++c) out->set(out->index(a, b, c), s->get(a, middle(b, c), c));
  return TernaryRelation(std::move(name), std::move(out));
}

}  // namespace

TernaryRelation random_relation(GroundSet g, std::uint64_t seed, std::string name) {
  if (3 * g.size() > kDefaultTableLog2Cap) throw CapExceeded("random relation too large");
  std::mt19937_64 rng(seed);
  return TernaryRelation(std::move(name), random_table(g, rng));
}

TernaryRelation random_normal_monotone_relation(GroundSet g, std::uint64_t seed, std::string name) {
  if (3 * g.size() > kDefaultTableLog2Cap) throw CapExceeded("random relation too large");
  return downward_closed_relation(g, seed, std::move(name), [](Mask b, Mask c) { return b | c; });
}

TernaryRelation random_normal_monotone_closed_relation(const ClosureOperator& op, std::uint64_t seed,
                                                       std::string name) {
  if (3 * op.ground().size() > kDefaultTableLog2Cap) throw CapExceeded("random relation too large");
  return downward_closed_relation(op.ground(), seed, std::move(name),
                                  [op](Mask b, Mask c) { return op(b | c); });
}

}  // namespace indep
