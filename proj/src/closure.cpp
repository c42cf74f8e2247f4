#include "indep/closure.hpp"

#include <bit>

namespace indep {

struct PregeometryAccess {
  static Pregeometry make(ClosureOperator op) { return Pregeometry(std::move(op)); }
};

std::string_view law_name(ClosureLaw law) {
  switch (law) {
    case ClosureLaw::Reflexivity:
      return "Reflexivity";
    case ClosureLaw::Monotonicity:
      return "Monotonicity";
    case ClosureLaw::Idempotence:
      return "Idempotence";
  }
  return "?";
}

namespace {

std::string describe(ClosureLaw law, const std::vector<Subset>& witness) {
  std::string msg = "closure law violated: " + std::string(law_name(law)) + " at";
  for (const auto& s : witness) msg += " " + to_string(s);
  return msg;
}

}  // namespace

LawViolation::LawViolation(ClosureLaw law, std::vector<Subset> witness)
    : Error(describe(law, witness)), law_(law), witness_(std::move(witness)) {}

std::optional<LawViolation> find_law_violation(GroundSet g, std::span<const Mask> table) {
  if (table.size() != g.subset_count()) {
    throw UsageError("closure table has " + std::to_string(table.size()) + " entries, expected " +
                     std::to_string(g.subset_count()));
  }
  const Mask count = g.subset_count();
  for (Mask a = 0; a < count; ++a) {
    if (!g.contains(table[a])) {
      throw UsageError("closure table entry for " + format_mask(a) + " leaves the ground set");
    }
  }
  for (Mask a = 0; a < count; ++a) {
    if (!is_submask(a, table[a])) return LawViolation(ClosureLaw::Reflexivity, {Subset(g, a)});
  }
  // Monotonicity on all pairs follows from monotonicity on covering pairs.
  for (Mask a = 0; a < count; ++a) {
    for (unsigned e = 0; e < g.size(); ++e) {
      Mask bigger = a | (Mask{1} << e);
      if (bigger != a && !is_submask(table[a], table[bigger])) {
        return LawViolation(ClosureLaw::Monotonicity, {Subset(g, a), Subset(g, bigger)});
      }
    }
  }
  for (Mask a = 0; a < count; ++a) {
    if (table[table[a]] != table[a]) return LawViolation(ClosureLaw::Idempotence, {Subset(g, a)});
  }
  return std::nullopt;
}

ClosureOperator ClosureOperator::from_table(GroundSet g, std::vector<Mask> table) {
  if (auto violation = find_law_violation(g, table)) throw *violation;
  return ClosureOperator(g, std::make_shared<const std::vector<Mask>>(std::move(table)));
}

ClosureOperator ClosureOperator::from_spanner(GroundSet g, const std::function<Mask(Mask)>& span) {
  std::vector<Mask> table(g.subset_count());
  for (Mask a = 0; a < g.subset_count(); ++a) {
    Mask current = a;
    while (true) {
      Mask next = span(current);
      if (!g.contains(next)) {
        throw UsageError("spanner output for " + format_mask(current) + " leaves the ground set");
      }
      if (!is_submask(current, next)) {
        throw LawViolation(ClosureLaw::Reflexivity, {Subset(g, current)});
      }
      if (next == current) break;
      current = next;
    }
    table[a] = current;
  }
  return from_table(g, std::move(table));
}

ClosureOperator::ClosureOperator() : ClosureOperator(trivial(GroundSet(0))) {}

ClosureOperator ClosureOperator::trivial(GroundSet g) {
  std::vector<Mask> table(g.subset_count());
  for (Mask a = 0; a < g.subset_count(); ++a) table[a] = a;
  return ClosureOperator(g, std::make_shared<const std::vector<Mask>>(std::move(table)));
}

Subset ClosureOperator::operator()(const Subset& a) const {
  if (a.ground() != ground_) throw UsageError("subset and closure operator have different ground sets");
  return Subset(ground_, (*this)(a.bits()));
}

bool ClosureOperator::is_trivial() const {
  for (Mask a = 0; a < ground_.subset_count(); ++a) {
    if ((*table_)[a] != a) return false;
  }
  return true;
}

bool ClosureOperator::operator==(const ClosureOperator& other) const {
  return ground_ == other.ground_ && *table_ == *other.table_;
}

namespace {

template <class Visit>
void scan_exchange(const ClosureOperator& op, Visit&& visit) {
  const GroundSet g = op.ground();
  const unsigned n = g.size();
  for (Mask base = 0; base < g.subset_count(); ++base) {
    const Mask closed = op(base);
    for (unsigned a = 0; a < n; ++a) {
      const Mask abit = Mask{1} << a;
      if (closed & abit) continue;
      const Mask with_a = op(base | abit);
      for (unsigned b = 0; b < n; ++b) {
        const Mask bbit = Mask{1} << b;
        if ((op(base | bbit) & abit) && !(with_a & bbit)) {
          if (visit(ExchangeWitness{Subset(g, base), a, b})) return;
        }
      }
    }
  }
}

}  // namespace

ExchangeResult has_exchange(const ClosureOperator& op) {
  std::optional<ExchangeWitness> first;
  scan_exchange(op, [&](const ExchangeWitness& w) {
    first = w;
    return true;
  });
  if (first) return *first;
  return PregeometryAccess::make(op);
}

Pregeometry require_pregeometry(const ClosureOperator& op) {
  auto result = has_exchange(op);
  if (auto* w = std::get_if<ExchangeWitness>(&result)) {
    throw UsageError("closure operator is not a pregeometry: exchange fails at A=" + to_string(w->base) +
                     " a=" + std::to_string(w->a) + " b=" + std::to_string(w->b));
  }
  return std::get<Pregeometry>(std::move(result));
}

std::vector<ExchangeWitness> exchange_violations(const ClosureOperator& op) {
  std::vector<ExchangeWitness> all;
  scan_exchange(op, [&](const ExchangeWitness& w) {
    all.push_back(w);
    return false;
  });
  return all;
}

ClosureOperator relativize(const ClosureOperator& op, const Subset& b) {
  if (b.ground() != op.ground()) throw UsageError("relativize: subset from a different ground set");
  std::vector<Mask> table(op.ground().subset_count());
  for (Mask a = 0; a < table.size(); ++a) table[a] = op(a | b.bits());
  // cl_B(A) ⊇ A always holds, so validation can only fail on malformed op.
  return ClosureOperator::from_table(op.ground(), std::move(table));
}

ClosureOperator restrict_to(const ClosureOperator& op, const Subset& b) {
  if (b.ground() != op.ground()) throw UsageError("restrict: subset from a different ground set");
  const std::vector<unsigned> elems = b.elements();
  const GroundSet small(static_cast<unsigned>(elems.size()));

  auto lift = [&](Mask local) {
    Mask global = 0;
    for (unsigned i = 0; i < elems.size(); ++i) {
      if (local & (Mask{1} << i)) global |= Mask{1} << elems[i];
    }
    return global;
  };
  auto lower = [&](Mask global) {
    Mask local = 0;
    for (unsigned i = 0; i < elems.size(); ++i) {
      if (global & (Mask{1} << elems[i])) local |= Mask{1} << i;
    }
    return local;
  };

  std::vector<Mask> table(small.subset_count());
  for (Mask a = 0; a < table.size(); ++a) table[a] = lower(op(lift(a)));
  return ClosureOperator::from_table(small, std::move(table));
}

}  // namespace indep
