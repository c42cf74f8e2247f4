#include "indep/axioms.hpp"
#include "indep/geometry.hpp"
#include "indep/relcalc.hpp"

namespace indep {

namespace {

ModularityCondition pair_span_condition(const Pregeometry& pg) {
  const GroundSet g = pg.ground();
  const unsigned n = g.size();
  const Mask count = g.subset_count();
  // reach[a][b]: cl({a, b}); index n stands for "absent".
  std::vector<Mask> reach((n + 1) * (n + 1), 0);
  for (unsigned a = 0; a <= n; ++a)
    for (unsigned b = 0; b <= n; ++b) {
      Mask m = 0;
      if (a < n) m |= Mask{1} << a;
      if (b < n) m |= Mask{1} << b;
      reach[a * (n + 1) + b] = pg(m);
    }
  auto spanned = [&](Mask cla, Mask clb) {
    Mask out = 0;
    for (unsigned a = 0; a <= n; ++a) {
      if (a < n && !(cla & (Mask{1} << a))) continue;
      for (unsigned b = 0; b <= n; ++b) {
        if (b < n && !(clb & (Mask{1} << b))) continue;
        out |= reach[a * (n + 1) + b];
      }
    }
    return out;
  };
  for (Mask a = 0; a < count; ++a)
    for (Mask b = 0; b < count; ++b) {
      const Mask missing = pg(a | b) & ~spanned(pg(a), pg(b));
      if (missing) {
        const unsigned x = static_cast<unsigned>(std::countr_zero(missing));
        return {false,
                {Subset(g, a), Subset(g, b), Subset::singleton(g, x)},
                std::to_string(x) + " in cl(AB) but in no cl(ab)"};
      }
    }
  return {};
}

ModularityCondition bmon_condition(const Pregeometry& pg) {
  AxiomReport report = check_axiom(rel_a(pg.closure()), AxiomId::BMON_R);
  if (report.status != Status::Fail) return {};
  return {false, std::move(report.witness), "a fails BMON-R"};
}

ModularityCondition equality_condition(const Pregeometry& pg) {
  const ComparisonResult cmp = compare(rel_a(pg.closure()), rel_cl(pg));
  if (cmp.verdict == Comparison::Equal) return {};
  const Triple& t = *cmp.least_difference;
  return {false, {t.a, t.b, t.c}, "a and cl differ"};
}

ModularityCondition meet_base_condition(const Pregeometry& pg) {
  const GroundSet g = pg.ground();
  const Mask count = g.subset_count();
  for (Mask a = 0; a < count; ++a)
    for (Mask b = 0; b < count; ++b) {
      const Mask c = pg(a) & pg(b);
      if (dim_mask(pg, a, b | c) != dim_mask(pg, a, c)) {
        return {false, {Subset(g, a), Subset(g, b)}, "cl fails over cl(A) ∩ cl(B) = " + format_mask(c)};
      }
    }
  return {};
}

ModularityCondition modular_law_condition(const Pregeometry& pg) {
  const GroundSet g = pg.ground();
  const Mask count = g.subset_count();
  for (Mask a = 0; a < count; ++a) {
    if (!pg.closure().is_closed(a)) continue;
    for (Mask b = 0; b < count; ++b) {
      if (!pg.closure().is_closed(b)) continue;
      const unsigned join = dim_mask(pg, a | b, 0);
      const unsigned meet = dim_mask(pg, a & b, 0);
      const unsigned da = dim_mask(pg, a, 0);
      const unsigned db = dim_mask(pg, b, 0);
      if (join + meet != da + db) {
        return {false,
                {Subset(g, a), Subset(g, b)},
                std::to_string(join) + "+" + std::to_string(meet) + " != " + std::to_string(da) + "+" +
                    std::to_string(db)};
      }
    }
  }
  return {};
}

}  // namespace

ModularityVerdict check_modular(const Pregeometry& pg) {
  ModularityVerdict v;
  v.conditions[0] = pair_span_condition(pg);
  v.conditions[1] = bmon_condition(pg);
  v.conditions[2] = equality_condition(pg);
  v.conditions[3] = meet_base_condition(pg);
  v.conditions[4] = modular_law_condition(pg);
  return v;
}

}  // namespace indep
