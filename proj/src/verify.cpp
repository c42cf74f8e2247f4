#include "indep/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "indep/geometry.hpp"

namespace indep {

namespace {

constexpr SuiteInfo kSuites[] = {
    {"pregeom-axioms",
     "cl satisfies SYM, FIN, EX, LOC, NOR, MON, BMON, TRA (both sides), AREF, CLO (both sides) and SCLO",
     "catalog pregeometries, n <= 6"},
    {"aM-eq-cl", "the monotonisation of a equals cl on a pregeometry", "catalog pregeometries, n <= 6"},
    {"aM-eq-am", "on a pregeometry the monotonisation and the naive monotonisation of a coincide",
     "catalog pregeometries, n <= 6"},
    {"mon-preserve",
     "M and m force right BMON and inherit MON, NOR, TRA-L, CLO and AREF as far as their premises hold",
     "catalog relations n <= 5 and seeded random relations at n = 4"},
    {"c-preserve", "c forces right CLO and right NOR; it inherits MON, NOR-L, BMON-R and lies below r under right MON",
     "catalog relations n <= 5 and seeded random relations at n = 4"},
    {"mc-to-M", "under right NOR and MON, (m)c implies M, with equality under right CLO",
     "catalog relations n <= 5 and seeded random normal monotone relations at n = 4"},
    {"modularity-5way", "the five modularity conditions agree on every pregeometry", "catalog pregeometries"},
    {"dim-laws", "greedy dim matches exhaustive search; additivity, antitonicity and submodularity",
     "catalog pregeometries, n <= 6 (laws at n <= 5)"},
    {"rg-st", "st satisfies the full axiom list and FREE, st implies a, and free amalgams are unique over the base",
     "all labeled graphs on at most 5 vertices; amalgams of graphs on at most 4 vertices"},
    {"dlo-div", "div satisfies EX, MON, NOR, BMON-R, TRA-L and AREF, and fails TRA-R on b1 < c < a < b2",
     "orders of 1 to 6 points"},
    {"gebert", "initial-segment closure: exchange fails, only singletons are independent, a is the sup-formula "
               "relation, symmetric and equal to its monotonisation",
     "gebert8 (transformer check at n <= 6)"},
};

std::uint64_t cube(GroundSet g) { return std::uint64_t{1} << (3 * g.size()); }
std::uint64_t square(GroundSet g) { return std::uint64_t{1} << (2 * g.size()); }

class Run {
 public:
  explicit Run(std::string instance) { result_.instance = std::move(instance); }

  bool failed() const { return !result_.passed; }

  template <class F>
  void step(F&& check) {
    if (failed()) return;
    add(check());
  }

  void add(CheckRecord r) {
    if (failed()) return;
    if (!r.ok) result_.passed = false;
    result_.checks.push_back(std::move(r));
  }

  InstanceResult take() { return std::move(result_); }

 private:
  InstanceResult result_;
};

CheckRecord axiom_record(const std::string& subject, const TernaryRelation& r, AxiomId ax,
                         const ClosureOperator* op, Status expected) {
  AxiomReport rep = check_axiom(r, ax, op);
  CheckRecord rec;
  rec.subject = subject;
  rec.check = std::string(axiom_name(ax));
  rec.status = rep.status;
  rec.ok = rep.status == expected;
  rec.witness = std::move(rep.witness);
  rec.detail = rep.status == Status::Fail ? describe_witness(rep) : rep.note;
  rec.scanned = rep.status == Status::Vacuous ? 0 : cube(r.ground());
  return rec;
}

Status expected_pass(AxiomId ax) { return is_vacuous_at_finite_scale(ax) ? Status::Vacuous : Status::Pass; }

// `allowed` lists the verdicts the statement permits.
CheckRecord compare_record(const std::string& subject, const std::string& check, const TernaryRelation& r1,
                           const TernaryRelation& r2, std::initializer_list<Comparison> allowed) {
  const ComparisonResult cmp = compare(r1, r2);
  CheckRecord rec;
  rec.subject = subject;
  rec.check = check;
  rec.ok = std::find(allowed.begin(), allowed.end(), cmp.verdict) != allowed.end();
  rec.status = rec.ok ? Status::Pass : Status::Fail;
  rec.detail = std::string(comparison_name(cmp.verdict)) + " only-first=" + std::to_string(cmp.only_first) +
               " only-second=" + std::to_string(cmp.only_second);
  if (!rec.ok && cmp.least_difference) {
    rec.witness = {cmp.least_difference->a, cmp.least_difference->b, cmp.least_difference->c};
  }
  rec.scanned = cube(r1.ground());
  return rec;
}

CheckRecord bool_record(const std::string& subject, const std::string& check, bool holds, std::string detail,
                        std::uint64_t scanned, std::vector<Subset> witness = {}) {
  CheckRecord rec;
  rec.subject = subject;
  rec.check = check;
  rec.ok = holds;
  rec.status = holds ? Status::Pass : Status::Fail;
  rec.detail = std::move(detail);
  rec.witness = std::move(witness);
  rec.scanned = scanned;
  return rec;
}

std::vector<Instance> default_or(const SuiteOptions& opt, const std::function<bool(const Instance&)>& keep) {
  if (opt.instances) return *opt.instances;
  std::vector<Instance> out;
  for (const auto& inst : catalog()) {
    if (keep(inst)) out.push_back(inst);
  }
  return out;
}

bool is_pregeometry(const Instance& inst) {
  return !inst.graph && !inst.order && inst.pregeometry().has_value();
}

// Instances whose closure fails exchange get a failing record instead.
std::optional<Pregeometry> require_pg(Run& run, const Instance& inst) {
  auto pg = inst.pregeometry();
  if (!pg) {
    auto res = has_exchange(inst.closure);
    const auto& w = std::get<ExchangeWitness>(res);
    run.add(bool_record(inst.name, "exchange", false,
                        "not a pregeometry: A=" + to_string(w.base) + " a=" + std::to_string(w.a) +
                            " b=" + std::to_string(w.b),
                        0, {w.base, Subset::singleton(inst.ground(), w.a), Subset::singleton(inst.ground(), w.b)}));
  }
  return pg;
}

// Suites ---------------------------------------------------------------------

constexpr AxiomId kPregeomList[] = {
    AxiomId::SYM,   AxiomId::FIN,    AxiomId::EX,     AxiomId::LOC,   AxiomId::NOR_L, AxiomId::NOR_R,
    AxiomId::MON_L, AxiomId::MON_R,  AxiomId::BMON_L, AxiomId::BMON_R, AxiomId::TRA_L, AxiomId::TRA_R,
    AxiomId::AREF,  AxiomId::CLO_L,  AxiomId::CLO_R,  AxiomId::SCLO,
};

void suite_pregeom_axioms(SuiteResult& out, const SuiteOptions& opt) {
  for (const auto& inst : default_or(opt, [](const Instance& i) { return i.ground().size() <= 6 && is_pregeometry(i); })) {
    Run run(inst.name);
    if (auto pg = require_pg(run, inst)) {
      const TernaryRelation cl = materialize_if_small(rel_cl(*pg));
      for (AxiomId ax : kPregeomList) {
        run.step([&] { return axiom_record(inst.name + "/cl", cl, ax, &inst.closure, expected_pass(ax)); });
      }
    }
    out.instances.push_back(run.take());
  }
}

void suite_am_eq_cl(SuiteResult& out, const SuiteOptions& opt) {
  for (const auto& inst : default_or(opt, [](const Instance& i) { return i.ground().size() <= 6 && is_pregeometry(i); })) {
    Run run(inst.name);
    if (auto pg = require_pg(run, inst)) {
      run.step([&] {
        return compare_record(inst.name, "EQ(aM,cl)", relation_by_id(inst, "aM"), relation_by_id(inst, "cl"),
                              {Comparison::Equal});
      });
    }
    out.instances.push_back(run.take());
  }
}

void suite_am_eq_am(SuiteResult& out, const SuiteOptions& opt) {
  for (const auto& inst : default_or(opt, [](const Instance& i) { return i.ground().size() <= 6 && is_pregeometry(i); })) {
    Run run(inst.name);
    if (auto pg = require_pg(run, inst)) {
      run.step([&] {
        return compare_record(inst.name, "EQ(aM,am)", relation_by_id(inst, "aM"), relation_by_id(inst, "am"),
                              {Comparison::Equal});
      });
    }
    out.instances.push_back(run.take());
  }
}

// A relation with the closure it is transformed against.
struct Subject {
  std::string name;
  TernaryRelation relation;
  ClosureOperator closure;
  std::string instance;
  std::optional<Pregeometry> pg;
};

std::vector<Subject> catalog_subjects(const SuiteOptions& opt, unsigned max_n) {
  std::vector<Subject> out;
  for (const auto& inst : default_or(opt, [max_n](const Instance& i) { return i.ground().size() <= max_n; })) {
    for (std::string_view id : {"a", "int", "top", "cl", "st", "div"}) {
      try {
        TernaryRelation r = relation_by_id(inst, id, opt.intervals);
        out.push_back({inst.name + "/" + std::string(id), std::move(r), inst.closure, inst.name, inst.pregeometry()});
      } catch (const UsageError&) {
      }
    }
  }
  return out;
}

std::vector<ClosureOperator> closures_of_size(unsigned n) {
  std::vector<ClosureOperator> out;
  for (const auto& inst : catalog()) {
    if (inst.ground().size() == n && !inst.graph && !inst.order) out.push_back(inst.closure);
  }
  return out;
}

std::vector<std::string> names_of_size(unsigned n) {
  std::vector<std::string> out;
  for (const auto& inst : catalog()) {
    if (inst.ground().size() == n && !inst.graph && !inst.order) out.push_back(inst.name);
  }
  return out;
}

constexpr std::uint64_t kSeedBase = 0x1d3b5a7700000000ULL;

std::vector<Subject> random_subjects(const SuiteOptions& opt, int kind) {
  std::vector<Subject> out;
  if (opt.instances) return out;
  const auto ops = closures_of_size(4);
  const auto names = names_of_size(4);
  for (unsigned i = 0; i < opt.random_relations; ++i) {
    const std::uint64_t seed = kSeedBase + (static_cast<std::uint64_t>(kind) << 20) + i;
    const ClosureOperator& op = ops[i % ops.size()];
    const std::string name = "rnd" + std::to_string(i) + "@" + names[i % names.size()];
    TernaryRelation r = kind == 0   ? random_relation(op.ground(), seed, "r")
                        : kind == 1 ? random_normal_monotone_relation(op.ground(), seed, "r")
                                    : random_normal_monotone_closed_relation(op, seed, "r");
    auto res = has_exchange(op);
    std::optional<Pregeometry> pg;
    if (auto* p = std::get_if<Pregeometry>(&res)) pg = *p;
    out.push_back({name, std::move(r), op, names[i % names.size()], pg});
  }
  return out;
}

// Properties of r that the preservation rows read.
struct Profile {
  std::map<AxiomId, bool> holds;
  bool operator()(AxiomId ax) const { return holds.at(ax); }
};

Profile profile(const TernaryRelation& r, const ClosureOperator& op, std::initializer_list<AxiomId> axes) {
  Profile p;
  for (AxiomId ax : axes) p.holds[ax] = check_axiom(r, ax, &op).status != Status::Fail;
  return p;
}

struct Row {
  AxiomId target;
  std::vector<AxiomId> premises;
};

void suite_mon_preserve(SuiteResult& out, const SuiteOptions& opt) {
  const std::vector<Row> rows_M = {
      {AxiomId::MON_L, {AxiomId::MON_L}},
      {AxiomId::MON_R, {AxiomId::MON_R}},
      {AxiomId::NOR_L, {AxiomId::NOR_L, AxiomId::MON_L}},
      {AxiomId::NOR_R, {AxiomId::NOR_R, AxiomId::MON_R}},
      {AxiomId::TRA_L, {AxiomId::TRA_L, AxiomId::NOR_L, AxiomId::MON_L}},
      {AxiomId::CLO_L, {AxiomId::CLO_L}},
      {AxiomId::CLO_R, {AxiomId::CLO_R}},
      {AxiomId::AREF, {AxiomId::AREF}},
  };
  const std::vector<Row> rows_m(rows_M.begin(), rows_M.begin() + 5);
  auto subjects = catalog_subjects(opt, 5);
  for (auto& s : random_subjects(opt, 0)) subjects.push_back(std::move(s));
  for (const auto& s : subjects) {
    Run run(s.name);
    const Profile base = profile(s.relation, s.closure,
                                 {AxiomId::MON_L, AxiomId::MON_R, AxiomId::NOR_L, AxiomId::NOR_R, AxiomId::TRA_L,
                                  AxiomId::CLO_L, AxiomId::CLO_R, AxiomId::AREF});
    for (int which = 0; which < 2; ++which) {
      const TernaryRelation t = materialize_if_small(which == 0 ? monotonise_M(s.relation, s.closure)
                                                                : monotonise_m(s.relation));
      const std::string subject = s.name + (which == 0 ? "M" : "m");
      run.step([&] { return axiom_record(subject, t, AxiomId::BMON_R, &s.closure, Status::Pass); });
      for (const Row& row : which == 0 ? rows_M : rows_m) {
        if (!std::all_of(row.premises.begin(), row.premises.end(), [&](AxiomId p) { return base(p); })) continue;
        run.step([&] { return axiom_record(subject, t, row.target, &s.closure, Status::Pass); });
      }
    }
    out.instances.push_back(run.take());
  }
}

void suite_c_preserve(SuiteResult& out, const SuiteOptions& opt) {
  const std::vector<Row> rows = {
      {AxiomId::MON_L, {AxiomId::MON_L}},
      {AxiomId::MON_R, {AxiomId::MON_R}},
      {AxiomId::NOR_L, {AxiomId::NOR_L}},
      {AxiomId::BMON_R, {AxiomId::BMON_R}},
  };
  auto subjects = catalog_subjects(opt, 5);
  for (auto& s : random_subjects(opt, 0)) subjects.push_back(std::move(s));
  for (const auto& s : subjects) {
    Run run(s.name);
    const Profile base =
        profile(s.relation, s.closure, {AxiomId::MON_L, AxiomId::MON_R, AxiomId::NOR_L, AxiomId::BMON_R});
    const TernaryRelation c = materialize_if_small(closure_extend_c(s.relation, s.closure));
    const std::string subject = s.name + "c";
    run.step([&] { return axiom_record(subject, c, AxiomId::CLO_R, &s.closure, Status::Pass); });
    run.step([&] { return axiom_record(subject, c, AxiomId::NOR_R, &s.closure, Status::Pass); });
    if (base(AxiomId::MON_R)) {
      run.step([&] {
        return compare_record(subject, "IMP(c,r)", c, s.relation, {Comparison::Equal, Comparison::Implies});
      });
    }
    for (const Row& row : rows) {
      if (!base(row.premises.front())) continue;
      run.step([&] { return axiom_record(subject, c, row.target, &s.closure, Status::Pass); });
    }
    // cl satisfies right NOR and CLO and implies a, so it implies ac.
    if (s.pg && s.name == s.instance + "/a") {
      run.step([&] {
        return compare_record(subject, "IMP(cl,c)", rel_cl(*s.pg), c, {Comparison::Equal, Comparison::Implies});
      });
    }
    out.instances.push_back(run.take());
  }
}

void suite_mc_to_M(SuiteResult& out, const SuiteOptions& opt) {
  auto subjects = catalog_subjects(opt, 5);
  for (auto& s : random_subjects(opt, 1)) subjects.push_back(std::move(s));
  for (auto& s : random_subjects(opt, 2)) subjects.push_back(std::move(s));
  for (const auto& s : subjects) {
    Run run(s.name);
    const Profile base = profile(s.relation, s.closure, {AxiomId::NOR_R, AxiomId::MON_R, AxiomId::CLO_R});
    if (!base(AxiomId::NOR_R) || !base(AxiomId::MON_R)) {
      // Outside the statement's hypotheses; recorded so the scope is visible.
      run.add(bool_record(s.name, "PREMISE", true, "skipped: right NOR or MON fails", 0));
      out.instances.push_back(run.take());
      continue;
    }
    const TernaryRelation mc = materialize_if_small(closure_extend_c(monotonise_m(s.relation), s.closure));
    const TernaryRelation M = materialize_if_small(monotonise_M(s.relation, s.closure));
    if (base(AxiomId::CLO_R)) {
      run.step([&] { return compare_record(s.name, "EQ(mc,M)", mc, M, {Comparison::Equal}); });
    } else {
      run.step([&] { return compare_record(s.name, "IMP(mc,M)", mc, M, {Comparison::Equal, Comparison::Implies}); });
    }
    out.instances.push_back(run.take());
  }
}

void suite_modularity(SuiteResult& out, const SuiteOptions& opt) {
  for (const auto& inst : default_or(opt, is_pregeometry)) {
    Run run(inst.name);
    if (auto pg = require_pg(run, inst)) {
      const ModularityVerdict v = check_modular(*pg);
      const GroundSet g = inst.ground();
      const std::uint64_t scans[5] = {square(g), cube(g) * 2, cube(g), square(g), square(g)};
      for (std::size_t i = 0; i < 5; ++i) {
        const auto& c = v.conditions[i];
        CheckRecord rec = bool_record(inst.name, "COND" + std::to_string(i + 1), true, c.detail, scans[i], c.witness);
        rec.status = c.holds ? Status::Pass : Status::Fail;
        rec.ok = !inst.expected_modular || c.holds == *inst.expected_modular;
        run.add(std::move(rec));
      }
      run.step([&] {
        return bool_record(inst.name, "AGREE", v.consistent(), v.modular() ? "modular" : "not modular", 0);
      });
    }
    out.instances.push_back(run.take());
  }
}

void suite_dim_laws(SuiteResult& out, const SuiteOptions& opt) {
  for (const auto& inst : default_or(opt, [](const Instance& i) { return i.ground().size() <= 6 && is_pregeometry(i); })) {
    Run run(inst.name);
    auto pg = require_pg(run, inst);
    if (!pg) {
      out.instances.push_back(run.take());
      continue;
    }
    const GroundSet g = inst.ground();
    const Mask count = g.subset_count();
    auto pair_witness = [&](Mask a, Mask b) { return std::vector<Subset>{Subset(g, a), Subset(g, b)}; };

    run.step([&] {
      for (Mask a = 0; a < count; ++a)
        for (Mask b = 0; b < count; ++b) {
          const unsigned d = dim_mask(*pg, a, b);
          const unsigned o = brute_dim_oracle(*pg, Subset(g, a), Subset(g, b));
          if (d != o) {
            return bool_record(inst.name, "DIM=ORACLE", false,
                               "dim " + std::to_string(d) + " vs oracle " + std::to_string(o), square(g),
                               pair_witness(a, b));
          }
        }
      return bool_record(inst.name, "DIM=ORACLE", true, "", square(g));
    });
    run.step([&] {
      for (Mask a = 0; a < count; ++a) {
        if (dim_mask(*pg, a, a) != 0) {
          return bool_record(inst.name, "DIM-SELF", false, "dim(A/A) > 0", count, {Subset(g, a)});
        }
      }
      return bool_record(inst.name, "DIM-SELF", true, "", count);
    });
    if (g.size() > 5) {
      out.instances.push_back(run.take());
      continue;
    }
    run.step([&] {
      for (Mask a = 0; a < count; ++a)
        for (Mask b = 0; b < count; ++b) {
          const unsigned lhs = dim_mask(*pg, a | b, 0);
          const unsigned rhs = dim_mask(*pg, a, b) + dim_mask(*pg, b, 0);
          if (lhs != rhs) {
            return bool_record(inst.name, "ADDITIVITY", false, std::to_string(lhs) + " != " + std::to_string(rhs),
                               square(g), pair_witness(a, b));
          }
        }
      return bool_record(inst.name, "ADDITIVITY", true, "", square(g));
    });
    run.step([&] {
      std::uint64_t cases = 0;
      for (Mask a = 0; a < count; ++a)
        for (Mask b = 0; b < count; ++b) {
          bool bad = false;
          Mask bad_c = 0;
          for_each_submask(b, [&](Mask c) {
            ++cases;
            if (dim_mask(*pg, a, b) > dim_mask(*pg, a, c)) {
              bad = true;
              bad_c = c;
              return true;
            }
            return false;
          });
          if (bad) {
            return bool_record(inst.name, "ANTITONE", false, "dim(A/B) > dim(A/C) with C ⊆ B", cases,
                               {Subset(g, a), Subset(g, b), Subset(g, bad_c)});
          }
        }
      return bool_record(inst.name, "ANTITONE", true, "", cases);
    });
    run.step([&] {
      for (Mask a = 0; a < count; ++a) {
        if (!pg->closure().is_closed(a)) continue;
        for (Mask b = 0; b < count; ++b) {
          if (!pg->closure().is_closed(b)) continue;
          const unsigned lhs = dim_mask(*pg, a | b, 0) + dim_mask(*pg, a & b, 0);
          const unsigned rhs = dim_mask(*pg, a, 0) + dim_mask(*pg, b, 0);
          if (lhs > rhs) {
            return bool_record(inst.name, "SUBMODULAR", false, std::to_string(lhs) + " > " + std::to_string(rhs),
                               square(g), pair_witness(a, b));
          }
        }
      }
      return bool_record(inst.name, "SUBMODULAR", true, "", square(g));
    });
    out.instances.push_back(run.take());
  }
}

constexpr AxiomId kStList[] = {
    AxiomId::SYM,   AxiomId::FIN,   AxiomId::EX,     AxiomId::LOC,    AxiomId::NOR_L, AxiomId::NOR_R,
    AxiomId::MON_L, AxiomId::MON_R, AxiomId::BMON_L, AxiomId::BMON_R, AxiomId::TRA_L, AxiomId::TRA_R,
    AxiomId::AREF,  AxiomId::CLO_L, AxiomId::CLO_R,  AxiomId::SCLO,   AxiomId::FREE,
};

void graph_checks(Run& run, const std::string& name, const Graph& graph) {
  const ClosureOperator id = ClosureOperator::trivial(graph.vertices());
  const TernaryRelation st = materialize_if_small(rel_st(graph));
  for (AxiomId ax : kStList) {
    run.step([&] { return axiom_record(name + "/st", st, ax, &id, expected_pass(ax)); });
  }
  run.step([&] {
    return compare_record(name, "IMP(st,a)", st, rel_a_graph(graph), {Comparison::Equal, Comparison::Implies});
  });
}

std::string graph_name(unsigned n, std::uint64_t code) {
  std::string digits = std::to_string(code);
  if (digits.size() < 4) digits.insert(0, 4 - digits.size(), '0');
  return "g" + std::to_string(n) + "-" + digits;
}

// Applies a relabeling that moves only vertices outside the base.
Graph relabel(const Graph& g, const std::vector<unsigned>& perm) {
  std::vector<Graph::Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph::from_edges(g.vertices(), edges);
}

std::vector<std::vector<unsigned>> base_fixing_permutations(unsigned n, unsigned k) {
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0U);
  std::vector<std::vector<unsigned>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin() + k, perm.end()));
  return out;
}

void amalgam_checks(SuiteResult& out) {
  for (unsigned n1 = 0; n1 <= 4; ++n1)
    for (unsigned n2 = 0; n2 <= 4; ++n2)
      for (unsigned k = 0; k <= std::min(n1, n2); ++k) {
        const std::string label =
            "amalgam" + std::to_string(n1) + "+" + std::to_string(n2) + "/" + std::to_string(k);
        Run run(label);
        const GroundSet g1(n1), g2(n2);
        const auto perms1 = base_fixing_permutations(n1, k);
        const auto perms2 = base_fixing_permutations(n2, k);
        const Mask base = (Mask{1} << k) - 1;
        std::uint64_t pairs = 0;
        std::optional<CheckRecord> failure;
        for (std::uint64_t c1 = 0; c1 < (std::uint64_t{1} << Graph::pair_count(g1)) && !failure; ++c1) {
          const Graph a = Graph::from_code(g1, c1);
          for (std::uint64_t c2 = 0; c2 < (std::uint64_t{1} << Graph::pair_count(g2)) && !failure; ++c2) {
            const Graph b = Graph::from_code(g2, c2);
            if (!a.agrees_on(b, base)) continue;
            ++pairs;
            const Amalgam am = free_amalgam(a, b, k);
            const std::string tag = graph_name(n1, c1) + "+" + graph_name(n2, c2);
            if (!rel_st(am.graph).holds(am.left, am.right, am.base)) {
              failure = bool_record(tag, "ST-DEFINING", false, "st fails on (G1∖C, G2∖C, C)", 1,
                                    {am.left, am.right, am.base});
              break;
            }
            // Factors embed unchanged.
            bool embeds = true;
            for (unsigned u = 0; u < n1; ++u)
              for (unsigned v = 0; v < n1; ++v) embeds &= am.graph.adjacent(u, v) == a.adjacent(u, v);
            auto image2 = [&](unsigned v) { return v < k ? v : n1 + (v - k); };
            for (unsigned u = 0; u < n2; ++u)
              for (unsigned v = 0; v < n2; ++v) embeds &= am.graph.adjacent(image2(u), image2(v)) == b.adjacent(u, v);
            if (!embeds) {
              failure = bool_record(tag, "EMBED", false, "a factor is not an induced subgraph", 1);
              break;
            }
            // Relabeling either factor over C yields an amalgam isomorphic over C.
            auto unique = [&](const Graph& x, const Graph& y) {
              return isomorphism_over(free_amalgam(x, y, k).graph, am.graph, base).has_value();
            };
            for (const auto& p : perms1) {
              if (!unique(relabel(a, p), b)) {
                failure = bool_record(tag, "UNIQUE", false, "relabeling G1 over C changes the amalgam", 1);
                break;
              }
            }
            if (failure) break;
            for (const auto& p : perms2) {
              if (!unique(a, relabel(b, p))) {
                failure = bool_record(tag, "UNIQUE", false, "relabeling G2 over C changes the amalgam", 1);
                break;
              }
            }
          }
        }
        if (failure) {
          run.add(std::move(*failure));
        } else {
          run.add(bool_record(label, "AMALGAM", true, std::to_string(pairs) + " pairs", pairs));
        }
        out.instances.push_back(run.take());
      }
}

void suite_rg_st(SuiteResult& out, const SuiteOptions& opt) {
  if (opt.instances) {
    for (const auto& inst : *opt.instances) {
      Run run(inst.name);
      if (!inst.graph) {
        run.add(bool_record(inst.name, "GRAPH", false, "not a graph instance", 0));
      } else {
        graph_checks(run, inst.name, *inst.graph);
      }
      out.instances.push_back(run.take());
    }
    return;
  }
  for (unsigned n = 1; n <= 5; ++n) {
    const GroundSet g(n);
    const std::uint64_t total = std::uint64_t{1} << Graph::pair_count(g);
    for (std::uint64_t code = 0; code < total; ++code) {
      const std::string name = graph_name(n, code);
      Run run(name);
      graph_checks(run, name, Graph::from_code(g, code));
      out.instances.push_back(run.take());
    }
  }
  amalgam_checks(out);
}

constexpr AxiomId kDivList[] = {
    AxiomId::EX, AxiomId::MON_L, AxiomId::MON_R, AxiomId::NOR_L, AxiomId::NOR_R,
    AxiomId::BMON_R, AxiomId::TRA_L, AxiomId::AREF,
};

void suite_dlo_div(SuiteResult& out, const SuiteOptions& opt) {
  for (const auto& inst : default_or(opt, [](const Instance& i) { return i.order && i.ground().size() <= 6; })) {
    Run run(inst.name);
    if (!inst.order) {
      run.add(bool_record(inst.name, "ORDER", false, "not an order instance", 0));
      out.instances.push_back(run.take());
      continue;
    }
    const GroundSet g = inst.ground();
    const ClosureOperator id = ClosureOperator::trivial(g);
    const TernaryRelation div = materialize_if_small(rel_div(*inst.order, opt.intervals));
    for (AxiomId ax : kDivList) {
      run.step([&] { return axiom_record(inst.name + "/div", div, ax, &id, Status::Pass); });
    }
    if (g.size() == 4) {
      // b1 = 0 < c = 1 < a = 2 < b2 = 3
      const Mask b1 = 1, c = 2, a = 4, b2 = 8;
      run.step([&] {
        const bool ok = div(a, b1 | b2, c) && div(a, c, 0) && !div(a, b1 | b2, 0);
        return bool_record(inst.name, "EXAMPLES", ok, "a|c b1b2, a|c, not a|b1b2 over the empty base", 3);
      });
      run.step([&] { return axiom_record(inst.name + "/div", div, AxiomId::TRA_R, &id, Status::Fail); });
      run.step([&] {
        const Mask tuple[] = {a, 0, c, b1 | c | b2};
        const auto v = evaluate_axiom_instance(div, AxiomId::TRA_R, &id, tuple);
        return bool_record(inst.name, "TRA-R-CONFIG", v.has_value() && !*v,
                           "A={a} C={} B={c} D={b1,c,b2} violates TRA-R", 1,
                           {Subset(g, a), Subset(g, 0), Subset(g, c), Subset(g, b1 | c | b2)});
      });
    }
    out.instances.push_back(run.take());
  }
}

int sup_of(Mask m) { return m == 0 ? -1 : 31 - std::countl_zero(m); }

void suite_gebert(SuiteResult& out, const SuiteOptions& opt) {
  for (const auto& inst : default_or(opt, [](const Instance& i) { return i.kind == InstanceKind::Gebert; })) {
    Run run(inst.name);
    const GroundSet g = inst.ground();
    const Mask count = g.subset_count();
    const ClosureOperator& op = inst.closure;
    run.step([&] {
      auto res = has_exchange(op);
      if (const auto* w = std::get_if<ExchangeWitness>(&res)) {
        CheckRecord rec = bool_record(inst.name, "EXCHANGE", true,
                                      "fails at A=" + to_string(w->base) + " a=" + std::to_string(w->a) +
                                          " b=" + std::to_string(w->b),
                                      count, {w->base, Subset::singleton(g, w->a), Subset::singleton(g, w->b)});
        rec.status = Status::Fail;
        return rec;
      }
      return bool_record(inst.name, "EXCHANGE", false, "exchange holds", count);
    });
    if (g.size() >= 3) {
      run.step([&] {
        const auto all = exchange_violations(op);
        const ExchangeWitness want{Subset::empty(g), 1, 2};
        const bool found = std::find(all.begin(), all.end(), want) != all.end();
        return bool_record(inst.name, "EXCHANGE({},1,2)", found, std::to_string(all.size()) + " violations", count);
      });
    }
    run.step([&] {
      for (Mask a = 0; a < count; ++a) {
        const bool independent = is_independent_mask(op, a, 0);
        if (independent != (popcount(a) <= 1)) {
          return bool_record(inst.name, "INDEPENDENT", false, "independence differs from |A| <= 1", count,
                             {Subset(g, a)});
        }
      }
      return bool_record(inst.name, "INDEPENDENT", true, "exactly the empty set and the singletons", count);
    });
    const TernaryRelation a = materialize_if_small(rel_a(op));
    run.step([&] {
      const TernaryRelation sup(g, "sup", [](Mask x, Mask y, Mask z) {
        return sup_of(x) <= sup_of(z) || sup_of(y) <= sup_of(z);
      });
      return compare_record(inst.name, "EQ(a,sup)", a, sup, {Comparison::Equal});
    });
    run.step([&] { return axiom_record(inst.name + "/a", a, AxiomId::SYM, &op, Status::Pass); });
    if (g.size() <= 6) {
      run.step([&] { return axiom_record(inst.name + "/a", a, AxiomId::BMON_R, &op, Status::Pass); });
      run.step([&] {
        return compare_record(inst.name, "EQ(a,aM)", a, monotonise_M(a, op), {Comparison::Equal});
      });
    }
    out.instances.push_back(run.take());
  }
}

using SuiteFn = void (*)(SuiteResult&, const SuiteOptions&);

SuiteFn suite_function(std::string_view id) {
  static const std::map<std::string_view, SuiteFn> table = {
      {"pregeom-axioms", suite_pregeom_axioms}, {"aM-eq-cl", suite_am_eq_cl},
      {"aM-eq-am", suite_am_eq_am},             {"mon-preserve", suite_mon_preserve},
      {"c-preserve", suite_c_preserve},         {"mc-to-M", suite_mc_to_M},
      {"modularity-5way", suite_modularity},    {"dim-laws", suite_dim_laws},
      {"rg-st", suite_rg_st},                   {"dlo-div", suite_dlo_div},
      {"gebert", suite_gebert},
  };
  auto it = table.find(id);
  if (it == table.end()) throw UnknownSuite("unknown suite '" + std::string(id) + "'");
  return it->second;
}

std::string witness_text(const std::vector<Subset>& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ';';
    out += to_string(w[i]);
  }
  return out;
}

}  // namespace

std::span<const SuiteInfo> list_suites() { return kSuites; }

SuiteResult run_suite(std::string_view id, const SuiteOptions& options) {
  const SuiteFn fn = suite_function(id);
  const auto start = std::chrono::steady_clock::now();
  SuiteResult result;
  result.suite = std::string(id);
  fn(result, options);
  for (const auto& inst : result.instances) {
    result.passed = result.passed && inst.passed;
    for (const auto& c : inst.checks) result.scanned += c.scanned;
  }
  if (result.instances.empty()) result.passed = false;
  result.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  return result;
}

std::string format_summary(const SuiteResult& r) {
  std::ostringstream out;
  std::size_t checks = 0, failed = 0;
  for (const auto& inst : r.instances) {
    checks += inst.checks.size();
    failed += inst.passed ? 0 : 1;
  }
  out << "suite " << r.suite << ": " << (r.passed ? "pass" : "FAIL") << " (" << r.instances.size()
      << " instances, " << checks << " checks, " << r.scanned << " cases scanned";
  if (failed) out << ", " << failed << " failing";
  out << ")\n";
  std::size_t width = 0;
  for (const auto& inst : r.instances) width = std::max(width, inst.instance.size());
  for (const auto& inst : r.instances) {
    out << "  " << inst.instance << std::string(width - inst.instance.size(), ' ') << "  "
        << (inst.passed ? "pass" : "FAIL") << "  " << inst.checks.size() << " checks\n";
    for (const auto& c : inst.checks) {
      if (c.ok) continue;
      out << "    unexpected " << c.subject << " " << c.check << " " << status_name(c.status);
      if (!c.witness.empty()) out << " witness=" << witness_text(c.witness);
      if (!c.detail.empty()) out << " (" << c.detail << ")";
      out << "\n";
    }
  }
  return out.str();
}

std::string format_result_lines(const SuiteResult& r) {
  std::ostringstream out;
  for (const auto& inst : r.instances) {
    for (const auto& c : inst.checks) {
      out << "RESULT " << c.subject << " " << c.check << " " << status_name(c.status);
      if (!c.witness.empty()) out << " witness=" << witness_text(c.witness);
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace indep
