#include <catch_amalgamated.hpp>

#include <random>

#include "indep/axioms.hpp"
#include "indep/error.hpp"
#include "indep/instances.hpp"
#include "indep/parallel.hpp"
#include "oracle.hpp"

using namespace indep;

namespace {

struct Subject {
  std::string label;
  TernaryRelation rel;
  ClosureOperator op;
};

std::vector<Subject> subjects(unsigned max_n) {
  std::vector<Subject> out;
  for (const auto& inst : catalog()) {
    if (inst.ground().size() > max_n) continue;
    for (const char* id : {"a", "int", "top", "cl", "st", "div", "aM", "am", "ac", "intc", "stm"}) {
      try {
        out.push_back({inst.name + "/" + id, materialize(relation_by_id(inst, id)), inst.closure});
      } catch (const UsageError&) {
      }
    }
    for (std::uint64_t seed = 0; seed < 2; ++seed) {
      auto r = random_relation(inst.ground(), seed * 1000 + inst.ground().size(), "rnd");
      out.push_back({inst.name + "/rnd" + std::to_string(seed), r, inst.closure});
    }
  }
  return out;
}

oracle::Rel as_rel(const TernaryRelation& r) {
  return [r](Mask a, Mask b, Mask c) { return r(a, b, c); };
}

std::function<Mask(Mask)> as_cl(const ClosureOperator& op) {
  return [op](Mask a) { return op(a); };
}

std::vector<Mask> ms(std::initializer_list<Mask> l) { return l; }

}  // namespace

TEST_CASE("names and parsing") {
  CHECK(all_axioms().size() == 19);
  for (auto ax : all_axioms()) {
    CHECK(parse_axiom(axiom_name(ax)) == ax);
    CHECK(axiom_variables(ax).size() == oracle::arity(ax));
  }
  CHECK(parse_axiom("bmon-r") == AxiomId::BMON_R);
  CHECK(parse_axiom("BMON_R") == AxiomId::BMON_R);
  CHECK_FALSE(parse_axiom("bmonr"));
  CHECK(parse_axiom("tra-strong") == AxiomId::TRA_STRONG);
  CHECK(requires_closure(AxiomId::AREF));
  CHECK(requires_closure(AxiomId::SCLO));
  CHECK_FALSE(requires_closure(AxiomId::FREE));
  CHECK(is_vacuous_at_finite_scale(AxiomId::FIN));
  CHECK(is_vacuous_at_finite_scale(AxiomId::LOC));
}

TEST_CASE("library scan equals the naive lexicographic rescan") {
  for (const auto& s : subjects(4)) {
    INFO(s.label);
    const unsigned n = s.rel.ground().size();
    for (auto ax : all_axioms()) {
      INFO(axiom_name(ax));
      auto report = check_axiom(s.rel, ax, &s.op);
      if (is_vacuous_at_finite_scale(ax)) {
        CHECK(report.status == Status::Vacuous);
        CHECK(report.witness.empty());
        CHECK_FALSE(report.note.empty());
        continue;
      }
      auto naive = oracle::first_violation(ax, n, as_rel(s.rel), as_cl(s.op));
      REQUIRE((report.status == Status::Fail) == naive.has_value());
      if (!naive) {
        CHECK(report.witness.empty());
        continue;
      }
      const auto w = oracle::masks(report.witness);
      CHECK(w == *naive);
      auto lib = evaluate_axiom_instance(s.rel, ax, &s.op, w);
      REQUIRE(lib.has_value());
      CHECK_FALSE(*lib);
      std::array<Mask, 4> t{};
      std::copy(w.begin(), w.end(), t.begin());
      CHECK(oracle::body(ax, as_rel(s.rel), as_cl(s.op), t) == std::optional<bool>(false));
    }
  }
}

TEST_CASE("instance evaluation agrees with the oracle body") {
  std::mt19937_64 rng(3);
  for (const auto& s : subjects(4)) {
    const Mask count = s.rel.ground().subset_count();
    for (auto ax : all_axioms()) {
      const std::size_t k = oracle::arity(ax);
      if (k == 0) continue;
      for (int i = 0; i < 40; ++i) {
        std::array<Mask, 4> t{};
        for (std::size_t j = 0; j < k; ++j) t[j] = static_cast<Mask>(rng() % count);
        auto lib = evaluate_axiom_instance(s.rel, ax, &s.op, std::span<const Mask>(t.data(), k));
        REQUIRE(lib == oracle::body(ax, as_rel(s.rel), as_cl(s.op), t));
      }
    }
  }
}

TEST_CASE("witnesses are independent of the worker count") {
  auto u35 = find_instance("u35");
  std::vector<TernaryRelation> rels{relation_by_id(*u35, "a"), random_relation(u35->ground(), 4, "rnd"),
                                    relation_by_id(*find_instance("dlo5"), "div")};
  for (const auto& r : rels) {
    std::vector<std::string> lines[3];
    int slot = 0;
    for (unsigned w : {1u, 4u, 8u}) {
      set_worker_count(w);
      for (const auto& rep : check_all(r, &u35->closure)) lines[slot].push_back(result_line(rep));
      ++slot;
    }
    CHECK(lines[0] == lines[1]);
    CHECK(lines[0] == lines[2]);
  }
  set_worker_count(1);
}

TEST_CASE("frozen witnesses") {
  auto u34 = find_instance("u34");
  auto rep = check_axiom(rel_a(u34->closure), AxiomId::BMON_R);
  REQUIRE(rep.status == Status::Fail);
  CHECK(oracle::masks(rep.witness) == ms({0b0011, 0, 0b0100, 0b1100}));
  CHECK(result_line(rep) == "RESULT a BMON-R fail witness={0,1};{};{2};{2,3}");
  CHECK(describe_witness(rep) == "A={0,1} C={} B={2} D={2,3}");

  auto dlo4 = find_instance("dlo4");
  auto tra = check_axiom(relation_by_id(*dlo4, "div"), AxiomId::TRA_R);
  REQUIRE(tra.status == Status::Fail);
  CHECK(oracle::masks(tra.witness) == ms({0b0010, 0, 0b0001, 0b0101}));
  // b1=0 < c=1 < a=2 < b2=3: A={a}, C={}, B={c}, D={b1,c,b2}.
  const Mask documented[] = {0b0100, 0, 0b0010, 0b1011};
  CHECK(evaluate_axiom_instance(relation_by_id(*dlo4, "div"), AxiomId::TRA_R, nullptr, documented) ==
        std::optional<bool>(false));

  auto top = rel_always_true(GroundSet(3));
  auto aref = check_axiom(top, AxiomId::AREF, &find_instance("trivial3")->closure);
  REQUIRE(aref.status == Status::Fail);
  CHECK(describe_witness(aref) == "a=0 C={}");
}

TEST_CASE("vacuous axioms carry notes") {
  auto r = rel_intersection(GroundSet(3));
  auto fin = check_axiom(r, AxiomId::FIN);
  auto loc = check_axiom(r, AxiomId::LOC);
  CHECK(fin.status == Status::Vacuous);
  CHECK(loc.status == Status::Vacuous);
  CHECK(fin.note == "every subset of a finite ground set is finite");
  CHECK(loc.note == "holds with kappa = 4 on a finite ground set");
  CHECK(result_line(fin) == "RESULT int FIN vacuous");
}

TEST_CASE("closure-dependent axioms need a closure") {
  auto r = rel_intersection(GroundSet(3));
  CHECK_THROWS_AS(check_axiom(r, AxiomId::AREF), MissingClosure);
  CHECK_THROWS_AS(check_axiom(r, AxiomId::CLO_R), MissingClosure);
  CHECK_THROWS_AS(check_axiom(r, AxiomId::SCLO), MissingClosure);
  auto without = check_all(r);
  auto with = check_all(r, &find_instance("trivial3")->closure);
  CHECK(with.size() == 19);
  CHECK(without.size() == 15);
  for (const auto& rep : without) CHECK_FALSE(requires_closure(rep.axiom));
}

TEST_CASE("a satisfies AREF and SCLO on every catalog instance") {
  for (const auto& inst : catalog()) {
    if (inst.ground().size() > 6) continue;
    INFO(inst.name);
    auto r = rel_a(inst.closure);
    CHECK(check_axiom(r, AxiomId::AREF, &inst.closure).status == Status::Pass);
    CHECK(check_axiom(r, AxiomId::SCLO, &inst.closure).status == Status::Pass);
  }
}

TEST_CASE("strong forms follow from the base axioms") {
  auto pass = [](const TernaryRelation& r, AxiomId ax) { return check_axiom(r, ax).status == Status::Pass; };
  int tra_cases = 0, bmon_cases = 0;
  for (const auto& s : subjects(5)) {
    INFO(s.label);
    const bool nm = pass(s.rel, AxiomId::NOR_R) && pass(s.rel, AxiomId::MON_R);
    if (nm && pass(s.rel, AxiomId::TRA_R)) {
      ++tra_cases;
      CHECK(pass(s.rel, AxiomId::TRA_STRONG));
    }
    if (nm && pass(s.rel, AxiomId::BMON_R)) {
      ++bmon_cases;
      CHECK(pass(s.rel, AxiomId::BMON_STRONG));
    }
  }
  CHECK(tra_cases > 20);
  CHECK(bmon_cases > 20);
}

TEST_CASE("comparison") {
  auto pg = find_instance("u34")->pregeometry();
  REQUIRE(pg);
  auto cl = rel_cl(*pg);
  auto a = rel_a(pg->closure());
  auto res = compare(cl, a);
  CHECK(res.verdict == Comparison::Implies);
  CHECK(res.only_first == 0);
  CHECK(res.only_second == 6);
  REQUIRE(res.least_difference);
  GroundSet g(4);
  CHECK(*res.least_difference == Triple{Subset::of(g, {0, 1}), Subset::of(g, {2, 3}), Subset::empty(g)});
  CHECK(res.least_only_second == res.least_difference);
  CHECK_FALSE(res.least_only_first);

  auto back = compare(a, cl);
  CHECK(back.verdict == Comparison::Implied);
  CHECK(back.only_first == 6);
  CHECK(compare(a, a).verdict == Comparison::Equal);

  // Oracle count over the table.
  std::function<Mask(Mask)> f = [&](Mask x) { return pg->closure()(x); };
  std::uint64_t differ = 0;
  for (Mask x = 0; x < 16; ++x)
    for (Mask y = 0; y < 16; ++y)
      for (Mask z = 0; z < 16; ++z) {
        const bool rc = oracle::dim_over(f, x, y | z) == oracle::dim_over(f, x, z);
        const bool ra = (f(x | z) & f(y | z)) == f(z);
        differ += rc != ra;
      }
  CHECK(differ == 6);

  auto r1 = random_relation(GroundSet(2), 1, "p");
  auto r2 = random_relation(GroundSet(2), 2, "q");
  CHECK(compare(r1, r2).verdict == Comparison::Incomparable);
  CHECK(compare(rel_intersection(GroundSet(2)), rel_always_true(GroundSet(2))).verdict == Comparison::Implies);
}

TEST_CASE("search over every relation on one point") {
  SearchGoal goal{{AxiomId::SYM}, AxiomId::MON_R};
  auto out = search_counterexample(goal, all_relations(GroundSet(1)));
  REQUIRE(out.hit);
  // Oracle: first code whose relation is symmetric and fails MON-R.
  auto trivial = ClosureOperator::trivial(GroundSet(1));
  std::uint64_t expect = 0;
  for (; expect < 256; ++expect) {
    oracle::Rel r = [expect](Mask a, Mask b, Mask c) { return ((expect >> ((a << 2) | (b << 1) | c)) & 1U) != 0; };
    if (!oracle::first_violation(AxiomId::SYM, 1, r, as_cl(trivial)) &&
        oracle::first_violation(AxiomId::MON_R, 1, r, as_cl(trivial)))
      break;
  }
  CHECK(out.hit->candidate.name == "rel" + std::to_string(expect));
  CHECK(out.examined == expect + 1);
  CHECK_THROWS_AS(all_relations(GroundSet(2)), CapExceeded);
}

TEST_CASE("search over the catalog") {
  auto hit = search_counterexample({{ExchangeLaw{}}, AxiomId::BMON_R}, catalog_candidates("a"));
  REQUIRE(hit.hit);
  CHECK(hit.hit->candidate.name == "u34");
  CHECK(oracle::masks(hit.hit->witness) == ms({0b0011, 0, 0b0100, 0b1100}));

  auto exch = search_counterexample({{}, ExchangeLaw{}}, catalog_candidates("a"));
  REQUIRE(exch.hit);
  CHECK(exch.hit->candidate.name == "gebert4");

  auto none = search_counterexample({{AxiomId::SYM}, AxiomId::EX}, catalog_candidates("a", 5));
  CHECK_FALSE(none.hit);
  CHECK(none.examined > 10);

  CHECK(parse_condition("exchange"));
  CHECK(parse_condition("exch"));
  CHECK(parse_condition("nor-l") == std::optional<Condition>(AxiomId::NOR_L));
  CHECK_FALSE(parse_condition("nope"));
  CHECK(condition_name(ExchangeLaw{}) == "exchange");
}
