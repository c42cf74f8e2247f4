#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "indep/closure.hpp"
#include "indep/instances.hpp"
#include "oracle.hpp"

using namespace indep;

namespace {

// Closure of the Moore family generated by random sets: cl(A) is the
// intersection of all members containing A.
std::vector<Mask> moore_table(unsigned n, std::mt19937_64& rng) {
  const Mask full = (Mask{1} << n) - 1;
  std::vector<Mask> family{full};
  for (int i = 0; i < 4; ++i) family.push_back(static_cast<Mask>(rng()) & full);
  std::vector<Mask> t(std::size_t{1} << n);
  for (Mask a = 0; a <= full; ++a) {
    Mask c = full;
    for (Mask f : family) {
      if (oracle::sub(a, f)) c &= f;
    }
    t[a] = c;
  }
  return t;
}

std::optional<std::tuple<Mask, unsigned, unsigned>> naive_exchange(const ClosureOperator& op) {
  const unsigned n = op.ground().size();
  for (Mask a = 0; a < op.ground().subset_count(); ++a) {
    for (unsigned x = 0; x < n; ++x) {
      for (unsigned y = 0; y < n; ++y) {
        const bool in_with_y = (op(a | (1U << y)) >> x) & 1U;
        const bool in_base = (op(a) >> x) & 1U;
        const bool back = (op(a | (1U << x)) >> y) & 1U;
        if (in_with_y && !in_base && !back) return std::tuple{a, x, y};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("catalog closures satisfy the laws") {
  for (const auto& inst : catalog()) {
    INFO(inst.name);
    const auto t = inst.closure.table();
    CHECK(oracle::is_closure_table(inst.ground().size(), std::vector<Mask>(t.begin(), t.end())));
  }
}

TEST_CASE("law detection agrees with the oracle on random tables") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 400; ++round) {
    const unsigned n = 1 + round % 3;
    std::vector<Mask> t(std::size_t{1} << n);
    if (round % 2 == 0) {
      for (auto& x : t) x = static_cast<Mask>(rng()) & ((1U << n) - 1);
      for (Mask a = 0; a < t.size(); ++a) {
        if (rng() % 2) t[a] |= a;
      }
    } else {
      t = moore_table(n, rng);
    }
    const bool good = oracle::is_closure_table(n, t);
    auto v = find_law_violation(GroundSet(n), t);
    CHECK(good == !v.has_value());
    if (good) {
      CHECK_NOTHROW(ClosureOperator::from_table(GroundSet(n), t));
    } else {
      CHECK_THROWS_AS(ClosureOperator::from_table(GroundSet(n), t), LawViolation);
    }
  }
}

TEST_CASE("law witnesses") {
  GroundSet g(2);
  auto refl = find_law_violation(g, std::vector<Mask>{0, 0, 2, 3});
  REQUIRE(refl);
  CHECK(refl->law() == ClosureLaw::Reflexivity);
  CHECK(refl->witness().at(0).bits() == 1);

  auto mono = find_law_violation(g, std::vector<Mask>{1, 1, 2, 3});
  REQUIRE(mono);
  CHECK(mono->law() == ClosureLaw::Monotonicity);
  CHECK(mono->witness().at(0).bits() == 0);
  CHECK(mono->witness().at(1).bits() == 2);

  GroundSet g3(3);
  auto idem = find_law_violation(g3, std::vector<Mask>{0, 3, 2, 7, 4, 7, 6, 7});
  REQUIRE(idem);
  CHECK(idem->law() == ClosureLaw::Idempotence);
  CHECK(idem->witness().at(0).bits() == 1);
}

TEST_CASE("spanner closure is the least fixed point") {
  GroundSet g(4);
  // x pulls in x+1.
  auto op = ClosureOperator::from_spanner(g, [](Mask a) { return (a | (a << 1)) & 0xF; });
  CHECK(op(0b0001) == 0b1111);
  CHECK(op(0b0100) == 0b1100);
  CHECK(op(0) == 0);
}

TEST_CASE("exchange detection agrees with a naive scan") {
  for (const auto& inst : catalog()) {
    INFO(inst.name);
    auto naive = naive_exchange(inst.closure);
    auto r = has_exchange(inst.closure);
    if (!naive) {
      CHECK(std::holds_alternative<Pregeometry>(r));
      CHECK(exchange_violations(inst.closure).empty());
    } else {
      REQUIRE(std::holds_alternative<ExchangeWitness>(r));
      const auto& w = std::get<ExchangeWitness>(r);
      CHECK(w.base.bits() == std::get<0>(*naive));
      CHECK(w.a == std::get<1>(*naive));
      CHECK(w.b == std::get<2>(*naive));
      CHECK_THROWS_AS(require_pregeometry(inst.closure), UsageError);
    }
  }
}

TEST_CASE("gebert operator fails exchange") {
  auto op = gebert_closure(4);
  auto r = has_exchange(op);
  REQUIRE(std::holds_alternative<ExchangeWitness>(r));
  const auto w = std::get<ExchangeWitness>(r);
  CHECK(w == ExchangeWitness{Subset::empty(op.ground()), 0, 1});
  auto all = exchange_violations(op);
  CHECK(std::find(all.begin(), all.end(), ExchangeWitness{Subset::empty(op.ground()), 1, 2}) != all.end());
  for (const auto& v : all) {
    CHECK(((op(v.base.bits() | (1U << v.b)) >> v.a) & 1U));
    CHECK_FALSE(((op(v.base.bits()) >> v.a) & 1U));
    CHECK_FALSE(((op(v.base.bits() | (1U << v.a)) >> v.b) & 1U));
  }
}

TEST_CASE("relativization and restriction") {
  for (const auto& inst : catalog()) {
    if (inst.ground().size() > 6) continue;
    INFO(inst.name);
    const auto& op = inst.closure;
    const GroundSet g = op.ground();
    for (Mask b = 0; b < g.subset_count(); b += 3) {
      auto rel = relativize(op, Subset(g, b));
      auto res = restrict_to(op, Subset(g, b));
      const unsigned k = popcount(b);
      CHECK(res.ground().size() == k);
      std::vector<unsigned> pos;
      for (unsigned e = 0; e < g.size(); ++e) {
        if ((b >> e) & 1U) pos.push_back(e);
      }
      for (Mask a = 0; a < g.subset_count(); ++a) CHECK(rel(a) == op(a | b));
      for (Mask a = 0; a < res.ground().subset_count(); ++a) {
        Mask up = 0;
        for (unsigned i = 0; i < k; ++i) {
          if ((a >> i) & 1U) up |= 1U << pos[i];
        }
        const Mask got = op(up) & b;
        Mask down = 0;
        for (unsigned i = 0; i < k; ++i) {
          if ((got >> pos[i]) & 1U) down |= 1U << i;
        }
        CHECK(res(a) == down);
      }
      if (inst.pregeometry()) {
        CHECK(std::holds_alternative<Pregeometry>(has_exchange(rel)));
        CHECK(std::holds_alternative<Pregeometry>(has_exchange(res)));
      }
    }
  }
}

TEST_CASE("trivial operator") {
  auto op = ClosureOperator::trivial(GroundSet(3));
  CHECK(op.is_trivial());
  for (Mask a = 0; a < 8; ++a) CHECK(op(a) == a);
  CHECK_FALSE(uniform_closure(2, 3).is_trivial());
  CHECK(ClosureOperator().ground().size() == 0);
}
