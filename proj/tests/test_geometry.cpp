#include <catch_amalgamated.hpp>

#include <random>

#include "indep/geometry.hpp"
#include "indep/instances.hpp"
#include "oracle.hpp"

using namespace indep;

namespace {

std::vector<std::vector<unsigned>> vecs(std::initializer_list<const char*> words) {
  std::vector<std::vector<unsigned>> out;
  for (const char* w : words) {
    std::vector<unsigned> v;
    for (const char* p = w; *p; ++p) v.push_back(static_cast<unsigned>(*p - '0'));
    out.push_back(v);
  }
  return out;
}

std::function<Mask(Mask)> fn(const ClosureOperator& op) {
  return [op](Mask a) { return op(a); };
}

std::vector<Pregeometry> small_pregeometries(unsigned max_n) {
  std::vector<Pregeometry> out;
  for (const auto& inst : catalog()) {
    if (inst.ground().size() > max_n) continue;
    if (auto pg = inst.pregeometry()) out.push_back(*pg);
  }
  return out;
}

}  // namespace

TEST_CASE("linear closure matches Gaussian elimination") {
  struct Case {
    Field f;
    unsigned p;
    std::vector<std::vector<unsigned>> v;
  };
  std::vector<Case> cases{
      {Field::GF2, 2, vecs({"01", "10", "11"})},
      {Field::GF2, 2, vecs({"00", "01", "10", "11"})},
      {Field::GF3, 3, vecs({"10", "01", "11", "12"})},
      {Field::GF3, 3, vecs({"10", "20", "01", "11"})},
      {Field::GF3, 3, vecs({"100", "010", "110", "210", "001"})},
      {Field::GF2, 2, vecs({"100", "010", "001", "110", "101", "011"})},
      {Field::GF2, 2, vecs({"100", "010", "001", "110", "101", "011", "111"})},
  };
  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    const unsigned p = i % 2 ? 3 : 2;
    const unsigned n = 3 + static_cast<unsigned>(rng() % 4), d = 2 + static_cast<unsigned>(rng() % 3);
    std::vector<std::vector<unsigned>> v(n, std::vector<unsigned>(d));
    for (auto& row : v) {
      for (auto& x : row) x = static_cast<unsigned>(rng() % p);
    }
    cases.push_back({p == 2 ? Field::GF2 : Field::GF3, p, v});
  }
  for (const auto& c : cases) {
    auto op = linear_closure(c.f, c.v);
    auto want = oracle::gf_closure_table(c.p, c.v);
    auto got = op.table();
    CHECK(std::vector<Mask>(got.begin(), got.end()) == want);
    CHECK(std::holds_alternative<Pregeometry>(has_exchange(op)));
  }
  CHECK_THROWS_AS(linear_closure(Field::GF2, vecs({"01", "2"})), UsageError);
}

TEST_CASE("uniform closure") {
  for (unsigned n = 1; n <= 6; ++n) {
    for (unsigned r = 0; r <= n; ++r) {
      auto op = uniform_closure(r, n);
      for (Mask a = 0; a < (1U << n); ++a) {
        const Mask want = popcount(a) < r ? a : (1U << n) - 1;
        CHECK(op(a) == want);
      }
    }
  }
}

TEST_CASE("dim agrees with the rank oracle and the brute oracle") {
  for (const auto& pg : small_pregeometries(6)) {
    const GroundSet g = pg.ground();
    auto cl = fn(pg.closure());
    for (Mask a = 0; a < g.subset_count(); ++a) {
      for (Mask b = 0; b < g.subset_count(); ++b) {
        const unsigned d = dim_mask(pg, a, b);
        REQUIRE(d == oracle::dim_over(cl, a, b));
        REQUIRE(d == brute_dim_oracle(pg, Subset(g, a), Subset(g, b)));
      }
    }
  }
}

TEST_CASE("basis is independent and spanning") {
  for (const auto& pg : small_pregeometries(6)) {
    const GroundSet g = pg.ground();
    for (Mask a = 0; a < g.subset_count(); ++a) {
      for (Mask b = 0; b < g.subset_count(); b += 5) {
        auto r = basis_of(pg, Subset(g, a), Subset(g, b));
        REQUIRE(r.basis.is_subset_of(Subset(g, a)));
        REQUIRE(is_independent_mask(pg.closure(), r.basis.bits(), b));
        REQUIRE(oracle::sub(a, pg(r.basis.bits() | b)));
        REQUIRE(r.value == r.basis.size());
      }
    }
  }
}

TEST_CASE("dimension laws at n <= 5") {
  for (const auto& pg : small_pregeometries(5)) {
    const Mask count = pg.ground().subset_count();
    auto d = [&](Mask a, Mask b) { return dim_mask(pg, a, b); };
    for (Mask a = 0; a < count; ++a) {
      for (Mask b = 0; b < count; ++b) {
        REQUIRE(d(a | b, 0) + d(a & b, 0) <= d(a, 0) + d(b, 0));
        for (Mask c = 0; c < count; ++c) {
          REQUIRE(d(a | b, c) == d(a, b | c) + d(b, c));
          if (oracle::sub(c, b)) REQUIRE(d(a, b) <= d(a, c));
        }
      }
    }
  }
}

TEST_CASE("independence on the gebert operator") {
  auto op = gebert_closure(8);
  const GroundSet g = op.ground();
  for (Mask a = 0; a < g.subset_count(); ++a) {
    CHECK(is_independent_mask(op, a, 0) == (popcount(a) <= 1));
  }
  CHECK_THROWS_AS(require_pregeometry(op), UsageError);
}

TEST_CASE("small dimension examples") {
  auto u34 = require_pregeometry(uniform_closure(3, 4));
  GroundSet g(4);
  CHECK(dim(u34, Subset::full(g), Subset::empty(g)) == 3);
  CHECK(dim(u34, Subset::of(g, {0, 1}), Subset::of(g, {2, 3})) == 1);
  auto b = basis_of(u34, Subset::full(g), Subset::of(g, {1}));
  CHECK(b.basis == Subset::of(g, {0, 2}));
  CHECK_THROWS_AS(dim(u34, Subset::full(GroundSet(3)), Subset::empty(g)), UsageError);
}

TEST_CASE("modularity verdicts") {
  auto expect_all = [](const char* name, bool value) {
    INFO(name);
    auto pg = find_instance(name)->pregeometry();
    REQUIRE(pg);
    auto v = check_modular(*pg);
    for (const auto& c : v.conditions) CHECK(c.holds == value);
    CHECK(v.consistent());
    CHECK(v.modular() == value);
  };
  for (const char* n : {"trivial3", "trivial4", "trivial5", "u23", "u24", "gf2-3", "gf2-4", "gf2-8", "fano7"}) {
    expect_all(n, true);
  }
  for (const char* n : {"u34", "u35", "gf2-6"}) expect_all(n, false);

  auto v = check_modular(*find_instance("u34")->pregeometry());
  const auto& c5 = v.conditions[4];
  GroundSet g(4);
  REQUIRE(c5.witness.size() == 2);
  CHECK(c5.witness[0] == Subset::of(g, {0, 1}));
  CHECK(c5.witness[1] == Subset::of(g, {2, 3}));
  CHECK(c5.detail.find("3+0 != 2+2") != std::string::npos);
}

TEST_CASE("modularity against a direct lattice check") {
  // Modular iff the modular law holds on closed sets, computed from the rank oracle.
  for (const auto& inst : catalog()) {
    auto pg = inst.pregeometry();
    if (!pg || inst.ground().size() > 7) continue;
    INFO(inst.name);
    auto cl = fn(pg->closure());
    bool law = true;
    const Mask count = inst.ground().subset_count();
    for (Mask a = 0; a < count && law; ++a) {
      if (cl(a) != a) continue;
      for (Mask b = 0; b < count && law; ++b) {
        if (cl(b) != b) continue;
        law = oracle::rank_of(cl, a | b) + oracle::rank_of(cl, a & b) ==
              oracle::rank_of(cl, a) + oracle::rank_of(cl, b);
      }
    }
    auto v = check_modular(*pg);
    CHECK(v.consistent());
    CHECK(v.modular() == law);
    if (inst.expected_modular) CHECK(*inst.expected_modular == law);
  }
}
