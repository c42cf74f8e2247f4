#include <catch_amalgamated.hpp>

#include <set>

#include "indep/error.hpp"
#include "indep/parallel.hpp"
#include "indep/verify.hpp"

using namespace indep;

namespace {

std::vector<std::string> ids() {
  std::vector<std::string> out;
  for (const auto& s : list_suites()) out.emplace_back(s.id);
  return out;
}

// Matches "inst" or "inst/<relation>".
const CheckRecord* find_check(const SuiteResult& r, std::string_view subject, std::string_view check) {
  for (const auto& inst : r.instances)
    for (const auto& c : inst.checks)
      if (c.check == check && (c.subject == subject || c.subject == std::string(subject) + "/" ||
                               c.subject.starts_with(std::string(subject) + "/")))
        return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("suite list") {
  const std::set<std::string> want{"pregeom-axioms", "aM-eq-cl", "aM-eq-am", "mon-preserve", "c-preserve",
                                   "mc-to-M", "modularity-5way", "dim-laws", "rg-st", "dlo-div", "gebert"};
  auto got = ids();
  CHECK(std::set<std::string>(got.begin(), got.end()) == want);
  for (const auto& s : list_suites()) {
    CHECK_FALSE(s.statement.empty());
    CHECK_FALSE(s.scope.empty());
  }
  CHECK_THROWS_AS(run_suite("nope"), UnknownSuite);
}

TEST_CASE("every suite passes at its default scope") {
  for (const auto& id : ids()) {
    INFO(id);
    auto r = run_suite(id);
    CHECK(r.passed);
    CHECK_FALSE(r.instances.empty());
    CHECK(r.scanned > 0);
    const auto summary = format_summary(r);
    CHECK(summary.starts_with("suite " + id + ": pass"));
    CHECK(summary.find("unexpected") == std::string::npos);
  }
}

TEST_CASE("reports do not depend on the worker count") {
  for (const char* id : {"pregeom-axioms", "modularity-5way", "dlo-div", "gebert", "mc-to-M"}) {
    INFO(id);
    std::string first;
    for (unsigned w : {1u, 4u, 8u, 1u}) {
      set_worker_count(w);
      auto r = run_suite(id);
      const auto text = format_summary(r) + format_result_lines(r);
      if (first.empty()) {
        first = text;
      } else {
        CHECK(text == first);
      }
    }
  }
  set_worker_count(1);
}

TEST_CASE("custom instance selection") {
  SuiteOptions only;
  only.instances = std::vector<Instance>{*find_instance("u34")};
  auto r = run_suite("pregeom-axioms", only);
  CHECK(r.passed);
  REQUIRE(r.instances.size() == 1);
  CHECK(r.instances[0].instance == "u34");
  CHECK(find_check(r, "u34/cl", "FIN")->status == Status::Vacuous);
  CHECK(find_check(r, "u34/cl", "BMON-R")->status == Status::Pass);

  only.instances = std::vector<Instance>{*find_instance("gebert4")};
  auto bad = run_suite("pregeom-axioms", only);
  CHECK_FALSE(bad.passed);
  CHECK(format_summary(bad).find("unexpected") != std::string::npos);

  only.instances = std::vector<Instance>{};
  CHECK_FALSE(run_suite("dlo-div", only).passed);
}

TEST_CASE("modularity suite records the expected verdicts") {
  auto r = run_suite("modularity-5way");
  REQUIRE(r.passed);
  auto c5 = find_check(r, "u34", "COND5");
  REQUIRE(c5);
  CHECK(c5->status == Status::Fail);
  CHECK(c5->ok);
  CHECK(c5->detail.find("3+0 != 2+2") != std::string::npos);
  auto c1 = find_check(r, "u23", "COND1");
  REQUIRE(c1);
  CHECK(c1->status == Status::Pass);
}

TEST_CASE("dlo and gebert suites record the documented artefacts") {
  auto d = run_suite("dlo-div");
  REQUIRE(d.passed);
  auto tra = find_check(d, "dlo4/div", "TRA-R");
  REQUIRE(tra);
  CHECK(tra->status == Status::Fail);
  CHECK(tra->ok);
  auto config = find_check(d, "dlo4", "TRA-R-CONFIG");
  REQUIRE(config);
  CHECK(config->ok);

  auto g = run_suite("gebert");
  REQUIRE(g.passed);
  auto ex = find_check(g, "gebert8", "EXCHANGE({},1,2)");
  REQUIRE(ex);
  CHECK(ex->ok);
}

TEST_CASE("result lines follow the machine format") {
  SuiteOptions only;
  only.instances = std::vector<Instance>{*find_instance("dlo4")};
  auto r = run_suite("dlo-div", only);
  const auto lines = format_result_lines(r);
  CHECK(lines.find("RESULT dlo4/div TRA-R fail witness={1};{};{0};{0,2}\n") != std::string::npos);
  CHECK(lines.find("RESULT dlo4/div EX pass\n") != std::string::npos);
}
