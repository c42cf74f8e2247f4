// indep: command-line front end for the closure / independence library.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "indep/axioms.hpp"
#include "indep/geometry.hpp"
#include "indep/instances.hpp"
#include "indep/parallel.hpp"
#include "indep/verify.hpp"

using namespace indep;

namespace {

struct Common {
  unsigned workers = std::max(1U, std::thread::hardware_concurrency());
  bool strict = false;
  bool timing = false;
  std::string intervals = "inclusive";
};

IntervalMode interval_mode(const std::string& s) {
  if (s == "inclusive") return IntervalMode::Inclusive;
  if (s == "strict") return IntervalMode::Strict;
  throw ParseError("intervals", "--intervals must be inclusive or strict, got '" + s + "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// Applies --relativize / --restrict to the instance closure.
Instance adjust(Instance inst, const std::string& relativize_to, const std::string& restrict_to_set) {
  if (!relativize_to.empty()) {
    const Subset b = parse_subset(inst.ground(), relativize_to);
    inst.closure = relativize(inst.closure, b);
    inst.name += "|rel" + to_string(b);
  }
  if (!restrict_to_set.empty()) {
    if (inst.graph || inst.order) {
      throw UsageError("--restrict applies to closure instances, not to " + std::string(kind_name(inst.kind)));
    }
    const Subset b = parse_subset(inst.ground(), restrict_to_set);
    inst.closure = restrict_to(inst.closure, b);
    inst.name += "|res" + to_string(b);
  }
  return inst;
}

std::string witness_text(const std::vector<Subset>& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ';';
    out += to_string(w[i]);
  }
  return out;
}

struct CheckArgs {
  std::string instance, relation, axiom, relativize, restrict;
  bool all = false;
};

int cmd_check(const CheckArgs& a, const Common& c) {
  const Instance inst = adjust(load_instance(a.instance), a.relativize, a.restrict);
  const TernaryRelation r = relation_by_id(inst, a.relation, interval_mode(c.intervals));
  std::vector<AxiomReport> reports;
  if (a.all) {
    reports = check_all(r, &inst.closure);
  } else {
    if (a.axiom.empty()) throw ParseError("axiom", "check needs --axiom or --all");
    auto ax = parse_axiom(a.axiom);
    if (!ax) throw ParseError("axiom", "unknown axiom '" + a.axiom + "'");
    reports.push_back(check_axiom(r, *ax, &inst.closure));
  }
  bool any_fail = false;
  std::chrono::nanoseconds total{0};
  for (auto& rep : reports) {
    rep.relation = inst.name + "/" + rep.relation;
    std::cout << result_line(rep) << "\n";
    if (rep.status == Status::Fail) {
      std::cout << "  " << describe_witness(rep) << "\n";
      any_fail = true;
    } else if (rep.status == Status::Vacuous) {
      std::cout << "  " << rep.note << "\n";
    }
    total += rep.elapsed;
  }
  if (c.timing) std::cerr << "elapsed " << total.count() / 1000000 << " ms\n";
  return c.strict && any_fail ? 1 : 0;
}

int cmd_compare(const std::string& instance, const std::string& relations, const Common& c) {
  const Instance inst = load_instance(instance);
  const auto ids = split(relations, ',');
  if (ids.size() != 2) throw ParseError("relations", "--relations takes exactly two ids, e.g. cl,a");
  const auto mode = interval_mode(c.intervals);
  const ComparisonResult res =
      compare(relation_by_id(inst, ids[0], mode), relation_by_id(inst, ids[1], mode));
  std::cout << ids[0] << " " << comparison_name(res.verdict) << " " << ids[1] << "\n";
  std::cout << "only-" << ids[0] << "=" << res.only_first << " only-" << ids[1] << "=" << res.only_second << "\n";
  if (res.least_difference) {
    const Triple& t = *res.least_difference;
    std::cout << "least difference A=" << to_string(t.a) << " B=" << to_string(t.b) << " C=" << to_string(t.c)
              << "\n";
  }
  return 0;
}

struct SetArgs {
  std::string instance, set, over, relativize, restrict;
};

int cmd_dim(const SetArgs& a, const Common&) {
  const Instance inst = adjust(load_instance(a.instance), a.relativize, a.restrict);
  const Subset s = parse_subset(inst.ground(), a.set);
  const Subset o = parse_subset(inst.ground(), a.over);
  auto pg = inst.pregeometry();
  if (!pg) {
    auto w = std::get<ExchangeWitness>(has_exchange(inst.closure));
    std::cout << "dimension undefined (no exchange): A=" << to_string(w.base) << " a=" << w.a << " b=" << w.b
              << "\n";
    return 1;
  }
  const DimResult d = basis_of(*pg, s, o);
  std::cout << "dim=" << d.value << " basis=" << to_string(d.basis) << "\n";
  return 0;
}

int cmd_basis(const SetArgs& a, const Common&) {
  const Instance inst = adjust(load_instance(a.instance), a.relativize, a.restrict);
  const Subset s = parse_subset(inst.ground(), a.set);
  const Subset o = parse_subset(inst.ground(), a.over);
  std::cout << "closure=" << to_string(inst.closure(s | o)) << "\n";
  std::cout << "independent=" << (is_independent(inst.closure, s, o) ? "yes" : "no") << "\n";
  if (auto pg = inst.pregeometry()) {
    std::cout << "basis=" << to_string(basis_of(*pg, s, o).basis) << "\n";
  } else {
    std::cout << "basis undefined (no exchange)\n";
  }
  return 0;
}

int cmd_modular(const std::string& instance, const Common& c) {
  const Instance inst = load_instance(instance);
  auto pg = inst.pregeometry();
  if (!pg) {
    auto w = std::get<ExchangeWitness>(has_exchange(inst.closure));
    std::cout << "not a pregeometry: exchange fails at A=" << to_string(w.base) << " a=" << w.a << " b=" << w.b
              << "\n";
    return c.strict ? 1 : 0;
  }
  const ModularityVerdict v = check_modular(*pg);
  for (std::size_t i = 0; i < v.conditions.size(); ++i) {
    const auto& cond = v.conditions[i];
    std::cout << "condition " << i + 1 << ": " << (cond.holds ? "true" : "false");
    if (!cond.holds) std::cout << " witness=" << witness_text(cond.witness) << " (" << cond.detail << ")";
    std::cout << "\n";
  }
  std::cout << "modular=" << (v.modular() ? "yes" : "no") << " consistent=" << (v.consistent() ? "yes" : "no")
            << "\n";
  return c.strict && !v.consistent() ? 1 : 0;
}

struct SearchArgs {
  std::string goal, relation = "a", space = "catalog";
  unsigned max_n = 6;
};

SearchGoal parse_goal(const std::string& text) {
  const auto arrow = text.find("=>");
  const std::string lhs = arrow == std::string::npos ? "" : text.substr(0, arrow);
  const std::string rhs = arrow == std::string::npos ? text : text.substr(arrow + 2);
  SearchGoal goal;
  for (const auto& p : split(lhs, ',')) {
    auto cond = parse_condition(p);
    if (!cond) throw ParseError("goal", "unknown premise '" + p + "'");
    goal.premises.push_back(*cond);
  }
  auto target = parse_condition(rhs);
  if (!target) throw ParseError("goal", "unknown target '" + rhs + "'");
  goal.target = *target;
  return goal;
}

int cmd_search(const SearchArgs& a, const Common& c) {
  const SearchGoal goal = parse_goal(a.goal);
  SearchOutcome outcome;
  if (a.space == "catalog") {
    outcome = search_counterexample(goal, catalog_candidates(a.relation, a.max_n));
  } else if (a.space == "all") {
    if (a.max_n > 1) {
      throw CapExceeded("--space all enumerates every relation and supports --max-n 0 or 1");
    }
    for (unsigned n = 0; n <= a.max_n && !outcome.hit; ++n) {
      const SearchOutcome part = search_counterexample(goal, all_relations(GroundSet(n)));
      outcome.examined += part.examined;
      outcome.hit = part.hit;
      if (outcome.hit) outcome.hit->candidate.name = "n" + std::to_string(n) + "/" + outcome.hit->candidate.name;
    }
  } else {
    throw ParseError("space", "--space must be catalog or all, got '" + a.space + "'");
  }
  if (outcome.hit) {
    std::cout << "found " << outcome.hit->candidate.name << " witness=" << witness_text(outcome.hit->witness) << "\n";
    std::cout << "  " << outcome.hit->description << "\n";
  } else {
    std::cout << "exhausted\n";
  }
  std::cout << "examined " << outcome.examined << " candidates\n";
  return c.strict && outcome.hit ? 1 : 0;
}

struct VerifyArgs {
  std::vector<std::string> suites;
  std::string instances, report;
};

int cmd_verify(const VerifyArgs& a, const Common& c) {
  std::vector<std::string> ids = a.suites;
  if (ids.size() == 1 && ids[0] == "all") {
    ids.clear();
    for (const auto& s : list_suites()) ids.emplace_back(s.id);
  }
  SuiteOptions opt;
  opt.intervals = interval_mode(c.intervals);
  if (!a.instances.empty()) {
    std::vector<Instance> chosen;
    for (const auto& name : split(a.instances, ',')) chosen.push_back(load_instance(name));
    opt.instances = std::move(chosen);
  }
  std::ofstream report;
  if (!a.report.empty()) {
    report.open(a.report);
    if (!report) throw ParseError("report", "cannot write report file '" + a.report + "'");
  }
  bool all_pass = true;
  for (const auto& id : ids) {
    const SuiteResult res = run_suite(id, opt);
    std::cout << format_summary(res);
    if (report) report << format_result_lines(res);
    if (c.timing) std::cerr << id << " elapsed " << res.elapsed.count() / 1000000 << " ms\n";
    all_pass = all_pass && res.passed;
  }
  return all_pass ? 0 : 1;
}

int cmd_list() {
  std::cout << "instances:\n";
  for (const auto& inst : catalog()) {
    std::cout << "  " << inst.name << "  " << kind_name(inst.kind) << " n=" << inst.ground().size() << "  "
              << inst.provenance << "\n";
  }
  std::cout << "relations:\n";
  for (const auto& r : relation_catalog()) std::cout << "  " << r.id << "  " << r.description << "\n";
  std::cout << "axioms:\n";
  for (AxiomId ax : all_axioms()) {
    std::cout << "  " << axiom_name(ax);
    const auto vars = axiom_variables(ax);
    if (!vars.empty()) {
      std::cout << "  (";
      for (std::size_t i = 0; i < vars.size(); ++i) std::cout << (i ? ";" : "") << vars[i];
      std::cout << ")";
    }
    if (requires_closure(ax)) std::cout << "  needs closure";
    if (is_vacuous_at_finite_scale(ax)) std::cout << "  vacuous";
    std::cout << "\n";
  }
  std::cout << "suites:\n";
  for (const auto& s : list_suites()) std::cout << "  " << s.id << "  " << s.statement << " [" << s.scope << "]\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite closure operators, pregeometries and independence relations"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--workers", common.workers, "Worker threads (output does not depend on it)")
      ->check(CLI::Range(1U, 256U));
  app.add_flag("--strict", common.strict, "Exit 1 when a check fails or a counterexample is found");
  app.add_flag("--timing", common.timing, "Print elapsed time to stderr");
  app.add_option("--intervals", common.intervals, "Dividing intervals: inclusive (default) or strict")
      ->check(CLI::IsMember({"inclusive", "strict"}));

  CheckArgs check;
  auto* c_check = app.add_subcommand("check", "Check axioms of a relation on an instance");
  c_check->add_option("--instance", check.instance, "Catalog name or instance file")->required();
  c_check->add_option("--relation", check.relation, "Relation id, e.g. a, cl, aM, opp(st)")->required();
  c_check->add_option("--axiom", check.axiom, "Axiom id, e.g. BMON-R");
  c_check->add_flag("--all", check.all, "Check every applicable axiom");
  c_check->add_option("--relativize", check.relativize, "Replace cl by A -> cl(A u S)");
  c_check->add_option("--restrict", check.restrict, "Replace cl by its restriction to S");

  std::string cmp_instance, cmp_relations;
  auto* c_compare = app.add_subcommand("compare", "Compare two relations as truth tables");
  c_compare->add_option("--instance", cmp_instance, "Catalog name or instance file")->required();
  c_compare->add_option("--relations", cmp_relations, "Two relation ids, comma separated")->required();

  SetArgs dim_args, basis_args;
  auto* c_dim = app.add_subcommand("dim", "Dimension of a set over another");
  auto* c_basis = app.add_subcommand("basis", "Closure, independence and greedy basis of a set over another");
  for (auto [sub, args] : {std::pair{c_dim, &dim_args}, std::pair{c_basis, &basis_args}}) {
    sub->add_option("--instance", args->instance, "Catalog name or instance file")->required();
    sub->add_option("--set", args->set, "The set, e.g. 0,1 or {0,1}")->required();
    sub->add_option("--over", args->over, "The base set (default empty)");
    sub->add_option("--relativize", args->relativize, "Replace cl by A -> cl(A u S)");
    sub->add_option("--restrict", args->restrict, "Replace cl by its restriction to S");
  }

  std::string mod_instance;
  auto* c_modular = app.add_subcommand("modular", "Evaluate the five modularity conditions");
  c_modular->add_option("--instance", mod_instance, "Catalog name or instance file")->required();

  SearchArgs search;
  auto* c_search = app.add_subcommand("search", "Find the first candidate meeting premises and failing a target");
  c_search->add_option("--goal", search.goal, "PREMISE,...=>TARGET, e.g. exchange=>BMON-R")->required();
  c_search->add_option("--relation", search.relation, "Relation id for catalog candidates (default a)");
  c_search->add_option("--space", search.space, "catalog (default) or all (every relation, n <= 1)");
  c_search->add_option("--max-n", search.max_n, "Largest ground set considered");

  VerifyArgs verify;
  auto* c_verify = app.add_subcommand("verify", "Run theorem suites");
  c_verify->add_option("--suite", verify.suites, "Suite id, repeatable, or all")->required();
  c_verify->add_option("--instances", verify.instances, "Comma-separated instances replacing the default selection");
  c_verify->add_option("--report", verify.report, "Write RESULT lines to this file");

  auto* c_list = app.add_subcommand("list", "List instances, relations, axioms and suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  set_worker_count(common.workers);
  try {
    if (c_check->parsed()) return cmd_check(check, common);
    if (c_compare->parsed()) return cmd_compare(cmp_instance, cmp_relations, common);
    if (c_dim->parsed()) return cmd_dim(dim_args, common);
    if (c_basis->parsed()) return cmd_basis(basis_args, common);
    if (c_modular->parsed()) return cmd_modular(mod_instance, common);
    if (c_search->parsed()) return cmd_search(search, common);
    if (c_verify->parsed()) return cmd_verify(verify, common);
    if (c_list->parsed()) return cmd_list();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << " [key: " << e.key() << "]\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
