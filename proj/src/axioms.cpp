#include "indep/axioms.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <mutex>

#include "indep/parallel.hpp"

namespace indep {

namespace {

struct AxiomInfo {
  AxiomId id;
  std::string_view name;
  std::span<const std::string_view> vars;
  bool needs_closure;
};

constexpr std::string_view kNoVars[] = {""};
constexpr std::string_view kAC[] = {"A", "C"};
constexpr std::string_view kABC[] = {"A", "B", "C"};
constexpr std::string_view kABCD[] = {"A", "B", "C", "D"};
constexpr std::string_view kACBD[] = {"A", "C", "B", "D"};
constexpr std::string_view kaC[] = {"a", "C"};

const std::array<AxiomInfo, 19>& info_table() {
  static const std::array<AxiomInfo, 19> table{{
      {AxiomId::FIN, "FIN", std::span(kNoVars, 0), false},
      {AxiomId::EX, "EX", kAC, false},
      {AxiomId::SYM, "SYM", kABC, false},
      {AxiomId::LOC, "LOC", std::span(kNoVars, 0), false},
      {AxiomId::NOR_L, "NOR-L", kABC, false},
      {AxiomId::NOR_R, "NOR-R", kABC, false},
      {AxiomId::MON_L, "MON-L", kABCD, false},
      {AxiomId::MON_R, "MON-R", kABCD, false},
      {AxiomId::BMON_L, "BMON-L", kACBD, false},
      {AxiomId::BMON_R, "BMON-R", kACBD, false},
      {AxiomId::TRA_L, "TRA-L", kACBD, false},
      {AxiomId::TRA_R, "TRA-R", kACBD, false},
      {AxiomId::TRA_STRONG, "TRA-STRONG", kABCD, false},
      {AxiomId::BMON_STRONG, "BMON-STRONG", kABCD, false},
      {AxiomId::AREF, "AREF", kaC, true},
      {AxiomId::CLO_L, "CLO-L", kABC, true},
      {AxiomId::CLO_R, "CLO-R", kABC, true},
      {AxiomId::SCLO, "SCLO", kABC, true},
      {AxiomId::FREE, "FREE", kABCD, false},
  }};
  return table;
}

const AxiomInfo& info(AxiomId ax) { return info_table()[static_cast<std::size_t>(ax)]; }

bool is_left(AxiomId ax) {
  return ax == AxiomId::NOR_L || ax == AxiomId::MON_L || ax == AxiomId::BMON_L || ax == AxiomId::TRA_L ||
         ax == AxiomId::CLO_L;
}

AxiomId right_form(AxiomId ax) {
  switch (ax) {
    case AxiomId::NOR_L: return AxiomId::NOR_R;
    case AxiomId::MON_L: return AxiomId::MON_R;
    case AxiomId::BMON_L: return AxiomId::BMON_R;
    case AxiomId::TRA_L: return AxiomId::TRA_R;
    case AxiomId::CLO_L: return AxiomId::CLO_R;
    default: return ax;
  }
}

struct Hit {
  std::array<Mask, 4> v{};
};

using MaybeHit = std::optional<Hit>;

Hit hit(Mask a, Mask b, Mask c = 0, Mask d = 0) { return Hit{{a, b, c, d}}; }

// Scan of one value of the outermost variable. R is any callable (A, B, C) -> bool.
template <class R>
MaybeHit scan_outer(AxiomId ax, const R& r, const ClosureOperator* op, GroundSet g, Mask a) {
  const Mask count = g.subset_count();
  switch (ax) {
    case AxiomId::EX:
      for (Mask c = 0; c < count; ++c) {
        if (!r(a, c, c)) return hit(a, c);
      }
      return std::nullopt;

    case AxiomId::SYM:
      for (Mask b = 0; b < count; ++b)
        for (Mask c = 0; c < count; ++c) {
          if (r(a, b, c) && !r(b, a, c)) return hit(a, b, c);
        }
      return std::nullopt;

    case AxiomId::NOR_R:
      for (Mask b = 0; b < count; ++b)
        for (Mask c = 0; c < count; ++c) {
          if (r(a, b, c) && !r(a, b | c, c)) return hit(a, b, c);
        }
      return std::nullopt;

    case AxiomId::MON_R: {
      // up[c][e]: some e' ⊇ e has r(a, e', c). A (B, C) pair fails iff
      // r(a, B, C) is false while up[C][B] is true.
      const bool accelerate = g.size() <= 12;
      std::vector<char> up;
      if (accelerate) {
        up.assign(std::size_t{count} * count, 0);
        for (Mask c = 0; c < count; ++c) {
          char* row = up.data() + std::size_t{c} * count;
          for (Mask e = 0; e < count; ++e) row[e] = r(a, e, c) ? 1 : 0;
          for (unsigned bit = 0; bit < g.size(); ++bit) {
            const Mask m = Mask{1} << bit;
            for (Mask e = 0; e < count; ++e) {
              if (!(e & m)) row[e] = static_cast<char>(row[e] | row[e | m]);
            }
          }
        }
      }
      for (Mask b = 0; b < count; ++b)
        for (Mask c = 0; c < count; ++c) {
          if (r(a, b, c)) continue;
          if (accelerate && !up[std::size_t{c} * count + b]) continue;
          for (Mask d = 0; d < count; ++d) {
            if (r(a, b | d, c)) return hit(a, b, c, d);
          }
        }
      return std::nullopt;
    }

    case AxiomId::BMON_R:
      for (Mask c = 0; c < count; ++c) {
        MaybeHit found;
        for_each_between(c, g.full(), [&](Mask b) {
          return for_each_between(b, g.full(), [&](Mask d) {
            if (r(a, d, c) && !r(a, d, b)) {
              found = hit(a, c, b, d);
              return true;
            }
            return false;
          });
        });
        if (found) return found;
      }
      return std::nullopt;

    case AxiomId::TRA_R:
      for (Mask c = 0; c < count; ++c) {
        MaybeHit found;
        for_each_between(c, g.full(), [&](Mask b) {
          if (!r(a, b, c)) return false;
          return for_each_between(b, g.full(), [&](Mask d) {
            if (r(a, d, b) && !r(a, d, c)) {
              found = hit(a, c, b, d);
              return true;
            }
            return false;
          });
        });
        if (found) return found;
      }
      return std::nullopt;

    case AxiomId::TRA_STRONG:
      for (Mask b = 0; b < count; ++b)
        for (Mask c = 0; c < count; ++c) {
          if (!r(a, b, c)) continue;
          for (Mask d = 0; d < count; ++d) {
            if (r(a, d, b | c) && !r(a, b | d, c)) return hit(a, b, c, d);
          }
        }
      return std::nullopt;

    case AxiomId::BMON_STRONG:
      for (Mask b = 0; b < count; ++b)
        for (Mask c = 0; c < count; ++c)
          for (Mask d = 0; d < count; ++d) {
            if (r(a, b | d, c) && !r(a, b, c | d)) return hit(a, b, c, d);
          }
      return std::nullopt;

    case AxiomId::AREF:
      // Outer variable here is the singleton {a}.
      for (Mask c = 0; c < count; ++c) {
        if (r(a, a, c) && !((*op)(c) & a)) return hit(a, c);
      }
      return std::nullopt;

    case AxiomId::CLO_R:
      for (Mask b = 0; b < count; ++b) {
        const Mask clb = (*op)(b);
        for (Mask c = 0; c < count; ++c) {
          if (r(a, b, c) && !r(a, clb, c)) return hit(a, b, c);
        }
      }
      return std::nullopt;

    case AxiomId::SCLO:
      for (Mask b = 0; b < count; ++b)
        for (Mask c = 0; c < count; ++c) {
          if (r(a, b, c) != r((*op)(a | c), (*op)(b | c), (*op)(c))) return hit(a, b, c);
        }
      return std::nullopt;

    case AxiomId::FREE:
      for (Mask b = 0; b < count; ++b)
        for (Mask c = 0; c < count; ++c) {
          if (!r(a, b, c)) continue;
          MaybeHit found;
          for_each_between(c & (a | b), c, [&](Mask d) {
            if (!r(a, b, d)) {
              found = hit(a, b, c, d);
              return true;
            }
            return false;
          });
          if (found) return found;
        }
      return std::nullopt;

    default:
      return std::nullopt;
  }
}

template <class R>
MaybeHit scan(AxiomId ax, const R& r, const ClosureOperator* op, GroundSet g) {
  if (ax == AxiomId::AREF) {
    return parallel_find_first<Hit>(g.size(), [&](std::uint64_t i) {
      return scan_outer(ax, r, op, g, Mask{1} << i);
    });
  }
  return parallel_find_first<Hit>(g.subset_count(), [&](std::uint64_t i) {
    return scan_outer(ax, r, op, g, static_cast<Mask>(i));
  });
}

void require_closure_for(AxiomId ax, const TernaryRelation& r, const ClosureOperator* op) {
  if (!info(ax).needs_closure) return;
  if (op == nullptr) {
    throw MissingClosure(std::string(info(ax).name) + " needs a closure operator; none given for relation " +
                         r.name());
  }
  if (op->ground() != r.ground()) {
    throw UsageError(std::string(info(ax).name) + ": relation and closure have different ground sets");
  }
}

std::string lowercase(std::string_view s) {
  std::string out(s);
  for (auto& ch : out) {
    ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (ch == '_') ch = '-';
  }
  return out;
}

}  // namespace

std::span<const AxiomId> all_axioms() {
  static const std::array<AxiomId, 19> ids = [] {
    std::array<AxiomId, 19> out{};
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = info_table()[i].id;
    return out;
  }();
  return ids;
}

std::string_view axiom_name(AxiomId ax) { return info(ax).name; }

std::optional<AxiomId> parse_axiom(std::string_view text) {
  const std::string want = lowercase(text);
  for (const auto& entry : info_table()) {
    if (lowercase(entry.name) == want) return entry.id;
  }
  return std::nullopt;
}

bool requires_closure(AxiomId ax) { return info(ax).needs_closure; }

bool is_vacuous_at_finite_scale(AxiomId ax) { return ax == AxiomId::FIN || ax == AxiomId::LOC; }

std::span<const std::string_view> axiom_variables(AxiomId ax) { return info(ax).vars; }

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Vacuous: return "vacuous";
  }
  return "?";
}

AxiomReport check_axiom(const TernaryRelation& r, AxiomId ax, const ClosureOperator* closure) {
  const auto start = std::chrono::steady_clock::now();
  AxiomReport report;
  report.axiom = ax;
  report.relation = r.name();
  if (ax == AxiomId::FIN) {
    report.status = Status::Vacuous;
    report.note = "every subset of a finite ground set is finite";
  } else if (ax == AxiomId::LOC) {
    report.status = Status::Vacuous;
    report.note = "holds with kappa = " + std::to_string(r.ground().size() + 1) + " on a finite ground set";
  } else {
    require_closure_for(ax, r, closure);
    const GroundSet g = r.ground();
    const TernaryRelation base = is_left(ax) ? materialize_if_small(opposite(r)) : materialize_if_small(r);
    const AxiomId form = right_form(ax);
    MaybeHit found;
    if (const TruthTable* t = base.table()) {
      found = scan(form, [t](Mask a, Mask b, Mask c) { return t->get(a, b, c); }, closure, g);
    } else {
      found = scan(form, base, closure, g);
    }
    if (found) {
      report.status = Status::Fail;
      const std::size_t arity = axiom_variables(ax).size();
      for (std::size_t i = 0; i < arity; ++i) report.witness.emplace_back(g, found->v[i]);
    } else {
      report.status = Status::Pass;
    }
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

std::vector<AxiomReport> check_all(const TernaryRelation& r, const ClosureOperator* closure) {
  const TernaryRelation base = materialize_if_small(r);
  std::vector<AxiomReport> out;
  for (AxiomId ax : all_axioms()) {
    if (requires_closure(ax) && closure == nullptr) continue;
    out.push_back(check_axiom(base, ax, closure));
  }
  return out;
}

std::optional<bool> evaluate_axiom_instance(const TernaryRelation& rel, AxiomId ax, const ClosureOperator* op,
                                            std::span<const Mask> t) {
  if (is_vacuous_at_finite_scale(ax)) return std::nullopt;
  require_closure_for(ax, rel, op);
  if (t.size() != axiom_variables(ax).size()) {
    throw UsageError("axiom " + std::string(axiom_name(ax)) + " takes " +
                     std::to_string(axiom_variables(ax).size()) + " subsets");
  }
  const GroundSet g = rel.ground();
  for (Mask m : t) {
    if (!g.contains(m)) throw UsageError("subset outside the ground set");
  }
  const bool left = is_left(ax);
  auto r = [&](Mask a, Mask b, Mask c) { return left ? rel(b, a, c) : rel(a, b, c); };
  auto cl = [&](Mask m) { return (*op)(m); };
  auto implies = [](bool p, bool q) { return !p || q; };
  switch (right_form(ax)) {
    case AxiomId::EX: return r(t[0], t[1], t[1]);
    case AxiomId::SYM: return implies(r(t[0], t[1], t[2]), r(t[1], t[0], t[2]));
    case AxiomId::NOR_R: return implies(r(t[0], t[1], t[2]), r(t[0], t[1] | t[2], t[2]));
    case AxiomId::MON_R: return implies(r(t[0], t[1] | t[3], t[2]), r(t[0], t[1], t[2]));
    case AxiomId::BMON_R: {
      const Mask a = t[0], c = t[1], b = t[2], d = t[3];
      if (!is_submask(c, b) || !is_submask(b, d)) return std::nullopt;
      return implies(r(a, d, c), r(a, d, b));
    }
    case AxiomId::TRA_R: {
      const Mask a = t[0], c = t[1], b = t[2], d = t[3];
      if (!is_submask(c, b) || !is_submask(b, d)) return std::nullopt;
      return implies(r(a, b, c) && r(a, d, b), r(a, d, c));
    }
    case AxiomId::TRA_STRONG: {
      const Mask a = t[0], b = t[1], c = t[2], d = t[3];
      return implies(r(a, b, c) && r(a, d, b | c), r(a, b | d, c));
    }
    case AxiomId::BMON_STRONG: {
      const Mask a = t[0], b = t[1], c = t[2], d = t[3];
      return implies(r(a, b | d, c), r(a, b, c | d));
    }
    case AxiomId::AREF:
      if (!is_singleton(t[0])) return std::nullopt;
      return implies(r(t[0], t[0], t[1]), is_submask(t[0], cl(t[1])));
    case AxiomId::CLO_R: return implies(r(t[0], t[1], t[2]), r(t[0], cl(t[1]), t[2]));
    case AxiomId::SCLO: {
      const Mask a = t[0], b = t[1], c = t[2];
      return r(a, b, c) == r(cl(a | c), cl(b | c), cl(c));
    }
    case AxiomId::FREE: {
      const Mask a = t[0], b = t[1], c = t[2], d = t[3];
      if (!is_submask(c & (a | b), d) || !is_submask(d, c)) return std::nullopt;
      return implies(r(a, b, c), r(a, b, d));
    }
    default: return std::nullopt;
  }
}

std::string result_line(const AxiomReport& report) {
  std::string line = "RESULT " + report.relation + " " + std::string(axiom_name(report.axiom)) + " " +
                     std::string(status_name(report.status));
  if (!report.witness.empty()) {
    line += " witness=";
    for (std::size_t i = 0; i < report.witness.size(); ++i) {
      if (i) line += ';';
      line += to_string(report.witness[i]);
    }
  }
  return line;
}

std::string describe_witness(const AxiomReport& report) {
  const auto vars = axiom_variables(report.axiom);
  std::string out;
  for (std::size_t i = 0; i < report.witness.size() && i < vars.size(); ++i) {
    if (i) out += ' ';
    out += std::string(vars[i]) + "=";
    if (vars[i] == "a") {
      out += std::to_string(report.witness[i].elements().front());
    } else {
      out += to_string(report.witness[i]);
    }
  }
  return out;
}

std::string_view comparison_name(Comparison c) {
  switch (c) {
    case Comparison::Equal: return "equal";
    case Comparison::Implies: return "implies";
    case Comparison::Implied: return "implied";
    case Comparison::Incomparable: return "incomparable";
  }
  return "?";
}

ComparisonResult compare(const TernaryRelation& r1, const TernaryRelation& r2) {
  if (r1.ground() != r2.ground()) throw UsageError("compare: relations on different ground sets");
  const GroundSet g = r1.ground();
  const TernaryRelation x = materialize_if_small(r1);
  const TernaryRelation y = materialize_if_small(r2);
  const Mask count = g.subset_count();

  struct PerA {
    std::optional<std::pair<Mask, Mask>> first12, first21;
    std::uint64_t n12 = 0, n21 = 0;
  };
  std::vector<PerA> rows(count);
  parallel_for(count, [&](std::uint64_t ai) {
    const Mask a = static_cast<Mask>(ai);
    PerA& row = rows[a];
    for (Mask b = 0; b < count; ++b)
      for (Mask c = 0; c < count; ++c) {
        const bool p = x(a, b, c);
        const bool q = y(a, b, c);
        if (p && !q) {
          if (!row.first12) row.first12 = {b, c};
          ++row.n12;
        } else if (!p && q) {
          if (!row.first21) row.first21 = {b, c};
          ++row.n21;
        }
      }
  });

  ComparisonResult result;
  for (Mask a = 0; a < count; ++a) {
    const PerA& row = rows[a];
    result.only_first += row.n12;
    result.only_second += row.n21;
    if (row.first12 && !result.least_only_first) {
      result.least_only_first = Triple{Subset(g, a), Subset(g, row.first12->first), Subset(g, row.first12->second)};
    }
    if (row.first21 && !result.least_only_second) {
      result.least_only_second =
          Triple{Subset(g, a), Subset(g, row.first21->first), Subset(g, row.first21->second)};
    }
  }
  auto key = [](const Triple& t) { return std::array<Mask, 3>{t.a.bits(), t.b.bits(), t.c.bits()}; };
  if (result.least_only_first && result.least_only_second) {
    result.least_difference = key(*result.least_only_first) < key(*result.least_only_second)
                                  ? result.least_only_first
                                  : result.least_only_second;
  } else if (result.least_only_first) {
    result.least_difference = result.least_only_first;
  } else {
    result.least_difference = result.least_only_second;
  }
  if (result.only_first == 0 && result.only_second == 0) {
    result.verdict = Comparison::Equal;
  } else if (result.only_first == 0) {
    result.verdict = Comparison::Implies;
  } else if (result.only_second == 0) {
    result.verdict = Comparison::Implied;
  } else {
    result.verdict = Comparison::Incomparable;
  }
  return result;
}

std::string condition_name(const Condition& c) {
  if (const auto* ax = std::get_if<AxiomId>(&c)) return std::string(axiom_name(*ax));
  return "exchange";
}

std::optional<Condition> parse_condition(std::string_view text) {
  if (lowercase(text) == "exchange" || lowercase(text) == "exch") return Condition{ExchangeLaw{}};
  if (auto ax = parse_axiom(text)) return Condition{*ax};
  return std::nullopt;
}

namespace {

// nullopt when the condition holds, otherwise the failing witness.
std::optional<std::pair<std::vector<Subset>, std::string>> condition_failure(const Condition& cond,
                                                                             const Candidate& cand) {
  if (std::holds_alternative<ExchangeLaw>(cond)) {
    auto res = has_exchange(cand.closure);
    if (const auto* w = std::get_if<ExchangeWitness>(&res)) {
      const GroundSet g = cand.closure.ground();
      std::vector<Subset> witness{w->base, Subset::singleton(g, w->a), Subset::singleton(g, w->b)};
      std::string text = "A=" + to_string(w->base) + " a=" + std::to_string(w->a) + " b=" + std::to_string(w->b);
      return std::make_pair(std::move(witness), std::move(text));
    }
    return std::nullopt;
  }
  const AxiomId ax = std::get<AxiomId>(cond);
  AxiomReport report = check_axiom(cand.relation, ax, &cand.closure);
  if (report.status != Status::Fail) return std::nullopt;
  std::string text = describe_witness(report);
  return std::make_pair(std::move(report.witness), std::move(text));
}

}  // namespace

SearchOutcome search_counterexample(const SearchGoal& goal, const CandidateStream& stream) {
  SearchOutcome outcome;
  while (auto cand = stream()) {
    ++outcome.examined;
    const bool premises_hold = std::all_of(goal.premises.begin(), goal.premises.end(), [&](const Condition& p) {
      return !condition_failure(p, *cand).has_value();
    });
    if (!premises_hold) continue;
    if (auto failure = condition_failure(goal.target, *cand)) {
      outcome.hit = SearchHit{std::move(*cand), std::move(failure->first), std::move(failure->second)};
      return outcome;
    }
  }
  return outcome;
}

CandidateStream all_relations(GroundSet g) {
  if (g.size() > 1) {
    throw CapExceeded("all_relations enumerates 2^(8^n) relations; only n <= 1 is supported");
  }
  const std::uint64_t triples = std::uint64_t{1} << (3 * g.size());
  const std::uint64_t total = std::uint64_t{1} << triples;
  auto next = std::make_shared<std::uint64_t>(0);
  const ClosureOperator trivial = ClosureOperator::trivial(g);
  return [g, total, next, trivial]() -> std::optional<Candidate> {
    if (*next >= total) return std::nullopt;
    const std::uint64_t code = (*next)++;
    auto table = std::make_shared<TruthTable>(g);
    table->words()[0] = code;
    std::string name = "rel" + std::to_string(code);
    return Candidate{name, TernaryRelation(name, std::move(table)), trivial};
  };
}

}  // namespace indep
