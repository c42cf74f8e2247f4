#include "indep/instances.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace indep {

// Graphs --------------------------------------------------------------------

Graph Graph::from_adjacency(GroundSet g, std::vector<Mask> adjacency) {
  if (adjacency.size() != g.size()) throw UsageError("adjacency list size differs from vertex count");
  for (unsigned u = 0; u < g.size(); ++u) {
    if (!g.contains(adjacency[u])) throw UsageError("neighbour outside the vertex set");
    if ((adjacency[u] >> u) & 1U) throw UsageError("self-loop at vertex " + std::to_string(u));
    for (unsigned v = 0; v < g.size(); ++v) {
      if (((adjacency[u] >> v) & 1U) != ((adjacency[v] >> u) & 1U)) {
        throw UsageError("adjacency not symmetric at " + std::to_string(u) + "-" + std::to_string(v));
      }
    }
  }
  Graph out;
  out.ground_ = g;
  out.adj_ = std::move(adjacency);
  return out;
}

Graph Graph::from_edges(GroundSet g, std::span<const Edge> edges) {
  std::vector<Mask> adj(g.size(), 0);
  for (const auto& [u, v] : edges) {
    if (u >= g.size() || v >= g.size()) {
      throw UsageError("edge " + std::to_string(u) + "-" + std::to_string(v) + " outside the vertex set");
    }
    if (u == v) throw UsageError("self-loop at vertex " + std::to_string(u));
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  return from_adjacency(g, std::move(adj));
}

Graph Graph::from_code(GroundSet g, std::uint64_t code) {
  std::vector<Edge> edges;
  unsigned i = 0;
  for (unsigned u = 0; u < g.size(); ++u)
    for (unsigned v = u + 1; v < g.size(); ++v, ++i) {
      if ((code >> i) & 1U) edges.emplace_back(u, v);
    }
  return from_edges(g, edges);
}

std::vector<Graph::Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (unsigned u = 0; u < ground_.size(); ++u)
    for (unsigned v = u + 1; v < ground_.size(); ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  return out;
}

bool Graph::edges_within(Mask m, Mask part1, Mask part2) const noexcept {
  for (Mask rest = m; rest != 0; rest &= rest - 1) {
    const unsigned u = static_cast<unsigned>(std::countr_zero(rest));
    const Mask bit = Mask{1} << u;
    const Mask allowed = ((part1 & bit) ? part1 : 0) | ((part2 & bit) ? part2 : 0);
    if (!is_submask(adj_[u] & m, allowed)) return false;
  }
  return true;
}

bool Graph::agrees_on(const Graph& other, Mask m) const noexcept {
  for (Mask rest = m; rest != 0; rest &= rest - 1) {
    const unsigned u = static_cast<unsigned>(std::countr_zero(rest));
    if (u >= other.adj_.size() || u >= adj_.size()) return false;
    if ((adj_[u] & m) != (other.adj_[u] & m)) return false;
  }
  return true;
}

std::optional<std::vector<unsigned>> isomorphism_over(const Graph& g1, const Graph& g2, Mask fixed) {
  const unsigned n = g1.vertices().size();
  if (g2.vertices().size() != n || !g1.vertices().contains(fixed)) return std::nullopt;
  if (!g1.agrees_on(g2, fixed)) return std::nullopt;
  std::vector<unsigned> map(n, n);
  Mask used = fixed;
  for (unsigned v = 0; v < n; ++v) {
    if ((fixed >> v) & 1U) map[v] = v;
  }
  std::vector<unsigned> todo;
  for (unsigned v = 0; v < n; ++v) {
    if (!((fixed >> v) & 1U)) todo.push_back(v);
  }
  auto consistent = [&](unsigned v, unsigned image) {
    for (unsigned u = 0; u < n; ++u) {
      if (map[u] == n || u == v) continue;
      if (g1.adjacent(u, v) != g2.adjacent(map[u], image)) return false;
    }
    return true;
  };
  auto extend = [&](auto& self, std::size_t depth) -> bool {
    if (depth == todo.size()) return true;
    const unsigned v = todo[depth];
    for (unsigned image = 0; image < n; ++image) {
      if ((used >> image) & 1U) continue;
      if (!consistent(v, image)) continue;
      map[v] = image;
      used |= Mask{1} << image;
      if (self(self, depth + 1)) return true;
      used &= ~(Mask{1} << image);
      map[v] = n;
    }
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  return map;
}

Amalgam free_amalgam(const Graph& g1, const Graph& g2, unsigned base_size) {
  const unsigned n1 = g1.vertices().size();
  const unsigned n2 = g2.vertices().size();
  if (base_size > n1 || base_size > n2) throw UsageError("amalgamation base larger than a factor");
  const unsigned n = n1 + n2 - base_size;
  if (n > kMaxGroundSize) throw UsageError("amalgam would have " + std::to_string(n) + " vertices");
  const Mask base = (Mask{1} << base_size) - 1;
  if (!g1.agrees_on(g2, base)) {
    throw BaseMismatch("the two graphs induce different subgraphs on the base " + format_mask(base));
  }
  auto image2 = [&](unsigned v) { return v < base_size ? v : n1 + (v - base_size); };
  std::vector<Graph::Edge> edges = g1.edges();
  for (const auto& [u, v] : g2.edges()) edges.emplace_back(image2(u), image2(v));
  const GroundSet g(n);
  const Mask left = ((Mask{1} << n1) - 1) & ~base;
  const Mask right = g.full() & ~((Mask{1} << n1) - 1);
  return Amalgam{Graph::from_edges(g, edges), Subset(g, left), Subset(g, right), Subset(g, base)};
}

TernaryRelation rel_st(const Graph& g) {
  return TernaryRelation(g.vertices(), "st", [g](Mask a, Mask b, Mask c) {
    return is_submask(a & b, c) && g.edges_within(a | b | c, a | c, b | c);
  });
}

TernaryRelation rel_a_graph(const Graph& g) {
  return TernaryRelation(g.vertices(), "a", [](Mask a, Mask b, Mask c) { return is_submask(a & b, c); });
}

// Orders --------------------------------------------------------------------

OrderedConfig::OrderedConfig(std::vector<Rational> points) : points_(std::move(points)) {
  if (points_.size() > kMaxGroundSize) throw UsageError("at most 16 points");
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (!(points_[i - 1] < points_[i])) throw UsageError("points must be strictly increasing");
  }
}

namespace {

std::optional<std::int64_t> parse_int(std::string_view s) {
  std::int64_t v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto fail = [&] { return ParseError("points", "bad rational '" + std::string(text) + "'"); };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto p = parse_int(text.substr(0, slash));
    auto q = parse_int(text.substr(slash + 1));
    if (!p || !q || *q == 0) throw fail();
    return Rational(*p, *q);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 12 || !std::all_of(frac.begin(), frac.end(), ::isdigit)) throw fail();
    const bool negative = !whole.empty() && whole.front() == '-';
    auto w = whole.empty() || whole == "-" ? std::optional<std::int64_t>(0) : parse_int(whole);
    auto f = parse_int(frac);
    if (!w || !f) throw fail();
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const Rational fraction(*f, scale);
    return negative ? Rational(*w) - fraction : Rational(*w) + fraction;
  }
  auto v = parse_int(text);
  if (!v) throw fail();
  return Rational(*v);
}

std::string format_rational(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

TernaryRelation rel_div(const OrderedConfig& cfg, IntervalMode mode) {
  const GroundSet g = cfg.ground();
  const unsigned n = g.size();
  // interval[b1 * n + b2] = {b1, …, b2}
  std::vector<Mask> interval(std::size_t{n} * n, 0);
  for (unsigned b1 = 0; b1 < n; ++b1)
    for (unsigned b2 = b1; b2 < n; ++b2) interval[b1 * n + b2] = ((Mask{2} << b2) - 1) & ~((Mask{1} << b1) - 1);
  const bool strict = mode == IntervalMode::Strict;
  return TernaryRelation(g, "div", [interval, n, strict](Mask a, Mask b, Mask c) {
    for (Mask r1 = b; r1 != 0; r1 &= r1 - 1) {
      const unsigned b1 = static_cast<unsigned>(std::countr_zero(r1));
      for (Mask r2 = strict ? (r1 & (r1 - 1)) : r1; r2 != 0; r2 &= r2 - 1) {
        const unsigned b2 = static_cast<unsigned>(std::countr_zero(r2));
        const Mask iv = interval[b1 * n + b2];
        if ((a & iv) && !(c & iv)) return false;
      }
    }
    return true;
  });
}

// Matroids ------------------------------------------------------------------

ClosureOperator uniform_closure(unsigned rank, unsigned size) {
  const GroundSet g(size);
  if (rank > size) throw UsageError("uniform matroid needs rank <= size");
  std::vector<Mask> table(g.subset_count());
  for (Mask a = 0; a < g.subset_count(); ++a) table[a] = popcount(a) < rank ? a : g.full();
  return ClosureOperator::from_table(g, std::move(table));
}

ClosureOperator gebert_closure(unsigned size) {
  const GroundSet g(size);
  std::vector<Mask> table(g.subset_count());
  for (Mask a = 0; a < g.subset_count(); ++a) table[a] = a == 0 ? 0 : (Mask{2} << (31 - std::countl_zero(a))) - 1;
  return ClosureOperator::from_table(g, std::move(table));
}

unsigned field_order(Field f) { return f == Field::GF2 ? 2 : 3; }

ClosureOperator linear_closure(Field f, const std::vector<std::vector<unsigned>>& vectors) {
  const unsigned p = field_order(f);
  const GroundSet g(static_cast<unsigned>(vectors.size()));
  const std::size_t d = vectors.empty() ? 0 : vectors.front().size();
  std::size_t space = 1;
  for (std::size_t i = 0; i < d; ++i) {
    space *= p;
    if (space > (std::size_t{1} << 20)) throw UsageError("vector dimension too large");
  }
  std::vector<std::size_t> codes;
  for (const auto& v : vectors) {
    if (v.size() != d) throw UsageError("vectors of different lengths");
    std::size_t code = 0;
    for (std::size_t i = d; i-- > 0;) {
      if (v[i] >= p) throw UsageError("coordinate outside the field");
      code = code * p + v[i];
    }
    codes.push_back(code);
  }
  auto add = [&](std::size_t x, std::size_t y) {
    std::size_t out = 0, scale = 1;
    for (std::size_t i = 0; i < d; ++i) {
      out += ((x % p + y % p) % p) * scale;
      x /= p;
      y /= p;
      scale *= p;
    }
    return out;
  };
  std::vector<Mask> table(g.subset_count());
  std::vector<char> in_span(space);
  std::vector<std::size_t> members;
  for (Mask a = 0; a < g.subset_count(); ++a) {
    std::fill(in_span.begin(), in_span.end(), 0);
    members.assign(1, 0);
    in_span[0] = 1;
    for (Mask rest = a; rest != 0; rest &= rest - 1) {
      const std::size_t v = codes[static_cast<unsigned>(std::countr_zero(rest))];
      if (in_span[v]) continue;
      const std::size_t before = members.size();
      for (std::size_t i = 0; i < before; ++i) {
        std::size_t s = members[i];
        for (unsigned k = 1; k < p; ++k) {
          s = add(s, v);
          if (!in_span[s]) {
            in_span[s] = 1;
            members.push_back(s);
          }
        }
      }
    }
    Mask cl = 0;
    for (unsigned e = 0; e < g.size(); ++e) {
      if (in_span[codes[e]]) cl |= Mask{1} << e;
    }
    table[a] = cl;
  }
  return ClosureOperator::from_table(g, std::move(table));
}

// Instances -----------------------------------------------------------------

std::string_view kind_name(InstanceKind k) {
  switch (k) {
    case InstanceKind::Trivial: return "trivial";
    case InstanceKind::Gebert: return "gebert";
    case InstanceKind::Uniform: return "uniform";
    case InstanceKind::Linear: return "linear";
    case InstanceKind::Table: return "table";
    case InstanceKind::Graph: return "graph";
    case InstanceKind::Order: return "order";
  }
  return "?";
}

std::optional<Pregeometry> Instance::pregeometry() const {
  auto res = has_exchange(closure);
  if (auto* pg = std::get_if<Pregeometry>(&res)) return std::move(*pg);
  return std::nullopt;
}

namespace {

std::vector<std::vector<unsigned>> parse_vectors(std::string_view text, Field f) {
  std::vector<std::vector<unsigned>> out;
  std::istringstream in{std::string(text)};
  std::string word;
  const unsigned p = field_order(f);
  while (in >> word) {
    std::vector<unsigned> v;
    for (char ch : word) {
      if (ch < '0' || ch >= static_cast<char>('0' + p)) {
        throw ParseError("vectors", "bad coordinate '" + std::string(1, ch) + "' in '" + word + "'");
      }
      v.push_back(static_cast<unsigned>(ch - '0'));
    }
    if (!out.empty() && out.front().size() != v.size()) {
      throw ParseError("vectors", "vector '" + word + "' has a different length");
    }
    out.push_back(std::move(v));
  }
  if (out.size() > kMaxGroundSize) throw ParseError("vectors", "more than 16 vectors");
  return out;
}

Instance make_linear(std::string name, Field f, std::string_view vectors, std::string provenance,
                     std::optional<bool> modular) {
  Instance inst;
  inst.name = std::move(name);
  inst.kind = InstanceKind::Linear;
  inst.closure = linear_closure(f, parse_vectors(vectors, f));
  inst.provenance = std::move(provenance);
  inst.expected_modular = modular;
  return inst;
}

Instance make_simple(std::string name, InstanceKind kind, ClosureOperator op, std::string provenance,
                     std::optional<bool> modular) {
  Instance inst;
  inst.name = std::move(name);
  inst.kind = kind;
  inst.closure = std::move(op);
  inst.provenance = std::move(provenance);
  inst.expected_modular = modular;
  return inst;
}

Instance make_graph(std::string name, unsigned size, std::vector<Graph::Edge> edges, std::string provenance) {
  Instance inst;
  inst.name = std::move(name);
  inst.kind = InstanceKind::Graph;
  inst.closure = ClosureOperator::trivial(GroundSet(size));
  inst.graph = Graph::from_edges(GroundSet(size), edges);
  inst.provenance = std::move(provenance);
  return inst;
}

Instance make_order(std::string name, std::vector<Rational> points, std::string provenance) {
  Instance inst;
  inst.name = std::move(name);
  inst.kind = InstanceKind::Order;
  inst.order = OrderedConfig(std::move(points));
  inst.closure = ClosureOperator::trivial(inst.order->ground());
  inst.provenance = std::move(provenance);
  return inst;
}

std::vector<Instance> build_catalog() {
  std::vector<Instance> c;
  for (unsigned n = 3; n <= 5; ++n) {
    c.push_back(make_simple("trivial" + std::to_string(n), InstanceKind::Trivial,
                            ClosureOperator::trivial(GroundSet(n)), "identity closure on " + std::to_string(n) +
                            " points", true));
  }
  c.push_back(make_simple("u23", InstanceKind::Uniform, uniform_closure(2, 3), "uniform matroid U(2,3)", true));
  c.push_back(make_simple("u24", InstanceKind::Uniform, uniform_closure(2, 4), "uniform matroid U(2,4)", true));
  c.push_back(make_linear("gf2-3", Field::GF2, "01 10 11", "GF(2): the three nonzero vectors of the plane", true));
  c.push_back(make_linear("gf2-4", Field::GF2, "00 01 10 11", "GF(2): the full plane, zero vector included", true));
  c.push_back(make_linear("gf3-4", Field::GF3, "10 01 11 12", "GF(3): the four points of the projective line",
                          true));
  c.push_back(make_linear("gf3-par", Field::GF3, "10 20 01 11", "GF(3): line with a parallel pair", true));
  c.push_back(make_linear("gf3-5", Field::GF3, "100 010 110 210 001", "GF(3): projective line plus a free point",
                          true));
  c.push_back(make_simple("u34", InstanceKind::Uniform, uniform_closure(3, 4),
                          "uniform matroid U(3,4): two disjoint lines spanning the plane", false));
  c.push_back(make_simple("u35", InstanceKind::Uniform, uniform_closure(3, 5), "uniform matroid U(3,5)", false));
  c.push_back(make_linear("gf2-6", Field::GF2, "100 010 001 110 101 011",
                          "GF(2): cycle matroid of K4, not modular", false));
  c.push_back(make_linear("fano7", Field::GF2, "100 010 001 110 101 011 111", "GF(2): Fano plane", true));
  c.push_back(make_linear("gf2-8", Field::GF2, "000 100 010 001 110 101 011 111",
                          "GF(2): full 3-space, zero vector included", true));
  for (unsigned n : {4U, 6U, 8U}) {
    c.push_back(make_simple("gebert" + std::to_string(n), InstanceKind::Gebert, gebert_closure(n),
                            "initial segments cl(A) = [0, max A]: no exchange", std::nullopt));
  }
  c.push_back(make_graph("path3", 3, {{0, 1}, {1, 2}}, "path 0-1-2"));
  c.push_back(make_graph("edge3", 3, {{0, 2}}, "single edge 0-2 with an isolated vertex 1"));
  c.push_back(make_graph("triangle", 3, {{0, 1}, {0, 2}, {1, 2}}, "triangle"));
  c.push_back(make_graph("path4", 4, {{0, 1}, {1, 2}, {2, 3}}, "path 0-1-2-3"));
  c.push_back(make_graph("c4", 4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, "4-cycle"));
  c.push_back(make_graph("star4", 4, {{0, 1}, {0, 2}, {0, 3}}, "star with centre 0"));
  for (unsigned n = 1; n <= 6; ++n) {
    std::vector<Rational> pts;
    for (unsigned i = 0; i < n; ++i) pts.emplace_back(static_cast<std::int64_t>(i));
    std::string note = std::to_string(n) + (n == 1 ? " point" : " points") + " of a dense order";
    if (n == 4) note += "; labels b1=0 < c=1 < a=2 < b2=3";
    c.push_back(make_order("dlo" + std::to_string(n), std::move(pts), note));
  }
  return c;
}

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::string lower(std::string s) {
  for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return s;
}

unsigned parse_count(const std::string& key, const std::string& value, unsigned max) {
  auto v = parse_int(value);
  if (!v || *v < 0 || *v > static_cast<std::int64_t>(max)) {
    throw ParseError(key, key + ": expected an integer in 0.." + std::to_string(max) + ", got '" + value + "'");
  }
  return static_cast<unsigned>(*v);
}

std::vector<Graph::Edge> parse_edges(const std::string& value) {
  std::vector<Graph::Edge> out;
  std::string spaced = value;
  std::replace(spaced.begin(), spaced.end(), ',', ' ');
  std::istringstream in(spaced);
  std::string e;
  while (in >> e) {
    const auto dash = e.find('-');
    auto u = dash == std::string::npos ? std::nullopt : parse_int(trim(std::string_view(e).substr(0, dash)));
    auto v = dash == std::string::npos ? std::nullopt : parse_int(trim(std::string_view(e).substr(dash + 1)));
    if (!u || !v || *u < 0 || *v < 0) throw ParseError("edges", "bad edge '" + e + "', expected u-v");
    out.emplace_back(static_cast<unsigned>(*u), static_cast<unsigned>(*v));
  }
  return out;
}

}  // namespace

const std::vector<Instance>& catalog() {
  static const std::vector<Instance> c = build_catalog();
  return c;
}

const Instance* find_instance(std::string_view name) {
  for (const auto& inst : catalog()) {
    if (inst.name == name) return &inst;
  }
  return nullptr;
}

Instance parse_instance(std::string_view text, std::string name) {
  std::map<std::string, std::string> values;
  std::vector<std::pair<std::string, std::string>> cl_lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(line, "expected key = value, got '" + line + "'");
    std::string key = lower(trim(std::string_view(line).substr(0, eq)));
    std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key.starts_with("cl") && (key.size() == 2 || key[2] == ' ' || key[2] == '{')) {
      cl_lines.emplace_back(trim(std::string_view(key).substr(2)), value);
      continue;
    }
    if (values.count(key)) throw ParseError(key, "duplicate key '" + key + "'");
    values.emplace(std::move(key), std::move(value));
  }

  if (!values.count("type")) throw ParseError("type", "missing key 'type'");
  const std::string type = lower(values.at("type"));
  static const std::map<std::string, std::set<std::string>> allowed = {
      {"trivial", {"type", "size"}},
      {"gebert", {"type", "size"}},
      {"uniform", {"type", "size", "rank"}},
      {"linear", {"type", "size", "field", "vectors"}},
      {"table", {"type", "size"}},
      {"graph", {"type", "size", "edges"}},
      {"order", {"type", "size", "points"}},
  };
  auto kind_it = allowed.find(type);
  if (kind_it == allowed.end()) throw ParseError("type", "unknown instance type '" + type + "'");
  for (const auto& [key, value] : values) {
    if (!kind_it->second.count(key)) {
      throw ParseError(key, "key '" + key + "' is not valid for type " + type);
    }
  }
  if (!cl_lines.empty() && type != "table") throw ParseError("cl", "cl lines are only valid for type table");

  auto require = [&](const std::string& key) -> const std::string& {
    auto it = values.find(key);
    if (it == values.end()) throw ParseError(key, "type " + type + " needs key '" + key + "'");
    return it->second;
  };
  auto size_or = [&](std::optional<unsigned> derived) {
    if (auto it = values.find("size"); it != values.end()) {
      const unsigned n = parse_count("size", it->second, kMaxGroundSize);
      if (derived && *derived != n) {
        throw ParseError("size", "size " + std::to_string(n) + " disagrees with the " + std::to_string(*derived) +
                                     " elements given");
      }
      return n;
    }
    if (!derived) throw ParseError("size", "type " + type + " needs key 'size'");
    return *derived;
  };

  Instance inst;
  inst.name = std::move(name);
  try {
    if (type == "trivial") {
      inst.kind = InstanceKind::Trivial;
      inst.closure = ClosureOperator::trivial(GroundSet(size_or(std::nullopt)));
      inst.provenance = "identity closure";
    } else if (type == "gebert") {
      inst.kind = InstanceKind::Gebert;
      inst.closure = gebert_closure(size_or(std::nullopt));
      inst.provenance = "initial segments cl(A) = [0, max A]";
    } else if (type == "uniform") {
      inst.kind = InstanceKind::Uniform;
      const unsigned n = size_or(std::nullopt);
      const unsigned r = parse_count("rank", require("rank"), n);
      inst.closure = uniform_closure(r, n);
      inst.provenance = "uniform matroid U(" + std::to_string(r) + "," + std::to_string(n) + ")";
    } else if (type == "linear") {
      inst.kind = InstanceKind::Linear;
      const std::string field = lower(require("field"));
      Field f;
      if (field == "gf2") {
        f = Field::GF2;
      } else if (field == "gf3") {
        f = Field::GF3;
      } else {
        throw ParseError("field", "unknown field '" + field + "', expected gf2 or gf3");
      }
      auto vecs = parse_vectors(require("vectors"), f);
      size_or(static_cast<unsigned>(vecs.size()));
      inst.closure = linear_closure(f, vecs);
      inst.provenance = "linear matroid over " + field;
    } else if (type == "table") {
      inst.kind = InstanceKind::Table;
      const GroundSet g(size_or(std::nullopt));
      std::vector<Mask> table(g.subset_count(), 0);
      std::vector<char> seen(g.subset_count(), 0);
      for (const auto& [lhs, rhs] : cl_lines) {
        Subset a, b;
        try {
          a = parse_subset(g, lhs);
          b = parse_subset(g, rhs);
        } catch (const ParseError& e) {
          throw ParseError("cl", std::string("cl line: ") + e.what());
        }
        if (seen[a.bits()]) throw ParseError("cl", "cl " + to_string(a) + " given twice");
        seen[a.bits()] = 1;
        table[a.bits()] = b.bits();
      }
      for (Mask a = 0; a < g.subset_count(); ++a) {
        if (!seen[a]) throw ParseError("cl", "table has no entry for cl " + format_mask(a));
      }
      try {
        inst.closure = ClosureOperator::from_table(g, std::move(table));
      } catch (const LawViolation& e) {
        throw ParseError("cl", std::string("table is not a closure operator: ") + e.what());
      }
      inst.provenance = "closure table";
    } else if (type == "graph") {
      inst.kind = InstanceKind::Graph;
      const GroundSet g(size_or(std::nullopt));
      auto edges = values.count("edges") ? parse_edges(values.at("edges")) : std::vector<Graph::Edge>{};
      try {
        inst.graph = Graph::from_edges(g, edges);
      } catch (const UsageError& e) {
        throw ParseError("edges", e.what());
      }
      inst.closure = ClosureOperator::trivial(g);
      inst.provenance = "graph";
    } else {
      inst.kind = InstanceKind::Order;
      std::vector<Rational> pts;
      std::istringstream pin(require("points"));
      std::string word;
      while (pin >> word) pts.push_back(parse_rational(word));
      size_or(static_cast<unsigned>(pts.size()));
      try {
        inst.order = OrderedConfig(std::move(pts));
      } catch (const UsageError& e) {
        throw ParseError("points", e.what());
      }
      inst.closure = ClosureOperator::trivial(inst.order->ground());
      inst.provenance = "ordered configuration";
    }
  } catch (const ParseError&) {
    throw;
  } catch (const UsageError& e) {
    throw ParseError(type, e.what());
  }
  return inst;
}

Instance load_instance(std::string_view name_or_path) {
  if (const Instance* inst = find_instance(name_or_path)) return *inst;
  const std::filesystem::path path{std::string(name_or_path)};
  std::ifstream in(path);
  if (!in) {
    throw ParseError("instance", "no catalog instance or readable file named '" + std::string(name_or_path) + "'");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str(), path.stem().string());
}

// Relation ids --------------------------------------------------------------

namespace {

constexpr RelationInfo kRelations[] = {
    {"int", "A ∩ B ⊆ C"},
    {"top", "always true"},
    {"a", "cl(AC) ∩ cl(BC) = cl(C)"},
    {"cl", "dim(A/BC) = dim(A/C); pregeometries only"},
    {"st", "A ∩ B ⊆ C and no edge crosses from A∖C to B∖C; graphs only"},
    {"div", "every B-interval met by A is met by C; orders only"},
    {"<id>M", "monotonisation: base ranges over [C, cl(BC)]"},
    {"<id>m", "naive monotonisation: base ranges over [C, BC]"},
    {"<id>c", "closure extension: B replaced by cl(BC)"},
    {"opp(<id>)", "opposite: A and B swapped"},
};

TernaryRelation base_relation(const Instance& inst, std::string_view base, IntervalMode mode) {
  if (base == "int") return rel_intersection(inst.ground());
  if (base == "top") return rel_always_true(inst.ground());
  if (base == "a") return inst.graph ? rel_a_graph(*inst.graph) : rel_a(inst.closure);
  if (base == "cl") {
    auto pg = inst.pregeometry();
    if (!pg) throw UsageError("relation cl needs a pregeometry; " + inst.name + " fails exchange (dimension undefined)");
    return rel_cl(*pg);
  }
  if (base == "st") {
    if (!inst.graph) throw UsageError("relation st needs a graph instance; " + inst.name + " is not one");
    return rel_st(*inst.graph);
  }
  if (!inst.order) throw UsageError("relation div needs an order instance; " + inst.name + " is not one");
  return rel_div(*inst.order, mode);
}

TernaryRelation parse_relation(const Instance& inst, std::string_view id, IntervalMode mode) {
  const std::string whole(id);
  if (id.starts_with("opp(")) {
    if (!id.ends_with(")")) throw ParseError("relation", "unbalanced parenthesis in '" + whole + "'");
    return opposite(materialize_if_small(parse_relation(inst, id.substr(4, id.size() - 5), mode)));
  }
  std::string_view base;
  for (std::string_view b : {"int", "top", "div", "cl", "st", "a"}) {
    if (id.starts_with(b)) {
      base = b;
      break;
    }
  }
  if (base.empty()) throw ParseError("relation", "unknown relation '" + whole + "'");
  for (char ch : id.substr(base.size())) {
    if (ch != 'M' && ch != 'm' && ch != 'c') throw ParseError("relation", "unknown relation '" + whole + "'");
  }
  TernaryRelation r = materialize_if_small(base_relation(inst, base, mode));
  for (char ch : id.substr(base.size())) {
    if (ch == 'M') r = monotonise_M(r, inst.closure);
    if (ch == 'm') r = monotonise_m(r);
    if (ch == 'c') r = closure_extend_c(r, inst.closure);
    r = materialize_if_small(r);
  }
  return r;
}

}  // namespace

TernaryRelation relation_by_id(const Instance& inst, std::string_view id, IntervalMode mode) {
  return parse_relation(inst, id, mode);
}

std::span<const RelationInfo> relation_catalog() { return kRelations; }

CandidateStream catalog_candidates(std::string relation_id, unsigned max_size) {
  auto index = std::make_shared<std::size_t>(0);
  return [relation_id, max_size, index]() -> std::optional<Candidate> {
    const auto& c = catalog();
    while (*index < c.size()) {
      const Instance& inst = c[(*index)++];
      if (inst.ground().size() > max_size) continue;
      try {
        return Candidate{inst.name, relation_by_id(inst, relation_id), inst.closure};
      } catch (const UsageError&) {
        continue;
      }
    }
    return std::nullopt;
  };
}

}  // namespace indep
