#pragma once

// Test-side reference implementations. Everything here is written from the
// definitions with no shared code paths beyond the table types, so library
// results can be checked against it.

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "indep/axioms.hpp"
#include "indep/closure.hpp"
#include "indep/lattice.hpp"

namespace oracle {

using indep::AxiomId;
using indep::Mask;

inline bool sub(Mask a, Mask b) { return (a & ~b) == 0; }

// All three laws, monotonicity over every pair A ⊆ B.
inline bool is_closure_table(unsigned n, const std::vector<Mask>& t) {
  const Mask count = Mask{1} << n;
  for (Mask a = 0; a < count; ++a) {
    if (t[a] >= count || !sub(a, t[a]) || t[t[a]] != t[a]) return false;
    for (Mask b = 0; b < count; ++b) {
      if (sub(a, b) && !sub(t[a], t[b])) return false;
    }
  }
  return true;
}

// Rank over GF(p) by Gaussian elimination on the vectors of the chosen elements.
inline unsigned gf_rank(unsigned p, const std::vector<std::vector<unsigned>>& vectors, Mask chosen) {
  std::vector<std::vector<int>> rows;
  for (std::size_t e = 0; e < vectors.size(); ++e) {
    if ((chosen >> e) & 1U) rows.emplace_back(vectors[e].begin(), vectors[e].end());
  }
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  unsigned rank = 0;
  auto inverse = [p](int x) {
    for (int y = 1; y < static_cast<int>(p); ++y) {
      if ((x * y) % static_cast<int>(p) == 1) return y;
    }
    return 0;
  };
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] % static_cast<int>(p) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const int inv = inverse(rows[rank][col] % static_cast<int>(p));
    for (auto& x : rows[rank]) x = (x * inv) % static_cast<int>(p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank) continue;
      const int f = rows[r][col] % static_cast<int>(p);
      if (f == 0) continue;
      for (std::size_t c = 0; c < cols; ++c) {
        rows[r][c] = ((rows[r][c] - f * rows[rank][c]) % static_cast<int>(p) + static_cast<int>(p)) %
                     static_cast<int>(p);
      }
    }
    ++rank;
  }
  return rank;
}

inline std::vector<Mask> gf_closure_table(unsigned p, const std::vector<std::vector<unsigned>>& vectors) {
  const unsigned n = static_cast<unsigned>(vectors.size());
  std::vector<Mask> t(std::size_t{1} << n);
  for (Mask a = 0; a < t.size(); ++a) {
    const unsigned r = gf_rank(p, vectors, a);
    Mask cl = 0;
    for (unsigned x = 0; x < n; ++x) {
      if (gf_rank(p, vectors, a | (Mask{1} << x)) == r) cl |= Mask{1} << x;
    }
    t[a] = cl;
  }
  return t;
}

// Largest independent subset of A (each element outside the closure of the others).
inline unsigned rank_of(const std::function<Mask(Mask)>& cl, Mask a) {
  unsigned best = 0;
  for (Mask x = a;; x = (x - 1) & a) {
    bool independent = true;
    for (unsigned e = 0; e < 32 && independent; ++e) {
      if (((x >> e) & 1U) && ((cl(x & ~(Mask{1} << e)) >> e) & 1U)) independent = false;
    }
    if (independent) best = std::max<unsigned>(best, static_cast<unsigned>(__builtin_popcount(x)));
    if (x == 0) break;
  }
  return best;
}

// dim(A/B) = rank(AB) - rank(B) on a matroid.
inline unsigned dim_over(const std::function<Mask(Mask)>& cl, Mask a, Mask b) {
  return rank_of(cl, a | b) - rank_of(cl, b);
}

using Rel = std::function<bool(Mask, Mask, Mask)>;

inline std::size_t arity(AxiomId ax) {
  switch (ax) {
    case AxiomId::FIN:
    case AxiomId::LOC: return 0;
    case AxiomId::EX:
    case AxiomId::AREF: return 2;
    case AxiomId::SYM:
    case AxiomId::NOR_L:
    case AxiomId::NOR_R:
    case AxiomId::CLO_L:
    case AxiomId::CLO_R:
    case AxiomId::SCLO: return 3;
    default: return 4;
  }
}

// Axiom body at one tuple, written in the tuple order the library documents.
// nullopt outside the quantifier's domain.
inline std::optional<bool> body(AxiomId ax, const Rel& r0, const std::function<Mask(Mask)>& cl,
                                const std::array<Mask, 4>& t) {
  const bool left = ax == AxiomId::NOR_L || ax == AxiomId::MON_L || ax == AxiomId::BMON_L ||
                    ax == AxiomId::TRA_L || ax == AxiomId::CLO_L;
  Rel r = left ? Rel([&](Mask a, Mask b, Mask c) { return r0(b, a, c); }) : r0;
  const Mask a = t[0];
  switch (ax) {
    case AxiomId::EX: return r(a, t[1], t[1]);
    case AxiomId::SYM: return !r(a, t[1], t[2]) || r(t[1], a, t[2]);
    case AxiomId::NOR_L:
    case AxiomId::NOR_R: return !r(a, t[1], t[2]) || r(a, t[1] | t[2], t[2]);
    case AxiomId::MON_L:
    case AxiomId::MON_R: return !r(a, t[1] | t[3], t[2]) || r(a, t[1], t[2]);
    case AxiomId::BMON_L:
    case AxiomId::BMON_R: {
      const Mask c = t[1], b = t[2], d = t[3];
      if (!sub(c, b) || !sub(b, d)) return std::nullopt;
      return !r(a, d, c) || r(a, d, b);
    }
    case AxiomId::TRA_L:
    case AxiomId::TRA_R: {
      const Mask c = t[1], b = t[2], d = t[3];
      if (!sub(c, b) || !sub(b, d)) return std::nullopt;
      return !(r(a, b, c) && r(a, d, b)) || r(a, d, c);
    }
    case AxiomId::TRA_STRONG: {
      const Mask b = t[1], c = t[2], d = t[3];
      return !(r(a, b, c) && r(a, d, b | c)) || r(a, b | d, c);
    }
    case AxiomId::BMON_STRONG: {
      const Mask b = t[1], c = t[2], d = t[3];
      return !r(a, b | d, c) || r(a, b, c | d);
    }
    case AxiomId::AREF:
      if (a == 0 || (a & (a - 1)) != 0) return std::nullopt;
      return !r(a, a, t[1]) || sub(a, cl(t[1]));
    case AxiomId::CLO_L:
    case AxiomId::CLO_R: return !r(a, t[1], t[2]) || r(a, cl(t[1]), t[2]);
    case AxiomId::SCLO: return r(a, t[1], t[2]) == r(cl(a | t[2]), cl(t[1] | t[2]), cl(t[2]));
    case AxiomId::FREE: {
      const Mask b = t[1], c = t[2], d = t[3];
      if (!sub(c & (a | b), d) || !sub(d, c)) return std::nullopt;
      return !r(a, b, c) || r(a, b, d);
    }
    default: return std::nullopt;
  }
}

// Least violating tuple by plain nested enumeration.
inline std::optional<std::vector<Mask>> first_violation(AxiomId ax, unsigned n, const Rel& r,
                                                        const std::function<Mask(Mask)>& cl) {
  const std::size_t k = arity(ax);
  if (k == 0) return std::nullopt;
  const std::uint64_t count = std::uint64_t{1} << n;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= count;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::array<Mask, 4> t{};
    std::uint64_t rest = code;
    for (std::size_t i = k; i-- > 0;) {
      t[i] = static_cast<Mask>(rest % count);
      rest /= count;
    }
    auto v = body(ax, r, cl, t);
    if (v && !*v) return std::vector<Mask>(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return std::nullopt;
}

inline std::vector<Mask> masks(const std::vector<indep::Subset>& w) {
  std::vector<Mask> out;
  for (const auto& s : w) out.push_back(s.bits());
  return out;
}

}  // namespace oracle
