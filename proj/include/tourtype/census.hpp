#pragma once

// Exact counting of typed paths, enumerations and cycles in a tournament.
//
// Three independent routes exist on purpose:
//   * single-pattern subset DP (count_enumerations / count_paths / count_cycles),
//   * all-words subset DP tables (census),
//   * raw permutation enumeration (oracle_census, path_classes).
// Tests cross-check them against each other.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "tourtype/errors.hpp"
#include "tourtype/tournament.hpp"
#include "tourtype/type_algebra.hpp"

namespace tourtype {

using Count = std::uint64_t;

inline constexpr int kCensusLimit = 12;
inline constexpr int kOracleLimit = 8;
inline constexpr int kClassLimit = 9;

constexpr Count factorial(int n) {
  Count f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<Count>(k);
  return f;
}

// Every count is bounded by n! <= 16! < 2^45, so 64-bit arithmetic is exact.
static_assert(factorial(Tournament::kMaxOrder) < (Count{1} << 45));

struct CensusReport {
  int order = 0;
  std::map<PathType, Count> path_counts;
  std::map<CycleType, Count> cycle_counts;

  friend bool operator==(const CensusReport&, const CensusReport&) = default;
};

// ---------------------------------------------------------------------------
// Classification of concrete vertex sequences

namespace detail {

inline void require_distinct(const Tournament& t, std::span<const int> seq) {
  std::uint32_t seen = 0;
  for (int v : seq) {
    if (v < 0 || v >= t.order()) throw BadSubset("vertex out of range");
    if ((seen >> v) & 1U) throw BadSubset("vertex repeated in enumeration");
    seen |= 1U << v;
  }
}

inline SignWord path_word(const Tournament& t, std::span<const int> seq) {
  SignWord w{0, static_cast<int>(seq.size()) - 1};
  for (int j = 0; j + 1 < static_cast<int>(seq.size()); ++j) {
    if (t.arc(seq[j], seq[j + 1])) w.bits |= 1U << j;
  }
  return w;
}

inline SignWord cycle_word(const Tournament& t, std::span<const int> seq) {
  const int m = static_cast<int>(seq.size());
  SignWord w{0, m};
  for (int j = 0; j < m; ++j) {
    if (t.arc(seq[j], seq[(j + 1) % m])) w.bits |= 1U << j;
  }
  return w;
}

inline std::uint32_t rotate_word(std::uint32_t bits, int length, int k) {
  if (k == 0) return bits;
  const std::uint32_t mask = (1U << length) - 1U;
  return ((bits >> k) | (bits << (length - k))) & mask;
}

}  // namespace detail

inline SignedTuple classify_enumeration(const Tournament& t, std::span<const int> seq) {
  if (seq.size() < 2) throw TooShort("an enumeration needs at least two vertices");
  detail::require_distinct(t, seq);
  return path_tuple_from_word(detail::path_word(t, seq));
}

inline CycleType classify_cycle(const Tournament& t, std::span<const int> seq) {
  if (seq.size() < 3) throw TooShort("a cycle needs at least three vertices");
  detail::require_distinct(t, seq);
  return cycle_canonical(cycle_tuple_from_word(detail::cycle_word(t, seq)));
}

// ---------------------------------------------------------------------------
// Single-pattern subset DP

namespace detail {

inline std::uint32_t in_mask(const Tournament& t, int v) {
  return t.vertex_mask() & ~t.out_mask(v) & ~(1U << v);
}

// Number of enumerations with sign word w whose vertex set is exactly S, for
// every S (entries with |S| != w.length + 1 are zero).
inline std::vector<Count> enumerations_by_subset(const Tournament& t, SignWord w) {
  const int n = t.order();
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<Count> result(subsets, 0);
  const int m = w.length + 1;
  if (m > n || n == 0) return result;
  std::vector<Count> dp(subsets * static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) dp[(std::size_t{1} << v) * n + v] = 1;
  for (std::uint32_t s = 1; s < subsets; ++s) {
    const int size = std::popcount(s);
    for (int last = 0; last < n; ++last) {
      const Count c = dp[std::size_t{s} * n + last];
      if (c == 0) continue;
      if (size == m) {
        result[s] += c;
        continue;
      }
      std::uint32_t next = (w.forward(size - 1) ? t.out_mask(last) : in_mask(t, last)) & ~s;
      while (next) {
        const int v = std::countr_zero(next);
        next &= next - 1;
        dp[std::size_t{s | (1U << v)} * n + v] += c;
      }
    }
  }
  return result;
}

// Closed enumerations (any start vertex) whose cyclic word read from the
// start equals w, per exact vertex set S with |S| = w.length.
inline std::vector<Count> closed_by_subset(const Tournament& t, SignWord w) {
  const int n = t.order();
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<Count> result(subsets, 0);
  const int m = w.length;
  if (m < 3 || m > n) return result;
  std::vector<Count> dp(subsets * static_cast<std::size_t>(n));
  for (int start = 0; start < n; ++start) {
    std::fill(dp.begin(), dp.end(), 0);
    dp[(std::size_t{1} << start) * n + start] = 1;
    for (std::uint32_t s = 1; s < subsets; ++s) {
      if (!((s >> start) & 1U)) continue;
      const int size = std::popcount(s);
      for (int last = 0; last < n; ++last) {
        const Count c = dp[std::size_t{s} * n + last];
        if (c == 0) continue;
        if (size == m) {
          if (t.arc(last, start) == w.forward(m - 1)) result[s] += c;
          continue;
        }
        std::uint32_t next = (w.forward(size - 1) ? t.out_mask(last) : in_mask(t, last)) & ~s;
        while (next) {
          const int v = std::countr_zero(next);
          next &= next - 1;
          dp[std::size_t{s | (1U << v)} * n + v] += c;
        }
      }
    }
  }
  return result;
}

// g = N / (delta * t); the division is exact for a correct N.
inline Count cycles_from_closed(Count closed, const SignedTuple& beta) {
  const auto divisor = static_cast<Count>(delta(beta) * period_info(beta).t);
  if (closed % divisor != 0) {
    throw DivisibilityViolation("closed enumeration count " + std::to_string(closed) + " not divisible by " +
                                std::to_string(divisor) + " for " + to_string(beta));
  }
  return closed / divisor;
}

inline Count paths_from_enumerations(Count e, const SignedTuple& alpha) {
  if (!is_symmetric(alpha)) return e;
  if (e % 2 != 0) throw ParityViolation("odd enumeration count for symmetric type " + to_string(alpha));
  return e / 2;
}

inline void require_standard_path(const SignedTuple& alpha) {
  if (!is_standard_path(alpha)) throw IllFormed("expected a standard path tuple, got " + to_string(alpha));
}

inline void require_standard_cycle(const SignedTuple& beta) {
  if (!is_standard_cycle(beta)) throw IllFormed("expected a standard cycle tuple, got " + to_string(beta));
}

}  // namespace detail

// e_T(alpha): enumerations of any Sum|alpha_i|+1 vertices whose type is alpha.
inline Count count_enumerations(const Tournament& t, const SignedTuple& alpha) {
  detail::require_standard_path(alpha);
  if (arc_count(alpha) + 1 > t.order()) throw TypeTooLong("type needs more vertices than the tournament has");
  const auto by_subset = detail::enumerations_by_subset(t, expand(alpha));
  return std::accumulate(by_subset.begin(), by_subset.end(), Count{0});
}

// f_T(alpha): paths (as arc sets) of type alpha.
inline Count count_paths(const Tournament& t, const SignedTuple& alpha) {
  return detail::paths_from_enumerations(count_enumerations(t, alpha), alpha);
}

// f per exact vertex set; used when placing disjoint components.
inline std::vector<Count> paths_by_subset(const Tournament& t, const SignedTuple& alpha) {
  detail::require_standard_path(alpha);
  auto by_subset = detail::enumerations_by_subset(t, expand(alpha));
  for (Count& c : by_subset) c = detail::paths_from_enumerations(c, alpha);
  return by_subset;
}

inline std::vector<Count> cycles_by_subset(const Tournament& t, const SignedTuple& beta) {
  detail::require_standard_cycle(beta);
  if (arc_count(beta) < 3) throw TooShort("a cycle needs at least three vertices");
  auto by_subset = detail::closed_by_subset(t, expand(beta));
  for (Count& c : by_subset) c = detail::cycles_from_closed(c, beta);
  return by_subset;
}

// g_T(beta). Hamiltonian types are counted directly; shorter types are summed
// over the induced subtournaments of the right order.
inline Count count_cycles(const Tournament& t, const SignedTuple& beta) {
  detail::require_standard_cycle(beta);
  const int m = arc_count(beta);
  const int n = t.order();
  if (m < 3) throw TooShort("a cycle needs at least three vertices");
  if (m > n) throw TypeTooLong("type needs more vertices than the tournament has");
  if (m == n) {
    const auto closed = detail::closed_by_subset(t, expand(beta));
    return detail::cycles_from_closed(closed[t.vertex_mask()], beta);
  }
  Count total = 0;
  for (std::uint32_t x = 0; x <= t.vertex_mask(); ++x) {
    if (std::popcount(x) == m) total += count_cycles(induced(t, x), beta);
  }
  return total;
}

// ---------------------------------------------------------------------------
// All-words tables

namespace detail {

// Subset DP carrying the full sign word of each partial enumeration:
// state (S, last, word of |S|-1 arcs). With min_start only enumerations that
// start at min(S) are generated.
class WordDp {
 public:
  WordDp(const Tournament& t, bool min_start) : t_(t), n_(t.order()) {
    const std::size_t subsets = std::size_t{1} << n_;
    offset_.resize(subsets + 1, 0);
    for (std::size_t s = 0; s < subsets; ++s) {
      const int p = std::popcount(static_cast<std::uint32_t>(s));
      offset_[s + 1] = offset_[s] + (p == 0 ? 0 : static_cast<std::size_t>(p) << (p - 1));
    }
    counts_.assign(offset_[subsets], 0);
    for (int v = 0; v < n_; ++v) counts_[slot(1U << v, v, 0)] = 1;
    for (std::uint32_t s = 1; s < subsets; ++s) {
      const int p = std::popcount(s);
      const std::uint32_t lowest = s & (~s + 1);
      for (int last = 0; last < n_; ++last) {
        if (!((s >> last) & 1U)) continue;
        const std::size_t base = slot(s, last, 0);
        std::uint32_t candidates = t_.vertex_mask() & ~s;
        if (min_start) candidates &= ~(lowest - 1U);
        for (std::uint32_t word = 0; word < (1U << (p - 1)); ++word) {
          const Count c = counts_[base + word];
          if (c == 0) continue;
          std::uint32_t next = candidates;
          while (next) {
            const int v = std::countr_zero(next);
            next &= next - 1;
            const std::uint32_t bit = t_.arc(last, v) ? 1U : 0U;
            counts_[slot(s | (1U << v), v, word | (bit << (p - 1)))] += c;
          }
        }
      }
    }
  }

  template <class Fn>  // fn(S, last, word, count) for every nonzero state
  void for_each(Fn fn) const {
    const std::size_t subsets = std::size_t{1} << n_;
    for (std::uint32_t s = 1; s < subsets; ++s) {
      const int p = std::popcount(s);
      for (int last = 0; last < n_; ++last) {
        if (!((s >> last) & 1U)) continue;
        const std::size_t base = slot(s, last, 0);
        for (std::uint32_t word = 0; word < (1U << (p - 1)); ++word) {
          if (const Count c = counts_[base + word]) fn(s, last, word, c);
        }
      }
    }
  }

 private:
  std::size_t slot(std::uint32_t s, int last, std::uint32_t word) const {
    const int rank = std::popcount(s & ((1U << last) - 1U));
    const int p = std::popcount(s);
    return offset_[s] + (static_cast<std::size_t>(rank) << (p - 1)) + word;
  }

  const Tournament& t_;
  int n_;
  std::vector<std::size_t> offset_;
  std::vector<Count> counts_;
};

}  // namespace detail

// e_T(word) for every sign word of every length 0..n-1.
struct EnumerationTable {
  std::vector<std::vector<Count>> by_length;  // by_length[k][word], 2^k entries

  Count at(SignWord w) const { return by_length.at(static_cast<std::size_t>(w.length))[w.bits]; }
};

// N(word) for every cyclic word of length 3..n: closed enumerations over any
// start vertex whose cyclic word read from the start equals word.
struct ClosedTable {
  std::vector<std::vector<Count>> by_length;  // by_length[m][word], 2^m entries for m >= 3

  Count at(SignWord w) const { return by_length.at(static_cast<std::size_t>(w.length))[w.bits]; }
};

inline EnumerationTable enumeration_table(const Tournament& t) {
  if (t.order() > kCensusLimit) throw ScopeTooLarge("enumeration table limited to n <= 12");
  EnumerationTable table;
  table.by_length.resize(static_cast<std::size_t>(std::max(t.order(), 1)));
  for (int k = 0; k < t.order(); ++k) table.by_length[k].assign(std::size_t{1} << k, 0);
  detail::WordDp dp(t, false);
  dp.for_each([&](std::uint32_t s, int, std::uint32_t word, Count c) {
    table.by_length[std::popcount(s) - 1][word] += c;
  });
  return table;
}

inline ClosedTable closed_table(const Tournament& t) {
  if (t.order() > kCensusLimit) throw ScopeTooLarge("closed table limited to n <= 12");
  const int n = t.order();
  ClosedTable table;
  table.by_length.resize(static_cast<std::size_t>(n + 1));
  for (int m = 3; m <= n; ++m) table.by_length[m].assign(std::size_t{1} << m, 0);
  if (n < 3) return table;
  // Closed enumerations starting at min(S); each one is the rotation-0 member
  // of the m readings that start elsewhere on the same cyclic order.
  std::vector<std::vector<Count>> from_min(static_cast<std::size_t>(n + 1));
  for (int m = 3; m <= n; ++m) from_min[m].assign(std::size_t{1} << m, 0);
  detail::WordDp dp(t, true);
  dp.for_each([&](std::uint32_t s, int last, std::uint32_t word, Count c) {
    const int m = std::popcount(s);
    if (m < 3) return;
    const int start = std::countr_zero(s);
    const std::uint32_t bit = t.arc(last, start) ? 1U : 0U;
    from_min[m][word | (bit << (m - 1))] += c;
  });
  for (int m = 3; m <= n; ++m) {
    for (std::uint32_t u = 0; u < (1U << m); ++u) {
      const Count c = from_min[m][u];
      if (c == 0) continue;
      for (int k = 0; k < m; ++k) table.by_length[m][detail::rotate_word(u, m, k)] += c;
    }
  }
  return table;
}

inline Count paths_from_table(const EnumerationTable& table, const SignedTuple& alpha) {
  return detail::paths_from_enumerations(table.at(expand(alpha)), alpha);
}

inline Count cycles_from_table(const ClosedTable& table, const SignedTuple& beta) {
  return detail::cycles_from_closed(table.at(expand(beta)), beta);
}

// f and g for every canonical type on all n vertices (explicit zeros kept).
inline CensusReport census(const Tournament& t) {
  const int n = t.order();
  if (n > kCensusLimit) throw ScopeTooLarge("census limited to n <= 12");
  CensusReport report;
  report.order = n;
  if (n < 2) return report;

  const EnumerationTable paths = enumeration_table(t);
  const int arcs = n - 1;
  for (std::uint32_t word = 0; word < (1U << arcs); ++word) {
    const SignedTuple alpha = path_tuple_from_word({word, arcs});
    const Count f = paths_from_table(paths, alpha);
    auto [it, inserted] = report.path_counts.emplace(path_canonical(alpha), f);
    if (!inserted && it->second != f) {
      throw ParityViolation("the two readings of " + to_string(alpha) + " disagree");
    }
  }

  if (n < 3) return report;
  const ClosedTable cycles = closed_table(t);
  for (std::uint32_t word = 0; word < (1U << n); ++word) {
    const CycleType beta = cycle_canonical(cycle_tuple_from_word({word, n}));
    if (report.cycle_counts.contains(beta)) continue;
    report.cycle_counts.emplace(beta, cycles_from_table(cycles, beta.repr()));
  }
  return report;
}

// Brute force over permutations: no DP, no delta/t arithmetic.
inline CensusReport oracle_census(const Tournament& t) {
  const int n = t.order();
  if (n > kOracleLimit) throw ScopeTooLarge("oracle census limited to n <= 8");
  CensusReport report;
  report.order = n;
  if (n < 2) return report;

  for (std::uint32_t word = 0; word < (1U << (n - 1)); ++word) {
    report.path_counts.emplace(path_canonical(path_tuple_from_word({word, n - 1})), 0);
  }
  VertexSeq perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    // One reading per arc set.
    if (perm.front() < perm.back()) ++report.path_counts[path_canonical(classify_enumeration(t, perm))];
  } while (std::next_permutation(perm.begin(), perm.end()));

  if (n < 3) return report;
  for (std::uint32_t word = 0; word < (1U << n); ++word) {
    report.cycle_counts.emplace(cycle_canonical(cycle_tuple_from_word({word, n})), 0);
  }
  std::iota(perm.begin(), perm.end(), 0);
  do {
    // Cyclic orders through vertex 0, one direction each.
    if (perm[1] < perm[n - 1]) ++report.cycle_counts[classify_cycle(t, perm)];
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return report;
}

// ---------------------------------------------------------------------------
// Clones and generated-cycle classes

// Clone classes of the cycle through seq (read cyclically). Two positions are
// clones when the shift between them maps the cycle's word onto itself; a
// circuit has only trivial clones.
inline std::vector<VertexSeq> clones(const Tournament& t, std::span<const int> seq) {
  if (seq.size() < 3) throw TooShort("a cycle needs at least three vertices");
  detail::require_distinct(t, seq);
  const int m = static_cast<int>(seq.size());
  const SignWord w = detail::cycle_word(t, seq);
  std::vector<int> shifts{0};
  const bool circuit = w.bits == 0 || w.bits == (1U << m) - 1U;
  if (!circuit) {
    for (int d = 1; d < m; ++d) {
      if (detail::rotate_word(w.bits, m, d) == w.bits) shifts.push_back(d);
    }
  }
  std::vector<bool> assigned(static_cast<std::size_t>(m), false);
  std::vector<VertexSeq> classes;
  for (int i = 0; i < m; ++i) {
    if (assigned[i]) continue;
    VertexSeq cls;
    for (int d : shifts) {
      const int j = (i + d) % m;
      assigned[j] = true;
      cls.push_back(seq[j]);
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end());
  return classes;
}

// Size every class of generated paths must have for a cycle of type beta on n vertices.
inline Count expected_class_size(const CycleType& beta, int n) {
  const SignedTuple& b = beta.repr();
  if (is_singleton(b)) return static_cast<Count>(n);
  const auto t = static_cast<Count>(period_info(b).t);
  return is_symmetric_cycle(b) ? 2 * t : t;
}

struct PathClass {
  CycleType cycle_type;
  VertexSeq cycle;               // rotated to start at its least vertex, smaller neighbour second
  std::vector<VertexSeq> paths;  // each path listed by a reading of type alpha
};

struct ClassPartition {
  std::vector<PathClass> classes;
};

namespace detail {

inline VertexSeq canonical_cyclic_order(VertexSeq seq) {
  const auto lowest = std::min_element(seq.begin(), seq.end());
  std::rotate(seq.begin(), lowest, seq.end());
  if (seq.size() > 2 && seq.back() < seq[1]) std::reverse(seq.begin() + 1, seq.end());
  return seq;
}

}  // namespace detail

// Hamiltonian paths of type alpha grouped by the cycle they generate.
inline ClassPartition path_classes(const Tournament& t, const SignedTuple& alpha) {
  detail::require_standard_path(alpha);
  const int n = t.order();
  if (arc_count(alpha) + 1 > n) throw TypeTooLong("type needs more vertices than the tournament has");
  if (arc_count(alpha) + 1 < n) throw IllFormed("path classes are defined for Hamiltonian types");
  if (n > kClassLimit) throw ScopeTooLarge("path classes limited to n <= 9");

  const SignWord target = expand(alpha);
  const bool symmetric = is_symmetric(alpha);
  std::map<VertexSeq, PathClass> grouped;
  VertexSeq perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (!(detail::path_word(t, perm) == target)) continue;
    if (symmetric && perm.front() > perm.back()) continue;  // both readings have type alpha
    VertexSeq cycle = detail::canonical_cyclic_order(perm);
    auto it = grouped.find(cycle);
    if (it == grouped.end()) {
      it = grouped.emplace(cycle, PathClass{classify_cycle(t, perm), cycle, {}}).first;
    }
    it->second.paths.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  ClassPartition partition;
  for (auto& [key, cls] : grouped) partition.classes.push_back(std::move(cls));
  return partition;
}

}  // namespace tourtype
