#pragma once

// Copies of digraphs whose underlying graph has maximum degree <= 2 (disjoint
// unions of oriented paths, oriented cycles and isolated vertices).

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tourtype/census.hpp"
#include "tourtype/errors.hpp"
#include "tourtype/tournament.hpp"
#include "tourtype/type_algebra.hpp"

namespace tourtype {

struct Component {
  enum class Kind { Path, Cycle, Vertex };

  Kind kind = Kind::Vertex;
  SignedTuple tuple;  // standard; empty for Vertex

  static Component path(SignedTuple alpha) { return {Kind::Path, normalize_path(alpha)}; }
  static Component cycle(SignedTuple beta) {
    SignedTuple b = normalize_cycle(beta);
    if (arc_count(b) < 3) throw TooShort("a cycle component needs at least three vertices");
    return {Kind::Cycle, std::move(b)};
  }
  static Component vertex() { return {}; }

  int order() const {
    switch (kind) {
      case Kind::Path: return arc_count(tuple) + 1;
      case Kind::Cycle: return arc_count(tuple);
      case Kind::Vertex: return 1;
    }
    return 0;
  }

  // Isomorphism class key: kind plus canonical tuple.
  std::pair<int, SignedTuple> class_key() const {
    switch (kind) {
      case Kind::Path: return {0, path_canonical(tuple).repr()};
      case Kind::Cycle: return {1, cycle_canonical(tuple).repr()};
      case Kind::Vertex: return {2, {}};
    }
    return {};
  }

  friend bool operator==(const Component&, const Component&) = default;
};

struct Digraph2Spec {
  std::vector<Component> components;

  int order() const {
    int total = 0;
    for (const auto& c : components) total += c.order();
    return total;
  }
};

// ---------------------------------------------------------------------------
// Text form: "P(2,-1);C(3);V;V"

inline std::string to_string(const Component& c) {
  switch (c.kind) {
    case Component::Kind::Path: return "P" + to_string(c.tuple);
    case Component::Kind::Cycle: return "C" + to_string(c.tuple);
    case Component::Kind::Vertex: return "V";
  }
  return {};
}

inline std::string to_string(const Digraph2Spec& h) {
  std::string out;
  for (std::size_t i = 0; i < h.components.size(); ++i) {
    if (i) out += ';';
    out += to_string(h.components[i]);
  }
  return out;
}

inline Digraph2Spec parse_digraph_spec(std::string_view text) {
  Digraph2Spec h;
  std::size_t start = 0;
  for (;;) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    std::size_t lead = 0;
    while (lead < item.size() && std::isspace(static_cast<unsigned char>(item[lead]))) ++lead;
    std::size_t tail = item.size();
    while (tail > lead && std::isspace(static_cast<unsigned char>(item[tail - 1]))) --tail;
    const std::size_t at = start + lead;
    item = item.substr(lead, tail - lead);
    if (item.empty()) throw ParseError("empty component", at);
    const char kind = item.front();
    try {
      if (kind == 'V' && item.size() == 1) {
        h.components.push_back(Component::vertex());
      } else if (kind == 'P' || kind == 'C') {
        detail::TupleScanner scan{item.substr(1), 0, at + 1};
        SignedTuple t = scan.tuple();
        scan.skip_space();
        if (scan.pos != item.size() - 1) scan.fail("trailing characters in component");
        h.components.push_back(kind == 'P' ? Component::path(std::move(t)) : Component::cycle(std::move(t)));
      } else {
        throw ParseError("component must be P(...), C(...) or V", at);
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(std::string("invalid component: ") + e.what(), at);
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return h;
}

// ---------------------------------------------------------------------------
// Counting

// Counts copies of Delta<=2 digraphs in one tournament. Per-class subset
// tables are cached, so one counter can serve many specs.
class CopyCounter {
 public:
  explicit CopyCounter(const Tournament& t) : t_(t) {}

  const Tournament& tournament() const { return t_; }

  Count count(const Digraph2Spec& h) {
    const int n = t_.order();
    if (h.order() > n) throw TooManyVertices("digraph has more vertices than the tournament");
    if (h.components.empty()) return 1;

    std::vector<Component> comps = h.components;
    std::sort(comps.begin(), comps.end(),
              [](const Component& a, const Component& b) { return key_less(a.class_key(), b.class_key()); });

    std::vector<const std::vector<Count>*> tables;
    Count symmetry = 1;
    Count run = 0;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      tables.push_back(&table_for(comps[i]));
      run = (i > 0 && comps[i].class_key() == comps[i - 1].class_key()) ? run + 1 : 1;
      symmetry *= run;
    }

    memo_.assign(comps.size() + 1, {});
    const Count ordered = place(comps, tables, 0, 0);
    if (ordered % symmetry != 0) {
      throw DivisibilityViolation("ordered placements " + std::to_string(ordered) + " not divisible by " +
                                  std::to_string(symmetry));
    }
    return ordered / symmetry;
  }

 private:
  static bool key_less(const std::pair<int, SignedTuple>& a, const std::pair<int, SignedTuple>& b) {
    if (a.first != b.first) return a.first < b.first;
    return canonical_less(a.second, b.second);
  }

  const std::vector<Count>& table_for(const Component& c) {
    auto key = c.class_key();
    auto it = tables_.find(key);
    if (it != tables_.end()) return it->second;
    std::vector<Count> table;
    switch (c.kind) {
      case Component::Kind::Path: table = paths_by_subset(t_, c.tuple); break;
      case Component::Kind::Cycle: table = cycles_by_subset(t_, c.tuple); break;
      case Component::Kind::Vertex:
        table.assign(std::size_t{1} << t_.order(), 0);
        for (int v = 0; v < t_.order(); ++v) table[std::size_t{1} << v] = 1;
        break;
    }
    return tables_.emplace(std::move(key), std::move(table)).first->second;
  }

  // Ordered placements of comps[i..] on vertices outside used.
  Count place(const std::vector<Component>& comps, const std::vector<const std::vector<Count>*>& tables,
              std::size_t i, std::uint32_t used) {
    if (i == comps.size()) return 1;
    auto& memo = memo_[i];
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    const int size = comps[i].order();
    const std::uint32_t free = t_.vertex_mask() & ~used;
    Count total = 0;
    // Enumerate subsets of free vertices.
    for (std::uint32_t x = free;; x = (x - 1) & free) {
      if (std::popcount(x) == size) {
        if (const Count here = (*tables[i])[x]) total += here * place(comps, tables, i + 1, used | x);
      }
      if (x == 0) break;
    }
    memo.emplace(used, total);
    return total;
  }

  Tournament t_;
  std::map<std::pair<int, SignedTuple>, std::vector<Count>,
           bool (*)(const std::pair<int, SignedTuple>&, const std::pair<int, SignedTuple>&)>
      tables_{&CopyCounter::key_less};
  std::vector<std::map<std::uint32_t, Count>> memo_;
};

inline Count count_copies(const Tournament& t, const Digraph2Spec& h) { return CopyCounter(t).count(h); }

struct InvarianceResult {
  Count in_tournament = 0;
  Count in_complement = 0;
  bool equal = false;
};

inline InvarianceResult check_complement_invariance(const Tournament& t, const Digraph2Spec& h) {
  const Count a = count_copies(t, h);
  const Count b = count_copies(complement(t), h);
  return {a, b, a == b};
}

// ---------------------------------------------------------------------------
// Enumerating and sampling digraphs

namespace detail {

// One representative component per isomorphism class, on exactly `size` vertices.
inline std::vector<Component> component_classes(int size) {
  std::vector<Component> out;
  if (size == 1) {
    out.push_back(Component::vertex());
    return out;
  }
  std::vector<PathType> paths;
  for (std::uint32_t w = 0; w < (1U << (size - 1)); ++w) {
    PathType p = path_canonical(path_tuple_from_word({w, size - 1}));
    if (std::find(paths.begin(), paths.end(), p) == paths.end()) paths.push_back(std::move(p));
  }
  std::sort(paths.begin(), paths.end());
  for (const auto& p : paths) out.push_back(Component::path(p.repr()));
  if (size >= 3) {
    std::vector<CycleType> cycles;
    for (std::uint32_t w = 0; w < (1U << size); ++w) {
      CycleType c = cycle_canonical(cycle_tuple_from_word({w, size}));
      if (std::find(cycles.begin(), cycles.end(), c) == cycles.end()) cycles.push_back(std::move(c));
    }
    std::sort(cycles.begin(), cycles.end());
    for (const auto& c : cycles) out.push_back(Component::cycle(c.repr()));
  }
  return out;
}

}  // namespace detail

// Every nonempty Delta<=2 digraph on at most max_vertices vertices, one spec
// per isomorphism class, components listed in class order.
inline std::vector<Digraph2Spec> all_digraph_specs(int max_vertices) {
  std::vector<Component> classes;
  for (int size = 1; size <= max_vertices; ++size) {
    auto more = detail::component_classes(size);
    classes.insert(classes.end(), more.begin(), more.end());
  }
  std::vector<Digraph2Spec> out;
  Digraph2Spec current;
  auto extend = [&](auto&& self, std::size_t from, int budget) -> void {
    for (std::size_t i = from; i < classes.size(); ++i) {
      const int size = classes[i].order();
      if (size > budget) continue;
      current.components.push_back(classes[i]);
      out.push_back(current);
      self(self, i, budget - size);
      current.components.pop_back();
    }
  };
  extend(extend, 0, max_vertices);
  return out;
}

// Random Delta<=2 digraph on at most max_vertices vertices (at least one component).
inline Digraph2Spec random_digraph_spec(int max_vertices, SplitMix64& rng) {
  Digraph2Spec h;
  int budget = max_vertices;
  while (budget > 0) {
    if (!h.components.empty() && rng.below(4) == 0) break;
    const int size = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(budget)));
    const bool as_cycle = size >= 3 && rng.below(2) == 1;
    if (size == 1) {
      h.components.push_back(Component::vertex());
    } else if (as_cycle) {
      // Uniform cyclic word; compressed to its standard tuple.
      const auto word = static_cast<std::uint32_t>(rng.below(std::uint64_t{1} << size));
      h.components.push_back(Component::cycle(cycle_tuple_from_word({word, size})));
    } else {
      const auto word = static_cast<std::uint32_t>(rng.below(std::uint64_t{1} << (size - 1)));
      h.components.push_back(Component::path(path_tuple_from_word({word, size - 1})));
    }
    budget -= size;
  }
  return h;
}

// ---------------------------------------------------------------------------
// The out-star counterexample (maximum degree n > 2)

// Out-stars with `leaves` leaves: one per choice of centre and leaf set.
inline Count count_out_stars(const Tournament& t, int leaves) {
  Count total = 0;
  for (int v = 0; v < t.order(); ++v) {
    const int d = t.out_degree(v);
    if (d < leaves) continue;
    Count c = 1;
    for (int k = 0; k < leaves; ++k) c = c * static_cast<Count>(d - k) / static_cast<Count>(k + 1);
    total += c;
  }
  return total;
}

struct StarCounterexample {
  Tournament tournament;
  // H*: centre 0 with arcs 0 -> 1, ..., 0 -> n.
  int star_vertices = 0;
  std::vector<std::pair<int, int>> star_arcs;
  Count count = 0;
  Count complement_count = 0;
};

// Directed n-cycle 0 -> 1 -> ... -> n-1 -> 0 with chords oriented from lower
// to higher index, plus vertex n dominating all of them.
inline StarCounterexample star_counterexample(int n) {
  if (n < 3) throw IllFormed("the counterexample needs a cycle of length at least 3");
  if (n + 1 > Tournament::kMaxOrder) throw ScopeTooLarge("counterexample limited to n <= 15");
  const int source = n;
  StarCounterexample out;
  out.tournament = Tournament::from_predicate(n + 1, [&](int i, int j) {
    if (j == source) return false;       // source -> i
    if (i == 0 && j == n - 1) return false;  // closing arc n-1 -> 0
    return true;
  });
  out.star_vertices = n + 1;
  for (int leaf = 1; leaf <= n; ++leaf) out.star_arcs.emplace_back(0, leaf);
  out.count = count_out_stars(out.tournament, n);
  out.complement_count = count_out_stars(complement(out.tournament), n);
  return out;
}

}  // namespace tourtype
