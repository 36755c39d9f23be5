#pragma once

// Property sweeps over exhaustive or seeded-random tournament scopes.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <vector>

#include "tourtype/census.hpp"
#include "tourtype/digraph.hpp"
#include "tourtype/errors.hpp"
#include "tourtype/tournament.hpp"
#include "tourtype/type_algebra.hpp"

namespace tourtype {

enum class TypeKind { Path, Cycle };

// Every standard tuple (both sign phases) with the given arc sum, in canonical order.
inline std::vector<SignedTuple> list_types(int arc_sum, TypeKind kind) {
  if (arc_sum < 1) throw EmptyType("arc sum must be positive");
  if (arc_sum > 30) throw TypeTooLong("arc sum too large to list");
  std::vector<SignedTuple> out;
  // Compositions of arc_sum <-> subsets of the arc_sum-1 cut points.
  for (std::uint32_t cuts = 0; cuts < (1U << (arc_sum - 1)); ++cuts) {
    std::vector<int> parts;
    int run = 1;
    for (int j = 0; j < arc_sum - 1; ++j) {
      if ((cuts >> j) & 1U) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    if (kind == TypeKind::Cycle && parts.size() > 1 && parts.size() % 2 == 1) continue;
    for (int phase : {1, -1}) {
      std::vector<int> t(parts);
      for (std::size_t i = 0; i < t.size(); ++i) t[i] *= (i % 2 == 0) ? phase : -phase;
      out.emplace_back(std::move(t));
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

enum class ScopeMode { Exhaustive, Random };

struct Scope {
  ScopeMode mode = ScopeMode::Exhaustive;
  int order = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  bool allow_large = false;

  static Scope exhaustive(int n, bool allow_large = false) { return {ScopeMode::Exhaustive, n, 0, 0, allow_large}; }
  static Scope random(int n, std::uint64_t samples, std::uint64_t seed) {
    return {ScopeMode::Random, n, samples, seed, false};
  }
};

inline constexpr int kRandomScopeLimit = 12;
inline constexpr std::size_t kViolationCap = 10;

struct Violation {
  std::string tournament;
  std::optional<std::uint64_t> sample;
  std::string detail;
  std::vector<std::string> types;
  std::vector<Count> counts;
};

struct VerifyReport {
  std::string property;
  Scope scope;
  std::uint64_t tournaments = 0;
  std::uint64_t checked = 0;
  bool pass = true;
  std::vector<Violation> violations;  // sorted, at most kViolationCap
  std::uint64_t violation_count = 0;
  std::optional<bool> trivial;            // set by the antidirected check only
  std::map<std::string, Count> summary;   // property-specific scalars
  double ms = 0.0;
};

// ---------------------------------------------------------------------------

namespace detail {

struct Instance {
  Tournament tournament;
  std::uint64_t index = 0;
  std::optional<std::uint64_t> sample;
  std::uint64_t sample_seed = 0;
};

class Sink {
 public:
  explicit Sink(const Instance* inst = nullptr) : inst_(inst) {}

  void bind(const Instance* inst) {
    inst_ = inst;
    serialized_.clear();
  }

  // Records one comparison; on failure keeps reproduction data.
  void expect(bool ok, std::string_view detail, std::vector<std::string> types = {}, std::vector<Count> counts = {}) {
    ++checked;
    if (ok) return;
    ++violation_count;
    if (serialized_.empty()) serialized_ = serialize(inst_->tournament);
    violations.push_back({serialized_, inst_->sample, std::string(detail), std::move(types), std::move(counts)});
    // Keep memory bounded; the final cap is applied after sorting.
    if (violations.size() > 4 * kViolationCap) trim();
  }

  void trim() {
    sort_violations(violations);
    if (violations.size() > kViolationCap) violations.resize(kViolationCap);
  }

  void merge(Sink& other) {
    checked += other.checked;
    violation_count += other.violation_count;
    maximum = std::max(maximum, other.maximum);
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    trim();
  }

  static void sort_violations(std::vector<Violation>& v) {
    std::sort(v.begin(), v.end(), [](const Violation& a, const Violation& b) {
      return std::tie(a.tournament, a.sample, a.detail, a.types, a.counts) <
             std::tie(b.tournament, b.sample, b.detail, b.types, b.counts);
    });
  }

  std::uint64_t checked = 0;
  std::uint64_t violation_count = 0;
  Count maximum = 0;
  std::vector<Violation> violations;

 private:
  const Instance* inst_;
  std::string serialized_;
};

inline std::string s(const SignedTuple& t) { return to_string(t); }

// All standard tuples with a positive first entry and the given arc sum.
inline std::vector<SignedTuple> positive_types(int arc_sum, TypeKind kind) {
  std::vector<SignedTuple> out;
  for (auto& t : list_types(arc_sum, kind)) {
    if (t.front() > 0) out.push_back(std::move(t));
  }
  return out;
}

inline std::vector<CycleType> cycle_classes(int arc_sum) {
  std::set<CycleType> seen;
  for (const auto& b : list_types(arc_sum, TypeKind::Cycle)) seen.insert(cycle_canonical(b));
  return {seen.begin(), seen.end()};
}

// --- individual properties ---------------------------------------------------

inline void check_path_identity(const Instance& inst, Sink& sink) {
  const Tournament& t = inst.tournament;
  if (t.order() < 2) return;
  const EnumerationTable table = enumeration_table(t);
  for (int k = 1; k < t.order(); ++k) {
    for (const auto& alpha : positive_types(k, TypeKind::Path)) {
      const SignedTuple minus = negated(alpha);
      const Count a = paths_from_table(table, alpha);
      const Count b = paths_from_table(table, minus);
      sink.expect(a == b, "f(alpha) != f(-alpha)", {s(alpha), s(minus)}, {a, b});
    }
  }
}

inline void check_cycle_identity(const Instance& inst, Sink& sink) {
  const Tournament& t = inst.tournament;
  if (t.order() < 3) return;
  const ClosedTable table = closed_table(t);
  for (int m = 3; m <= t.order(); ++m) {
    for (const auto& beta : cycle_classes(m)) {
      const SignedTuple minus = negated(beta.repr());
      const Count a = cycles_from_table(table, beta.repr());
      const Count b = cycles_from_table(table, minus);
      sink.expect(a == b, "g(beta) != g(-beta)", {s(beta.repr()), s(minus)}, {a, b});
    }
  }
}

inline void check_enumeration_partition(const Instance& inst, Sink& sink) {
  const Tournament& t = inst.tournament;
  const int n = t.order();
  if (n < 2) return;
  const auto types = list_types(n - 1, TypeKind::Path);
  std::set<std::uint32_t> words;
  Count total = 0;
  for (const auto& alpha : types) {
    words.insert(expand(alpha).bits);
    total += count_enumerations(t, alpha);
  }
  sink.expect(words.size() == types.size(), "two types share an enumeration word", {},
              {static_cast<Count>(words.size()), static_cast<Count>(types.size())});
  sink.expect(total == factorial(n), "sum of e_T(alpha) != n!", {}, {total, factorial(n)});
}

inline void check_pe_ratio(const Instance& inst, Sink& sink) {
  const Tournament& t = inst.tournament;
  const int n = t.order();
  if (n < 2) return;
  const CensusReport oracle = oracle_census(t);
  for (const auto& alpha : list_types(n - 1, TypeKind::Path)) {
    const Count e = count_enumerations(t, alpha);
    const Count f = oracle.path_counts.at(path_canonical(alpha));
    const Count factor = is_symmetric(alpha) ? 2 : 1;
    sink.expect(e == factor * f, is_symmetric(alpha) ? "e != 2f for symmetric type" : "e != f for non-symmetric type",
                {s(alpha)}, {e, f});
  }
}

inline void check_class_sizes(const Instance& inst, Sink& sink) {
  const Tournament& t = inst.tournament;
  const int n = t.order();
  if (n < 3) return;
  const CensusReport oracle = oracle_census(t);
  for (const auto& [alpha, f] : oracle.path_counts) {
    const ClassPartition partition = path_classes(t, alpha.repr());
    Count total = 0;
    for (const auto& cls : partition.classes) {
      const Count size = cls.paths.size();
      const Count want = expected_class_size(cls.cycle_type, n);
      total += size;
      sink.expect(size == want, "class size differs from the law", {s(alpha.repr()), s(cls.cycle_type.repr())},
                  {size, want});
    }
    sink.expect(total == f, "classes do not cover P_T(alpha)", {s(alpha.repr())}, {total, f});
  }
}

inline void check_eqsym(const Instance& inst, Sink& sink) {
  const Tournament& t = inst.tournament;
  const int n = t.order();
  if (n < 3) return;

  std::map<CycleType, std::set<VertexSeq>> cycles;
  VertexSeq perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (perm[1] < perm[n - 1]) cycles[classify_cycle(t, perm)].insert(perm);
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  auto cycle_set = [&](const CycleType& c) -> const std::set<VertexSeq>& {
    static const std::set<VertexSeq> empty;
    auto it = cycles.find(c);
    return it == cycles.end() ? empty : it->second;
  };

  std::map<std::uint32_t, GeneratedCycles> generated;
  for (const auto& alpha : list_types(n - 1, TypeKind::Path)) {
    const GeneratedCycles gen = generated_cycle_types(alpha);
    generated.emplace(expand(alpha).bits, gen);
    const bool predicted = alpha.size() % 2 == 0 && is_symmetric(alpha);
    sink.expect(gen.coincide == predicted, "generated types coincide <=> alpha symmetric fails",
                {s(alpha), s(gen.beta.repr()), s(gen.beta_prime.repr())});
    const auto& a = cycle_set(gen.beta);
    const auto& b = cycle_set(gen.beta_prime);
    if (gen.coincide) {
      sink.expect(a == b, "coinciding types give different cycle sets", {s(alpha)},
                  {static_cast<Count>(a.size()), static_cast<Count>(b.size())});
    } else {
      const bool disjoint = std::none_of(a.begin(), a.end(), [&](const VertexSeq& c) { return b.contains(c); });
      sink.expect(disjoint, "distinct types share a cycle", {s(alpha)},
                  {static_cast<Count>(a.size()), static_cast<Count>(b.size())});
    }
  }

  // Every concrete path closes into beta or beta' according to the closing arc.
  std::iota(perm.begin(), perm.end(), 0);
  do {
    const SignWord w = path_word(t, perm);
    const GeneratedCycles& gen = generated.at(w.bits);
    const bool forward = t.arc(perm.back(), perm.front());
    const CycleType& want = forward == gen.beta_closes_forward ? gen.beta : gen.beta_prime;
    const CycleType got = classify_cycle(t, perm);
    sink.expect(got == want, "generated cycle type disagrees with the closing-arc rule",
                {s(path_tuple_from_word(w)), s(got.repr()), s(want.repr())});
  } while (std::next_permutation(perm.begin(), perm.end()));
}

inline void check_count_formula(const Instance& inst, Sink& sink) {
  const Tournament& t = inst.tournament;
  const int n = t.order();
  if (n < 3) return;
  // g comes from brute force; f from the subset DP.
  const CensusReport oracle = oracle_census(t);
  for (const auto& beta : list_types(n, TypeKind::Cycle)) {
    std::vector<int> raw(beta.begin(), beta.end());
    raw.front() = star_one(beta, 0);
    const SignedTuple path_raw(raw);
    const SignedTuple alpha = normalize_path(path_raw);
    const CycleType canon = cycle_canonical(beta);
    const GeneratedCycles gen = generated_cycle_types(alpha);
    if (!(gen.beta == canon || gen.beta_prime == canon)) {
      sink.expect(false, "beta is not generated by (beta_1*1, ...)", {s(beta), s(alpha)});
      continue;
    }
    const CycleType other = gen.beta == canon ? gen.beta_prime : gen.beta;
    if (beta.size() % 2 == 0) {
      raw.back() = star_one(beta, beta.size() - 1);
      const CycleType shifted = cycle_canonical(normalize_cycle(SignedTuple(raw)));
      sink.expect(shifted == other, "(beta_1*1, ..., beta_s*1) is not the second generated type",
                  {s(beta), s(shifted.repr()), s(other.repr())});
    }
    const Count f = count_paths(t, alpha);
    const Count g = oracle.cycle_counts.at(canon);
    const Count t_beta = static_cast<Count>(period_info(beta).t);
    if (is_symmetric(path_raw)) {
      sink.expect(f == g * t_beta, "f != g(beta) t(beta) in the symmetric case", {s(alpha), s(beta)},
                  {f, g * t_beta});
      sink.expect(f == g, "f != g(beta) in the symmetric case", {s(alpha), s(beta)}, {f, g});
    } else {
      const Count g2 = oracle.cycle_counts.at(other);
      const Count rhs = static_cast<Count>(delta(beta)) * g * t_beta +
                        static_cast<Count>(delta(other.repr())) * g2 * static_cast<Count>(period_info(other.repr()).t);
      sink.expect(f == rhs, "f != delta g t + delta' g' t'", {s(alpha), s(beta), s(other.repr())}, {f, rhs});
    }
  }
}

inline void check_t_one(const Instance& inst, Sink& sink) {
  const Tournament& t = inst.tournament;
  const int n = t.order();
  if (n < 3) return;
  for (const auto& alpha : list_types(n - 1, TypeKind::Path)) {
    if (!is_symmetric(alpha)) continue;
    const GeneratedCycles gen = generated_cycle_types(alpha);
    sink.expect(period_info(gen.beta.repr()).t == 1 && period_info(gen.beta_prime.repr()).t == 1,
                "generated type of a symmetric path has t != 1",
                {s(alpha), s(gen.beta.repr()), s(gen.beta_prime.repr())});
  }
  VertexSeq perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (perm.front() > perm.back()) continue;
    const SignedTuple alpha = classify_enumeration(t, perm);
    if (!is_symmetric(alpha)) continue;
    const CycleType c = classify_cycle(t, perm);
    const auto period = static_cast<Count>(period_info(c.repr()).t);
    sink.expect(period == 1, "cycle generated by a symmetric path has t != 1", {s(alpha), s(c.repr())}, {period});
  } while (std::next_permutation(perm.begin(), perm.end()));
}

inline void check_complement_bridge(const Instance& inst, Sink& sink) {
  const Tournament& t = inst.tournament;
  const int n = t.order();
  if (n < 2) return;
  const Tournament tc = complement(t);
  const EnumerationTable e = enumeration_table(t);
  const EnumerationTable ec = enumeration_table(tc);
  for (int k = 1; k < n; ++k) {
    for (const auto& alpha : list_types(k, TypeKind::Path)) {
      const SignWord w = expand(alpha);
      sink.expect(ec.at(w) == e.at(negated(w)), "e_complement(alpha) != e(-alpha)", {s(alpha)},
                  {ec.at(w), e.at(negated(w))});
      const Count a = paths_from_table(e, alpha);
      const Count b = paths_from_table(ec, alpha);
      sink.expect(a == b, "f_T(alpha) != f_complement(alpha)", {s(alpha)}, {a, b});
    }
  }
  if (n < 3) return;
  const ClosedTable c = closed_table(t);
  const ClosedTable cc = closed_table(tc);
  for (int m = 3; m <= n; ++m) {
    for (const auto& beta : cycle_classes(m)) {
      const Count a = cycles_from_table(c, beta.repr());
      const Count b = cycles_from_table(cc, beta.repr());
      sink.expect(a == b, "g_T(beta) != g_complement(beta)", {s(beta.repr())}, {a, b});
    }
  }
}

inline void check_szele_floor(const Instance& inst, Sink& sink) {
  const Tournament& t = inst.tournament;
  if (t.order() < 2) return;
  sink.maximum = std::max(sink.maximum, count_paths(t, SignedTuple{t.order() - 1}));
}

inline SignedTuple alternating(int arcs) {
  std::vector<int> a(static_cast<std::size_t>(arcs));
  for (int i = 0; i < arcs; ++i) a[i] = i % 2 == 0 ? 1 : -1;
  return SignedTuple(std::move(a));
}

inline void check_rosenfeld(const Instance& inst, Sink& sink) {
  const Tournament& t = inst.tournament;
  if (t.order() < 2) return;
  const SignedTuple alpha = alternating(t.order() - 1);
  const SignedTuple minus = negated(alpha);
  const Count a = count_paths(t, alpha);
  const Count b = count_paths(t, minus);
  sink.expect(a == b, "forward-start and backward-start antidirected counts differ", {s(alpha), s(minus)}, {a, b});
}

struct HInvariance {
  std::vector<Digraph2Spec> specs;  // exhaustive mode

  void operator()(const Instance& inst, Sink& sink) const {
    const Tournament& t = inst.tournament;
    CopyCounter direct(t);
    CopyCounter reversed(complement(t));
    auto one = [&](const Digraph2Spec& h) {
      const Count a = direct.count(h);
      const Count b = reversed.count(h);
      sink.expect(a == b, "copies in T and its complement differ", {to_string(h)}, {a, b});
    };
    if (inst.sample) {
      SplitMix64 rng(~inst.sample_seed);
      one(random_digraph_spec(t.order(), rng));
    } else {
      for (const auto& h : specs) {
        if (h.order() <= t.order()) one(h);
      }
    }
  }
};

struct PropertyDef {
  std::string_view id;
  int random_limit;  // largest order allowed in either mode
  bool exhaustive_only;
};

inline constexpr PropertyDef kProperties[] = {
    {"path-identity", kRandomScopeLimit, false},
    {"cycle-identity", kRandomScopeLimit, false},
    {"enumeration-partition", kRandomScopeLimit, false},
    {"pe-ratio", kOracleLimit, false},
    {"class-sizes", kOracleLimit, false},
    {"eqsym", kOracleLimit, false},
    {"count-formula", kOracleLimit, false},
    {"t-one", kOracleLimit, false},
    {"h-invariance", 9, false},
    {"complement-bridge", kRandomScopeLimit, false},
    {"szele-floor", kRandomScopeLimit, true},
    {"rosenfeld", kRandomScopeLimit, false},
};

inline const PropertyDef& find_property(std::string_view id) {
  for (const auto& p : kProperties) {
    if (p.id == id) return p;
  }
  throw UnknownProperty("unknown property '" + std::string(id) + "'");
}

inline void validate_scope(const PropertyDef& prop, const Scope& scope) {
  const int n = scope.order;
  if (n < 1) throw ScopeTooLarge("scope order must be at least 1");
  if (scope.mode == ScopeMode::Exhaustive) {
    const int limit = scope.allow_large ? kExhaustiveLimitLarge : kExhaustiveLimit;
    if (n > limit) throw ScopeTooLarge("exhaustive scope limited to n <= " + std::to_string(limit));
  } else {
    if (prop.exhaustive_only) throw ScopeTooLarge(std::string(prop.id) + " needs an exhaustive scope");
    if (n > kRandomScopeLimit) throw ScopeTooLarge("random scope limited to n <= 12");
  }
  if (n > prop.random_limit) {
    throw ScopeTooLarge(std::string(prop.id) + " limited to n <= " + std::to_string(prop.random_limit));
  }
}

using CheckFn = std::function<void(const Instance&, Sink&)>;

inline CheckFn check_for(std::string_view id, const Scope& scope) {
  if (id == "path-identity") return check_path_identity;
  if (id == "cycle-identity") return check_cycle_identity;
  if (id == "enumeration-partition") return check_enumeration_partition;
  if (id == "pe-ratio") return check_pe_ratio;
  if (id == "class-sizes") return check_class_sizes;
  if (id == "eqsym") return check_eqsym;
  if (id == "count-formula") return check_count_formula;
  if (id == "t-one") return check_t_one;
  if (id == "complement-bridge") return check_complement_bridge;
  if (id == "szele-floor") return check_szele_floor;
  if (id == "rosenfeld") return check_rosenfeld;
  if (id == "h-invariance") {
    HInvariance h;
    if (scope.mode == ScopeMode::Exhaustive) h.specs = all_digraph_specs(scope.order);
    return h;
  }
  throw UnknownProperty("unknown property '" + std::string(id) + "'");
}

inline Instance make_instance(const Scope& scope, std::uint64_t index) {
  if (scope.mode == ScopeMode::Exhaustive) return {tournament_from_index(scope.order, index), index, std::nullopt, 0};
  const std::uint64_t seed = sample_seed(scope.seed, index);
  return {random_tournament(scope.order, seed), index, index, seed};
}

// Runs check over every instance of the scope. Work is split across threads;
// the merged result does not depend on the split.
inline Sink sweep(const Scope& scope, const CheckFn& check, unsigned threads, std::uint64_t& instances) {
  instances = scope.mode == ScopeMode::Exhaustive ? tournament_count(scope.order) : scope.samples;
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(instances, 1)));

  std::atomic<std::uint64_t> next{0};
  std::vector<Sink> sinks(threads);
  auto worker = [&](Sink& sink) {
    for (;;) {
      const std::uint64_t i = next.fetch_add(1);
      if (i >= instances) return;
      const Instance inst = make_instance(scope, i);
      sink.bind(&inst);
      check(inst, sink);
      sink.bind(nullptr);
    }
  };
  if (threads == 1) {
    worker(sinks[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker, std::ref(sinks[k]));
    for (auto& th : pool) th.join();
  }
  Sink total;
  for (auto& sk : sinks) total.merge(sk);
  return total;
}

inline Count szele_floor(int n) {
  const Count denom = Count{1} << (n - 1);
  return (factorial(n) + denom - 1) / denom;
}

}  // namespace detail

inline std::vector<std::string_view> property_ids() {
  std::vector<std::string_view> out;
  for (const auto& p : detail::kProperties) out.push_back(p.id);
  return out;
}

inline VerifyReport verify(std::string_view property, const Scope& scope, unsigned threads = 0) {
  const auto started = std::chrono::steady_clock::now();
  const auto& def = detail::find_property(property);
  detail::validate_scope(def, scope);
  const detail::CheckFn check = detail::check_for(property, scope);

  VerifyReport report;
  report.property = std::string(property);
  report.scope = scope;
  detail::Sink total = detail::sweep(scope, check, threads, report.tournaments);

  if (property == "szele-floor" && scope.order >= 2) {
    const Count floor = detail::szele_floor(scope.order);
    report.summary["max"] = total.maximum;
    report.summary["floor"] = floor;
    ++total.checked;
    if (total.maximum < floor) {
      ++total.violation_count;
      total.violations.push_back({"", std::nullopt, "max f((n-1)) below ceil(n!/2^(n-1))",
                                  {to_string(SignedTuple{scope.order - 1})}, {total.maximum, floor}});
    }
  }
  if (property == "rosenfeld" && scope.order >= 2) {
    const SignedTuple alpha = detail::alternating(scope.order - 1);
    report.trivial = path_canonical(alpha) == path_canonical(negated(alpha));
  }

  total.trim();
  report.checked = total.checked;
  report.violation_count = total.violation_count;
  report.violations = std::move(total.violations);
  report.pass = report.violation_count == 0;
  report.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return report;
}

// Path identity specialised to antidirected types (1,-1,1,...) versus their negation.
inline VerifyReport rosenfeld_check(const Scope& scope, unsigned threads = 0) {
  return verify("rosenfeld", scope, threads);
}

}  // namespace tourtype
