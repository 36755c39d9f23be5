#pragma once

// Block-type tuples of oriented paths and cycles.
//
// A tuple (a_1, ..., a_s) lists the lengths of the maximal directed blocks of
// an oriented path or cycle; the sign of a_i says whether block i runs along
// (+) or against (-) the reading direction. Everything here is pure value
// arithmetic on such tuples.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tourtype/errors.hpp"

namespace tourtype {

class SignedTuple {
 public:
  SignedTuple() = default;
  SignedTuple(std::initializer_list<int> entries) : entries_(entries) {}
  explicit SignedTuple(std::vector<int> entries) : entries_(std::move(entries)) {}

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  int front() const { return entries_.front(); }
  int back() const { return entries_.back(); }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }
  const std::vector<int>& entries() const noexcept { return entries_; }

  friend bool operator==(const SignedTuple&, const SignedTuple&) = default;

 private:
  std::vector<int> entries_;
};

namespace detail {

inline int sign_of(int x) { return (x > 0) - (x < 0); }

// Entry key of the canonical order: magnitude first, then + before -.
inline int entry_key(int x) { return 2 * std::abs(x) + (x < 0 ? 1 : 0); }

}  // namespace detail

// Total order used to pick canonical representatives: shorter tuples first,
// then entrywise by magnitude with a positive entry before its negation.
inline bool canonical_less(const SignedTuple& a, const SignedTuple& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int ka = detail::entry_key(a[i]);
    const int kb = detail::entry_key(b[i]);
    if (ka != kb) return ka < kb;
  }
  return false;
}

inline int arc_count(const SignedTuple& t) {
  int sum = 0;
  for (int x : t) sum += std::abs(x);
  return sum;
}

inline SignedTuple negated(const SignedTuple& t) {
  std::vector<int> out(t.begin(), t.end());
  for (int& x : out) x = -x;
  return SignedTuple(std::move(out));
}

inline SignedTuple reversed(const SignedTuple& t) {
  return SignedTuple(std::vector<int>(t.entries().rbegin(), t.entries().rend()));
}

// -reverse(t): the type of the same path read from the other end.
inline SignedTuple reflected_negation(const SignedTuple& t) { return negated(reversed(t)); }

inline SignedTuple rotated(const SignedTuple& t, std::size_t k) {
  std::vector<int> out(t.begin(), t.end());
  if (!out.empty()) std::rotate(out.begin(), out.begin() + static_cast<long>(k % out.size()), out.end());
  return SignedTuple(std::move(out));
}

inline bool is_standard_path(const SignedTuple& t) {
  if (t.empty()) return false;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] == 0) return false;
    if (i > 0 && detail::sign_of(t[i]) == detail::sign_of(t[i - 1])) return false;
  }
  return true;
}

inline bool is_standard_cycle(const SignedTuple& t) {
  return is_standard_path(t) && (t.size() == 1 || t.size() % 2 == 0);
}

inline bool is_singleton(const SignedTuple& t) { return t.size() == 1; }

inline bool is_symmetric(const SignedTuple& t) { return t == reflected_negation(t); }

// A cycle is symmetric when some rotation of its tuple is a symmetric tuple.
inline bool is_symmetric_cycle(const SignedTuple& t) {
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (is_symmetric(rotated(t, k))) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Normalization

namespace detail {

// Merges nonzero entries across zero runs. An odd run of zeros joins its two
// neighbours into one block (they must share a sign); an even run, including
// the empty run, keeps them as consecutive blocks (they must alternate).
struct LinearMerge {
  std::vector<int> blocks;
  std::size_t leading_zeros = 0;
  std::size_t trailing_zeros = 0;
};

inline LinearMerge merge_zero_runs(const SignedTuple& raw) {
  LinearMerge out;
  std::size_t last = 0;
  bool seen = false;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const int x = raw[i];
    if (x == 0) continue;
    if (!seen) {
      out.leading_zeros = i;
      out.blocks.push_back(x);
      seen = true;
    } else {
      const std::size_t zeros = i - last - 1;
      const bool same = sign_of(x) == sign_of(out.blocks.back());
      if (zeros % 2 == 1) {
        if (!same) throw IllFormed("zero block between opposite-sign entries");
        out.blocks.back() += x;
      } else {
        if (same) throw IllFormed("adjacent entries with the same sign");
        out.blocks.push_back(x);
      }
    }
    last = i;
  }
  if (!seen) throw EmptyType("tuple has no nonzero entry");
  out.trailing_zeros = raw.size() - 1 - last;
  return out;
}

}  // namespace detail

inline SignedTuple normalize_path(const SignedTuple& raw) {
  if (raw.empty()) throw EmptyType("empty tuple");
  return SignedTuple(detail::merge_zero_runs(raw).blocks);
}

inline SignedTuple normalize_cycle(const SignedTuple& raw) {
  if (raw.empty()) throw EmptyType("empty tuple");
  auto merged = detail::merge_zero_runs(raw);
  auto& blocks = merged.blocks;
  if (blocks.size() == 1) return SignedTuple(std::move(blocks));

  const std::size_t wrap_zeros = merged.leading_zeros + merged.trailing_zeros;
  const bool same = detail::sign_of(blocks.front()) == detail::sign_of(blocks.back());
  if (wrap_zeros % 2 == 1) {
    if (!same) throw IllFormed("zero block between opposite-sign entries across the wrap");
    blocks.front() += blocks.back();
    blocks.pop_back();
  } else if (same) {
    throw IllFormed("cycle tuple must have one entry or an even number of alternating entries");
  }
  return SignedTuple(std::move(blocks));
}

// ---------------------------------------------------------------------------
// Canonical representatives

class PathType {
 public:
  const SignedTuple& repr() const noexcept { return repr_; }

  friend bool operator==(const PathType&, const PathType&) = default;
  friend bool operator<(const PathType& a, const PathType& b) { return canonical_less(a.repr_, b.repr_); }
  friend PathType path_canonical(const SignedTuple& alpha);

 private:
  explicit PathType(SignedTuple repr) : repr_(std::move(repr)) {}
  SignedTuple repr_;
};

class CycleType {
 public:
  const SignedTuple& repr() const noexcept { return repr_; }

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend bool operator<(const CycleType& a, const CycleType& b) { return canonical_less(a.repr_, b.repr_); }
  friend CycleType cycle_canonical(const SignedTuple& beta);

 private:
  explicit CycleType(SignedTuple repr) : repr_(std::move(repr)) {}
  SignedTuple repr_;
};

// Representative of {alpha, -reverse(alpha)}: both readings of one path.
inline PathType path_canonical(const SignedTuple& alpha) {
  if (!is_standard_path(alpha)) throw IllFormed("path type must be a standard tuple");
  SignedTuple other = reflected_negation(alpha);
  return PathType(canonical_less(other, alpha) ? std::move(other) : alpha);
}

// Representative over all rotations and all rotations of -reverse(beta).
inline CycleType cycle_canonical(const SignedTuple& beta) {
  if (!is_standard_cycle(beta)) throw IllFormed("cycle type must be a standard cycle tuple");
  SignedTuple best = beta;
  const SignedTuple mirror = reflected_negation(beta);
  for (std::size_t k = 0; k < beta.size(); ++k) {
    for (const SignedTuple* base : {&beta, &mirror}) {
      SignedTuple candidate = rotated(*base, k);
      if (canonical_less(candidate, best)) best = std::move(candidate);
    }
  }
  return CycleType(std::move(best));
}

// ---------------------------------------------------------------------------
// Period, t, delta, star_one

struct PeriodInfo {
  int r = 1;
  int t = 1;
  friend bool operator==(const PeriodInfo&, const PeriodInfo&) = default;
};

// r is the least shift under which the tuple, read cyclically, is invariant.
inline PeriodInfo period_info(const SignedTuple& t) {
  if (t.empty()) throw EmptyType("empty tuple");
  const std::size_t s = t.size();
  for (std::size_t r = 1; r <= s; ++r) {
    if (s % r != 0) continue;
    bool periodic = true;
    for (std::size_t i = 0; i < s && periodic; ++i) periodic = t[i] == t[(i + r) % s];
    if (periodic) return {static_cast<int>(r), static_cast<int>(s / r)};
  }
  return {static_cast<int>(s), 1};
}

// Class-size multiplier of a cycle type: a generated cycle of type gamma is
// produced by exactly delta(gamma) * t(gamma) Hamiltonian paths of one type.
inline std::int64_t delta(const SignedTuple& gamma) {
  if (!is_standard_cycle(gamma)) throw IllFormed("delta needs a standard cycle tuple");
  if (is_singleton(gamma)) {
    const int n = arc_count(gamma);
    const int t = period_info(gamma).t;
    if (n % t != 0) throw DivisibilityViolation("n is not a multiple of t for a circuit");
    return n / t;
  }
  return is_symmetric_cycle(gamma) ? 2 : 1;
}

// Shrinks entry i one step toward zero in the direction set by the first entry.
// The result may be zero; callers renormalize. Index is zero-based.
inline int star_one(const SignedTuple& beta, std::size_t i) {
  if (!is_standard_path(beta)) throw IllFormed("star_one needs a standard tuple");
  if (i >= beta.size()) throw IllFormed("star_one index out of range");
  return beta.front() > 0 ? beta[i] - 1 : beta[i] + 1;
}

// ---------------------------------------------------------------------------
// Sign words: bit j set <=> arc j is traversed forward.

struct SignWord {
  std::uint32_t bits = 0;
  int length = 0;
  friend bool operator==(const SignWord&, const SignWord&) = default;
  bool forward(int j) const { return (bits >> j) & 1U; }
};

inline SignWord expand(const SignedTuple& t) {
  SignWord w;
  for (int x : t) {
    for (int k = 0; k < std::abs(x); ++k) {
      if (x > 0) w.bits |= 1U << w.length;
      ++w.length;
    }
  }
  if (w.length > 31) throw TypeTooLong("tuple longer than 31 arcs");
  return w;
}

inline SignedTuple path_tuple_from_word(SignWord w) {
  if (w.length == 0) throw EmptyType("empty sign word");
  std::vector<int> blocks;
  for (int j = 0; j < w.length; ++j) {
    const int step = w.forward(j) ? 1 : -1;
    if (!blocks.empty() && detail::sign_of(blocks.back()) == step) {
      blocks.back() += step;
    } else {
      blocks.push_back(step);
    }
  }
  return SignedTuple(std::move(blocks));
}

// Compresses a cyclic word into a standard cycle tuple starting at a block start.
inline SignedTuple cycle_tuple_from_word(SignWord w) {
  if (w.length == 0) throw EmptyType("empty sign word");
  const int n = w.length;
  int start = -1;
  for (int j = 0; j < n; ++j) {
    if (w.forward(j) != w.forward((j + n - 1) % n)) {
      start = j;
      break;
    }
  }
  if (start < 0) return SignedTuple{w.forward(0) ? n : -n};
  SignWord linear{0, n};
  for (int j = 0; j < n; ++j) {
    if (w.forward((start + j) % n)) linear.bits |= 1U << j;
  }
  return path_tuple_from_word(linear);
}

inline SignWord negated(SignWord w) {
  const std::uint32_t mask = w.length >= 32 ? ~0U : ((1U << w.length) - 1U);
  return {~w.bits & mask, w.length};
}

// ---------------------------------------------------------------------------
// Generated cycles

struct GeneratedCycles {
  CycleType beta;
  CycleType beta_prime;
  // True when beta arises from the closing arc (v_n, v_1), false for (v_1, v_n).
  bool beta_closes_forward;
  bool coincide;
};

// The two cycle types a path of type alpha closes into, one per orientation
// of the arc joining its ends. beta is the first-listed case of each sign and
// parity branch; beta_prime is the other.
inline GeneratedCycles generated_cycle_types(const SignedTuple& alpha) {
  if (!is_standard_path(alpha)) throw IllFormed("generated cycles need a standard path tuple");
  const std::size_t s = alpha.size();
  const int first = alpha.front();
  const int last = alpha.back();
  std::vector<int> b(alpha.begin(), alpha.end());
  std::vector<int> bp(alpha.begin(), alpha.end());
  bool beta_forward = false;

  if (s % 2 == 0) {
    if (first > 0) {
      b.front() += 1;  // (v_n, v_1)
      bp.back() -= 1;  // (v_1, v_n)
      beta_forward = true;
    } else {
      b.front() -= 1;  // (v_1, v_n)
      bp.back() += 1;  // (v_n, v_1)
      beta_forward = false;
    }
  } else {
    const int step = first > 0 ? 1 : -1;
    b.insert(b.begin(), -step);
    if (s == 1) {
      bp = {first + step};
    } else {
      bp.pop_back();
      bp.front() = last + step + first;
    }
    beta_forward = first < 0;
  }

  CycleType beta = cycle_canonical(SignedTuple(std::move(b)));
  CycleType beta_prime = cycle_canonical(SignedTuple(std::move(bp)));
  const bool same = beta == beta_prime;
  return {std::move(beta), std::move(beta_prime), beta_forward, same};
}

// ---------------------------------------------------------------------------
// Text form: "(2,-1,1,-2)", whitespace allowed between tokens.

inline std::string to_string(const SignedTuple& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(t[i]);
  }
  out += ')';
  return out;
}

inline std::string to_string(const PathType& t) { return to_string(t.repr()); }
inline std::string to_string(const CycleType& t) { return to_string(t.repr()); }

namespace detail {

struct TupleScanner {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t base = 0;  // offset of text within the caller's buffer

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, base + pos); }
  void expect(char c) {
    skip_space();
    if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }
  int integer() {
    skip_space();
    const std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    const std::size_t digits = pos;
    long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > 1'000'000) fail("integer out of range");
      ++pos;
    }
    if (pos == digits) {
      pos = start;
      fail("expected an integer");
    }
    return text[start] == '-' ? -static_cast<int>(value) : static_cast<int>(value);
  }
  SignedTuple tuple() {
    expect('(');
    std::vector<int> entries{integer()};
    for (;;) {
      skip_space();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        entries.push_back(integer());
        continue;
      }
      expect(')');
      return SignedTuple(std::move(entries));
    }
  }
};

}  // namespace detail

// Parses a tuple; the whole input must be consumed. Entries are not normalized.
inline SignedTuple parse_tuple(std::string_view text) {
  detail::TupleScanner scan{text};
  SignedTuple t = scan.tuple();
  scan.skip_space();
  if (scan.pos != text.size()) scan.fail("trailing characters after tuple");
  return t;
}

}  // namespace tourtype
