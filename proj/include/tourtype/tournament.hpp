#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tourtype/errors.hpp"

namespace tourtype {

// splitmix64 stream. random_tournament and the verifier's sample seeds are
// defined in terms of it so results replay across implementations.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound); bound > 0. Modulo bias is irrelevant at our sizes.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

// Seed of sample i in a random scope: output i+1 of splitmix64 seeded with seed.
inline std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 g(seed + index * 0x9E3779B97F4A7C15ULL);
  return g.next();
}

// Number of unordered vertex pairs.
constexpr int pair_count(int n) { return n * (n - 1) / 2; }

// Position of pair (i, j), i < j, in the text format's bit string.
constexpr int pair_index(int n, int i, int j) { return i * (2 * n - i - 1) / 2 + (j - i - 1); }

using VertexSeq = std::vector<int>;

// A complete orientation of K_n, n <= 16. Immutable once built.
class Tournament {
 public:
  static constexpr int kMaxOrder = 16;

  Tournament() = default;

  // pred(i, j) for i < j decides whether the arc is i -> j.
  template <class Pred>
  static Tournament from_predicate(int n, Pred pred) {
    if (n < 0 || n > kMaxOrder) throw ScopeTooLarge("tournament order must be in [0, 16]");
    Tournament t;
    t.n_ = n;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (pred(i, j)) {
          t.out_[i] |= 1U << j;
        } else {
          t.out_[j] |= 1U << i;
        }
      }
    }
    return t;
  }

  int order() const noexcept { return n_; }
  bool arc(int u, int v) const noexcept { return (out_[u] >> v) & 1U; }
  std::uint32_t out_mask(int u) const noexcept { return out_[u]; }
  int out_degree(int u) const noexcept { return std::popcount(out_[u]); }
  std::uint32_t vertex_mask() const noexcept { return n_ == 32 ? ~0U : ((1U << n_) - 1U); }

  friend bool operator==(const Tournament&, const Tournament&) = default;

 private:
  int n_ = 0;
  std::array<std::uint32_t, kMaxOrder> out_{};
};

// Reverses every arc. For tournaments this is the complement within K_n.
inline Tournament complement(const Tournament& t) {
  return Tournament::from_predicate(t.order(), [&](int i, int j) { return t.arc(j, i); });
}

// Subtournament on the vertices of mask, relabelled in increasing index order.
inline Tournament induced(const Tournament& t, std::uint32_t mask) {
  if (mask & ~t.vertex_mask()) throw BadSubset("vertex set is not a subset of V(T)");
  std::vector<int> keep;
  for (int v = 0; v < t.order(); ++v) {
    if ((mask >> v) & 1U) keep.push_back(v);
  }
  return Tournament::from_predicate(static_cast<int>(keep.size()),
                                    [&](int i, int j) { return t.arc(keep[i], keep[j]); });
}

inline Tournament induced(const Tournament& t, std::span<const int> vertices) {
  std::uint32_t mask = 0;
  for (int v : vertices) {
    if (v < 0 || v >= t.order()) throw BadSubset("vertex out of range");
    mask |= 1U << v;
  }
  return induced(t, mask);
}

inline Tournament transitive(int n) {
  return Tournament::from_predicate(n, [](int, int) { return true; });
}

inline Tournament random_tournament(int n, std::uint64_t seed) {
  SplitMix64 g(seed);
  // Pairs are visited in text-format order, one top bit per pair.
  return Tournament::from_predicate(n, [&](int, int) { return (g.next() >> 63) != 0; });
}

// ---------------------------------------------------------------------------
// Exhaustive generation

inline constexpr int kExhaustiveLimit = 6;
inline constexpr int kExhaustiveLimitLarge = 7;

// The index-th tournament of order n: bit string = index in binary, MSB first.
inline Tournament tournament_from_index(int n, std::uint64_t index) {
  const int bits = pair_count(n);
  int pos = 0;
  return Tournament::from_predicate(n, [&](int, int) {
    const bool forward = (index >> (bits - 1 - pos)) & 1U;
    ++pos;
    return forward;
  });
}

inline std::uint64_t tournament_count(int n) { return std::uint64_t{1} << pair_count(n); }

// All 2^(n(n-1)/2) tournaments on n labelled vertices in increasing bit-string order.
class AllTournaments {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Tournament;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(int n, std::uint64_t index) : n_(n), index_(index) {}

    Tournament operator*() const { return tournament_from_index(n_, index_); }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    iterator operator++(int) {
      iterator copy = *this;
      ++index_;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

   private:
    int n_ = 0;
    std::uint64_t index_ = 0;
  };

  AllTournaments(int n, bool allow_large) : n_(n) {
    const int limit = allow_large ? kExhaustiveLimitLarge : kExhaustiveLimit;
    if (n < 0 || n > limit) throw ScopeTooLarge("exhaustive generation limited to n <= " + std::to_string(limit));
  }

  iterator begin() const { return {n_, 0}; }
  iterator end() const { return {n_, tournament_count(n_)}; }
  std::uint64_t size() const { return tournament_count(n_); }

 private:
  int n_;
};

inline AllTournaments all_tournaments(int n, bool allow_large = false) { return AllTournaments(n, allow_large); }

// ---------------------------------------------------------------------------
// Text format: "n:bits", bit of pair (i, j), i < j, is 1 iff i -> j.

inline std::string serialize(const Tournament& t) {
  const int n = t.order();
  std::string out = std::to_string(n) + ":";
  out.reserve(out.size() + static_cast<std::size_t>(pair_count(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) out += t.arc(i, j) ? '1' : '0';
  }
  return out;
}

inline Tournament parse_tournament(std::string_view text) {
  std::size_t pos = 0;
  int n = 0;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
    n = n * 10 + (text[pos] - '0');
    if (n > Tournament::kMaxOrder) throw ParseError("order exceeds 16", pos);
    ++pos;
  }
  if (pos == 0) throw ParseError("expected vertex count", 0);
  if (pos >= text.size() || text[pos] != ':') throw ParseError("expected ':'", pos);
  ++pos;
  const std::size_t bits_begin = pos;
  const auto expected = static_cast<std::size_t>(pair_count(n));
  for (std::size_t k = 0; k < text.size() - bits_begin; ++k) {
    const char c = text[bits_begin + k];
    if (c != '0' && c != '1') throw ParseError("expected '0' or '1'", bits_begin + k);
    if (k >= expected) throw ParseError("bit string longer than n(n-1)/2", bits_begin + k);
  }
  if (text.size() - bits_begin != expected) throw ParseError("bit string shorter than n(n-1)/2", text.size());
  std::size_t k = bits_begin;
  return Tournament::from_predicate(n, [&](int, int) { return text[k++] == '1'; });
}

// Reads a file body: one tournament per line, '#' comment lines and blank
// lines skipped. Error offsets are relative to the start of the buffer.
inline std::vector<Tournament> parse_tournament_list(std::string_view text) {
  std::vector<Tournament> out;
  std::size_t line_start = 0;
  while (line_start < text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() != '#') {
      try {
        out.push_back(parse_tournament(line));
      } catch (const ParseError& e) {
        throw ParseError("malformed tournament line", line_start + e.offset());
      }
    }
    line_start = line_end + 1;
  }
  return out;
}

}  // namespace tourtype
