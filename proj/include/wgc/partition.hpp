#pragma once

#include "wgc/words.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wgc {

// A multi-index (i_1,...,i_k) with entries in 1..N.
struct MultiIndex {
  std::vector<int> entries;

  MultiIndex() = default;
  MultiIndex(std::initializer_list<int> v) : entries(v) {}
  explicit MultiIndex(std::vector<int> v) : entries(std::move(v)) {}

  std::size_t size() const { return entries.size(); }
  int operator[](std::size_t i) const { return entries[i]; }

  static MultiIndex constant(std::size_t k, int value) {
    return MultiIndex(std::vector<int>(k, value));
  }
  // Digits 1..9, then a=10, b=11, ...
  static MultiIndex parse(std::string_view s);
  std::string str() const;
};

// Runs fn over all of {1..N}^k in lexicographic order.
void for_each_index(int N, std::size_t k, const std::function<void(const MultiIndex&)>& fn);

// A set partition of k upper + l lower points, with a color word per row.
//
// Points are numbered in reading order: upper row 1..k left to right, then
// lower row k+1..k+l left to right. Internally the partition is a
// restricted-growth string over that order (block ids appear in first-touch
// order), which doubles as the canonical form. Position-sensitive notions
// (crossings, signature, the alternating-label tests) use the clockwise
// traversal instead: upper row left to right, then lower row right to left.
//
// Immutable after construction.
class Partition {
 public:
  Partition() = default;  // the empty partition (0 points)

  // blocks: 1-based point ids in reading order; must partition 1..k+l.
  static Partition from_blocks(std::size_t k, std::size_t l,
                               const std::vector<std::vector<int>>& blocks,
                               ColoredWord upper = {}, ColoredWord lower = {});
  // One-row partition: no upper points, n = word length lower points.
  static Partition one_row(const std::vector<std::vector<int>>& blocks, std::size_t n,
                           ColoredWord colors = {});
  // From a restricted-growth string (values must be first-touch normalized).
  static Partition from_rgs(std::size_t k, std::vector<int> rgs, ColoredWord upper = {},
                            ColoredWord lower = {});

  // ker(i) as a one-row partition: p ~ q iff i_p = i_q.
  static Partition kernel(const MultiIndex& i, ColoredWord colors = {});
  // ker(i / j) as a (|i|,|j|) partition.
  static Partition kernel(const MultiIndex& i, const MultiIndex& j, ColoredWord upper = {},
                          ColoredWord lower = {});

  // Text forms: one-row "12|34" (points 1..9,a..z), two-row "aab/baa" (block
  // letters), optional ":colors" / ":upper:lower" suffix. "()" is the empty
  // partition. Round-trips bit-exactly through str().
  static Partition parse(std::string_view s);
  std::string str() const;

  std::size_t upper_points() const { return k_; }
  std::size_t lower_points() const { return rgs_.size() - k_; }
  std::size_t total_points() const { return rgs_.size(); }
  const ColoredWord& upper_word() const { return upper_; }
  const ColoredWord& lower_word() const { return lower_; }
  Color color_at(std::size_t p) const;  // p is 1-based reading order

  std::size_t block_count() const { return nblocks_; }
  int block_of(std::size_t p) const { return rgs_[p - 1]; }
  const std::vector<int>& rgs() const { return rgs_; }
  // Blocks listed by smallest point, points ascending (reading order).
  std::vector<std::vector<int>> blocks() const;
  std::vector<int> block_sizes() const;

  bool is_pairing() const;
  bool is_even() const;
  // Clockwise point ids, i.e. reading-order ids listed in clockwise order.
  std::vector<int> circle_order() const;

  // No two blocks interleave in the clockwise circular order.
  bool is_noncrossing() const;
  // Pairings only: number of interleaving string pairs (clockwise order).
  int crossing_count() const;
  // The signature map on partitions with all blocks even: the parity of
  // adjacent switches needed to reach a noncrossing form. Computed by
  // splitting each block into consecutive pairs and taking the crossing
  // parity of the resulting pairing.
  int signature() const;
  // Independent route: parity of adjacent switches to the standard grouped
  // form (blocks ordered by first clockwise leg). Used as a test oracle.
  int signature_by_switch_count() const;

  // Refinement order: *this <= coarser iff every block of *this is contained
  // in a block of coarser. Requires equal point counts (colors ignored).
  bool refines(const Partition& coarser) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  // Canonical order: point count, then row split, then the restricted-growth
  // string lexicographically, then colors.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    if (auto c = a.rgs_.size() <=> b.rgs_.size(); c != 0) return c;
    if (auto c = a.k_ <=> b.k_; c != 0) return c;
    if (auto c = a.rgs_ <=> b.rgs_; c != 0) return c;
    if (auto c = a.upper_ <=> b.upper_; c != 0) return c;
    return a.lower_ <=> b.lower_;
  }

 private:
  std::size_t k_ = 0;
  std::size_t nblocks_ = 0;
  std::vector<int> rgs_;
  ColoredWord upper_, lower_;

  void normalize_rgs();
};

// --- lattice & index operations -------------------------------------------

// Finest partition refined by both (transitive closure of the union of block
// relations). Point counts must match; colors of pi are kept.
Partition join(const Partition& pi, const Partition& sigma);
int block_count_join(const Partition& pi, const Partition& sigma);

// delta_pi(i/j) in {0,1}: 1 iff every block of pi carries one constant value.
int delta(const Partition& pi, const MultiIndex& i, const MultiIndex& j);
int delta(const Partition& pi, const MultiIndex& i);  // one-row

// Twisted symbol of Def 11.8: eps(ker) if pi refines ker, else 0.
int twisted_delta(const Partition& pi, const MultiIndex& i, const MultiIndex& j);
int twisted_delta(const Partition& pi, const MultiIndex& i);

// Moebius function of the refinement lattice, by the standard recursion.
// mu(sigma,pi) = 1 if sigma=pi; -sum_{sigma<=tau<pi} mu(sigma,tau) if
// sigma<pi; 0 otherwise.
long long mobius(const Partition& sigma, const Partition& pi);

// All tau with sigma <= tau <= pi (inclusive), canonical order.
std::vector<Partition> interval_partitions(const Partition& sigma, const Partition& pi);
// All coarsenings of pi (partitions of its block set), including pi itself.
std::vector<Partition> coarsenings(const Partition& pi);

// --- categorical diagram operations ---------------------------------------

// Horizontal concatenation [pi sigma].
Partition tensor(const Partition& pi, const Partition& sigma);
// Vertical composition [^sigma_pi]: glues sigma's lower row to pi's upper
// row; T_pi T_sigma = N^c T_result. Returns (result, erased middle loops c).
// Requires upper word of pi == lower word of sigma.
std::pair<Partition, int> compose(const Partition& pi, const Partition& sigma);
// Upside-down turn with colors switched.
Partition conjugate(const Partition& pi);

// --- fattening / shrinking -------------------------------------------------

// The NC(k) ~ NC2(2k) bijection on one-row diagrams. fatten doubles every
// leg; shrink collapses legs (2i-1,2i) -> i. Both reject crossing input.
Partition fatten(const Partition& pi);
Partition shrink(const Partition& pairing);

}  // namespace wgc

template <>
struct std::hash<wgc::Partition> {
  std::size_t operator()(const wgc::Partition& p) const noexcept {
    std::size_t h = p.upper_points() * 1315423911u;
    for (int b : p.rgs()) h = h * 1000003u + static_cast<std::size_t>(b + 1);
    for (std::size_t i = 1; i <= p.total_points(); ++i)
      h = h * 31u + static_cast<std::size_t>(p.color_at(i));
    return h;
  }
};
