#include "wgc/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

namespace wgc {

PartitionFilter parse_filter(std::string_view name) {
  if (name == "all") return PartitionFilter::All;
  if (name == "pairings" || name == "all-pairings") return PartitionFilter::Pairings;
  if (name == "noncrossing") return PartitionFilter::Noncrossing;
  if (name == "noncrossing-pairings") return PartitionFilter::NoncrossingPairings;
  if (name == "even") return PartitionFilter::Even;
  if (name == "noncrossing-even") return PartitionFilter::NoncrossingEven;
  if (name == "singletons-pairings") return PartitionFilter::SingletonsPairings;
  if (name == "noncrossing-singletons-pairings")
    return PartitionFilter::NoncrossingSingletonsPairings;
  throw std::invalid_argument("unknown partition filter '" + std::string(name) + "'");
}

namespace {

bool wants_noncrossing(PartitionFilter f) {
  return f == PartitionFilter::Noncrossing || f == PartitionFilter::NoncrossingPairings ||
         f == PartitionFilter::NoncrossingEven ||
         f == PartitionFilter::NoncrossingSingletonsPairings;
}

int max_block_size(PartitionFilter f) {
  switch (f) {
    case PartitionFilter::Pairings:
    case PartitionFilter::NoncrossingPairings:
    case PartitionFilter::SingletonsPairings:
    case PartitionFilter::NoncrossingSingletonsPairings:
      return 2;
    default:
      return -1;  // unbounded
  }
}

bool block_sizes_ok(PartitionFilter f, const std::vector<int>& sizes) {
  switch (f) {
    case PartitionFilter::All:
    case PartitionFilter::Noncrossing:
      return true;
    case PartitionFilter::Pairings:
    case PartitionFilter::NoncrossingPairings:
      return std::all_of(sizes.begin(), sizes.end(), [](int s) { return s == 2; });
    case PartitionFilter::Even:
    case PartitionFilter::NoncrossingEven:
      return std::all_of(sizes.begin(), sizes.end(), [](int s) { return s % 2 == 0; });
    case PartitionFilter::SingletonsPairings:
    case PartitionFilter::NoncrossingSingletonsPairings:
      return std::all_of(sizes.begin(), sizes.end(), [](int s) { return s <= 2; });
  }
  return false;
}

}  // namespace

std::vector<Partition> enumerate_partitions(std::size_t k, PartitionFilter filter) {
  return enumerate_partitions(ColoredWord::plain(k), filter);
}

std::vector<Partition> enumerate_partitions(const ColoredWord& word, PartitionFilter filter) {
  std::size_t k = word.size();
  std::vector<Partition> out;
  if (k == 0) {
    out.push_back(Partition());
    return out;
  }
  const int cap = max_block_size(filter);
  const bool no_odd_blocks =
      filter == PartitionFilter::Even || filter == PartitionFilter::NoncrossingEven ||
      filter == PartitionFilter::Pairings || filter == PartitionFilter::NoncrossingPairings;
  std::vector<int> rgs(k, 0);
  std::vector<int> sizes;
  sizes.reserve(k);

  // Lexicographic restricted-growth recursion with block-size pruning.
  auto emit = [&]() {
    if (!block_sizes_ok(filter, sizes)) return;
    Partition p = Partition::from_rgs(0, rgs, {}, word);
    if (wants_noncrossing(filter) && !p.is_noncrossing()) return;
    out.push_back(std::move(p));
  };
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == k) {
      emit();
      return;
    }
    std::size_t remaining = k - pos;
    if (no_odd_blocks) {
      // Every odd block still needs at least one more point.
      std::size_t odd = 0;
      for (int s : sizes)
        if (s % 2) ++odd;
      if (odd > remaining) return;
    }
    int nb = static_cast<int>(sizes.size());
    for (int b = 0; b <= nb; ++b) {
      if (b < nb) {
        if (cap > 0 && sizes[b] >= cap) continue;
        rgs[pos] = b;
        ++sizes[b];
        rec(pos + 1);
        --sizes[b];
      } else {
        rgs[pos] = b;
        sizes.push_back(1);
        rec(pos + 1);
        sizes.pop_back();
      }
    }
  };
  rec(0);
  return out;
}

}  // namespace wgc
