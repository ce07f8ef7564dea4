#pragma once

#include "wgc/partition.hpp"

#include <string_view>
#include <vector>

namespace wgc {

// Ground-set filters for one-row enumeration.
enum class PartitionFilter {
  All,                  // P(k)
  Pairings,             // P2(k)
  Noncrossing,          // NC(k)
  NoncrossingPairings,  // NC2(k)
  Even,                 // P_even(k)
  NoncrossingEven,      // NC_even(k)
  SingletonsPairings,   // P12(k)
  NoncrossingSingletonsPairings,  // NC12(k)
};

PartitionFilter parse_filter(std::string_view name);

// All one-row partitions of k points passing the filter, in canonical order
// (lexicographic restricted-growth strings). k = 0 yields the empty partition.
std::vector<Partition> enumerate_partitions(std::size_t k, PartitionFilter filter);

// Same, with a color word attached to the points (word length = point count).
std::vector<Partition> enumerate_partitions(const ColoredWord& word, PartitionFilter filter);

}  // namespace wgc
