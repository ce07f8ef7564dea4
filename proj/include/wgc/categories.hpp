#pragma once

#include "wgc/enumerate.hpp"
#include "wgc/partition.hpp"

#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wgc {

// Thrown when an enumeration or closure request exceeds the point bound.
class BoundExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr int kInfinity = std::numeric_limits<int>::max();
constexpr std::size_t kDefaultMaxPoints = 12;

// Named categories of partitions. Colored tags enforce the color rules of the
// unitary families; the rest admit every coloring.
enum class CategoryTag {
  P,
  NC,
  P2,
  NC2,
  P2Colored,        // curly P2 (U_N)
  NC2Colored,       // curly NC2 (U_N^+)
  P2Star,           // matching pairings (O_N^*)
  P2StarColored,    // curly P2* (U_N^*)
  P2Bar,            // pairings, global #o=#* when flattening (TO_N)
  P2Mod,            // pairings, global balance mod r (Z_r O_N)
  Peven,
  NCeven,
  PevenColored,     // curly P_even (K_N)
  NCevenColored,    // curly NC_even (K_N^+)
  PevenStar,        // H_N^*
  PevenStarColored, // K_N^*
  PevenInfty,       // H_N^[inf], generated by ker(iij/jii)
  PevenMod,         // global balance mod r (Z_r H_N)
  PevenBlockMod,    // per-block balance mod s (H_N^s)
  P12,
  NC12,
};

struct CategoryId {
  CategoryTag tag;
  int param = 0;  // r or s; kInfinity for the infinite versions

  friend bool operator==(const CategoryId&, const CategoryId&) = default;
};

// Canonical CLI names: p, nc, p2, nc2, p2*, p2bar, p2^r=3, peven, nceven,
// peven*, peven[inf], peven^r=3, peven(s=4), p12, nc12, and colored variants
// with a 'c' suffix (p2c, nc2c, p2*c, pevenc, ncevenc, peven*c).
CategoryId parse_category(std::string_view name);
std::string category_name(const CategoryId& c);

enum class Family { O, U, H, K, S, B };
enum class Liberation { Classical, Half, Free };

struct EasyGroupId {
  Family family;
  Liberation liberation = Liberation::Classical;
  bool twisted = false;

  friend bool operator==(const EasyGroupId&, const EasyGroupId&) = default;
};

// Group aliases: o, o*, o+, u, u*, u+, h, h*, h+, k, k*, k+, s, s+, b, b+.
EasyGroupId parse_group(std::string_view name);
std::string group_name(const EasyGroupId& g);
bool is_group_name(std::string_view name);

// The category attached to an easy group. The twist flag never changes
// the category, only the Kronecker symbols used downstream.
CategoryId category_of(const EasyGroupId& g);

// Exact membership predicate; total on all partitions.
bool member(const CategoryId& c, const Partition& pi);

// D(word): members with no upper points and the given lower colors, canonical
// order. Throws BoundExceededError past max_points.
std::vector<Partition> enumerate_category(const CategoryId& c, const ColoredWord& word,
                                          std::size_t max_points = kDefaultMaxPoints);

// Least set containing generators plus {identity, semicircle}, closed under
// tensor/compose/conjugate within the point bound (colors ignored).
// Deterministic canonical output order.
std::vector<Partition> closure(const std::vector<Partition>& generators, std::size_t max_points);

}  // namespace wgc
