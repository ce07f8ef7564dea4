#include "wgc/categories.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace wgc {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

int parse_param(std::string_view s) {
  if (s == "inf" || s == "infty" || s == "oo") return kInfinity;
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v < 1)
    throw std::invalid_argument("bad category parameter '" + std::string(s) + "'");
  return v;
}

// Signed color weight with upper legs switched, per the flattening rule:
// white counts +1, black -1.
int flat_weight(const Partition& pi, std::size_t p) {
  Color c = pi.color_at(p);
  if (p <= pi.upper_points()) c = flip(c);
  return c == Color::White ? 1 : -1;
}

bool balanced_mod(long v, int m) {
  if (m == kInfinity) return v == 0;
  if (m == 1) return true;
  long r = v % m;
  return r == 0;
}

// Per-block signed color balance (flattened), tested mod m (exact for inf).
bool blocks_color_balanced(const Partition& pi, int m) {
  std::vector<long> bal(pi.block_count(), 0);
  for (std::size_t p = 1; p <= pi.total_points(); ++p)
    bal[pi.block_of(p)] += flat_weight(pi, p);
  for (long v : bal)
    if (!balanced_mod(v, m)) return false;
  return true;
}

bool global_color_balanced(const Partition& pi, int m) {
  long total = 0;
  for (std::size_t p = 1; p <= pi.total_points(); ++p) total += flat_weight(pi, p);
  return balanced_mod(total, m);
}

// Per-block balance of the clockwise alternating relabeling o,*,o,*,...:
// the half-liberation test (#o = #* in each block).
bool blocks_position_balanced(const Partition& pi) {
  std::vector<long> bal(pi.block_count(), 0);
  auto order = pi.circle_order();
  for (std::size_t c = 0; c < order.size(); ++c)
    bal[pi.block_of(order[c])] += (c % 2 == 0) ? 1 : -1;
  for (long v : bal)
    if (v != 0) return false;
  return true;
}

// Words with g_i^2 = 1 and no other relations: the clockwise block word must
// reduce to the empty word by cancelling adjacent equal letters.
bool reduces_in_free_z2(const Partition& pi) {
  std::vector<int> stack;
  for (int p : pi.circle_order()) {
    int b = pi.block_of(p);
    if (!stack.empty() && stack.back() == b)
      stack.pop_back();
    else
      stack.push_back(b);
  }
  return stack.empty();
}

}  // namespace

CategoryId parse_category(std::string_view raw) {
  std::string s = lower(raw);
  if (s == "p") return {CategoryTag::P};
  if (s == "nc") return {CategoryTag::NC};
  if (s == "p2") return {CategoryTag::P2};
  if (s == "nc2") return {CategoryTag::NC2};
  if (s == "p2c") return {CategoryTag::P2Colored};
  if (s == "nc2c") return {CategoryTag::NC2Colored};
  if (s == "p2*") return {CategoryTag::P2Star};
  if (s == "p2*c") return {CategoryTag::P2StarColored};
  if (s == "p2bar") return {CategoryTag::P2Bar};
  if (s.rfind("p2^r=", 0) == 0) return {CategoryTag::P2Mod, parse_param(s.substr(5))};
  if (s == "peven") return {CategoryTag::Peven};
  if (s == "nceven") return {CategoryTag::NCeven};
  if (s == "pevenc") return {CategoryTag::PevenColored};
  if (s == "ncevenc") return {CategoryTag::NCevenColored};
  if (s == "peven*") return {CategoryTag::PevenStar};
  if (s == "peven*c") return {CategoryTag::PevenStarColored};
  if (s == "peven[inf]") return {CategoryTag::PevenInfty, kInfinity};
  if (s.rfind("peven^r=", 0) == 0) return {CategoryTag::PevenMod, parse_param(s.substr(8))};
  if (s.rfind("peven(s=", 0) == 0 && s.back() == ')')
    return {CategoryTag::PevenBlockMod, parse_param(s.substr(8, s.size() - 9))};
  if (s == "p12") return {CategoryTag::P12};
  if (s == "nc12") return {CategoryTag::NC12};
  if (is_group_name(s)) return category_of(parse_group(s));
  throw std::invalid_argument("unknown category '" + std::string(raw) + "'");
}

std::string category_name(const CategoryId& c) {
  auto param = [&](const char* pre, const char* post) {
    return std::string(pre) + (c.param == kInfinity ? "inf" : std::to_string(c.param)) + post;
  };
  switch (c.tag) {
    case CategoryTag::P: return "p";
    case CategoryTag::NC: return "nc";
    case CategoryTag::P2: return "p2";
    case CategoryTag::NC2: return "nc2";
    case CategoryTag::P2Colored: return "p2c";
    case CategoryTag::NC2Colored: return "nc2c";
    case CategoryTag::P2Star: return "p2*";
    case CategoryTag::P2StarColored: return "p2*c";
    case CategoryTag::P2Bar: return "p2bar";
    case CategoryTag::P2Mod: return param("p2^r=", "");
    case CategoryTag::Peven: return "peven";
    case CategoryTag::NCeven: return "nceven";
    case CategoryTag::PevenColored: return "pevenc";
    case CategoryTag::NCevenColored: return "ncevenc";
    case CategoryTag::PevenStar: return "peven*";
    case CategoryTag::PevenStarColored: return "peven*c";
    case CategoryTag::PevenInfty: return "peven[inf]";
    case CategoryTag::PevenMod: return param("peven^r=", "");
    case CategoryTag::PevenBlockMod: return param("peven(s=", ")");
    case CategoryTag::P12: return "p12";
    case CategoryTag::NC12: return "nc12";
  }
  throw std::logic_error("category_name: bad tag");
}

EasyGroupId parse_group(std::string_view raw) {
  std::string s = lower(raw);
  bool twisted = false;
  if (s.rfind("~", 0) == 0) {
    twisted = true;
    s = s.substr(1);
  }
  if (s.empty()) throw std::invalid_argument("empty group name");
  Family fam;
  switch (s[0]) {
    case 'o': fam = Family::O; break;
    case 'u': fam = Family::U; break;
    case 'h': fam = Family::H; break;
    case 'k': fam = Family::K; break;
    case 's': fam = Family::S; break;
    case 'b': fam = Family::B; break;
    default: throw std::invalid_argument("unknown group '" + std::string(raw) + "'");
  }
  Liberation lib;
  std::string rest = s.substr(1);
  if (rest.empty())
    lib = Liberation::Classical;
  else if (rest == "*")
    lib = Liberation::Half;
  else if (rest == "+")
    lib = Liberation::Free;
  else
    throw std::invalid_argument("unknown group '" + std::string(raw) + "'");
  return {fam, lib, twisted};
}

bool is_group_name(std::string_view name) {
  try {
    (void)parse_group(name);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

std::string group_name(const EasyGroupId& g) {
  std::string s;
  if (g.twisted) s += "~";
  switch (g.family) {
    case Family::O: s += "o"; break;
    case Family::U: s += "u"; break;
    case Family::H: s += "h"; break;
    case Family::K: s += "k"; break;
    case Family::S: s += "s"; break;
    case Family::B: s += "b"; break;
  }
  switch (g.liberation) {
    case Liberation::Classical: break;
    case Liberation::Half: s += "*"; break;
    case Liberation::Free: s += "+"; break;
  }
  return s;
}

CategoryId category_of(const EasyGroupId& g) {
  auto pick = [&](CategoryTag classical, CategoryTag half, CategoryTag free) -> CategoryId {
    switch (g.liberation) {
      case Liberation::Classical: return {classical};
      case Liberation::Half: return {half};
      case Liberation::Free: return {free};
    }
    throw std::logic_error("bad liberation");
  };
  switch (g.family) {
    case Family::O:
      return pick(CategoryTag::P2, CategoryTag::P2Star, CategoryTag::NC2);
    case Family::U:
      return pick(CategoryTag::P2Colored, CategoryTag::P2StarColored, CategoryTag::NC2Colored);
    case Family::H:
      return pick(CategoryTag::Peven, CategoryTag::PevenStar, CategoryTag::NCeven);
    case Family::K:
      return pick(CategoryTag::PevenColored, CategoryTag::PevenStarColored,
                  CategoryTag::NCevenColored);
    case Family::S:
      if (g.liberation == Liberation::Half)
        throw std::invalid_argument("the S family has no half-liberation");
      return pick(CategoryTag::P, CategoryTag::P, CategoryTag::NC);
    case Family::B:
      if (g.liberation == Liberation::Half)
        throw std::invalid_argument("the B family has no half-liberation");
      return pick(CategoryTag::P12, CategoryTag::P12, CategoryTag::NC12);
  }
  throw std::logic_error("bad family");
}

bool member(const CategoryId& c, const Partition& pi) {
  switch (c.tag) {
    case CategoryTag::P:
      return true;
    case CategoryTag::NC:
      return pi.is_noncrossing();
    case CategoryTag::P2:
      return pi.is_pairing();
    case CategoryTag::NC2:
      return pi.is_pairing() && pi.is_noncrossing();
    case CategoryTag::P2Colored:
      return pi.is_pairing() && blocks_color_balanced(pi, kInfinity);
    case CategoryTag::NC2Colored:
      return pi.is_pairing() && pi.is_noncrossing() && blocks_color_balanced(pi, kInfinity);
    case CategoryTag::P2Star:
      return pi.is_pairing() && blocks_position_balanced(pi);
    case CategoryTag::P2StarColored:
      return pi.is_pairing() && blocks_position_balanced(pi) &&
             blocks_color_balanced(pi, kInfinity);
    case CategoryTag::P2Bar:
      return pi.is_pairing() && global_color_balanced(pi, kInfinity);
    case CategoryTag::P2Mod:
      return pi.is_pairing() && global_color_balanced(pi, c.param);
    case CategoryTag::Peven:
      return pi.is_even();
    case CategoryTag::NCeven:
      return pi.is_even() && pi.is_noncrossing();
    case CategoryTag::PevenColored:
      return pi.is_even() && blocks_color_balanced(pi, kInfinity);
    case CategoryTag::NCevenColored:
      return pi.is_even() && pi.is_noncrossing() && blocks_color_balanced(pi, kInfinity);
    case CategoryTag::PevenStar:
      return pi.is_even() && blocks_position_balanced(pi);
    case CategoryTag::PevenStarColored:
      return pi.is_even() && blocks_position_balanced(pi) && blocks_color_balanced(pi, kInfinity);
    case CategoryTag::PevenInfty:
      return pi.is_even() && reduces_in_free_z2(pi);
    case CategoryTag::PevenMod:
      return pi.is_even() && global_color_balanced(pi, c.param);
    case CategoryTag::PevenBlockMod:
      return pi.is_even() && blocks_color_balanced(pi, c.param);
    case CategoryTag::P12: {
      for (int s : pi.block_sizes())
        if (s > 2) return false;
      return true;
    }
    case CategoryTag::NC12: {
      for (int s : pi.block_sizes())
        if (s > 2) return false;
      return pi.is_noncrossing();
    }
  }
  throw std::logic_error("member: bad tag");
}

namespace {

PartitionFilter base_filter(CategoryTag tag) {
  switch (tag) {
    case CategoryTag::P:
      return PartitionFilter::All;
    case CategoryTag::NC:
      return PartitionFilter::Noncrossing;
    case CategoryTag::P2:
    case CategoryTag::P2Colored:
    case CategoryTag::P2Star:
    case CategoryTag::P2StarColored:
    case CategoryTag::P2Bar:
    case CategoryTag::P2Mod:
      return PartitionFilter::Pairings;
    case CategoryTag::NC2:
    case CategoryTag::NC2Colored:
      return PartitionFilter::NoncrossingPairings;
    case CategoryTag::Peven:
    case CategoryTag::PevenColored:
    case CategoryTag::PevenStar:
    case CategoryTag::PevenStarColored:
    case CategoryTag::PevenInfty:
    case CategoryTag::PevenMod:
    case CategoryTag::PevenBlockMod:
      return PartitionFilter::Even;
    case CategoryTag::NCeven:
    case CategoryTag::NCevenColored:
      return PartitionFilter::NoncrossingEven;
    case CategoryTag::P12:
      return PartitionFilter::SingletonsPairings;
    case CategoryTag::NC12:
      return PartitionFilter::NoncrossingSingletonsPairings;
  }
  throw std::logic_error("base_filter: bad tag");
}

}  // namespace

std::vector<Partition> enumerate_category(const CategoryId& c, const ColoredWord& word,
                                          std::size_t max_points) {
  if (word.size() > max_points)
    throw BoundExceededError("enumeration of " + std::to_string(word.size()) +
                             " points exceeds the bound of " + std::to_string(max_points));
  std::vector<Partition> out;
  for (auto& p : enumerate_partitions(word, base_filter(c.tag)))
    if (member(c, p)) out.push_back(std::move(p));
  return out;
}

std::vector<Partition> closure(const std::vector<Partition>& generators,
                               std::size_t max_points) {
  auto strip = [](const Partition& p) {
    return Partition::from_rgs(p.upper_points(), p.rgs());
  };
  std::unordered_set<Partition> seen;
  std::vector<Partition> all;
  std::queue<Partition> work;
  // colors are ignored throughout, so conjugation cannot leave the all-white
  // world and vertical gluing always matches
  auto add = [&](const Partition& raw) {
    if (raw.total_points() > max_points) return;
    Partition p = strip(raw);
    if (seen.insert(p).second) {
      all.push_back(p);
      work.push(p);
    }
  };
  // identity and semicircle are adjoined to every category
  add(Partition::parse("a/a"));
  add(Partition::parse("12"));
  for (const auto& g : generators) add(strip(g));

  auto try_compose = [&](const Partition& pi, const Partition& sigma) {
    if (pi.upper_points() != sigma.lower_points()) return;
    if (pi.upper_word() != sigma.lower_word()) return;
    add(compose(pi, sigma).first);
  };
  while (!work.empty()) {
    Partition x = std::move(work.front());
    work.pop();
    add(conjugate(x));
    // pair x against everything known so far (including itself)
    std::size_t snapshot = all.size();
    for (std::size_t i = 0; i < snapshot; ++i) {
      const Partition y = all[i];
      add(tensor(x, y));
      add(tensor(y, x));
      try_compose(x, y);
      try_compose(y, x);
    }
  }
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace wgc
