#include "wgc/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace wgc {

namespace {

int point_label_value(char c) {
  if (c >= '1' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
  throw std::invalid_argument(std::string("bad point label '") + c + "'");
}

char point_label_char(int v) {
  if (v >= 1 && v <= 9) return static_cast<char>('0' + v);
  if (v >= 10 && v <= 35) return static_cast<char>('a' + v - 10);
  throw std::invalid_argument("point id out of printable range");
}

// Tiny union-find over 0..n-1.
struct Uf {
  std::vector<int> parent;
  explicit Uf(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::vector<int> rgs_of_uf(Uf& uf, std::size_t n) {
  std::vector<int> rgs(n);
  std::unordered_map<int, int> label;
  int next = 0;
  for (std::size_t p = 0; p < n; ++p) {
    int root = uf.find(static_cast<int>(p));
    auto it = label.find(root);
    if (it == label.end()) {
      label.emplace(root, next);
      rgs[p] = next++;
    } else {
      rgs[p] = it->second;
    }
  }
  return rgs;
}

// All restricted-growth strings on m points (set partitions of {0..m-1}).
void all_rgs(std::size_t m, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(m, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int maxb) {
    if (pos == m) {
      out.push_back(cur);
      return;
    }
    for (int b = 0; b <= maxb + 1; ++b) {
      cur[pos] = b;
      rec(pos + 1, std::max(maxb, b));
    }
  };
  if (m == 0) {
    out.push_back({});
    return;
  }
  rec(0, -1);
}

}  // namespace

// --- MultiIndex --------------------------------------------------------------

MultiIndex MultiIndex::parse(std::string_view s) {
  std::vector<int> v;
  v.reserve(s.size());
  for (char c : s) v.push_back(point_label_value(c));
  return MultiIndex(std::move(v));
}

std::string MultiIndex::str() const {
  std::string out;
  for (int v : entries) out.push_back(point_label_char(v));
  return out;
}

void for_each_index(int N, std::size_t k, const std::function<void(const MultiIndex&)>& fn) {
  MultiIndex idx(std::vector<int>(k, 1));
  while (true) {
    fn(idx);
    std::size_t p = k;
    while (p > 0 && idx.entries[p - 1] == N) {
      idx.entries[p - 1] = 1;
      --p;
    }
    if (p == 0) return;
    ++idx.entries[p - 1];
  }
}

// --- Partition construction --------------------------------------------------

void Partition::normalize_rgs() {
  std::unordered_map<int, int> label;
  int next = 0;
  for (auto& b : rgs_) {
    auto it = label.find(b);
    if (it == label.end()) {
      label.emplace(b, next);
      b = next++;
    } else {
      b = it->second;
    }
  }
  nblocks_ = static_cast<std::size_t>(next);
}

Partition Partition::from_rgs(std::size_t k, std::vector<int> rgs, ColoredWord upper,
                              ColoredWord lower) {
  Partition p;
  p.k_ = k;
  p.rgs_ = std::move(rgs);
  if (k > p.rgs_.size()) throw std::invalid_argument("from_rgs: k exceeds point count");
  if (upper.empty() && k > 0) upper = ColoredWord::plain(k);
  if (lower.empty() && p.rgs_.size() > k) lower = ColoredWord::plain(p.rgs_.size() - k);
  if (upper.size() != k || lower.size() != p.rgs_.size() - k)
    throw std::invalid_argument("from_rgs: color word lengths do not match rows");
  p.upper_ = std::move(upper);
  p.lower_ = std::move(lower);
  p.normalize_rgs();
  return p;
}

Partition Partition::from_blocks(std::size_t k, std::size_t l,
                                 const std::vector<std::vector<int>>& blocks, ColoredWord upper,
                                 ColoredWord lower) {
  std::size_t n = k + l;
  std::vector<int> rgs(n, -1);
  int id = 0;
  for (const auto& blk : blocks) {
    if (blk.empty()) throw std::invalid_argument("from_blocks: empty block");
    for (int p : blk) {
      if (p < 1 || static_cast<std::size_t>(p) > n)
        throw std::invalid_argument("from_blocks: point out of range");
      if (rgs[p - 1] != -1) throw std::invalid_argument("from_blocks: point repeated");
      rgs[p - 1] = id;
    }
    ++id;
  }
  for (int b : rgs)
    if (b == -1) throw std::invalid_argument("from_blocks: blocks do not cover all points");
  return from_rgs(k, std::move(rgs), std::move(upper), std::move(lower));
}

Partition Partition::one_row(const std::vector<std::vector<int>>& blocks, std::size_t n,
                             ColoredWord colors) {
  return from_blocks(0, n, blocks, {}, std::move(colors));
}

Partition Partition::kernel(const MultiIndex& i, ColoredWord colors) {
  std::vector<int> rgs(i.entries.begin(), i.entries.end());
  return from_rgs(0, std::move(rgs), {}, std::move(colors));
}

Partition Partition::kernel(const MultiIndex& i, const MultiIndex& j, ColoredWord upper,
                            ColoredWord lower) {
  std::vector<int> rgs(i.entries.begin(), i.entries.end());
  rgs.insert(rgs.end(), j.entries.begin(), j.entries.end());
  return from_rgs(i.size(), std::move(rgs), std::move(upper), std::move(lower));
}

Color Partition::color_at(std::size_t p) const {
  if (p < 1 || p > total_points()) throw std::out_of_range("color_at: bad point");
  return p <= k_ ? upper_[p - 1] : lower_[p - 1 - k_];
}

std::vector<std::vector<int>> Partition::blocks() const {
  std::vector<std::vector<int>> out(nblocks_);
  for (std::size_t p = 0; p < rgs_.size(); ++p) out[rgs_[p]].push_back(static_cast<int>(p + 1));
  return out;
}

std::vector<int> Partition::block_sizes() const {
  std::vector<int> sz(nblocks_, 0);
  for (int b : rgs_) ++sz[b];
  return sz;
}

bool Partition::is_pairing() const {
  for (int s : block_sizes())
    if (s != 2) return false;
  return true;
}

bool Partition::is_even() const {
  for (int s : block_sizes())
    if (s % 2 != 0) return false;
  return true;
}

std::vector<int> Partition::circle_order() const {
  std::vector<int> order;
  order.reserve(total_points());
  for (std::size_t p = 1; p <= k_; ++p) order.push_back(static_cast<int>(p));
  for (std::size_t p = total_points(); p > k_; --p) order.push_back(static_cast<int>(p));
  return order;
}

bool Partition::is_noncrossing() const {
  auto order = circle_order();
  std::vector<int> remaining(block_count(), 0);
  for (int b : rgs_) ++remaining[b];
  std::vector<int> stack;
  std::vector<char> in_stack(block_count(), 0);
  for (int p : order) {
    int b = rgs_[p - 1];
    if (in_stack[b]) {
      if (stack.back() != b) return false;  // interleaved with the open block
    } else {
      stack.push_back(b);
      in_stack[b] = 1;
    }
    if (--remaining[b] == 0) {
      if (stack.back() != b) return false;
      stack.pop_back();
      // in_stack stays set; block is finished and may not reopen
      remaining[b] = -1;
    }
  }
  return true;
}

int Partition::crossing_count() const {
  if (!is_pairing()) throw std::invalid_argument("crossing_count: not a pairing");
  auto order = circle_order();
  std::vector<int> pos(total_points() + 1, 0);
  for (std::size_t c = 0; c < order.size(); ++c) pos[order[c]] = static_cast<int>(c);
  // Strings as (min,max) clockwise positions.
  std::vector<std::pair<int, int>> strings(block_count(), {-1, -1});
  for (std::size_t p = 1; p <= total_points(); ++p) {
    auto& s = strings[rgs_[p - 1]];
    int c = pos[p];
    if (s.first == -1) {
      s = {c, c};
    } else {
      s.first = std::min(s.first, c);
      s.second = std::max(s.second, c);
    }
  }
  int crossings = 0;
  for (std::size_t a = 0; a < strings.size(); ++a)
    for (std::size_t b = a + 1; b < strings.size(); ++b) {
      auto [a1, a2] = strings[a];
      auto [b1, b2] = strings[b];
      bool b1_in = a1 < b1 && b1 < a2;
      bool b2_in = a1 < b2 && b2 < a2;
      if (b1_in != b2_in) ++crossings;
    }
  return crossings;
}

int Partition::signature() const {
  if (!is_even()) throw std::invalid_argument("signature: partition has an odd block");
  auto order = circle_order();
  // Split every block into consecutive pairs along the clockwise order.
  std::vector<std::vector<int>> legs(block_count());
  for (std::size_t c = 0; c < order.size(); ++c) legs[rgs_[order[c] - 1]].push_back(static_cast<int>(c));
  std::vector<std::pair<int, int>> strings;
  strings.reserve(total_points() / 2);
  for (const auto& ls : legs)
    for (std::size_t j = 0; j + 1 < ls.size(); j += 2) strings.emplace_back(ls[j], ls[j + 1]);
  int crossings = 0;
  for (std::size_t a = 0; a < strings.size(); ++a)
    for (std::size_t b = a + 1; b < strings.size(); ++b) {
      auto [a1, a2] = strings[a];
      auto [b1, b2] = strings[b];
      bool b1_in = a1 < b1 && b1 < a2;
      bool b2_in = a1 < b2 && b2 < a2;
      if (b1_in != b2_in) ++crossings;
    }
  return (crossings % 2 == 0) ? 1 : -1;
}

int Partition::signature_by_switch_count() const {
  if (!is_even()) throw std::invalid_argument("signature: partition has an odd block");
  auto order = circle_order();
  // Rank blocks by first clockwise leg, then count discordant cross-block
  // pairs: the number of adjacent switches to the standard grouped form.
  std::vector<int> rank(block_count(), -1);
  int next = 0;
  std::vector<int> seq;
  seq.reserve(order.size());
  for (int p : order) {
    int b = rgs_[p - 1];
    if (rank[b] == -1) rank[b] = next++;
    seq.push_back(rank[b]);
  }
  long switches = 0;
  for (std::size_t x = 0; x < seq.size(); ++x)
    for (std::size_t y = x + 1; y < seq.size(); ++y)
      if (seq[x] > seq[y]) ++switches;
  return (switches % 2 == 0) ? 1 : -1;
}

bool Partition::refines(const Partition& coarser) const {
  if (total_points() != coarser.total_points())
    throw std::invalid_argument("refines: point counts differ");
  // Every block of *this must sit inside one block of coarser.
  std::vector<int> image(block_count(), -1);
  for (std::size_t p = 0; p < rgs_.size(); ++p) {
    int b = rgs_[p];
    int cb = coarser.rgs_[p];
    if (image[b] == -1)
      image[b] = cb;
    else if (image[b] != cb)
      return false;
  }
  return true;
}

// --- text form ---------------------------------------------------------------

std::string Partition::str() const {
  if (total_points() == 0) return "()";
  std::string out;
  bool colored = false;
  for (std::size_t p = 1; p <= total_points(); ++p)
    if (color_at(p) == Color::Black) colored = true;
  if (k_ == 0) {
    auto bs = blocks();
    for (std::size_t i = 0; i < bs.size(); ++i) {
      if (i) out.push_back('|');
      for (int p : bs[i]) out.push_back(point_label_char(p));
    }
    if (colored) out += ":" + lower_.str();
  } else {
    for (std::size_t p = 0; p < k_; ++p) out.push_back(static_cast<char>('a' + rgs_[p]));
    out.push_back('/');
    for (std::size_t p = k_; p < rgs_.size(); ++p) out.push_back(static_cast<char>('a' + rgs_[p]));
    if (colored) out += ":" + upper_.str() + ":" + lower_.str();
  }
  return out;
}

Partition Partition::parse(std::string_view s) {
  if (s == "()") return Partition();
  std::string_view body = s;
  std::string_view colors;
  if (auto pos = s.find(':'); pos != std::string_view::npos) {
    body = s.substr(0, pos);
    colors = s.substr(pos + 1);
  }
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view up = body.substr(0, slash);
    std::string_view low = body.substr(slash + 1);
    std::vector<int> rgs;
    std::map<char, int> label;
    int next = 0;
    std::string letters(up);
    letters.append(low);
    for (char c : letters) {
      auto it = label.find(c);
      if (it == label.end()) {
        label.emplace(c, next);
        rgs.push_back(next++);
      } else {
        rgs.push_back(it->second);
      }
    }
    ColoredWord cu, cl;
    if (!colors.empty()) {
      auto cpos = colors.find(':');
      if (cpos == std::string_view::npos)
        throw std::invalid_argument("Partition::parse: two-row colors need ':' separator");
      cu = ColoredWord::parse(colors.substr(0, cpos));
      cl = ColoredWord::parse(colors.substr(cpos + 1));
    }
    return from_rgs(up.size(), std::move(rgs), std::move(cu), std::move(cl));
  }
  // one-row block syntax
  std::vector<std::vector<int>> blocks(1);
  std::size_t n = 0;
  for (char c : body) {
    if (c == '|') {
      blocks.emplace_back();
    } else {
      int p = point_label_value(c);
      blocks.back().push_back(p);
      n = std::max(n, static_cast<std::size_t>(p));
    }
  }
  ColoredWord cl;
  if (!colors.empty()) cl = ColoredWord::parse(colors);
  return from_blocks(0, n, blocks, {}, std::move(cl));
}

// --- lattice operations --------------------------------------------------------

Partition join(const Partition& pi, const Partition& sigma) {
  if (pi.total_points() != sigma.total_points() || pi.upper_points() != sigma.upper_points())
    throw std::invalid_argument("join: point layouts differ");
  std::size_t n = pi.total_points();
  Uf uf(n);
  auto link = [&](const Partition& p) {
    std::vector<int> first(p.block_count(), -1);
    for (std::size_t q = 0; q < n; ++q) {
      int b = p.rgs()[q];
      if (first[b] == -1)
        first[b] = static_cast<int>(q);
      else
        uf.merge(first[b], static_cast<int>(q));
    }
  };
  link(pi);
  link(sigma);
  return Partition::from_rgs(pi.upper_points(), rgs_of_uf(uf, n), pi.upper_word(),
                             pi.lower_word());
}

int block_count_join(const Partition& pi, const Partition& sigma) {
  if (pi.total_points() != sigma.total_points())
    throw std::invalid_argument("join: point counts differ");
  std::size_t n = pi.total_points();
  if (n == 0) return 0;
  Uf uf(n);
  std::vector<int> first_pi(pi.block_count(), -1), first_sg(sigma.block_count(), -1);
  for (std::size_t q = 0; q < n; ++q) {
    int b = pi.rgs()[q];
    if (first_pi[b] == -1)
      first_pi[b] = static_cast<int>(q);
    else
      uf.merge(first_pi[b], static_cast<int>(q));
    int c = sigma.rgs()[q];
    if (first_sg[c] == -1)
      first_sg[c] = static_cast<int>(q);
    else
      uf.merge(first_sg[c], static_cast<int>(q));
  }
  int count = 0;
  for (std::size_t q = 0; q < n; ++q)
    if (uf.find(static_cast<int>(q)) == static_cast<int>(q)) ++count;
  return count;
}

int delta(const Partition& pi, const MultiIndex& i, const MultiIndex& j) {
  if (i.size() != pi.upper_points() || j.size() != pi.lower_points())
    throw std::invalid_argument("delta: index lengths do not match partition rows");
  std::vector<int> value(pi.block_count(), 0);
  for (std::size_t p = 0; p < pi.total_points(); ++p) {
    int v = p < pi.upper_points() ? i[p] : j[p - pi.upper_points()];
    int b = pi.rgs()[p];
    if (value[b] == 0)
      value[b] = v;
    else if (value[b] != v)
      return 0;
  }
  return 1;
}

int delta(const Partition& pi, const MultiIndex& i) { return delta(pi, {}, i); }

int twisted_delta(const Partition& pi, const MultiIndex& i, const MultiIndex& j) {
  if (!pi.is_even()) throw std::invalid_argument("twisted_delta: partition not even");
  if (i.size() != pi.upper_points() || j.size() != pi.lower_points())
    throw std::invalid_argument("twisted_delta: index lengths do not match partition rows");
  if (!delta(pi, i, j)) return 0;
  Partition ker = Partition::kernel(i, j, pi.upper_word(), pi.lower_word());
  return ker.signature();
}

int twisted_delta(const Partition& pi, const MultiIndex& i) { return twisted_delta(pi, {}, i); }

std::vector<Partition> interval_partitions(const Partition& sigma, const Partition& pi) {
  if (!sigma.refines(pi)) return {};
  // The interval [sigma,pi] is the product over pi-blocks of the partition
  // lattices on the sigma-blocks each contains.
  std::size_t nb = sigma.block_count();
  std::vector<int> owner(nb, -1);  // pi-block per sigma-block
  for (std::size_t p = 0; p < sigma.total_points(); ++p) owner[sigma.rgs()[p]] = pi.rgs()[p];
  std::vector<std::vector<int>> groups(pi.block_count());
  for (std::size_t b = 0; b < nb; ++b) groups[owner[b]].push_back(static_cast<int>(b));

  std::vector<std::vector<std::vector<int>>> choices;  // per group: rgs over its blocks
  for (const auto& g : groups) {
    std::vector<std::vector<int>> rgss;
    all_rgs(g.size(), rgss);
    choices.push_back(std::move(rgss));
  }

  std::vector<Partition> out;
  std::vector<std::size_t> pick(groups.size(), 0);
  while (true) {
    // Assemble tau: sigma-block b goes to group-local id, offset per group.
    std::vector<int> blk_label(nb, -1);
    int offset = 0;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      const auto& rgs = choices[g][pick[g]];
      int mx = -1;
      for (std::size_t t = 0; t < groups[g].size(); ++t) {
        blk_label[groups[g][t]] = offset + rgs[t];
        mx = std::max(mx, rgs[t]);
      }
      offset += mx + 1;
    }
    std::vector<int> rgs(sigma.total_points());
    for (std::size_t p = 0; p < sigma.total_points(); ++p)
      rgs[p] = blk_label[sigma.rgs()[p]];
    out.push_back(Partition::from_rgs(sigma.upper_points(), std::move(rgs), sigma.upper_word(),
                                      sigma.lower_word()));
    // advance
    std::size_t g = 0;
    while (g < pick.size() && ++pick[g] == choices[g].size()) pick[g++] = 0;
    if (g == pick.size()) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Partition> coarsenings(const Partition& pi) {
  if (pi.total_points() == 0) return {pi};
  std::vector<int> one(pi.total_points(), 0);
  Partition top = Partition::from_rgs(pi.upper_points(), std::move(one), pi.upper_word(),
                                      pi.lower_word());
  return interval_partitions(pi, top);
}

long long mobius(const Partition& sigma, const Partition& pi) {
  if (sigma == pi) return 1;
  if (sigma.total_points() != pi.total_points()) return 0;
  if (!sigma.refines(pi)) return 0;
  auto interval = interval_partitions(sigma, pi);
  // mu(sigma,tau) accumulated by scanning the interval in refinement-compatible
  // (canonical) order; standard recursion mu(sigma,pi) = -sum_{sigma<=tau<pi}.
  std::unordered_map<Partition, long long> mu;
  // Process by increasing block-merges: coarser partitions have fewer blocks.
  std::sort(interval.begin(), interval.end(), [](const Partition& a, const Partition& b) {
    if (a.block_count() != b.block_count()) return a.block_count() > b.block_count();
    return a < b;
  });
  for (const auto& tau : interval) {
    if (tau == sigma) {
      mu[tau] = 1;
      continue;
    }
    long long total = 0;
    for (const auto& [rho, val] : mu)
      if (rho != tau && rho.refines(tau)) total += val;
    mu[tau] = -total;
  }
  return mu.at(pi);
}

// --- categorical operations ----------------------------------------------------

Partition tensor(const Partition& pi, const Partition& sigma) {
  std::size_t k = pi.upper_points() + sigma.upper_points();
  std::size_t n = pi.total_points() + sigma.total_points();
  std::vector<int> rgs(n);
  int shift = static_cast<int>(pi.block_count());
  std::size_t pos = 0;
  for (std::size_t p = 0; p < pi.upper_points(); ++p) rgs[pos++] = pi.rgs()[p];
  for (std::size_t p = 0; p < sigma.upper_points(); ++p) rgs[pos++] = sigma.rgs()[p] + shift;
  for (std::size_t p = pi.upper_points(); p < pi.total_points(); ++p) rgs[pos++] = pi.rgs()[p];
  for (std::size_t p = sigma.upper_points(); p < sigma.total_points(); ++p)
    rgs[pos++] = sigma.rgs()[p] + shift;
  return Partition::from_rgs(k, std::move(rgs), pi.upper_word().concat(sigma.upper_word()),
                             pi.lower_word().concat(sigma.lower_word()));
}

std::pair<Partition, int> compose(const Partition& pi, const Partition& sigma) {
  if (pi.upper_word() != sigma.lower_word())
    throw std::invalid_argument("compose: middle words do not match");
  std::size_t a = sigma.upper_points();
  std::size_t m = sigma.lower_points();  // == pi.upper_points()
  std::size_t c = pi.lower_points();
  // Nodes: sigma-upper [0,a), middle [a,a+m), pi-lower [a+m,a+m+c).
  Uf uf(a + m + c);
  std::vector<int> first_sg(sigma.block_count(), -1), first_pi(pi.block_count(), -1);
  auto touch = [&](std::vector<int>& first, int b, int node) {
    if (first[b] == -1)
      first[b] = node;
    else
      uf.merge(first[b], node);
  };
  // sigma's point index coincides with its node id (upper then middle), and
  // pi's points shift by a (middle then lower).
  for (std::size_t p = 0; p < sigma.total_points(); ++p)
    touch(first_sg, sigma.rgs()[p], static_cast<int>(p));
  for (std::size_t p = 0; p < pi.total_points(); ++p)
    touch(first_pi, pi.rgs()[p], static_cast<int>(a + p));
  // Erased components: those containing only middle nodes.
  std::vector<char> touches_boundary(a + m + c, 0);
  for (std::size_t q = 0; q < a; ++q) touches_boundary[uf.find(static_cast<int>(q))] = 1;
  for (std::size_t q = a + m; q < a + m + c; ++q) touches_boundary[uf.find(static_cast<int>(q))] = 1;
  int loops = 0;
  for (std::size_t q = a; q < a + m; ++q) {
    int r = uf.find(static_cast<int>(q));
    if (!touches_boundary[r]) {
      ++loops;
      touches_boundary[r] = 1;  // count each component once
    }
  }
  // Result on sigma-upper + pi-lower.
  std::vector<int> roots;
  roots.reserve(a + c);
  for (std::size_t q = 0; q < a; ++q) roots.push_back(uf.find(static_cast<int>(q)));
  for (std::size_t q = a + m; q < a + m + c; ++q) roots.push_back(uf.find(static_cast<int>(q)));
  std::unordered_map<int, int> label;
  std::vector<int> rgs;
  rgs.reserve(roots.size());
  int next = 0;
  for (int r : roots) {
    auto it = label.find(r);
    if (it == label.end()) {
      label.emplace(r, next);
      rgs.push_back(next++);
    } else {
      rgs.push_back(it->second);
    }
  }
  return {Partition::from_rgs(a, std::move(rgs), sigma.upper_word(), pi.lower_word()), loops};
}

Partition conjugate(const Partition& pi) {
  std::size_t k = pi.upper_points(), l = pi.lower_points();
  std::vector<int> rgs;
  rgs.reserve(k + l);
  for (std::size_t p = k; p < k + l; ++p) rgs.push_back(pi.rgs()[p]);
  for (std::size_t p = 0; p < k; ++p) rgs.push_back(pi.rgs()[p]);
  return Partition::from_rgs(l, std::move(rgs), pi.lower_word().flipped(),
                             pi.upper_word().flipped());
}

// --- fattening / shrinking ------------------------------------------------------

Partition fatten(const Partition& pi) {
  if (pi.upper_points() != 0) throw std::invalid_argument("fatten: one-row input required");
  if (!pi.is_noncrossing()) throw std::invalid_argument("fatten: crossing input");
  std::size_t n = pi.lower_points();
  std::vector<std::vector<int>> strings;
  for (const auto& blk : pi.blocks()) {
    std::size_t m = blk.size();
    for (std::size_t j = 0; j < m; ++j) {
      int from = 2 * blk[j];                    // right leg of point blk[j]
      int to = 2 * blk[(j + 1) % m] - 1;        // left leg of the next point
      strings.push_back({std::min(from, to), std::max(from, to)});
    }
  }
  return Partition::one_row(strings, 2 * n);
}

Partition shrink(const Partition& pairing) {
  if (pairing.upper_points() != 0) throw std::invalid_argument("shrink: one-row input required");
  if (!pairing.is_pairing()) throw std::invalid_argument("shrink: input not a pairing");
  if (!pairing.is_noncrossing()) throw std::invalid_argument("shrink: crossing input");
  std::size_t n2 = pairing.lower_points();
  if (n2 % 2 != 0) throw std::invalid_argument("shrink: odd point count");
  std::size_t n = n2 / 2;
  Uf uf(n);
  for (const auto& blk : pairing.blocks())
    uf.merge((blk[0] - 1) / 2, (blk[1] - 1) / 2);
  return Partition::from_rgs(0, rgs_of_uf(uf, n));
}

}  // namespace wgc
