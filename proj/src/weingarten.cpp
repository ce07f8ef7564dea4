#include "wgc/weingarten.hpp"

#include <cmath>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace wgc {

namespace {

bool category_is_even(const CategoryId& cat) {
  switch (cat.tag) {
    case CategoryTag::P:
    case CategoryTag::NC:
    case CategoryTag::P12:
    case CategoryTag::NC12:
      return false;
    default:
      return true;
  }
}

void require_twistable(const CategoryId& cat) {
  if (!category_is_even(cat))
    throw std::invalid_argument("twisting requires a category of even partitions (" +
                                category_name(cat) + " is not)");
}

int signed_delta(const Partition& pi, const MultiIndex& idx, bool twist) {
  return twist ? twisted_delta(pi, idx) : delta(pi, idx);
}

std::string cache_key(const CategoryId& cat, const ColoredWord& word, int N, InverseMode mode) {
  std::ostringstream os;
  os << category_name(cat) << '|' << word.str() << '|' << N << '|'
     << (mode == InverseMode::Strict ? 's' : 'p');
  return os.str();
}

}  // namespace

std::vector<std::string> PartitionMatrix::index_strings() const {
  std::vector<std::string> out;
  out.reserve(index.size());
  for (const auto& p : index) out.push_back(p.str());
  return out;
}

PartitionMatrix gram_matrix(const CategoryId& cat, const ColoredWord& word, int N,
                            std::size_t max_points) {
  if (N < 1) throw std::invalid_argument("gram_matrix: N must be positive");
  PartitionMatrix g;
  g.index = enumerate_category(cat, word, max_points);
  const auto n = static_cast<Eigen::Index>(g.index.size());
  g.entries = MatrixQ(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = a; b < n; ++b) {
      Rational v = ipow(N, block_count_join(g.index[a], g.index[b]));
      g.entries(a, b) = v;
      g.entries(b, a) = v;
    }
  }
  return g;
}

std::shared_ptr<const PartitionMatrix> weingarten_matrix(const CategoryId& cat,
                                                         const ColoredWord& word, int N,
                                                         InverseMode mode,
                                                         std::size_t max_points) {
  if (word.size() > max_points)
    throw BoundExceededError("enumeration of " + std::to_string(word.size()) +
                             " points exceeds the bound of " + std::to_string(max_points));
  static std::mutex mu;
  static std::unordered_map<std::string, std::shared_ptr<const PartitionMatrix>> cache;
  const std::string key = cache_key(cat, word, N, mode);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  PartitionMatrix g = gram_matrix(cat, word, N, max_points);
  auto w = std::make_shared<PartitionMatrix>();
  w->index = g.index;
  try {
    w->entries = invert_psd(g.entries, mode).inverse;
  } catch (const SingularGramError& e) {
    std::ostringstream os;
    os << "Gram matrix for " << category_name(cat) << ", word '" << word.str() << "', N=" << N
       << " is singular: T_" << g.index[e.dependent_index].str()
       << " depends linearly on { ";
    for (int b : e.basis_indices) os << "T_" << g.index[b].str() << " ";
    os << "}; rerun in pseudo-inverse mode";
    throw SingularGramError(os.str(), e.dependent_index, e.basis_indices);
  }
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(key, std::move(w));
  return it->second;
}

Rational integrate_group(const IntegralSpec& spec, InverseMode mode, std::size_t max_points) {
  const CategoryId cat = category_of(spec.group);
  const bool twist = spec.group.twisted;
  if (twist) require_twistable(cat);
  if (spec.row.size() != spec.word.size() || spec.column.size() != spec.word.size())
    throw std::invalid_argument("integrate_group: index lengths must match the word");
  auto w = weingarten_matrix(cat, spec.word, spec.N, mode, max_points);
  const auto n = static_cast<Eigen::Index>(w->index.size());
  if (n == 0) return Rational(0);
  std::vector<int> di(n), dj(n);
  for (Eigen::Index a = 0; a < n; ++a) {
    di[a] = signed_delta(w->index[a], spec.row, twist);
    dj[a] = signed_delta(w->index[a], spec.column, twist);
  }
  Rational total(0);
  for (Eigen::Index a = 0; a < n; ++a) {
    if (di[a] == 0) continue;
    for (Eigen::Index b = 0; b < n; ++b) {
      if (dj[b] == 0) continue;
      Rational term = w->entries(a, b);
      if (di[a] * dj[b] < 0) term = -term;
      total += term;
    }
  }
  return total;
}

Rational integrate_sphere(const EasyGroupId& group, int N, const ColoredWord& word,
                          const MultiIndex& i, InverseMode mode, std::size_t max_points) {
  IntegralSpec spec;
  spec.group = group;
  spec.N = N;
  spec.word = word;
  spec.row = MultiIndex::constant(word.size(), 1);
  spec.column = i;
  return integrate_group(spec, mode, max_points);
}

int integrate_torus(const std::vector<TorusLetter>& word, TorusRelations relations) {
  switch (relations) {
    case TorusRelations::Free: {
      std::vector<TorusLetter> stack;
      for (const auto& l : word) {
        if (!stack.empty() && stack.back().generator == l.generator &&
            stack.back().exponent != l.exponent)
          stack.pop_back();
        else
          stack.push_back(l);
      }
      return stack.empty() ? 1 : 0;
    }
    case TorusRelations::Abelian: {
      std::unordered_map<int, long> net;
      for (const auto& l : word) net[l.generator] += (l.exponent == Color::White) ? 1 : -1;
      for (const auto& [g, e] : net)
        if (e != 0) return 0;
      return 1;
    }
    case TorusRelations::Order2Free: {
      std::vector<int> stack;
      for (const auto& l : word) {
        if (!stack.empty() && stack.back() == l.generator)
          stack.pop_back();
        else
          stack.push_back(l.generator);
      }
      return stack.empty() ? 1 : 0;
    }
    case TorusRelations::Order2Abelian: {
      std::unordered_map<int, int> parity;
      for (const auto& l : word) parity[l.generator] ^= 1;
      for (const auto& [g, p] : parity)
        if (p) return 0;
      return 1;
    }
  }
  throw std::logic_error("integrate_torus: bad relations tag");
}

Rational char_moment(const EasyGroupId& group, int N, const ColoredWord& word, int s,
                     InverseMode mode, std::size_t max_points) {
  if (s < 1 || s > N) throw std::invalid_argument("char_moment: need 1 <= s <= N");
  const CategoryId cat = category_of(group);
  if (group.twisted) require_twistable(cat);
  // Twisted and plain traces coincide: the signs square away on the
  // diagonal and the twisted Gram matrix is the plain one.
  auto w = weingarten_matrix(cat, word, N, mode, max_points);
  PartitionMatrix gs = gram_matrix(cat, word, s, max_points);
  const auto n = static_cast<Eigen::Index>(w->index.size());
  Rational total(0);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b) total += w->entries(a, b) * gs.entries(b, a);
  return total;
}

Rational char_moment_limit(const EasyGroupId& group, const Rational& t, const ColoredWord& word,
                           std::size_t max_points) {
  const CategoryId cat = category_of(group);
  Rational total(0);
  for (const auto& p : enumerate_category(cat, word, max_points))
    total += pow(t, static_cast<long>(p.block_count()));
  return total;
}

Rational integrate_homspace(const HomSpaceSpec& spec, InverseMode mode, std::size_t max_points) {
  if (spec.L < 1 || spec.L > std::min(spec.M, spec.N))
    throw std::invalid_argument("integrate_homspace: need 1 <= L <= min(M,N)");
  const CategoryId cat = category_of(spec.group);
  const bool twist = spec.group.twisted;
  if (twist) require_twistable(cat);
  auto wm = weingarten_matrix(cat, spec.word, spec.M, mode, max_points);
  auto wn = weingarten_matrix(cat, spec.word, spec.N, mode, max_points);
  const auto n = static_cast<Eigen::Index>(wm->index.size());
  if (n == 0) return Rational(0);
  // sum_{pi sigma tau nu} L^{|sigma v nu|} d_pi(i) d_tau(j) W_M(pi,sigma) W_N(tau,nu)
  VectorQ u = VectorQ::Zero(n), v = VectorQ::Zero(n);
  for (Eigen::Index a = 0; a < n; ++a) {
    int di = signed_delta(wm->index[a], spec.row, twist);
    int dj = signed_delta(wn->index[a], spec.column, twist);
    for (Eigen::Index b = 0; b < n; ++b) {
      if (di != 0) u(b) += di > 0 ? wm->entries(a, b) : -wm->entries(a, b);
      if (dj != 0) v(b) += dj > 0 ? wn->entries(a, b) : -wn->entries(a, b);
    }
  }
  Rational total(0);
  for (Eigen::Index s = 0; s < n; ++s) {
    if (u(s).is_zero()) continue;
    for (Eigen::Index t = 0; t < n; ++t) {
      if (v(t).is_zero()) continue;
      total += u(s) * v(t) * ipow(spec.L, block_count_join(wm->index[s], wm->index[t]));
    }
  }
  return total;
}

Rational chi_e_moment(const EasyGroupId& group, int M, int N, int L, int K, int s,
                      InverseMode mode, std::size_t max_points) {
  if (K < 1 || L < 1 || K > std::min(M, N) || L > std::min(M, N))
    throw std::invalid_argument("chi_e_moment: need 1 <= K,L <= min(M,N)");
  const CategoryId cat = category_of(group);
  const ColoredWord word = ColoredWord::plain(static_cast<std::size_t>(s));
  auto wm = weingarten_matrix(cat, word, M, mode, max_points);
  auto wn = weingarten_matrix(cat, word, N, mode, max_points);
  const auto n = static_cast<Eigen::Index>(wm->index.size());
  Rational total(0);
  // sum K^{|pi v tau|} L^{|sigma v nu|} W_M(pi,sigma) W_N(tau,nu)
  MatrixQ jl(n, n), jk(n, n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = a; b < n; ++b) {
      int joins = block_count_join(wm->index[a], wm->index[b]);
      jl(a, b) = jl(b, a) = ipow(L, joins);
      jk(a, b) = jk(b, a) = ipow(K, joins);
    }
  MatrixQ mid = wm->entries * jl * wn->entries;  // indexed (pi, tau)
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b) total += jk(a, b) * mid(a, b);
  return total;
}

Rational bp_regime_limit(const EasyGroupId& group, const Rational& kappa, const Rational& lambda,
                         const Rational& mu, int s, std::size_t max_points) {
  if (mu.is_zero()) throw std::invalid_argument("bp_regime_limit: mu must be nonzero");
  const Rational ratio = kappa * lambda / mu;
  const CategoryId cat = category_of(group);
  Rational total(0);
  for (const auto& p :
       enumerate_category(cat, ColoredWord::plain(static_cast<std::size_t>(s)), max_points))
    total += pow(ratio, static_cast<long>(p.block_count()));
  return total;
}

double AffineValue::approx() const {
  double v = coeff.to_double();
  if (sqrt_power) v *= std::sqrt(static_cast<double>(base));
  return v;
}

std::string AffineValue::str() const {
  if (sqrt_power == 0) return coeff.str();
  return coeff.str() + "*sqrt(" + std::to_string(base) + ")";
}

AffineValue integrate_affine(const AffineSpaceSpec& spec, InverseMode mode,
                             std::size_t max_points) {
  if (spec.index_set.empty())
    throw std::invalid_argument("integrate_affine: index set I must be nonempty");
  for (int v : spec.index_set)
    if (v < 1 || v > spec.N) throw std::invalid_argument("integrate_affine: I not within 1..N");
  const CategoryId cat = category_of(spec.group);
  const bool twist = spec.group.twisted;
  if (twist) require_twistable(cat);
  auto w = weingarten_matrix(cat, spec.word, spec.N, mode, max_points);
  const auto n = static_cast<Eigen::Index>(w->index.size());
  const std::size_t k = spec.word.size();
  const long isize = static_cast<long>(spec.index_set.size());

  // S = sum_{pi,sigma} (sum_{j in I^k} d_pi(j)) d_sigma(i) W(pi,sigma);
  // the result is S / sqrt(|I|)^k.
  std::vector<Rational> ksum(n, Rational(0));
  for (Eigen::Index a = 0; a < n; ++a) {
    if (!twist) {
      ksum[a] = ipow(isize, static_cast<long>(w->index[a].block_count()));
    } else {
      // Walk I^k and accumulate signed symbols.
      std::vector<std::size_t> pick(k, 0);
      while (true) {
        MultiIndex j;
        j.entries.resize(k);
        for (std::size_t p = 0; p < k; ++p) j.entries[p] = spec.index_set[pick[p]];
        ksum[a] += Rational(signed_delta(w->index[a], j, true));
        std::size_t p = 0;
        while (p < k && ++pick[p] == spec.index_set.size()) pick[p++] = 0;
        if (p == k) break;
      }
    }
  }
  Rational s_total(0);
  for (Eigen::Index a = 0; a < n; ++a) {
    if (ksum[a].is_zero()) continue;
    for (Eigen::Index b = 0; b < n; ++b) {
      int ds = signed_delta(w->index[b], spec.i, twist);
      if (ds == 0) continue;
      Rational term = ksum[a] * w->entries(a, b);
      if (ds < 0) term = -term;
      s_total += term;
    }
  }
  AffineValue out;
  out.base = isize;
  if (k % 2 == 0) {
    out.coeff = s_total / ipow(isize, static_cast<long>(k / 2));
    out.sqrt_power = 0;
  } else {
    out.coeff = s_total / ipow(isize, static_cast<long>((k + 1) / 2));
    out.sqrt_power = 1;
    long r = std::lround(std::sqrt(static_cast<double>(isize)));
    if (r * r == isize) {
      out.coeff *= Rational(r);
      out.sqrt_power = 0;
    }
  }
  if (out.coeff.is_zero()) out.sqrt_power = 0;
  if (out.sqrt_power == 0) out.base = 1;
  return out;
}

std::pair<Rational, Rational> hypergeometric_equality(int n, int k, InverseMode mode) {
  if (n < 2 || k < 1) throw std::invalid_argument("hypergeometric_equality: need n >= 2, k >= 1");
  // Left side: int_{O_n^+} u_11^{2k} over NC2(2k).
  auto w2k = weingarten_matrix({CategoryTag::NC2}, ColoredWord::plain(2 * k), n, mode);
  Rational lhs(0);
  const auto m = static_cast<Eigen::Index>(w2k->index.size());
  for (Eigen::Index a = 0; a < m; ++a)
    for (Eigen::Index b = 0; b < m; ++b) lhs += w2k->entries(a, b);
  // Right side: int_{S_{n^2}^+} X_11^k over NC(k) with shrunk exponents.
  auto wk = weingarten_matrix({CategoryTag::NC}, ColoredWord::plain(k), n * n, mode);
  Rational rhs(0);
  const auto r = static_cast<Eigen::Index>(wk->index.size());
  for (Eigen::Index a = 0; a < r; ++a)
    for (Eigen::Index b = 0; b < r; ++b) {
      long e = static_cast<long>(wk->index[a].block_count()) +
               static_cast<long>(wk->index[b].block_count()) - k;
      rhs += pow(Rational(n), e) * wk->entries(a, b);
    }
  return {lhs, rhs};
}

}  // namespace wgc
