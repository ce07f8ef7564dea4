#pragma once

#include "wgc/categories.hpp"
#include "wgc/linalg.hpp"
#include "wgc/partition.hpp"
#include "wgc/rational.hpp"

#include <memory>
#include <utility>
#include <vector>

namespace wgc {

// An exact matrix indexed by an ordered list of partitions.
struct PartitionMatrix {
  std::vector<Partition> index;
  MatrixQ entries;

  std::vector<std::string> index_strings() const;
};

// G(pi,sigma) = N^{|pi v sigma|} over D(word), canonical order.
PartitionMatrix gram_matrix(const CategoryId& cat, const ColoredWord& word, int N,
                            std::size_t max_points = kDefaultMaxPoints);

// W = G^{-1}, exact; memoized on (category, word, N, mode). In strict mode a
// singular Gram raises SingularGramError naming a dependent subset; in
// pseudo-inverse mode W inverts a maximal independent subfamily (zero-padded),
// which is all the integration formulas need.
std::shared_ptr<const PartitionMatrix> weingarten_matrix(
    const CategoryId& cat, const ColoredWord& word, int N,
    InverseMode mode = InverseMode::Strict, std::size_t max_points = kDefaultMaxPoints);

struct IntegralSpec {
  EasyGroupId group;
  int N = 0;
  ColoredWord word;
  MultiIndex row;     // i
  MultiIndex column;  // j
};

// int_G u_{i1 j1}^{e1} ... u_{ik jk}^{ek} via the Weingarten formula; the
// twisted group uses the twisted Kronecker symbols with the same Gram.
Rational integrate_group(const IntegralSpec& spec, InverseMode mode = InverseMode::Strict,
                         std::size_t max_points = kDefaultMaxPoints);

// int_S x_{i1}^{e1} ... x_{ik}^{ek}: the group integral with all row indices
// pinned to 1 (the first-row space; for O/U families this is the sphere).
Rational integrate_sphere(const EasyGroupId& group, int N, const ColoredWord& word,
                          const MultiIndex& i, InverseMode mode = InverseMode::Strict,
                          std::size_t max_points = kDefaultMaxPoints);

enum class TorusRelations { Free, Abelian, Order2Free, Order2Abelian };

// One letter g_i^e of a torus word: generator index and exponent color
// (white = g, black = g^{-1} / conjugate).
struct TorusLetter {
  int generator;
  Color exponent;
};

// 1 iff the word is trivial in F_N, Z^N, Z2^{*N} or Z2^N.
int integrate_torus(const std::vector<TorusLetter>& word, TorusRelations relations);

// int_G (u_11 + ... + u_ss)^k = Tr(W_kN G_ks).
Rational char_moment(const EasyGroupId& group, int N, const ColoredWord& word, int s,
                     InverseMode mode = InverseMode::Strict,
                     std::size_t max_points = kDefaultMaxPoints);

// lim_N of the truncated character moment: sum over D(word) of t^{|pi|}.
Rational char_moment_limit(const EasyGroupId& group, const Rational& t, const ColoredWord& word,
                           std::size_t max_points = kDefaultMaxPoints);

struct HomSpaceSpec {
  EasyGroupId group;
  int M = 0, N = 0, L = 0;
  ColoredWord word;
  MultiIndex row;     // i, entries in 1..M
  MultiIndex column;  // j, entries in 1..N
};

// Weingarten formula for the partial-isometry space G_MN^L.
Rational integrate_homspace(const HomSpaceSpec& spec, InverseMode mode = InverseMode::Strict,
                            std::size_t max_points = kDefaultMaxPoints);

// Moments of a sum of K non-overlapping coordinates on G_MN^L.
Rational chi_e_moment(const EasyGroupId& group, int M, int N, int L, int K, int s,
                      InverseMode mode = InverseMode::Strict,
                      std::size_t max_points = kDefaultMaxPoints);

// The Bercovici-Pata regime limit: sum over D(s) of (kappa*lambda/mu)^{|pi|}.
Rational bp_regime_limit(const EasyGroupId& group, const Rational& kappa, const Rational& lambda,
                         const Rational& mu, int s,
                         std::size_t max_points = kDefaultMaxPoints);

struct AffineSpaceSpec {
  EasyGroupId group;
  int N = 0;
  std::vector<int> index_set;  // I, subset of 1..N
  ColoredWord word;
  MultiIndex i;
};

// Exact value coeff * sqrt(base)^sqrt_power with sqrt_power in {0,1};
// collapses to a pure rational when the power is even or base is a square.
struct AffineValue {
  Rational coeff;
  long base = 1;
  int sqrt_power = 0;

  bool is_rational() const { return sqrt_power == 0; }
  double approx() const;
  std::string str() const;
};

// Haar integration over the affine homogeneous space X_{G,I}.
AffineValue integrate_affine(const AffineSpaceSpec& spec, InverseMode mode = InverseMode::Strict,
                             std::size_t max_points = kDefaultMaxPoints);

// Both sides of the free hypergeometric identity: int_{O_n^+} u_{11}^{2k}
// versus int_{S_{n^2}^+} X_{11}^k written over NC(k) with shrunk exponents.
std::pair<Rational, Rational> hypergeometric_equality(int n, int k,
                                                      InverseMode mode = InverseMode::Strict);

}  // namespace wgc
