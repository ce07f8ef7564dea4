#include "wgc/weingarten.hpp"

#include "wgc/laws.hpp"

#include <doctest.h>

#include <thread>

using namespace wgc;

namespace {

const EasyGroupId kO{Family::O, Liberation::Classical, false};
const EasyGroupId kOhalf{Family::O, Liberation::Half, false};
const EasyGroupId kOfree{Family::O, Liberation::Free, false};
const EasyGroupId kObar{Family::O, Liberation::Classical, true};
const EasyGroupId kU{Family::U, Liberation::Classical, false};
const EasyGroupId kSfree{Family::S, Liberation::Free, false};
const EasyGroupId kH{Family::H, Liberation::Classical, false};
const EasyGroupId kHfree{Family::H, Liberation::Free, false};

MatrixQ identity(Eigen::Index n) {
  MatrixQ m = MatrixQ::Constant(n, n, Rational(0));
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

}  // namespace

TEST_CASE("gram matrices") {
  PartitionMatrix g2 = gram_matrix({CategoryTag::P2}, ColoredWord::plain(2), 7);
  REQUIRE(g2.index.size() == 1);
  CHECK(g2.entries(0, 0) == Rational(7));

  PartitionMatrix g4 = gram_matrix({CategoryTag::P2}, ColoredWord::plain(4), 5);
  REQUIRE(g4.index.size() == 3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      CHECK(g4.entries(a, b) == (a == b ? Rational(25) : Rational(5)));

  // S-family ground set on 2 points: singletons and the one-block partition
  PartitionMatrix gs = gram_matrix({CategoryTag::NC}, ColoredWord::plain(2), 4);
  REQUIRE(gs.index.size() == 2);
  CHECK(gs.index[0].str() == "12");
  CHECK(gs.index[1].str() == "1|2");
  CHECK(gs.entries(0, 0) == Rational(4));
  CHECK(gs.entries(0, 1) == Rational(4));
  CHECK(gs.entries(1, 1) == Rational(16));
}

TEST_CASE("weingarten matrices") {
  auto w2 = weingarten_matrix({CategoryTag::P2}, ColoredWord::plain(2), 6);
  CHECK(w2->entries(0, 0) == Rational(1, 6));

  for (int N : {2, 3, 5}) {
    auto w = weingarten_matrix({CategoryTag::NC2}, ColoredWord::plain(4), N);
    Rational d = Rational(1) / Rational(static_cast<long>(N) * N * (N * N - 1));
    CHECK(w->entries(0, 0) == Rational(static_cast<long>(N) * N) * d);
    CHECK(w->entries(0, 1) == Rational(-N) * d);
  }
}

TEST_CASE("W G = identity across categories and dimensions") {
  const CategoryId cats[] = {{CategoryTag::P2},    {CategoryTag::NC2},   {CategoryTag::P2Star},
                             {CategoryTag::Peven}, {CategoryTag::NCeven}, {CategoryTag::NC},
                             {CategoryTag::P},     {CategoryTag::P12},    {CategoryTag::NC12}};
  for (const auto& cat : cats) {
    for (std::size_t k = 0; k <= 8; ++k) {
      // cap the exact-inversion size so the suite stays fast
      auto d = enumerate_category(cat, ColoredWord::plain(k));
      if (d.size() > 110 || d.empty()) continue;
      for (int N : {4, 8}) {
        PartitionMatrix g = gram_matrix(cat, ColoredWord::plain(k), N);
        try {
          auto w = weingarten_matrix(cat, ColoredWord::plain(k), N);
          CHECK(w->entries * g.entries == identity(static_cast<Eigen::Index>(d.size())));
        } catch (const SingularGramError&) {
          // small-N dependency (k > N for the big categories): the
          // pseudo-inverse must still satisfy the generalized-inverse laws
          auto w = weingarten_matrix(cat, ColoredWord::plain(k), N,
                                     InverseMode::PseudoInverse);
          CHECK(g.entries * w->entries * g.entries == g.entries);
          CHECK(w->entries * g.entries * w->entries == w->entries);
        }
      }
    }
  }
}

TEST_CASE("pseudo-inverse mode handles the singular small-N Grams") {
  // P2(6) at N=2 is rank deficient
  CHECK_THROWS_AS(weingarten_matrix({CategoryTag::P2}, ColoredWord::plain(6), 2), SingularGramError);
  try {
    weingarten_matrix({CategoryTag::P2}, ColoredWord::plain(6), 2);
  } catch (const SingularGramError& e) {
    CHECK(std::string(e.what()).find("depends linearly") != std::string::npos);
  }
  auto w = weingarten_matrix({CategoryTag::P2}, ColoredWord::plain(6), 2,
                             InverseMode::PseudoInverse);
  PartitionMatrix g = gram_matrix({CategoryTag::P2}, ColoredWord::plain(6), 2);
  CHECK(g.entries * w->entries * g.entries == g.entries);
  CHECK(w->entries * g.entries * w->entries == w->entries);
}

TEST_CASE("group integrals") {
  for (int N = 2; N <= 8; ++N) {
    IntegralSpec spec{kO, N, ColoredWord::plain(2), MultiIndex{1, 1}, MultiIndex{1, 1}};
    CHECK(integrate_group(spec) == Rational(1, N));
  }
  for (int N = 2; N <= 6; ++N) {
    IntegralSpec spec{kO, N, ColoredWord::plain(4), MultiIndex{1, 1, 1, 1},
                      MultiIndex{1, 1, 1, 1}};
    CHECK(integrate_group(spec, InverseMode::PseudoInverse) ==
          Rational(3) / Rational(static_cast<long>(N) * (N + 2)));
    IntegralSpec fr = spec;
    fr.group = kOfree;
    CHECK(integrate_group(fr) == Rational(2) / Rational(static_cast<long>(N) * (N + 1)));
  }
}

TEST_CASE("row sums of uu^t are one") {
  for (int N = 2; N <= 5; ++N) {
    for (const EasyGroupId& g : {kO, kOfree, kU}) {
      Rational total(0);
      ColoredWord word = g.family == Family::U ? ColoredWord::parse("ow") : ColoredWord::plain(2);
      for (int j = 1; j <= N; ++j) {
        IntegralSpec spec{g, N, word, MultiIndex{1, 1}, MultiIndex{j, j}};
        total += integrate_group(spec);
      }
      CHECK(total == Rational(1));
    }
  }
}

TEST_CASE("sphere integrals match the group route and closed forms") {
  for (int N = 2; N <= 6; ++N) {
    CHECK(integrate_sphere(kO, N, ColoredWord::plain(2), MultiIndex{1, 1}) == Rational(1, N));
    CHECK(integrate_sphere(kO, N, ColoredWord::plain(4), MultiIndex{1, 1, 1, 1},
                           InverseMode::PseudoInverse) ==
          Rational(3) / Rational(static_cast<long>(N) * (N + 2)));
    CHECK(integrate_sphere(kOfree, N, ColoredWord::plain(4), MultiIndex{1, 1, 1, 1}) ==
          Rational(2) / Rational(static_cast<long>(N) * (N + 1)));
  }
  // mixed indices equal the group integral with pinned rows
  for (int N = 2; N <= 4; ++N) {
    for_each_index(N, 4, [&](const MultiIndex& i) {
      IntegralSpec spec{kO, N, ColoredWord::plain(4), MultiIndex{1, 1, 1, 1}, i};
      CHECK(integrate_sphere(kO, N, ColoredWord::plain(4), i, InverseMode::PseudoInverse) ==
            integrate_group(spec, InverseMode::PseudoInverse));
    });
  }
}

TEST_CASE("torus integrals") {
  using TL = TorusLetter;
  std::vector<TL> cancel = {{1, Color::White}, {1, Color::Black}};
  for (TorusRelations r : {TorusRelations::Free, TorusRelations::Abelian,
                           TorusRelations::Order2Free, TorusRelations::Order2Abelian})
    CHECK(integrate_torus(cancel, r) == 1);

  std::vector<TL> g1212 = {{1, Color::White}, {2, Color::White}, {1, Color::White},
                           {2, Color::White}};
  CHECK(integrate_torus(g1212, TorusRelations::Order2Abelian) == 1);
  CHECK(integrate_torus(g1212, TorusRelations::Order2Free) == 0);

  std::vector<TL> comm = {{1, Color::White}, {2, Color::White}, {1, Color::Black},
                          {2, Color::Black}};
  CHECK(integrate_torus(comm, TorusRelations::Abelian) == 1);
  CHECK(integrate_torus(comm, TorusRelations::Free) == 0);
}

TEST_CASE("character moments") {
  // k = 2: Tr([1/N][s]) = s/N
  for (int N = 2; N <= 6; ++N)
    for (int s = 1; s <= N; ++s)
      CHECK(char_moment(kO, N, ColoredWord::plain(2), s) == Rational(s, N));
  // s = N: the trace of the identity counts the ground set
  CHECK(char_moment(kO, 4, ColoredWord::plain(4), 4) == Rational(3));
  CHECK(char_moment(kOfree, 4, ColoredWord::plain(4), 4) == Rational(2));
  // twisted characters coincide with the plain ones
  CHECK(char_moment(kObar, 4, ColoredWord::plain(4), 3) ==
        char_moment(kO, 4, ColoredWord::plain(4), 3));
}

TEST_CASE("character moment limits") {
  CHECK(char_moment_limit(kO, Rational(1), ColoredWord::plain(4)) == Rational(3));
  CHECK(char_moment_limit(kO, Rational(1), ColoredWord::plain(6)) == Rational(15));
  const long catalan[] = {1, 2, 5, 14};
  for (int k = 1; k <= 4; ++k)
    CHECK(char_moment_limit(kOfree, Rational(1), ColoredWord::plain(2 * k)) ==
          Rational(catalan[k - 1]));
  CHECK(char_moment_limit(kH, Rational(1), ColoredWord::plain(4)) == Rational(4));
  CHECK(char_moment_limit(kHfree, Rational(1), ColoredWord::plain(4)) == Rational(3));
  // t-weighted: gaussian moments of parameter t
  CHECK(char_moment_limit(kO, Rational(1, 2), ColoredWord::plain(4)) == Rational(3, 4));
}

TEST_CASE("twisted integrals: sign shows off the diagonal, not on it") {
  // int over O_2 of u11 u12 u21 u22 = -1/8; the twist flips the sign
  IntegralSpec spec{kO, 2, ColoredWord::plain(4), MultiIndex{1, 1, 2, 2}, MultiIndex{1, 2, 1, 2}};
  CHECK(integrate_group(spec) == Rational(-1, 8));
  IntegralSpec tw = spec;
  tw.group = kObar;
  CHECK(integrate_group(tw) == Rational(1, 8));
  // twisted anticommutation: swapping two distinct entries in a row flips sign
  IntegralSpec swapped = tw;
  std::swap(swapped.row.entries[0], swapped.row.entries[1]);
  std::swap(swapped.column.entries[0], swapped.column.entries[1]);
  CHECK(integrate_group(swapped) == -integrate_group(tw));
  // diagonal powers agree with the untwisted group
  for (int N = 2; N <= 6; ++N)
    for (long k = 1; k <= 4; ++k) {
      IntegralSpec a{kO, N, ColoredWord::plain(2 * k), MultiIndex::constant(2 * k, 1),
                     MultiIndex::constant(2 * k, 1)};
      IntegralSpec b = a;
      b.group = kObar;
      CHECK(integrate_group(a, InverseMode::PseudoInverse) ==
            integrate_group(b, InverseMode::PseudoInverse));
    }
}

TEST_CASE("half-classical sphere moments via the Weingarten route") {
  for (int N = 2; N <= 5; ++N) {
    CHECK(integrate_sphere(kOhalf, N, ColoredWord::plain(2), MultiIndex{1, 1}) == Rational(1, N));
    CHECK(integrate_sphere(kOhalf, N, ColoredWord::plain(4), MultiIndex{1, 1, 1, 1},
                           InverseMode::PseudoInverse) ==
          Rational(2) / Rational(static_cast<long>(N) * (N + 1)));
    // x1 x1 x2 x2 has each index once at odd and once at even position
    CHECK(integrate_sphere(kOhalf, N, ColoredWord::plain(4), MultiIndex{1, 1, 2, 2},
                           InverseMode::PseudoInverse) ==
          Rational(1) / Rational(static_cast<long>(N) * (N + 1)));
  }
}

TEST_CASE("known values across the other families") {
  const EasyGroupId kS{Family::S, Liberation::Classical, false};
  const EasyGroupId kB{Family::B, Liberation::Classical, false};
  const EasyGroupId kK{Family::K, Liberation::Classical, false};
  for (int N = 2; N <= 6; ++N) {
    // U_N: int |u11|^2 = 1/N, int |u11|^4 = 2/(N(N+1))
    IntegralSpec u2{kU, N, ColoredWord::parse("ow"), MultiIndex{1, 1}, MultiIndex{1, 1}};
    CHECK(integrate_group(u2) == Rational(1, N));
    IntegralSpec u4{kU, N, ColoredWord::parse("owow"), MultiIndex{1, 1, 1, 1},
                    MultiIndex{1, 1, 1, 1}};
    CHECK(integrate_group(u4, InverseMode::PseudoInverse) ==
          Rational(2) / Rational(static_cast<long>(N) * (N + 1)));
    // H_N: u11 = +-1 exactly when the underlying permutation fixes 1
    IntegralSpec h4{kH, N, ColoredWord::plain(4), MultiIndex{1, 1, 1, 1},
                    MultiIndex{1, 1, 1, 1}};
    CHECK(integrate_group(h4, InverseMode::PseudoInverse) == Rational(1, N));
    // S_N: u11 is a projection of trace 1/N
    IntegralSpec s1{kS, N, ColoredWord::plain(1), MultiIndex{1}, MultiIndex{1}};
    CHECK(integrate_group(s1) == Rational(1, N));
    IntegralSpec s2{kS, N, ColoredWord::plain(2), MultiIndex{1, 1}, MultiIndex{1, 1}};
    CHECK(integrate_group(s2, InverseMode::PseudoInverse) == Rational(1, N));
    // B_N: rows sum to one
    IntegralSpec b1{kB, N, ColoredWord::plain(1), MultiIndex{1}, MultiIndex{1}};
    CHECK(integrate_group(b1) == Rational(1, N));
    // K_N agrees with H_N on the real-looking word oww...o pattern of |u11|^2
    IntegralSpec k2{kK, N, ColoredWord::parse("ow"), MultiIndex{1, 1}, MultiIndex{1, 1}};
    CHECK(integrate_group(k2) == Rational(1, N));
  }
}

TEST_CASE("weingarten cache is safe under concurrent use") {
  std::vector<std::thread> threads;
  std::vector<Rational> results(4);
  for (int t = 0; t < 4; ++t)
    threads.emplace_back([&, t] {
      IntegralSpec spec{kOfree, 5, ColoredWord::plain(6), MultiIndex::constant(6, 1),
                        MultiIndex::constant(6, 1)};
      results[t] = integrate_group(spec);
    });
  for (auto& th : threads) th.join();
  for (int t = 1; t < 4; ++t) CHECK(results[t] == results[0]);
}

TEST_CASE("empty ground set yields zero") {
  // odd-length words have no pairings
  IntegralSpec spec{kO, 3, ColoredWord::plain(3), MultiIndex{1, 1, 1}, MultiIndex{1, 1, 1}};
  CHECK(integrate_group(spec) == Rational(0));
  // the empty word integrates to one
  IntegralSpec empty{kO, 3, ColoredWord{}, MultiIndex{}, MultiIndex{}};
  CHECK(integrate_group(empty) == Rational(1));
}
