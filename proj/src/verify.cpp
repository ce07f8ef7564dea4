#include "wgc/verify.hpp"

#include "wgc/categories.hpp"
#include "wgc/enumerate.hpp"
#include "wgc/laws.hpp"
#include "wgc/weingarten.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

namespace wgc {

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream details;

  void fail(const std::string& what) {
    pass = false;
    if (!details.str().empty()) details << "; ";
    details << what;
  }
  void note(const std::string& what) {
    if (!details.str().empty()) details << "; ";
    details << what;
  }
};

const EasyGroupId kO{Family::O, Liberation::Classical, false};
const EasyGroupId kOfree{Family::O, Liberation::Free, false};
const EasyGroupId kObar{Family::O, Liberation::Classical, true};
const EasyGroupId kH{Family::H, Liberation::Classical, false};
const EasyGroupId kHfree{Family::H, Liberation::Free, false};

// 1. Enumeration counts.
Outcome criterion_counts(const VerifyOptions&) {
  Outcome out;
  const long nc2[] = {1, 2, 5, 14, 42};
  const long p2[] = {1, 3, 15, 105, 945};
  for (int k = 1; k <= 5; ++k) {
    long a = static_cast<long>(
        enumerate_partitions(2 * k, PartitionFilter::NoncrossingPairings).size());
    long b = static_cast<long>(enumerate_partitions(2 * k, PartitionFilter::Pairings).size());
    if (a != nc2[k - 1]) out.fail("|NC2(" + std::to_string(2 * k) + ")| = " + std::to_string(a));
    if (b != p2[k - 1]) out.fail("|P2(" + std::to_string(2 * k) + ")| = " + std::to_string(b));
  }
  if (enumerate_partitions(4, PartitionFilter::All).size() != 15) out.fail("|P(4)| != 15");
  if (enumerate_partitions(4, PartitionFilter::Noncrossing).size() != 14) out.fail("|NC(4)| != 14");
  if (enumerate_partitions(6, PartitionFilter::Even).size() != 31) out.fail("|P_even(6)| != 31");
  if (enumerate_partitions(6, PartitionFilter::NoncrossingEven).size() != 12)
    out.fail("|NC_even(6)| != 12");
  if (out.pass) out.note("NC2/P2 ladders through 10 points plus the four fixed counts");
  return out;
}

// 2. Classical sphere moments: Weingarten = closed form = trig oracle.
Outcome criterion_classical_sphere(const VerifyOptions& opts) {
  Outcome out;
  int checked = 0;
  for (int N = 2; N <= 6 && out.pass; ++N) {
    for (long k = 2; k <= static_cast<long>(opts.max_k); k += 2) {
      std::vector<long> profile = {k};
      Rational closed = classical_sphere_moment(N, profile);
      Rational oracle = classical_sphere_moment_oracle(N, profile);
      Rational wg = integrate_sphere(kO, N, ColoredWord::plain(k),
                                     MultiIndex::constant(k, 1), opts.mode);
      if (closed != oracle || closed != wg) {
        out.fail("N=" + std::to_string(N) + " k=" + std::to_string(k) + ": closed=" +
                 closed.str() + " oracle=" + oracle.str() + " weingarten=" + wg.str());
        break;
      }
      ++checked;
    }
    Rational x4 = classical_sphere_moment(N, std::vector<long>{4});
    if (x4 != Rational(3) / Rational(static_cast<long>(N) * (N + 2)))
      out.fail("x1^4 != 3/(N(N+2)) at N=" + std::to_string(N));
  }
  if (out.pass) out.note(std::to_string(checked) + " (N,k) pairs agree across all three routes");
  return out;
}

// 3. Free sphere: x1^4 closed form and monotone rescaled moments.
Outcome criterion_free_sphere(const VerifyOptions& opts) {
  Outcome out;
  for (int N = 2; N <= 8; ++N) {
    Rational v = integrate_sphere(kOfree, N, ColoredWord::plain(4), MultiIndex::constant(4, 1),
                                  opts.mode);
    if (v != Rational(2) / Rational(static_cast<long>(N) * (N + 1)))
      out.fail("free x1^4 != 2/(N(N+1)) at N=" + std::to_string(N));
  }
  const long catalan[] = {1, 2, 5, 14};
  for (int k = 1; k <= 4 && out.pass; ++k) {
    Rational prev_gap(-1);
    for (int N = 2; N <= 8; ++N) {
      Rational v = integrate_sphere(kOfree, N, ColoredWord::plain(2 * k),
                                    MultiIndex::constant(2 * k, 1), opts.mode);
      Rational scaled = v * ipow(N, k);
      Rational gap = Rational(catalan[k - 1]) - scaled;
      if (gap.sign() < 0) out.fail("rescaled moment exceeds Catalan at k=" + std::to_string(k));
      if (prev_gap.sign() >= 0 && gap > prev_gap)
        out.fail("approach to Catalan not monotone at k=" + std::to_string(k) +
                 ", N=" + std::to_string(N));
      prev_gap = gap;
    }
  }
  if (out.pass) out.note("x1^4 exact for N=2..8; N^k moments rise to Catalan(k), k<=4");
  return out;
}

// 4. Free hyperspherical closed form vs Weingarten, with offset detection.
Outcome criterion_hyperspherical(const VerifyOptions& opts) {
  Outcome out;
  bool all_match = true, all_offset = true;
  std::vector<double> ratios;
  std::ostringstream table;
  for (int N = opts.hyper_n_lo; N <= opts.hyper_n_hi; ++N)
    for (int l = opts.hyper_l_lo; l <= opts.hyper_l_hi; ++l) {
      auto r = free_hyperspherical_moment(N, l, opts.mode);
      all_match = all_match && r.matches_printed;
      all_offset = all_offset && r.normalization_offset;
      ratios.push_back(r.ratio);
      table << " (N=" << N << ",l=" << l << ") ratio=" << r.ratio;
    }
  bool ratio_constant = true;
  for (double r : ratios)
    if (std::fabs(r - ratios.front()) > 1e-9) ratio_constant = false;
  if (all_match) {
    out.note("closed form matches the Weingarten value within 1e-9 everywhere");
  } else if (ratio_constant) {
    out.note("constant closed/exact ratio " + std::to_string(ratios.front()) + " reported");
  } else if (all_offset) {
    out.note(
        "systematic normalization offset detected: closed(as printed)/exact = "
        "((N+2)/(N+1))^l within 1e-9 at every (N,l), i.e. the closed form is exact "
        "with a 1/(N+2)^l prefactor;" +
        table.str());
  } else {
    out.fail("closed form and Weingarten value disagree without a systematic offset:" +
             table.str());
  }
  return out;
}

// 5. Truncated characters.
Outcome criterion_characters(const VerifyOptions& opts) {
  Outcome out;
  const int N = static_cast<int>(opts.max_k);  // invertible regime s = N
  for (std::size_t k = 1; k <= opts.max_k; ++k) {
    Rational co = char_moment(kO, N, ColoredWord::plain(k), N, opts.mode);
    Rational cf = char_moment(kOfree, N, ColoredWord::plain(k), N, opts.mode);
    long p2 = static_cast<long>(enumerate_partitions(k, PartitionFilter::Pairings).size());
    long nc2 =
        static_cast<long>(enumerate_partitions(k, PartitionFilter::NoncrossingPairings).size());
    if (co != Rational(p2)) out.fail("char O_N at k=" + std::to_string(k));
    if (cf != Rational(nc2)) out.fail("char O_N^+ at k=" + std::to_string(k));
  }
  const std::pair<EasyGroupId, LawTag> pairs[] = {
      {kO, LawTag::Gaussian},
      {kOfree, LawTag::Semicircle},
      {kH, LawTag::Bessel},
      {kHfree, LawTag::FreeBessel},
  };
  for (const Rational& t : {Rational(1), Rational(1, 2)}) {
    for (const auto& [group, tag] : pairs) {
      MomentSeq m = law_moments({tag, t}, opts.max_k);
      for (std::size_t k = 1; k <= opts.max_k; ++k) {
        Rational lim = char_moment_limit(group, t, ColoredWord::plain(k));
        if (lim != m.values[k])
          out.fail("char_moment_limit != law moment for " + law_name({tag, t}) +
                   " at k=" + std::to_string(k));
      }
    }
  }
  if (out.pass) out.note("trace identities at s=N and all four law matches at t=1, 1/2");
  return out;
}

// 6. Moment-cumulant round trip and Bercovici-Pata checks.
Outcome criterion_cumulants(const VerifyOptions&) {
  Outcome out;
  std::mt19937 rng(20240817u);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  for (int trial = 0; trial < 100 && out.pass; ++trial) {
    MomentSeq m;
    m.values.push_back(Rational(1));
    for (int k = 1; k <= 10; ++k) m.values.push_back(Rational(num(rng), den(rng)));
    for (CumulantKind kind : {CumulantKind::Classical, CumulantKind::Free}) {
      MomentSeq back = cumulants_to_moments(moments_to_cumulants(m, kind));
      if (back.values != m.values) out.fail("round trip failed at trial " + std::to_string(trial));
    }
  }
  for (const Rational& t : {Rational(1), Rational(1, 2), Rational(3, 2)}) {
    if (!bp_check({LawTag::Gaussian, t}, {LawTag::Semicircle, t}, 8).ok)
      out.fail("bp gaussian/semicircle at t=" + t.str());
    if (!bp_check({LawTag::Poisson, t}, {LawTag::FreePoisson, t}, 8).ok)
      out.fail("bp poisson/free-poisson at t=" + t.str());
    if (!bp_check({LawTag::Bessel, t}, {LawTag::FreeBessel, t}, 8).ok)
      out.fail("bp bessel/free-bessel at t=" + t.str());
  }
  if (out.pass) out.note("100 random round trips to order 10; three BP pairs to order 8");
  return out;
}

// 7. Twisting: signature well-definedness, identical Gram, twisted moments.
Outcome criterion_twisting(const VerifyOptions& opts) {
  Outcome out;
  // Signature = crossing parity on pairings, and the two signature routes
  // agree on all of P_even up to 8 points.
  for (std::size_t n = 2; n <= 8 && out.pass; n += 2) {
    for (const auto& p : enumerate_partitions(n, PartitionFilter::Even)) {
      if (p.signature() != p.signature_by_switch_count()) {
        out.fail("signature routes disagree on " + p.str());
        break;
      }
      if (p.is_pairing() && p.signature() != (p.crossing_count() % 2 == 0 ? 1 : -1)) {
        out.fail("signature != crossing parity on " + p.str());
        break;
      }
    }
  }
  // Twisted Gram equals the plain Gram: brute-force inner products of the
  // twisted vectors over all indices.
  for (int N = 2; N <= 3 && out.pass; ++N) {
    for (std::size_t k : {2u, 4u}) {
      auto d = enumerate_partitions(k, PartitionFilter::Even);
      for (const auto& a : d)
        for (const auto& b : d) {
          long plain = 0;
          for_each_index(N, k, [&](const MultiIndex& i) {
            plain += twisted_delta(a, i) * twisted_delta(b, i);
          });
          Rational expect = ipow(N, block_count_join(a, b));
          if (Rational(plain) != expect) {
            out.fail("twisted Gram entry differs at (" + a.str() + ", " + b.str() + ")");
          }
        }
    }
  }
  // Diagonal moments of the twisted group match the plain ones.
  for (int N = 2; N <= 6 && out.pass; ++N) {
    for (long k = 1; k <= 4; ++k) {
      IntegralSpec plain{kO, N, ColoredWord::plain(2 * k), MultiIndex::constant(2 * k, 1),
                         MultiIndex::constant(2 * k, 1)};
      IntegralSpec tw = plain;
      tw.group = kObar;
      if (integrate_group(plain, opts.mode) != integrate_group(tw, opts.mode))
        out.fail("twisted diagonal moment differs at N=" + std::to_string(N) +
                 ", 2k=" + std::to_string(2 * k));
    }
  }
  if (out.pass)
    out.note("signature exhaustive through P_even(8); Gram unchanged; diagonal moments equal");
  return out;
}

// 8. Fattening identity and the hypergeometric equality.
Outcome criterion_hypergeometric(const VerifyOptions& opts) {
  Outcome out;
  for (int k = 1; k <= 6 && out.pass; ++k) {
    auto nc2 = enumerate_partitions(2 * k, PartitionFilter::NoncrossingPairings);
    for (const auto& a : nc2) {
      for (const auto& b : nc2) {
        Partition sa = shrink(a), sb = shrink(b);
        int lhs = block_count_join(a, b);
        int rhs = k + 2 * block_count_join(sa, sb) - static_cast<int>(sa.block_count()) -
                  static_cast<int>(sb.block_count());
        if (lhs != rhs) {
          out.fail("fattening identity fails at k=" + std::to_string(k));
          break;
        }
      }
      if (!out.pass) break;
    }
  }
  for (int n = 2; n <= 4 && out.pass; ++n)
    for (int k = 1; k <= 5; ++k) {
      auto [lhs, rhs] = hypergeometric_equality(n, k, opts.mode);
      if (lhs != rhs)
        out.fail("hypergeometric sides differ at n=" + std::to_string(n) +
                 ", k=" + std::to_string(k) + ": " + lhs.str() + " vs " + rhs.str());
    }
  if (out.pass) out.note("join identity over NC2(2k)^2, k<=6; equal sides for n=2..4, k<=5");
  return out;
}

// 9. Homogeneous space reductions and the BP regime.
Outcome criterion_homspaces(const VerifyOptions& opts) {
  Outcome out;
  const int N = 3;
  for (std::size_t k : {2u, 4u}) {
    bool ok = true;
    for_each_index(N, k, [&](const MultiIndex& i) {
      if (!ok) return;
      for_each_index(N, k, [&](const MultiIndex& j) {
        if (!ok) return;
        HomSpaceSpec hs{kO, N, N, N, ColoredWord::plain(k), i, j};
        IntegralSpec g{kO, N, ColoredWord::plain(k), i, j};
        if (integrate_homspace(hs, opts.mode) != integrate_group(g, opts.mode)) ok = false;
      });
    });
    if (!ok) out.fail("L=M=N reduction fails at word length " + std::to_string(k));
  }
  for (std::size_t k : {2u, 4u}) {
    bool ok = true;
    for_each_index(N, k, [&](const MultiIndex& j) {
      if (!ok) return;
      HomSpaceSpec hs{kO, 1, N, 1, ColoredWord::plain(k), MultiIndex::constant(k, 1), j};
      if (integrate_homspace(hs, opts.mode) !=
          integrate_sphere(kO, N, ColoredWord::plain(k), j, opts.mode))
        ok = false;
    });
    if (!ok) out.fail("L=M=1 sphere reduction fails at word length " + std::to_string(k));
  }
  if (bp_regime_limit(kO, Rational(1), Rational(1), Rational(1), 4) != Rational(3))
    out.fail("bp_regime_limit(O) != 3");
  if (bp_regime_limit(kOfree, Rational(1), Rational(1), Rational(1), 4) != Rational(2))
    out.fail("bp_regime_limit(O+) != 2");
  // At K=L=M=N the chi_E moment telescopes to Tr(WG) = |D(4)|: it sits at the
  // regime limit exactly, so the monotone approach is the weak one.
  for (const auto& [group, target] :
       {std::pair<EasyGroupId, Rational>{kO, Rational(3)}, {kOfree, Rational(2)}}) {
    Rational prev_gap(-1);
    for (int n : {4, 6, 8}) {
      Rational v = chi_e_moment(group, n, n, n, n, 4, opts.mode);
      Rational gap = abs(target - v);
      if (prev_gap.sign() >= 0 && gap > prev_gap)
        out.fail("chi_E moment not approaching " + target.str() + " monotonically");
      prev_gap = gap;
    }
    if (prev_gap != Rational(0))
      out.fail("chi_E moment at K=L=M=N should equal " + target.str() + " exactly");
  }
  if (out.pass)
    out.note("group/sphere reductions on words <= 4; chi_E sits at the BP limits 3 and 2 exactly");
  return out;
}

// 10. Affine spaces: I={1} degenerates to the pinned-row (sphere) integral.
Outcome criterion_affine(const VerifyOptions& opts) {
  Outcome out;
  const std::vector<EasyGroupId> families = {
      {Family::O, Liberation::Classical}, {Family::O, Liberation::Half},
      {Family::O, Liberation::Free},      {Family::U, Liberation::Classical},
      {Family::U, Liberation::Half},      {Family::U, Liberation::Free},
      {Family::H, Liberation::Classical}, {Family::H, Liberation::Half},
      {Family::H, Liberation::Free},      {Family::K, Liberation::Classical},
      {Family::K, Liberation::Half},      {Family::K, Liberation::Free},
      {Family::S, Liberation::Classical}, {Family::S, Liberation::Free},
      {Family::B, Liberation::Classical}, {Family::B, Liberation::Free},
  };
  long checked = 0;
  for (const auto& g : families) {
    for (int N : {3, 5}) {
      for (std::size_t k = 1; k <= 4 && out.pass; ++k) {
        std::vector<ColoredWord> words = {ColoredWord::plain(k)};
        if (k >= 2) words.push_back(ColoredWord::alternating(k));
        for (const auto& word : words) {
          for_each_index(N, k, [&](const MultiIndex& i) {
            if (!out.pass) return;
            AffineSpaceSpec spec{g, N, {1}, word, i};
            AffineValue av = integrate_affine(spec, opts.mode);
            Rational sphere = integrate_sphere(g, N, word, i, opts.mode);
            if (!av.is_rational() || av.coeff != sphere)
              out.fail("affine I={1} != sphere for " + group_name(g) + " N=" + std::to_string(N) +
                       " i=" + i.str());
            ++checked;
          });
        }
      }
    }
  }
  if (out.pass)
    out.note(std::to_string(checked) + " index tuples across all 16 easy families match");
  return out;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome(const VerifyOptions&)> run;
};

const std::vector<Criterion>& catalog() {
  static const std::vector<Criterion> cs = {
      {1, "enumeration counts", criterion_counts},
      {2, "classical sphere moments", criterion_classical_sphere},
      {3, "free sphere moments", criterion_free_sphere},
      {4, "free hyperspherical closed form", criterion_hyperspherical},
      {5, "truncated characters", criterion_characters},
      {6, "moment-cumulant and Bercovici-Pata", criterion_cumulants},
      {7, "twisting", criterion_twisting},
      {8, "fattening and hypergeometric equality", criterion_hypergeometric},
      {9, "homogeneous spaces", criterion_homspaces},
      {10, "affine spaces", criterion_affine},
  };
  return cs;
}

}  // namespace

std::vector<int> suite_criteria(std::string_view suite) {
  if (suite == "core") return {1, 2, 3, 5};
  if (suite == "laws") return {6};
  if (suite == "twist") return {7};
  if (suite == "hyperspherical") return {4};
  if (suite == "hypergeom") return {8};
  if (suite == "spaces") return {9, 10};
  if (suite == "all" || suite.empty()) return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
}

std::vector<CheckResult> run_acceptance(const VerifyOptions& opts,
                                        const std::vector<int>& criteria) {
  std::vector<int> which = criteria.empty() ? suite_criteria("all") : criteria;
  std::vector<CheckResult> results;
  for (const auto& c : catalog()) {
    if (std::find(which.begin(), which.end(), c.id) == which.end()) continue;
    CheckResult r;
    r.id = c.id;
    r.name = c.name;
    auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = c.run(opts);
      r.pass = o.pass;
      r.details = o.details.str();
    } catch (const std::exception& e) {
      r.pass = false;
      r.details = std::string("exception: ") + e.what();
    }
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                   .count();
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace wgc
