#include "wgc/laws.hpp"

#include "wgc/categories.hpp"
#include "wgc/enumerate.hpp"
#include "wgc/weingarten.hpp"

#include <algorithm>
#include <stdexcept>

namespace wgc {

namespace {

PartitionFilter real_law_filter(LawTag tag) {
  switch (tag) {
    case LawTag::Gaussian: return PartitionFilter::Pairings;
    case LawTag::Semicircle: return PartitionFilter::NoncrossingPairings;
    case LawTag::Poisson: return PartitionFilter::All;
    case LawTag::FreePoisson: return PartitionFilter::Noncrossing;
    case LawTag::Bessel: return PartitionFilter::Even;
    case LawTag::FreeBessel: return PartitionFilter::NoncrossingEven;
    default:
      throw std::invalid_argument("law " + law_name({tag}) + " has colored-word moments");
  }
}

CategoryId complex_law_category(LawTag tag) {
  switch (tag) {
    case LawTag::ComplexGaussian: return {CategoryTag::P2Colored};
    case LawTag::Circular: return {CategoryTag::NC2Colored};
    case LawTag::ComplexBessel: return {CategoryTag::PevenColored};
    case LawTag::ComplexFreeBessel: return {CategoryTag::NCevenColored};
    default:
      throw std::invalid_argument("law " + law_name({tag}) + " is not complex");
  }
}

mpz_class binom(unsigned long n, unsigned long k) {
  mpz_class z;
  mpz_bin_uiui(z.get_mpz_t(), n, k);
  return z;
}

mpz_class factorial(unsigned long n) {
  mpz_class z;
  mpz_fac_ui(z.get_mpz_t(), n);
  return z;
}

}  // namespace

bool LawId::is_complex() const {
  switch (tag) {
    case LawTag::ComplexGaussian:
    case LawTag::Circular:
    case LawTag::ComplexBessel:
    case LawTag::ComplexFreeBessel:
      return true;
    default:
      return false;
  }
}

LawId parse_law(std::string_view name) {
  std::string_view base = name;
  Rational t(1);
  if (auto pos = name.find(':'); pos != std::string_view::npos) {
    base = name.substr(0, pos);
    std::string_view param = name.substr(pos + 1);
    if (param.rfind("t=", 0) != 0)
      throw std::invalid_argument("law parameter must look like t=1/2");
    t = Rational::parse(param.substr(2));
    if (t.sign() <= 0) throw std::invalid_argument("law parameter t must be positive");
  }
  LawTag tag;
  if (base == "gaussian") tag = LawTag::Gaussian;
  else if (base == "semicircle") tag = LawTag::Semicircle;
  else if (base == "complex-gaussian") tag = LawTag::ComplexGaussian;
  else if (base == "circular") tag = LawTag::Circular;
  else if (base == "poisson") tag = LawTag::Poisson;
  else if (base == "free-poisson") tag = LawTag::FreePoisson;
  else if (base == "bessel") tag = LawTag::Bessel;
  else if (base == "free-bessel") tag = LawTag::FreeBessel;
  else if (base == "complex-bessel") tag = LawTag::ComplexBessel;
  else if (base == "complex-free-bessel") tag = LawTag::ComplexFreeBessel;
  else throw std::invalid_argument("unknown law '" + std::string(name) + "'");
  return {tag, t};
}

std::string law_name(const LawId& law) {
  std::string base;
  switch (law.tag) {
    case LawTag::Gaussian: base = "gaussian"; break;
    case LawTag::Semicircle: base = "semicircle"; break;
    case LawTag::ComplexGaussian: base = "complex-gaussian"; break;
    case LawTag::Circular: base = "circular"; break;
    case LawTag::Poisson: base = "poisson"; break;
    case LawTag::FreePoisson: base = "free-poisson"; break;
    case LawTag::Bessel: base = "bessel"; break;
    case LawTag::FreeBessel: base = "free-bessel"; break;
    case LawTag::ComplexBessel: base = "complex-bessel"; break;
    case LawTag::ComplexFreeBessel: base = "complex-free-bessel"; break;
  }
  return base + ":t=" + law.t.str();
}

MomentSeq law_moments(const LawId& law, std::size_t up_to) {
  PartitionFilter filter = real_law_filter(law.tag);
  MomentSeq seq;
  seq.label = law_name(law);
  seq.values.resize(up_to + 1, Rational(0));
  seq.values[0] = Rational(1);
  for (std::size_t k = 1; k <= up_to; ++k) {
    Rational total(0);
    for (const auto& p : enumerate_partitions(k, filter))
      total += pow(law.t, static_cast<long>(p.block_count()));
    seq.values[k] = total;
  }
  return seq;
}

Rational law_moment_word(const LawId& law, const ColoredWord& word) {
  CategoryId cat = complex_law_category(law.tag);
  Rational total(0);
  for (const auto& p : enumerate_category(cat, word, std::max<std::size_t>(word.size(), 1)))
    total += pow(law.t, static_cast<long>(p.block_count()));
  return total;
}

MomentSeq law_moments_real_part(const LawId& law, std::size_t up_to) {
  if (!law.is_complex()) return law_moments(law, up_to);
  MomentSeq seq;
  seq.label = law_name(law) + " (real part)";
  seq.values.resize(up_to + 1, Rational(0));
  seq.values[0] = Rational(1);
  for (std::size_t k = 1; k <= up_to; ++k) {
    Rational total(0);
    std::vector<Color> w(k, Color::White);
    // walk all 2^k colorings
    while (true) {
      total += law_moment_word(law, ColoredWord(w));
      std::size_t p = 0;
      while (p < k && w[p] == Color::Black) w[p++] = Color::White;
      if (p == k) break;
      w[p] = Color::Black;
    }
    seq.values[k] = total / ipow(2, static_cast<long>(k));
  }
  return seq;
}

CumulantSeq moments_to_cumulants(const MomentSeq& m, CumulantKind kind) {
  if (m.values.empty() || m.values[0] != Rational(1))
    throw std::invalid_argument("moments_to_cumulants: M_0 must be 1");
  const std::size_t n = m.order();
  CumulantSeq c;
  c.kind = kind;
  c.values.resize(n + 1, Rational(0));
  if (kind == CumulantKind::Classical) {
    // k_n = m_n - sum_{j<n} C(n-1, j-1) k_j m_{n-j}
    for (std::size_t nn = 1; nn <= n; ++nn) {
      Rational acc = m.values[nn];
      for (std::size_t j = 1; j < nn; ++j)
        acc -= Rational(binom(nn - 1, j - 1)) * c.values[j] * m.values[nn - j];
      c.values[nn] = acc;
    }
  } else {
    // m_n = sum_s kappa_s P_s(n-s), P_s = s-fold convolution of (m_t).
    // P[s][t], with m_0 = 1.
    std::vector<std::vector<Rational>> conv(n + 1, std::vector<Rational>(n + 1, Rational(0)));
    for (std::size_t t = 0; t <= n; ++t) conv[1][t] = m.values[t];
    for (std::size_t s = 2; s <= n; ++s)
      for (std::size_t t = 0; t <= n; ++t)
        for (std::size_t u = 0; u <= t; ++u) conv[s][t] += conv[s - 1][u] * m.values[t - u];
    for (std::size_t nn = 1; nn <= n; ++nn) {
      Rational acc = m.values[nn];
      for (std::size_t s = 1; s < nn; ++s) acc -= c.values[s] * conv[s][nn - s];
      c.values[nn] = acc;  // P_n(0) = 1
    }
  }
  return c;
}

MomentSeq cumulants_to_moments(const CumulantSeq& c) {
  const std::size_t n = c.order();
  MomentSeq m;
  m.values.resize(n + 1, Rational(0));
  m.values[0] = Rational(1);
  if (c.kind == CumulantKind::Classical) {
    for (std::size_t nn = 1; nn <= n; ++nn) {
      Rational acc(0);
      for (std::size_t j = 1; j <= nn; ++j)
        acc += Rational(binom(nn - 1, j - 1)) * c.values[j] * m.values[nn - j];
      m.values[nn] = acc;
    }
  } else {
    // m_n = sum_s kappa_s P_s(n-s) with P built from the moments known so far
    // (P_s(t) only uses m_0..m_t with t <= n-1 at step n).
    std::vector<std::vector<Rational>> conv(n + 1, std::vector<Rational>(n + 1, Rational(0)));
    auto refresh = [&](std::size_t upto) {
      for (std::size_t t = 0; t <= upto; ++t) conv[1][t] = m.values[t];
      for (std::size_t s = 2; s <= n; ++s)
        for (std::size_t t = 0; t <= upto; ++t) {
          conv[s][t] = Rational(0);
          for (std::size_t u = 0; u <= t; ++u) conv[s][t] += conv[s - 1][u] * m.values[t - u];
        }
    };
    for (std::size_t nn = 1; nn <= n; ++nn) {
      refresh(nn - 1);
      Rational acc(0);
      for (std::size_t s = 1; s <= nn; ++s) acc += c.values[s] * conv[s][nn - s];
      m.values[nn] = acc;
    }
  }
  return m;
}

BpReport bp_check(const LawId& classical, const LawId& free, std::size_t up_to) {
  MomentSeq mc = law_moments_real_part(classical, up_to);
  MomentSeq mf = law_moments_real_part(free, up_to);
  CumulantSeq kc = moments_to_cumulants(mc, CumulantKind::Classical);
  CumulantSeq kf = moments_to_cumulants(mf, CumulantKind::Free);
  BpReport report;
  for (std::size_t nn = 1; nn <= up_to; ++nn) {
    if (kc.values[nn] != kf.values[nn]) {
      report.ok = false;
      report.first_discrepancy = nn;
      report.classical_value = kc.values[nn];
      report.free_value = kf.values[nn];
      return report;
    }
  }
  return report;
}

Rational dfac_paper(long m) {
  mpz_class z(1);
  for (long i = m - 1; i >= 1; i -= 2) z *= i;
  return Rational(z);
}

TrigIntegral trig_integral(long p, long q) {
  if (p < 0 || q < 0) throw std::invalid_argument("trig_integral: negative exponent");
  TrigIntegral out;
  out.coeff = dfac_paper(p) * dfac_paper(q) / dfac_paper(p + q + 1);
  out.half_pi_power = (p % 2 == 0 && q % 2 == 0) ? 1 : 0;
  return out;
}

Rational classical_sphere_moment(int N, std::span<const long> profile) {
  if (N < 1) throw std::invalid_argument("classical_sphere_moment: N must be positive");
  if (profile.size() > static_cast<std::size_t>(N))
    throw std::invalid_argument("classical_sphere_moment: profile longer than N");
  long total = 0;
  for (long l : profile) {
    if (l < 0) throw std::invalid_argument("classical_sphere_moment: negative exponent");
    if (l % 2 != 0) return Rational(0);
    total += l;
  }
  // (N-1)!! l_1!! ... l_N!! / (N + sum l - 1)!!, shifted convention throughout
  Rational value = dfac_paper(N - 1);
  for (long l : profile) value *= dfac_paper(l);
  return value / dfac_paper(N + total - 1);
}

Rational classical_sphere_moment_oracle(int N, std::span<const long> profile) {
  if (N < 1) throw std::invalid_argument("oracle: N must be positive");
  std::vector<long> l(profile.begin(), profile.end());
  l.resize(static_cast<std::size_t>(N), 0);
  for (long e : l)
    if (e % 2 != 0) return Rational(0);
  // Angle integral for each spherical coordinate t_a: cos carries l_a, sin
  // carries the exponents of everything after plus the Jacobian power.
  std::vector<long> suffix(static_cast<std::size_t>(N) + 2, 0);
  for (int a = N; a >= 1; --a) suffix[a] = suffix[a + 1] + l[a - 1];
  Rational coeff(1);
  int pi_power = 0;
  for (int a = 1; a <= N - 1; ++a) {
    TrigIntegral t = trig_integral(l[a - 1], suffix[a + 1] + (N - 1 - a));
    coeff *= t.coeff;
    pi_power += t.half_pi_power;
  }
  // Volume normalization (2/pi)^[N/2] (N-1)!!; the pi powers must cancel.
  if (pi_power != N / 2)
    throw std::logic_error("classical_sphere_moment_oracle: pi powers did not cancel");
  return dfac_paper(N - 1) * coeff;
}

HalfClassicalMoment half_classical_sphere_moment(int N, std::span<const long> profile) {
  if (N < 1) throw std::invalid_argument("half_classical_sphere_moment: N must be positive");
  if (profile.size() > static_cast<std::size_t>(N))
    throw std::invalid_argument("half_classical_sphere_moment: profile longer than N");
  std::vector<long> l(profile.begin(), profile.end());
  long total = 0;
  for (long e : l) {
    if (e < 0) throw std::invalid_argument("half_classical_sphere_moment: negative exponent");
    total += e;
  }
  // Ground truth: |z_a|^{2 l_a} = (x_a^2 + y_a^2)^{l_a} expanded binomially
  // over the real sphere S^{2N-1}.
  Rational value(0);
  std::vector<long> r(l.size(), 0);
  while (true) {
    Rational term(1);
    std::vector<long> real_profile;
    real_profile.reserve(2 * l.size());
    for (std::size_t a = 0; a < l.size(); ++a) {
      term *= Rational(binom(static_cast<unsigned long>(l[a]), static_cast<unsigned long>(r[a])));
      real_profile.push_back(2 * r[a]);
      real_profile.push_back(2 * (l[a] - r[a]));
    }
    real_profile.resize(2 * static_cast<std::size_t>(N), 0);
    value += term * classical_sphere_moment(2 * N, real_profile);
    std::size_t a = 0;
    while (a < r.size() && r[a] == l[a]) r[a++] = 0;
    if (a == r.size()) break;
    ++r[a];
  }

  // The displayed constant, reported as data.
  Rational displayed = Rational(ipow(4, total)) * Rational(factorial(2 * N - 1));
  for (long e : l) displayed *= Rational(factorial(static_cast<unsigned long>(e)));
  displayed /= Rational(factorial(static_cast<unsigned long>(2 * N + total - 1)));

  return {value, displayed};
}

FreeHypersphericalResult free_hyperspherical_moment(int N, int l, InverseMode mode) {
  if (N < 3) throw std::invalid_argument("free_hyperspherical_moment: N >= 3 required");
  if (l < 1) throw std::invalid_argument("free_hyperspherical_moment: l >= 1 required");
  FreeHypersphericalResult out;
  EasyGroupId ofree{Family::O, Liberation::Free, false};
  out.weingarten = integrate_sphere(ofree, N, ColoredWord::plain(2 * static_cast<std::size_t>(l)),
                                    MultiIndex::constant(2 * static_cast<std::size_t>(l), 1), mode);
  const Rational eps(1, 1000000000L);
  const Rational offset_factor = pow(Rational(N + 2) / Rational(N + 1), l);

  for (long prec = 128; prec <= 8192; prec *= 2) {
    out.precision_bits = prec;
    // q = (-N + sqrt(N^2 - 4))/2, in [-1, 0)
    Interval q = (Interval::sqrt_of_long(static_cast<long>(N) * N - 4, prec) -
                  Interval::of_long(N, prec)) /
                 Interval::of_long(2, prec);
    Interval sum(prec);
    for (long r = -(l + 1); r <= l + 1; ++r) {
      if (r == 0) continue;
      Interval denom = Interval::of_long(1, prec) + q.pow_int(r);
      Interval term = Interval::of_long(r, prec) / denom;
      Rational c = Rational(binom(static_cast<unsigned long>(2 * l + 2),
                                  static_cast<unsigned long>(l + r + 1)));
      if ((r % 2 + 2) % 2 == 1) c = -c;
      sum = sum + term.times_rational(c);
    }
    Interval one = Interval::of_long(1, prec);
    Interval closed = sum * ((q + one) / (q - one));
    closed = closed.over_rational(Rational(l + 1));
    closed = closed.over_rational(pow(Rational(N + 1), l));  // prefactor as printed

    Interval diff = closed.minus_rational(out.weingarten);
    Interval ratio = closed.over_rational(out.weingarten);
    Interval offset_test = ratio.over_rational(offset_factor).minus_rational(Rational(1));

    bool diff_decided = diff.abs_certainly_below(eps) || diff.abs_certainly_above(eps);
    bool offs_decided =
        offset_test.abs_certainly_below(eps) || offset_test.abs_certainly_above(eps);
    if (diff_decided && offs_decided) {
      out.closed_mid = closed.mid();
      out.closed_width = closed.width();
      out.difference = diff.mid();
      out.ratio = ratio.mid();
      out.matches_printed = diff.abs_certainly_below(eps);
      out.normalization_offset = offset_test.abs_certainly_below(eps);
      return out;
    }
  }
  throw PrecisionError("free_hyperspherical_moment: interval could not separate agreement at 1e-9");
}

}  // namespace wgc
