#pragma once

#include "wgc/interval.hpp"
#include "wgc/linalg.hpp"
#include "wgc/rational.hpp"
#include "wgc/words.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wgc {

enum class LawTag {
  Gaussian,
  Semicircle,
  ComplexGaussian,
  Circular,
  Poisson,
  FreePoisson,
  Bessel,
  FreeBessel,
  ComplexBessel,
  ComplexFreeBessel,
};

struct LawId {
  LawTag tag;
  Rational t = Rational(1);

  bool is_complex() const;
  friend bool operator==(const LawId&, const LawId&) = default;
};

// "gaussian:t=1/2", "semicircle", "free-bessel:t=2", ...
LawId parse_law(std::string_view name);
std::string law_name(const LawId& law);

struct MomentSeq {
  std::vector<Rational> values;  // values[k] = M_k, values[0] = 1
  std::string label;             // law name or provenance

  std::size_t order() const { return values.empty() ? 0 : values.size() - 1; }
};

enum class CumulantKind { Classical, Free };

struct CumulantSeq {
  std::vector<Rational> values;  // values[n] = kappa_n, values[0] unused (0)
  CumulantKind kind = CumulantKind::Classical;

  std::size_t order() const { return values.empty() ? 0 : values.size() - 1; }
};

// M_k = sum over D(k) of t^{|pi|} for the real laws; throws for complex laws
// (their moments are word-indexed, see law_moment_word).
MomentSeq law_moments(const LawId& law, std::size_t up_to);

// Moment of a complex law at one colored word.
Rational law_moment_word(const LawId& law, const ColoredWord& word);

// Moments of the real part (a + a*)/2: 2^-k sum over all words of length k.
// For real laws this is law_moments.
MomentSeq law_moments_real_part(const LawId& law, std::size_t up_to);

CumulantSeq moments_to_cumulants(const MomentSeq& m, CumulantKind kind);
MomentSeq cumulants_to_moments(const CumulantSeq& c);

struct BpReport {
  bool ok = true;
  std::size_t first_discrepancy = 0;  // order of the first mismatch when !ok
  Rational classical_value, free_value;
};

// Classical cumulants of `classical` equal free cumulants of `free` up to
// order `up_to`, exactly.
BpReport bp_check(const LawId& classical, const LawId& free, std::size_t up_to);

// The shifted double-factorial convention m!! = (m-1)(m-3)(m-5)... (empty
// product for m <= 1). Deliberately distinct from the standard convention;
// every closed form here uses this one.
Rational dfac_paper(long m);

struct TrigIntegral {
  Rational coeff;
  int half_pi_power = 0;  // value = coeff * (pi/2)^half_pi_power
};

// int_0^{pi/2} cos^p t sin^q t dt.
TrigIntegral trig_integral(long p, long q);

// int over the classical real sphere of x_1^{l_1} ... x_N^{l_N}; zero unless
// every exponent is even.
Rational classical_sphere_moment(int N, std::span<const long> profile);
// Independent route: iterated spherical coordinates as a product of
// trig_integral values.
Rational classical_sphere_moment_oracle(int N, std::span<const long> profile);

struct HalfClassicalMoment {
  Rational value;               // ground truth (binomial expansion over S^{2N-1})
  Rational displayed_constant;  // the textbook closed form, reported as data
};

// int over the half-classical sphere of |z_1|^{2 l_1} ... |z_N|^{2 l_N}.
HalfClassicalMoment half_classical_sphere_moment(int N, std::span<const long> profile);

struct FreeHypersphericalResult {
  Rational weingarten;        // exact int over the free sphere of x_1^{2l}
  double closed_mid = 0;      // closed form as printed, midpoint
  double closed_width = 0;
  double difference = 0;      // closed - weingarten, midpoint
  double ratio = 0;           // closed / weingarten, midpoint
  bool matches_printed = false;      // |difference| < 1e-9, rigorously
  bool normalization_offset = false; // ratio == ((N+2)/(N+1))^l within 1e-9
  long precision_bits = 0;
};

// Closed-form evaluation at q = (-N + sqrt(N^2-4))/2 with adaptive-precision
// interval arithmetic, against the exact Weingarten value. N >= 3, l >= 1.
FreeHypersphericalResult free_hyperspherical_moment(int N, int l,
                                                    InverseMode mode = InverseMode::Strict);

}  // namespace wgc
