// wgc: category/partition queries, exact Gram/Weingarten dumps, integral
// evaluation, moment sweeps and the acceptance verification suite.

#include "wgc/categories.hpp"
#include "wgc/enumerate.hpp"
#include "wgc/laws.hpp"
#include "wgc/verify.hpp"
#include "wgc/weingarten.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

using json = nlohmann::json;
using namespace wgc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBound = 2;
constexpr int kExitNumeric = 3;

struct Range {
  long lo = 0, hi = 0;
};

Range parse_range(const std::string& s) {
  Range r;
  auto dots = s.find("..");
  if (dots == std::string::npos) {
    r.lo = r.hi = std::stol(s);
  } else {
    r.lo = std::stol(s.substr(0, dots));
    r.hi = std::stol(s.substr(dots + 2));
  }
  if (r.hi < r.lo) throw CLI::ValidationError("range", "empty range '" + s + "'");
  return r;
}

struct Output {
  std::string format = "pretty";
  std::string out_file;
  bool with_float = false;

  std::ostream& stream(std::ofstream& file) const {
    if (out_file.empty()) return std::cout;
    file.open(out_file);
    if (!file) throw std::runtime_error("cannot open output file " + out_file);
    return file;
  }
};

void add_output_flags(CLI::App* cmd, Output& out) {
  cmd->add_option("-f,--format", out.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));
  cmd->add_option("--out", out.out_file, "Write output to a file instead of stdout");
  cmd->add_flag("--float", out.with_float, "Add a decimal column next to exact values");
}

std::size_t effective_max_points(std::size_t flag_value) {
  if (flag_value != 0) return flag_value;
  if (const char* env = std::getenv("WGC_MAX_POINTS")) return std::stoul(env);
  return kDefaultMaxPoints;
}

// ---- enum -----------------------------------------------------------------

int run_enum(const std::string& category, long k, const std::string& word_str,
             std::size_t max_points, const Output& out) {
  CategoryId cat = parse_category(category);
  ColoredWord word =
      word_str.empty() ? ColoredWord::plain(static_cast<std::size_t>(k)) : ColoredWord::parse(word_str);
  auto d = enumerate_category(cat, word, max_points);
  std::ofstream file;
  std::ostream& os = out.stream(file);
  if (out.format == "json") {
    json j;
    j["category"] = category_name(cat);
    j["word"] = word.str();
    j["count"] = d.size();
    j["partitions"] = json::array();
    for (const auto& p : d) j["partitions"].push_back(p.str());
    os << j.dump(2) << "\n";
  } else if (out.format == "csv") {
    os << "partition\n";
    for (const auto& p : d) os << p.str() << "\n";
  } else {
    os << d.size() << " partitions in " << category_name(cat) << "(" << word.str() << ")\n";
    for (const auto& p : d) os << "  " << p.str() << "\n";
  }
  return kExitOk;
}

// ---- integrate --------------------------------------------------------------

void emit_value(const Output& out, const std::string& category, int N, const ColoredWord& word,
                const Rational& value, const std::vector<std::string>& matrix_index) {
  std::ofstream file;
  std::ostream& os = out.stream(file);
  if (out.format == "json") {
    json j;
    j["category"] = category;
    j["N"] = N;
    j["word"] = word.str();
    j["value"] = value.str();
    j["matrix_index"] = matrix_index;
    if (out.with_float) j["float"] = value.to_double();
    os << j.dump(2) << "\n";
  } else if (out.format == "csv") {
    os << "category,N,word,value" << (out.with_float ? ",float" : "") << "\n";
    os << category << "," << N << "," << word.str() << "," << value.str();
    if (out.with_float) os << "," << value.to_double();
    os << "\n";
  } else {
    // exact value first, decimal preview alongside
    os << value.str() << "  (" << value.to_double() << ")\n";
  }
}

struct IntegrateArgs {
  std::string group;
  int N = 0;
  std::string word;
  std::string i, j;
  bool sphere = false;
  bool twist = false;
  int char_s = 0;
  std::string torus_relations;
  int M = 0, L = 0;
  std::string affine_set;
  int chi_K = 0;
  std::string mode = "strict";
};

InverseMode parse_mode(const std::string& mode) {
  if (mode == "strict") return InverseMode::Strict;
  if (mode == "pinv" || mode == "pseudo-inverse") return InverseMode::PseudoInverse;
  throw CLI::ValidationError("mode", "expected strict or pinv");
}

int run_integrate(const IntegrateArgs& a, std::size_t max_points, const Output& out) {
  EasyGroupId group = parse_group(a.group);
  if (a.twist) group.twisted = true;
  InverseMode mode = parse_mode(a.mode);
  ColoredWord word = ColoredWord::parse(a.word);
  const CategoryId cat = category_of(group);

  if (!a.torus_relations.empty()) {
    TorusRelations rel;
    if (a.torus_relations == "free") rel = TorusRelations::Free;
    else if (a.torus_relations == "abelian") rel = TorusRelations::Abelian;
    else if (a.torus_relations == "order2-free") rel = TorusRelations::Order2Free;
    else if (a.torus_relations == "order2-abelian") rel = TorusRelations::Order2Abelian;
    else throw CLI::ValidationError("relations", "unknown torus relations tag");
    MultiIndex gens = MultiIndex::parse(a.i);
    if (gens.size() != word.size())
      throw CLI::ValidationError("torus", "--i and --word lengths differ");
    std::vector<TorusLetter> letters;
    for (std::size_t p = 0; p < gens.size(); ++p)
      letters.push_back({gens[p], word[p]});
    emit_value(out, "torus-" + a.torus_relations, 0, word,
               Rational(integrate_torus(letters, rel)), {});
    return kExitOk;
  }

  if (a.char_s > 0) {
    Rational v = char_moment(group, a.N, word, a.char_s, mode, max_points);
    auto w = weingarten_matrix(cat, word, a.N, mode, max_points);
    emit_value(out, category_name(cat), a.N, word, v, w->index_strings());
    return kExitOk;
  }

  if (!a.affine_set.empty()) {
    std::vector<int> iset;
    std::stringstream ss(a.affine_set);
    for (std::string tok; std::getline(ss, tok, ',');) iset.push_back(std::stoi(tok));
    AffineSpaceSpec spec{group, a.N, iset, word, MultiIndex::parse(a.i)};
    AffineValue v = integrate_affine(spec, mode, max_points);
    std::ofstream file;
    std::ostream& os = out.stream(file);
    if (out.format == "json") {
      json j;
      j["category"] = category_name(cat);
      j["N"] = a.N;
      j["word"] = word.str();
      j["value"] = v.str();
      auto w = weingarten_matrix(cat, word, a.N, mode, max_points);
      j["matrix_index"] = w->index_strings();
      if (out.with_float) j["float"] = v.approx();
      os << j.dump(2) << "\n";
    } else {
      os << v.str();
      if (out.with_float) os << "  (" << v.approx() << ")";
      os << "\n";
    }
    return kExitOk;
  }

  if (a.M > 0 || a.L > 0) {
    HomSpaceSpec spec{group, a.M, a.N, a.L, word, MultiIndex::parse(a.i), MultiIndex::parse(a.j)};
    Rational v = integrate_homspace(spec, mode, max_points);
    emit_value(out, category_name(cat), a.N, word, v, {});
    return kExitOk;
  }

  if (a.sphere) {
    if (group.family != Family::O && group.family != Family::U)
      throw CLI::ValidationError("sphere", "spheres exist for the O and U families only");
    Rational v = integrate_sphere(group, a.N, word, MultiIndex::parse(a.i), mode, max_points);
    auto w = weingarten_matrix(cat, word, a.N, mode, max_points);
    emit_value(out, category_name(cat), a.N, word, v, w->index_strings());
    return kExitOk;
  }

  IntegralSpec spec{group, a.N, word, MultiIndex::parse(a.i), MultiIndex::parse(a.j)};
  Rational v = integrate_group(spec, mode, max_points);
  auto w = weingarten_matrix(cat, word, a.N, mode, max_points);
  emit_value(out, category_name(cat), a.N, word, v, w->index_strings());
  return kExitOk;
}

// ---- matrix ---------------------------------------------------------------

int run_matrix(const std::string& kind, const std::string& category, long k,
               const std::string& word_str, int N, const std::string& mode_str,
               std::size_t max_points, const Output& out) {
  CategoryId cat = parse_category(category);
  ColoredWord word = word_str.empty() ? ColoredWord::plain(static_cast<std::size_t>(k))
                                      : ColoredWord::parse(word_str);
  PartitionMatrix m;
  if (kind == "gram") {
    m = gram_matrix(cat, word, N, max_points);
  } else if (kind == "weingarten") {
    m = *weingarten_matrix(cat, word, N, parse_mode(mode_str), max_points);
  } else {
    throw CLI::ValidationError("matrix", "expected gram or weingarten");
  }
  std::ofstream file;
  std::ostream& os = out.stream(file);
  const auto n = static_cast<Eigen::Index>(m.index.size());
  if (out.format == "json") {
    json j;
    j["category"] = category_name(cat);
    j["N"] = N;
    j["word"] = word.str();
    j["matrix_index"] = m.index_strings();
    j["entries"] = json::array();
    for (Eigen::Index r = 0; r < n; ++r) {
      json row = json::array();
      for (Eigen::Index c = 0; c < n; ++c) row.push_back(m.entries(r, c).str());
      j["entries"].push_back(row);
    }
    os << j.dump(2) << "\n";
  } else {
    // csv and pretty share the layout: an index header then the rows
    for (Eigen::Index r = 0; r < n; ++r) {
      os << m.index[r].str();
      for (Eigen::Index c = 0; c < n; ++c) os << "," << m.entries(r, c).str();
      os << "\n";
    }
  }
  return kExitOk;
}

// ---- sweep ----------------------------------------------------------------

int run_sweep(const std::string& what, const std::string& group_str, const std::string& t_str,
              const std::string& k_range, const std::string& n_range, const std::string& mode_str,
              std::size_t max_points, const Output& out) {
  InverseMode mode = parse_mode(mode_str);
  std::ofstream file;
  std::ostream& os = out.stream(file);
  auto cell = [&](const Rational& v) {
    os << "," << v.str();
    if (out.with_float) os << "," << v.to_double();
  };
  if (what == "char") {
    EasyGroupId group = parse_group(group_str);
    Rational t = Rational::parse(t_str.empty() ? "1" : t_str);
    Range ks = parse_range(k_range), ns = parse_range(n_range);
    os << "N,k,value" << (out.with_float ? ",float" : "") << ",limit\n";
    for (long N = ns.lo; N <= ns.hi; ++N) {
      for (long k = ks.lo; k <= ks.hi; ++k) {
        ColoredWord word = ColoredWord::plain(static_cast<std::size_t>(k));
        // s = [tN]
        Rational tn = t * Rational(N);
        mpz_class fl;
        mpz_fdiv_q(fl.get_mpz_t(), tn.numerator().get_mpz_t(), tn.denominator().get_mpz_t());
        long s = std::min<long>(std::max(1L, fl.get_si()), N);
        Rational v = char_moment(group, static_cast<int>(N), word, static_cast<int>(s), mode,
                                 max_points);
        os << N << "," << k;
        cell(v);
        os << "," << char_moment_limit(group, t, word, max_points).str() << "\n";
      }
    }
    return kExitOk;
  }
  if (what == "sphere") {
    EasyGroupId group = parse_group(group_str);
    Range ks = parse_range(k_range), ns = parse_range(n_range);
    os << "N,k,value" << (out.with_float ? ",float" : "") << "\n";
    for (long N = ns.lo; N <= ns.hi; ++N)
      for (long k = ks.lo; k <= ks.hi; ++k) {
        Rational v = integrate_sphere(group, static_cast<int>(N),
                                      ColoredWord::plain(static_cast<std::size_t>(k)),
                                      MultiIndex::constant(static_cast<std::size_t>(k), 1), mode,
                                      max_points);
        os << N << "," << k;
        cell(v);
        os << "\n";
      }
    return kExitOk;
  }
  if (what == "hypergeom") {
    Range ks = parse_range(k_range), ns = parse_range(n_range);
    os << "n,k,lhs,rhs\n";
    for (long n = ns.lo; n <= ns.hi; ++n)
      for (long k = ks.lo; k <= ks.hi; ++k) {
        auto [lhs, rhs] = hypergeometric_equality(static_cast<int>(n), static_cast<int>(k), mode);
        os << n << "," << k << "," << lhs.str() << "," << rhs.str() << "\n";
      }
    return kExitOk;
  }
  throw CLI::ValidationError("sweep", "unknown sweep kind '" + what + "'");
}

// ---- law ------------------------------------------------------------------

int run_law(const std::string& what, const std::string& law_a, const std::string& law_b,
            long up_to, const Output& out) {
  std::ofstream file;
  std::ostream& os = out.stream(file);
  if (what == "moments" || what == "cumulants") {
    LawId law = parse_law(law_a);
    MomentSeq m = law_moments_real_part(law, static_cast<std::size_t>(up_to));
    std::vector<Rational> column = m.values;
    if (what == "cumulants") {
      CumulantKind kind = (law.tag == LawTag::Semicircle || law.tag == LawTag::FreePoisson ||
                           law.tag == LawTag::FreeBessel || law.tag == LawTag::Circular ||
                           law.tag == LawTag::ComplexFreeBessel)
                              ? CumulantKind::Free
                              : CumulantKind::Classical;
      column = moments_to_cumulants(m, kind).values;
    }
    if (out.format == "json") {
      json j;
      j["law"] = law_name(law);
      j["values"] = json::array();
      for (std::size_t k = 1; k < column.size(); ++k) j["values"].push_back(column[k].str());
      os << j.dump(2) << "\n";
    } else {
      os << "k," << what << (out.with_float ? ",float" : "") << "\n";
      for (std::size_t k = 1; k < column.size(); ++k) {
        os << k << "," << column[k].str();
        if (out.with_float) os << "," << column[k].to_double();
        os << "\n";
      }
    }
    return kExitOk;
  }
  if (what == "bp") {
    BpReport r = bp_check(parse_law(law_a), parse_law(law_b), static_cast<std::size_t>(up_to));
    if (r.ok) {
      os << "in bijection to order " << up_to << "\n";
      return kExitOk;
    }
    os << "first discrepancy at order " << r.first_discrepancy << ": classical "
       << r.classical_value.str() << " vs free " << r.free_value.str() << "\n";
    return kExitNumeric;
  }
  throw CLI::ValidationError("law", "expected moments, cumulants or bp");
}

// ---- verify ---------------------------------------------------------------

int run_verify(const std::string& suite, const VerifyOptions& opts, const Output& out) {
  auto results = run_acceptance(opts, suite_criteria(suite));
  bool all = true;
  std::ofstream file;
  std::ostream& os = out.stream(file);
  if (out.format == "json") {
    json j = json::array();
    for (const auto& r : results) {
      all = all && r.pass;
      j.push_back({{"id", r.id},
                   {"name", r.name},
                   {"pass", r.pass},
                   {"details", r.details},
                   {"millis", r.millis}});
    }
    os << j.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      all = all && r.pass;
      os << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << " (" << r.name << ") ["
         << r.millis << " ms]";
      if (!r.details.empty()) os << " - " << r.details;
      os << "\n";
    }
    os << (all ? "all criteria passed" : "FAILURES present") << "\n";
  }
  return all ? kExitOk : kExitNumeric;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Weingarten calculus for easy quantum groups"};
  app.set_config("--config", "", "Config file (key=value; flags win)");
  app.require_subcommand(1);

  std::size_t max_points_flag = 0;
  app.add_option("--max-points", max_points_flag,
                 "Enumeration bound in points (default 12; env WGC_MAX_POINTS)");

  // enum
  auto* cmd_enum = app.add_subcommand("enum", "List a category's partitions D(k)");
  std::string enum_category, enum_word;
  long enum_k = 0;
  Output enum_out;
  cmd_enum->add_option("category", enum_category, "Category or group alias")->required();
  cmd_enum->add_option("-k", enum_k, "Number of points (all-white word)");
  cmd_enum->add_option("--word", enum_word, "Colored word, e.g. owow");
  add_output_flags(cmd_enum, enum_out);

  // integrate
  auto* cmd_int = app.add_subcommand("integrate", "Evaluate a Haar integral exactly");
  IntegrateArgs ia;
  Output int_out;
  cmd_int->add_option("group", ia.group, "Easy group alias (o, o*, o+, u, ..., b+)")->required();
  cmd_int->add_option("-N", ia.N, "Dimension");
  cmd_int->add_option("--word", ia.word, "Exponent word, e.g. oooo or owow")->required();
  cmd_int->add_option("--i", ia.i, "Row multi-index, e.g. 1111");
  cmd_int->add_option("--j", ia.j, "Column multi-index");
  cmd_int->add_flag("--sphere", ia.sphere, "Sphere integral (row indices pinned to 1)");
  cmd_int->add_flag("--twist", ia.twist, "Use the q=-1 twisted group");
  cmd_int->add_option("--char,-s", ia.char_s, "Truncated character moment with this s");
  cmd_int->add_option("--torus", ia.torus_relations,
                      "Torus integral: free, abelian, order2-free, order2-abelian");
  cmd_int->add_option("-M", ia.M, "Homogeneous space row dimension M");
  cmd_int->add_option("-L", ia.L, "Homogeneous space rank L");
  cmd_int->add_option("--I", ia.affine_set, "Affine space index set, e.g. 1,2,3");
  cmd_int->add_option("--mode", ia.mode, "strict or pinv")->capture_default_str();
  add_output_flags(cmd_int, int_out);

  // matrix
  auto* cmd_matrix = app.add_subcommand("matrix", "Dump an exact Gram or Weingarten matrix");
  std::string mx_kind, mx_category, mx_word, mx_mode = "strict";
  long mx_k = 0;
  int mx_n = 0;
  Output mx_out;
  cmd_matrix->add_option("kind", mx_kind, "gram | weingarten")->required();
  cmd_matrix->add_option("category", mx_category, "Category or group alias")->required();
  cmd_matrix->add_option("-N", mx_n, "Dimension")->required();
  cmd_matrix->add_option("-k", mx_k, "Number of points (all-white word)");
  cmd_matrix->add_option("--word", mx_word, "Colored word");
  cmd_matrix->add_option("--mode", mx_mode, "strict or pinv")->capture_default_str();
  add_output_flags(cmd_matrix, mx_out);

  // sweep
  auto* cmd_sweep = app.add_subcommand("sweep", "CSV tables over ranges of N, k, t");
  std::string sweep_what, sweep_group, sweep_t, sweep_k = "1..4", sweep_n = "2..5",
                          sweep_mode = "pinv";
  Output sweep_out;
  sweep_out.format = "csv";
  cmd_sweep->add_option("what", sweep_what, "char | sphere | hypergeom")->required();
  cmd_sweep->add_option("group", sweep_group, "Easy group alias (char/sphere sweeps)");
  cmd_sweep->add_option("--t", sweep_t, "Truncation parameter t (char sweep)");
  cmd_sweep->add_option("--k", sweep_k, "k range, e.g. 2..8");
  cmd_sweep->add_option("--N,--n", sweep_n, "N (or n) range, e.g. 4..8");
  cmd_sweep->add_option("--mode", sweep_mode, "strict or pinv")->capture_default_str();
  add_output_flags(cmd_sweep, sweep_out);

  // law
  auto* cmd_law = app.add_subcommand("law", "Reference law moments, cumulants, BP checks");
  std::string law_what, law_a, law_b;
  long law_k = 8;
  Output law_out;
  cmd_law->add_option("what", law_what, "moments | cumulants | bp")->required();
  cmd_law->add_option("law", law_a, "Law name, e.g. gaussian:t=1/2")->required();
  cmd_law->add_option("free-law", law_b, "Free partner (bp check)");
  cmd_law->add_option("--k", law_k, "Order bound")->capture_default_str();
  add_output_flags(cmd_law, law_out);

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "Run the acceptance criteria");
  std::string verify_suite = "all", verify_n, verify_l, verify_mode = "pinv";
  long verify_max_k = 8;
  Output verify_out;
  cmd_verify->add_option("--suite", verify_suite,
                         "core | laws | twist | hyperspherical | hypergeom | spaces | all")
      ->capture_default_str();
  cmd_verify->add_option("--max-k", verify_max_k, "Moment order bound where applicable");
  cmd_verify->add_option("--N", verify_n, "Hyperspherical N range, e.g. 3..7");
  cmd_verify->add_option("--l", verify_l, "Hyperspherical l range, e.g. 1..5");
  cmd_verify->add_option("--mode", verify_mode, "strict or pinv")->capture_default_str();
  add_output_flags(cmd_verify, verify_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    std::size_t max_points = effective_max_points(max_points_flag);
    if (cmd_enum->parsed())
      return run_enum(enum_category, enum_k, enum_word, max_points, enum_out);
    if (cmd_matrix->parsed())
      return run_matrix(mx_kind, mx_category, mx_k, mx_word, mx_n, mx_mode, max_points, mx_out);
    if (cmd_int->parsed()) return run_integrate(ia, max_points, int_out);
    if (cmd_sweep->parsed())
      return run_sweep(sweep_what, sweep_group, sweep_t, sweep_k, sweep_n, sweep_mode, max_points,
                       sweep_out);
    if (cmd_law->parsed()) return run_law(law_what, law_a, law_b, law_k, law_out);
    if (cmd_verify->parsed()) {
      VerifyOptions opts;
      opts.mode = parse_mode(verify_mode);
      opts.max_k = static_cast<std::size_t>(verify_max_k);
      if (!verify_n.empty()) {
        Range r = parse_range(verify_n);
        opts.hyper_n_lo = static_cast<int>(r.lo);
        opts.hyper_n_hi = static_cast<int>(r.hi);
      }
      if (!verify_l.empty()) {
        Range r = parse_range(verify_l);
        opts.hyper_l_lo = static_cast<int>(r.lo);
        opts.hyper_l_hi = static_cast<int>(r.hi);
      }
      return run_verify(verify_suite, opts, verify_out);
    }
    return kExitUsage;
  } catch (const BoundExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBound;
  } catch (const SingularGramError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const PrecisionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
}
