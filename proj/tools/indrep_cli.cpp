// indrep: command-line front end.
//
// Exit codes: 0 success, 2 bad input, 3 membership, 4 group cap exceeded,
// 5 undecided at the modulus bound.

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <indrep/indrep.hpp>
#include <indrep/serialize.hpp>

namespace {

using namespace indrep;

enum ExitCode { kOk = 0, kParse = 2, kMembership = 3, kCap = 4, kUndecided = 5 };

struct Options {
  std::string format = "text";
  std::string cache_dir;
  std::size_t cap = kDefaultCap;
  unsigned max_modulus = kDefaultMaxModulus;
  std::uint64_t seed = 1;
};

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

void require_format(const Options& opt, bool csv_ok) {
  if (opt.format == "csv" && !csv_ok) throw ParseError("csv output is only available for scan");
}

std::string word_or_id(const std::string& w) { return w.empty() ? "Id" : w; }

int cmd_decompose(const Options& opt, const std::string& input, bool gamma04) {
  require_format(opt, false);
  const ModularElement m = parse_element(input);
  Json j{{"matrix", to_json(m)}};
  std::string word;
  if (gamma04) {
    auto w = decompose_gamma04(m);
    word = w.to_string();
    j["basis"] = "T,V";
    j["word"] = word;
    j["t_exponent"] = w.t_exponent();
  } else {
    word = decompose_st(m).to_string();
    j["basis"] = "S,T";
    j["word"] = word;
  }
  if (opt.format == "json")
    print(j);
  else
    std::cout << word_or_id(word) << '\n';
  return kOk;
}

int cmd_rep(const Options& opt, const std::string& alpha, const std::string& element) {
  require_format(opt, false);
  const Alpha a = parse_alpha(alpha);
  const ModularElement g = parse_element(element);
  const Monomial u = u_alpha(a, g);
  if (opt.format == "json") {
    Json j{{"alpha", a.to_string()}, {"element", to_json(g)}};
    j.update(to_json(u));
    j["dense"] = dense_json(u);
    print(j);
  } else {
    std::cout << render_dense(u);
  }
  return kOk;
}

int cmd_kernel_info(const Options& opt, const std::string& alpha, bool verify) {
  require_format(opt, false);
  const KernelReport r = kernel_report(parse_alpha(alpha), verify, opt.cap);
  if (opt.format == "json") {
    print(to_json(r));
    return kOk;
  }
  std::cout << "alpha            " << r.alpha << '\n'
            << "N                " << r.N << '\n'
            << "index            " << r.index << '\n'
            << "genus            " << r.genus << '\n'
            << "cusps            " << r.cusps << '\n'
            << "level            " << r.level << '\n'
            << "free_generators  " << r.free_generators << '\n'
            << "area/pi          " << rational_string(r.area_over_pi) << '\n'
            << "gauss_bonnet/pi  " << rational_string(r.gauss_bonnet_over_pi) << '\n';
  if (r.cross_checks)
    std::cout << "cross-checks     passed (|G|=" << r.cross_checks->group_order
              << ", |A|=" << r.cross_checks->diagonal_order << ", ord U(T)=" << r.cross_checks->t_order << ")\n";
  return kOk;
}

int cmd_congruence(const Options& opt, const std::string& alpha, SchreierCache& cache) {
  require_format(opt, false);
  const CongruenceCertificate c = decide_congruence(parse_alpha(alpha), cache, opt.cap);
  if (opt.format == "json") {
    print(to_json(c));
    return kOk;
  }
  std::cout << "alpha      " << c.alpha << '\n'
            << "N          " << c.N << '\n'
            << "congruent  " << (c.congruent ? "true" : "false") << '\n'
            << "kernel     " << to_string(c.kernel) << '\n'
            << "level      " << c.checked_level << '\n';
  if (c.image_order) std::cout << "image      " << *c.image_order << " elements\n";
  if (c.witness) {
    std::cout << "witness    " << c.witness->matrix << '\n'
              << "word       " << c.witness->word << '\n'
              << "image\n"
              << render_dense(c.witness->image);
  }
  return kOk;
}

int cmd_scan(const Options& opt, std::int64_t max_den, bool full_range, SchreierCache& cache) {
  const auto rows = scan(max_den, full_range, cache, opt.cap);
  if (opt.format == "json") {
    Json arr = Json::array();
    for (const auto& row : rows) arr.push_back(to_json(row));
    print(arr);
  } else if (opt.format == "csv") {
    std::cout << kScanCsvHeader << '\n';
    for (const auto& row : rows) std::cout << scan_csv_row(row) << '\n';
  } else {
    std::cout << std::left << std::setw(8) << "alpha" << std::right << std::setw(4) << "N" << std::setw(10)
              << "index" << std::setw(8) << "genus" << std::setw(7) << "cusps" << std::setw(7) << "level"
              << "  kernel\n";
    for (const auto& row : rows) {
      const auto& r = row.report;
      std::cout << std::left << std::setw(8) << r.alpha.to_string() << std::right << std::setw(4) << r.N
                << std::setw(10) << r.index << std::setw(8) << r.genus << std::setw(7) << r.cusps << std::setw(7)
                << r.level << "  " << to_string(row.certificate.kernel) << '\n';
    }
  }
  return kOk;
}

int cmd_gamma_d(const Options& opt, std::int64_t d) {
  require_format(opt, false);
  const GammaDInfo g = gamma_d_info(d);
  if (opt.format == "json") {
    print(to_json(g));
    return kOk;
  }
  auto yes_no = [](bool b) { return b ? "true" : "false"; };
  std::cout << "d                             " << g.d << '\n'
            << "index_in_psl                  " << g.index_in_psl << '\n'
            << "genus                         " << g.genus << '\n'
            << "cusps                         " << g.cusps << '\n'
            << "parabolic_generators          " << g.parabolic_generators << '\n'
            << "area/pi                       " << rational_string(g.area_over_pi) << '\n'
            << "gauss_bonnet/pi               " << rational_string(g.gauss_bonnet_over_pi) << '\n'
            << "zograf_applicable             " << yes_no(g.zograf_applicable) << '\n'
            << "congruence_excluded_by_bound  " << yes_no(g.congruence_excluded_by_bound) << '\n'
            << "known_congruent               " << yes_no(g.known_congruent) << '\n';
  return kOk;
}

int cmd_abelian(const Options& opt, unsigned k, std::size_t samples) {
  require_format(opt, false);
  const AbelianProbeReport r = abelianness_probe(k, samples, opt.seed);
  if (opt.format == "json") {
    print(to_json(r));
    return kOk;
  }
  std::cout << "k          " << r.k << '\n'
            << "level      " << r.level << '\n'
            << "in_level   " << r.in_level << "/" << r.samples << '\n';
  if (r.first_failure)
    std::cout << "failure    " << r.first_failure->first << " " << r.first_failure->second << '\n';
  if (r.witness_commutator)
    std::cout << "witness    " << *r.witness_commutator << " in Gamma(" << r.level
              << "): " << (*r.witness_in_level ? "true" : "false") << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Induced representations of PSL(2,Z) from Selberg characters of Gamma0(4)"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--cache-dir", opt.cache_dir, "Directory for cached Schreier data")->envname(DiskCache::kEnvVar);
  app.add_option("--cap", opt.cap, "Maximum number of group elements to enumerate")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-modulus", opt.max_modulus, "Largest n for which PSL(2,Z/n) is enumerated")
      ->check(CLI::Range(2u, 1u << 15))
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "Seed for sampled checks")->capture_default_str();

  std::string element, alpha;
  bool gamma04 = false, verify = false, full_range = false;
  std::int64_t max_den = 0, d = 0;
  unsigned k = 3;
  std::size_t samples = 500;

  auto* decompose = app.add_subcommand("decompose", "Write an element as a word in S, T (or T, V)");
  decompose->add_option("element", element, "Matrix [[a,b],[c,d]] or word such as \"S T^-2\"")->required();
  decompose->add_flag("--gamma04", gamma04, "Decompose in the free basis T, V of Gamma0(4)");

  auto* rep = app.add_subcommand("rep", "Print U_alpha(g)");
  rep->add_option("--alpha", alpha, "Exact fraction p/q")->required();
  rep->add_option("element", element, "Matrix or word")->required();

  auto* kinfo = app.add_subcommand("kernel-info", "Invariants of ker U_alpha");
  kinfo->add_option("--alpha", alpha, "Exact fraction p/q")->required();
  kinfo->add_flag("--verify", verify, "Cross-check by enumerating the image group");

  auto* cong = app.add_subcommand("congruence", "Decide whether ker U_alpha is a congruence subgroup");
  cong->add_option("--alpha", alpha, "Exact fraction p/q")->required();

  auto* scan_cmd = app.add_subcommand("scan", "Classify all reduced p/q with q <= Q");
  scan_cmd->add_option("--max-den", max_den, "Largest denominator Q")->required();
  scan_cmd->add_flag("--full-range", full_range, "Scan [0,1) instead of [0,1/2]");

  auto* gd = app.add_subcommand("gamma-d", "Area bound arithmetic for Gamma_d");
  gd->add_option("d", d, "Index of Gamma_d in Gamma0(4)")->required();

  auto* abelian = app.add_subcommand("abelian", "Sample commutators of Gamma(4)");
  abelian->add_option("--k", k, "Test commutators against Gamma(2^(k+2))")->capture_default_str();
  abelian->add_option("--samples", samples, "Number of sampled pairs")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    SchreierCache cache(opt.max_modulus, DiskCache::from_flag_or_env(opt.cache_dir));
    if (*decompose) return cmd_decompose(opt, element, gamma04);
    if (*rep) return cmd_rep(opt, alpha, element);
    if (*kinfo) return cmd_kernel_info(opt, alpha, verify);
    if (*cong) return cmd_congruence(opt, alpha, cache);
    if (*scan_cmd) return cmd_scan(opt, max_den, full_range, cache);
    if (*gd) return cmd_gamma_d(opt, d);
    if (*abelian) return cmd_abelian(opt, k, samples);
  } catch (const indrep::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const MembershipError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMembership;
  } catch (const GroupTooLarge& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCap;
  } catch (const ModulusBoundExceeded& e) {
    std::cerr << "undecided: " << e.what() << '\n';
    return kUndecided;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  }
  return kParse;
}
