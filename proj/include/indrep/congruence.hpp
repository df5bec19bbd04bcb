#pragma once

// Invariants of ker U_α, the congruence decision with certificates, and the
// area/eigenvalue-bound arithmetic for the genus-0 groups Γ_d = ker χ_{n/d}.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "group_engine.hpp"
#include "induced_rep.hpp"
#include "psl2z.hpp"
#include "selberg_character.hpp"

namespace indrep {

using Rational = boost::rational<std::int64_t>;

/// g = 1 + μ/12 - t/2 with t = μ/level, for a normal subgroup of
/// PSL(2,Z) of index μ and level `level`.
inline Rational newman_genus(std::int64_t mu, std::int64_t level) {
  if (level <= 0 || mu <= 0 || mu % level != 0)
    throw std::domain_error("newman_genus: level must divide the index");
  std::int64_t t = mu / level;
  return Rational(1) + Rational(mu, 12) - Rational(t, 2);
}

/// Least m >= 1 with U_α(T)^m = 1, i.e. the cusp width at ∞ of ker U_α.
inline std::uint64_t wohlfahrt_level(const Alpha& a) {
  return mono_order(u_alpha(a, ModularElement::T()));
}

struct KernelReport {
  struct CrossChecks {
    std::uint64_t group_order = 0;     // |G_α| by enumeration
    std::uint64_t diagonal_order = 0;  // |A_α| by enumeration
    std::uint64_t t_order = 0;         // mono_order(U_α(T))
  };

  Alpha alpha;
  std::int64_t N = 0;
  std::int64_t index = 0;  // μ
  std::int64_t genus = 0;
  std::int64_t cusps = 0;
  std::int64_t level = 0;
  std::int64_t free_generators = 0;
  Rational area_over_pi;          // μ/3
  Rational gauss_bonnet_over_pi;  // 2(2g - 2 + p)
  std::optional<CrossChecks> cross_checks;
};

/// Closed-form invariants of ker U_α; with `verify`, also enumerates G_α and
/// A_α and throws std::logic_error on any disagreement.
inline KernelReport kernel_report(const Alpha& a, bool verify, std::size_t cap = kDefaultCap) {
  KernelReport r;
  r.alpha = a;
  r.N = a.n();
  if (r.N > 100'000) throw std::overflow_error("kernel_report: N too large for 64-bit invariants");
  const std::int64_t n = r.N, n2 = n * n, n3 = n2 * n;
  r.index = 24 * n3;
  r.genus = 1 + 2 * n3 - 3 * n2;
  r.cusps = 6 * n2;
  r.level = 4 * n;
  r.free_generators = 4 * n3 + 1;
  r.area_over_pi = Rational(r.index, 3);
  r.gauss_bonnet_over_pi = Rational(2 * (2 * r.genus - 2 + r.cusps));

  if (newman_genus(r.index, r.level) != Rational(r.genus) || r.area_over_pi != r.gauss_bonnet_over_pi ||
      2 * r.genus + r.cusps != 4 * n3 + 2 || r.free_generators != 2 * r.genus + r.cusps - 1)
    throw std::logic_error("kernel_report: invariant formulas are inconsistent");

  if (verify) {
    if (static_cast<std::uint64_t>(r.index) > cap)
      throw GroupTooLarge(0, cap);  // refuse before enumerating
    auto g = image_group(a, cap);
    KernelReport::CrossChecks checks{g.order(), diagonal_subgroup(g).order(), wohlfahrt_level(a)};
    if (checks.group_order != static_cast<std::uint64_t>(r.index) ||
        checks.diagonal_order != static_cast<std::uint64_t>(n3) ||
        checks.t_order != static_cast<std::uint64_t>(r.level))
      throw std::logic_error("kernel_report: enumeration disagrees with the invariant formulas for alpha=" +
                             a.to_string());
    r.cross_checks = checks;
  }
  return r;
}

// ---------------------------------------------------------------------------

enum class KernelId { Gamma4, Gamma8, Noncongruence };

inline std::string to_string(KernelId k) {
  switch (k) {
    case KernelId::Gamma4:
      return "Gamma(4)";
    case KernelId::Gamma8:
      return "Gamma(8)";
    default:
      return "noncongruence";
  }
}

struct CongruenceWitness {
  ModularElement matrix;  // in Γ(checked_level), outside ker U_α
  STWord word;
  Monomial image;  // U_α(matrix) ≠ 1
};

struct CongruenceCertificate {
  Alpha alpha;
  std::int64_t N = 0;
  bool congruent = false;
  KernelId kernel = KernelId::Noncongruence;
  unsigned checked_level = 0;
  std::size_t generators_checked = 0;
  std::optional<std::uint64_t> image_order;  // |G_α|, recorded for the Γ(8) double inclusion
  std::optional<CongruenceWitness> witness;
};

/// Thrown when 4N exceeds the modulus bound; the verdict is left open.
class UndecidedAtBound : public ModulusBoundExceeded {
 public:
  using ModulusBoundExceeded::ModulusBoundExceeded;
};

/// Decides whether Γ(4N) ⊆ ker U_α, which for a normal subgroup of level 4N
/// is equivalent to ker U_α being a congruence subgroup.
inline CongruenceCertificate decide_congruence(const Alpha& a, SchreierCache& cache,
                                               std::size_t cap = kDefaultCap) {
  CongruenceCertificate cert;
  cert.alpha = a;
  cert.N = a.n();
  if (cert.N > static_cast<std::int64_t>(cache.max_modulus() / 4))
    throw UndecidedAtBound(static_cast<unsigned>(std::min<std::int64_t>(4 * cert.N, UINT32_MAX)),
                           cache.max_modulus());
  cert.checked_level = static_cast<unsigned>(4 * cert.N);

  KernelInclusion inc = contains_gamma_n_in_kernel(a, cert.checked_level, cache);
  cert.generators_checked = inc.generators_checked;
  if (!inc.contained) {
    const ModularElement& w = inc.witness->matrix;
    cert.witness = CongruenceWitness{w, decompose_st(w), u_alpha(a, w)};
    return cert;
  }

  cert.congruent = true;
  if (cert.N == 1) {
    cert.kernel = KernelId::Gamma4;
  } else if (cert.N == 2) {
    // Γ(8) ⊆ ker U_α by the scan; equal indices give ker U_α = Γ(8).
    auto order = image_group(a, cap).order();
    if (order != index_gamma(8))
      throw std::logic_error("decide_congruence: |G_alpha| != [PSL(2,Z):Gamma(8)] for alpha=" + a.to_string());
    cert.image_order = order;
    cert.kernel = KernelId::Gamma8;
  } else {
    throw std::logic_error("decide_congruence: Gamma(4N) inside ker U_alpha with N >= 3 for alpha=" +
                           a.to_string());
  }
  return cert;
}

inline CongruenceCertificate decide_congruence(const Alpha& a, unsigned max_modulus = kDefaultMaxModulus) {
  SchreierCache cache(max_modulus);
  return decide_congruence(a, cache);
}

/// Re-checks a certificate's witness from scratch.
inline bool witness_reverifies(const CongruenceCertificate& cert) {
  if (!cert.witness) return false;
  const auto& w = *cert.witness;
  return in_gamma(w.matrix, cert.checked_level) && eval_word(w.word) == w.matrix &&
         u_alpha(cert.alpha, w.matrix) == w.image && !w.image.is_identity() &&
         !in_ker_u_by_conjugation(cert.alpha, w.matrix);
}

// ---------------------------------------------------------------------------

/// Random product of length 1..max_len in g₁..g₅ and their inverses.
template <class Rng>
ModularElement random_gamma4_element(Rng& rng, int max_len = 10) {
  const auto& gens = gamma4_generators();
  std::uniform_int_distribution<int> len_dist(1, max_len);
  std::uniform_int_distribution<int> gen_dist(0, 9);
  ModularElement m;
  for (int len = len_dist(rng); len > 0; --len) {
    int g = gen_dist(rng);
    m *= g < 5 ? gens[g] : gens[g - 5].inverse();
  }
  return m;
}

struct AbelianProbeReport {
  unsigned k = 0;
  std::uint64_t level = 0;  // 2^{k+2}
  std::size_t samples = 0;
  std::size_t in_level = 0;  // sampled commutators lying in Γ(level)
  std::optional<std::pair<ModularElement, ModularElement>> first_failure;
  // For k >= 3: h₁ = [[1,4],[0,1]], h₂ = [[-1,0],[4,-1]], (h₁h₂)⁻¹(h₂h₁).
  std::optional<ModularElement> witness_commutator;
  std::optional<bool> witness_in_level;

  bool all_in_level() const noexcept { return in_level == samples; }
};

/// Samples commutators (h₁h₂)⁻¹(h₂h₁) of random h₁, h₂ ∈ Γ(4) and tests them
/// against Γ(2^{k+2}); for k >= 3 also evaluates the explicit non-commuting pair.
inline AbelianProbeReport abelianness_probe(unsigned k, std::size_t samples, std::uint64_t seed) {
  if (k > 60) throw std::domain_error("abelianness_probe: k too large");
  AbelianProbeReport r;
  r.k = k;
  r.level = std::uint64_t{1} << (k + 2);
  r.samples = samples;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    ModularElement h1 = random_gamma4_element(rng);
    ModularElement h2 = random_gamma4_element(rng);
    if (in_gamma(commutator(h1, h2), BigInt(r.level)))
      ++r.in_level;
    else if (!r.first_failure)
      r.first_failure = std::make_pair(h1, h2);
  }
  if (k >= 3) {
    ModularElement c = commutator(ModularElement(1, 4, 0, 1), ModularElement(-1, 0, 4, -1));
    r.witness_in_level = in_gamma(c, BigInt(r.level));
    r.witness_commutator = std::move(c);
  }
  return r;
}

// ---------------------------------------------------------------------------

struct GammaDInfo {
  std::int64_t d = 0;
  std::int64_t index_in_psl = 0;
  std::int64_t genus = 0;
  std::int64_t cusps = 0;
  std::int64_t parabolic_generators = 0;  // subject to S₁⋯S_{d+2} = 1
  Rational area_over_pi;
  Rational gauss_bonnet_over_pi;
  bool zograf_applicable = false;
  bool congruence_excluded_by_bound = false;
  bool known_congruent = false;
};

/// Γ_d has signature (0; d+2) and area 2πd. If it were a congruence group with
/// A ≥ 32π(g+1), then 3/16 ≤ λ₁ < 8π(g+1)/A would have to hold.
inline GammaDInfo gamma_d_info(std::int64_t d) {
  if (d < 1) throw std::domain_error("gamma_d_info: d must be >= 1");
  if (d > (std::int64_t{1} << 40)) throw std::overflow_error("gamma_d_info: d too large");
  GammaDInfo g;
  g.d = d;
  g.index_in_psl = 6 * d;
  g.genus = 0;
  g.cusps = d + 2;
  g.parabolic_generators = d + 2;
  g.area_over_pi = Rational(2 * d);
  g.gauss_bonnet_over_pi = Rational(2 * (2 * g.genus - 2 + g.cusps));
  g.zograf_applicable = g.area_over_pi >= Rational(32 * (g.genus + 1));
  // 3/16 < 8π(g+1)/A  with A = π·area_over_pi
  const bool bound_compatible = Rational(3, 16) < Rational(8 * (g.genus + 1)) / g.area_over_pi;
  g.congruence_excluded_by_bound = g.zograf_applicable && !bound_compatible;
  g.known_congruent = d == 1 || d == 2 || d == 4 || d == 8;
  return g;
}

// ---------------------------------------------------------------------------

struct ScanRow {
  KernelReport report;
  CongruenceCertificate certificate;
};

/// All reduced p/q with q <= max_den in [0, 1/2] (or [0, 1) with
/// `full_range`), ascending by value.
inline std::vector<Alpha> scan_alphas(std::int64_t max_den, bool full_range) {
  if (max_den < 1) throw std::domain_error("scan: max denominator must be >= 1");
  std::vector<Alpha> out;
  for (std::int64_t q = 1; q <= max_den; ++q)
    for (std::int64_t p = 0; p < q; ++p) {
      if (std::gcd(p, q) != 1 && !(p == 0 && q == 1)) continue;
      if (!full_range && 2 * p > q) continue;
      out.emplace_back(p, q);
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<ScanRow> scan(std::int64_t max_den, bool full_range, SchreierCache& cache,
                                 std::size_t cap = kDefaultCap) {
  std::vector<ScanRow> rows;
  for (const Alpha& a : scan_alphas(max_den, full_range))
    rows.push_back({kernel_report(a, false, cap), decide_congruence(a, cache, cap)});
  return rows;
}

}  // namespace indrep
