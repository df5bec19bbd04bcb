#pragma once

// The 6-dimensional monomial representation U_α of PSL(2,Z) induced from χ_α
// on Γ₀(4), with the fixed right-coset representatives
//   R = (Id, S, ST, ST², ST³, ST²S).

#include <array>
#include <cstdint>
#include <stdexcept>

#include "monomial.hpp"
#include "psl2z.hpp"
#include "selberg_character.hpp"

namespace indrep {

inline constexpr std::size_t kCosetCount = 6;

/// R in its fixed order; rows and columns of every U_α(g) follow it.
inline const std::array<ModularElement, kCosetCount>& coset_reps() {
  static const std::array<ModularElement, kCosetCount> reps = [] {
    const auto S = ModularElement::S();
    const auto T = ModularElement::T();
    return std::array<ModularElement, kCosetCount>{
        ModularElement::identity(), S, S * T, S * power(T, 2), S * power(T, 3), S * power(T, 2) * S};
  }();
  return reps;
}

namespace detail {

struct SmallMat4 {
  int a, b, c, d;
};

inline SmallMat4 reduce4(const ModularElement& m) {
  auto r = [](const BigInt& x) { return static_cast<int>(mod_floor(x, BigInt(4))); };
  return {r(m.a()), r(m.b()), r(m.c()), r(m.d())};
}

inline const std::array<SmallMat4, kCosetCount>& coset_reps_mod4() {
  static const auto reps = [] {
    std::array<SmallMat4, kCosetCount> out{};
    for (std::size_t i = 0; i < kCosetCount; ++i) out[i] = reduce4(coset_reps()[i]);
    return out;
  }();
  return reps;
}

inline const std::array<ModularElement, kCosetCount>& coset_reps_inverse() {
  static const auto inv = [] {
    std::array<ModularElement, kCosetCount> out;
    for (std::size_t i = 0; i < kCosetCount; ++i) out[i] = coset_reps()[i].inverse();
    return out;
  }();
  return inv;
}

/// For each column j, the unique row i with r_i g r_j⁻¹ ∈ Γ₀(4).
/// The row test only needs g r_j⁻¹ mod 4.
inline std::array<std::uint8_t, kCosetCount> coset_rows(const ModularElement& g,
                                                        std::array<ModularElement, kCosetCount>* grj) {
  std::array<std::uint8_t, kCosetCount> rows{};
  for (std::size_t j = 0; j < kCosetCount; ++j) {
    ModularElement h = g * coset_reps_inverse()[j];
    SmallMat4 h4 = reduce4(h);
    int found = -1;
    for (std::size_t i = 0; i < kCosetCount; ++i) {
      const SmallMat4& r = coset_reps_mod4()[i];
      if ((r.c * h4.a + r.d * h4.c) % 4 == 0) {
        if (found >= 0) throw std::logic_error("coset representatives are not distinct mod Gamma0(4)");
        found = static_cast<int>(i);
      }
    }
    if (found < 0) throw std::logic_error("coset representatives do not cover PSL(2,Z)");
    rows[j] = static_cast<std::uint8_t>(found);
    if (grj) (*grj)[j] = std::move(h);
  }
  return rows;
}

}  // namespace detail

/// [U_α(g)]_{ij} = δ_{Γ₀(4)}(r_i g r_j⁻¹) χ_α(r_i g r_j⁻¹).
inline Monomial u_alpha(const Alpha& a, const ModularElement& g) {
  std::array<ModularElement, kCosetCount> grj;
  auto rows = detail::coset_rows(g, &grj);
  Monomial::Phases phases{};
  if (!a.phase().is_zero())
    for (std::size_t j = 0; j < kCosetCount; ++j) phases[j] = chi(a, coset_reps()[rows[j]] * grj[j]);
  return Monomial(rows, phases);
}

/// The permutation representation induced from the trivial character.
inline Monomial u_zero(const ModularElement& g) {
  return Monomial(detail::coset_rows(g, nullptr), {});
}

/// D_α(g) = diag(χ_α(r_i g r(i)⁻¹)), where r(i) is the unique representative
/// with r_i g r(i)⁻¹ ∈ Γ₀(4). Computed row by row, independently of u_alpha.
inline Monomial d_alpha(const Alpha& a, const ModularElement& g) {
  Monomial::Phases phases{};
  for (std::size_t i = 0; i < kCosetCount; ++i) {
    const ModularElement rig = coset_reps()[i] * g;
    int found = -1;
    for (std::size_t k = 0; k < kCosetCount; ++k) {
      if (in_gamma0(rig * detail::coset_reps_inverse()[k], 4)) {
        if (found >= 0) throw std::logic_error("coset representatives are not distinct mod Gamma0(4)");
        found = static_cast<int>(k);
      }
    }
    if (found < 0) throw std::logic_error("coset representatives do not cover PSL(2,Z)");
    phases[i] = chi(a, rig * detail::coset_reps_inverse()[found]);
  }
  return Monomial::diagonal(phases);
}

inline bool in_ker_u(const Alpha& a, const ModularElement& g) { return u_alpha(a, g).is_identity(); }

/// Same predicate through conjugation: r g r⁻¹ ∈ ker χ_α for all r ∈ R.
inline bool in_ker_u_by_conjugation(const Alpha& a, const ModularElement& g) {
  for (std::size_t i = 0; i < kCosetCount; ++i)
    if (!in_ker_chi(a, coset_reps()[i] * g * detail::coset_reps_inverse()[i])) return false;
  return true;
}

/// g₁ = T⁴, g₂ = ST⁻⁴S, g₃ = T⁻¹ST⁴ST, g₄ = T⁻²ST⁻⁴ST⁻², g₅ = TST⁻⁴ST⁻¹;
/// together they generate Γ(4).
inline const std::array<ModularElement, 5>& gamma4_generators() {
  static const std::array<ModularElement, 5> gens = {
      eval_word(parse_word("T^4")),
      eval_word(parse_word("S T^-4 S")),
      eval_word(parse_word("T^-1 S T^4 S T")),
      eval_word(parse_word("T^-2 S T^-4 S T^-2")),
      eval_word(parse_word("T S T^-4 S T^-1")),
  };
  return gens;
}

/// (U_α(g₁), U_α(g₂), U_α(g₃)), the generators of A_α = U_α(Γ(4)).
inline std::array<Monomial, 3> a_generators(const Alpha& a) {
  const auto& g = gamma4_generators();
  return {u_alpha(a, g[0]), u_alpha(a, g[1]), u_alpha(a, g[2])};
}

}  // namespace indrep
