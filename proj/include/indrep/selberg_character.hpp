#pragma once

// Selberg's character χ_α on Γ₀(4) = <T, V> with V = S T⁴ S, via the free
// normal form of elements of Γ₀(4) in T and V.

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "phase.hpp"
#include "psl2z.hpp"

namespace indrep {

/// Character parameter α = p/q, reduced modulo 1 (χ_α only sees e^{2πiα}).
class Alpha {
 public:
  Alpha() = default;
  Alpha(std::int64_t p, std::int64_t q) : value_(p, q) {}
  explicit Alpha(const Phase& value) : value_(value) {}

  std::int64_t p() const noexcept { return value_.num(); }
  std::int64_t q() const noexcept { return value_.den(); }
  const Phase& phase() const noexcept { return value_; }

  /// min{n >= 1 : q | 4n} = q / gcd(q, 4).
  std::int64_t n() const noexcept { return q() / std::gcd(q(), std::int64_t{4}); }

  /// 1 - α (mod 1).
  Alpha conjugate() const { return Alpha(-value_); }

  std::string to_string() const { return value_.to_string(); }

  friend bool operator==(const Alpha&, const Alpha&) = default;
  /// Orders by numeric value p/q.
  friend bool operator<(const Alpha& x, const Alpha& y) {
    return static_cast<__int128>(x.p()) * y.q() < static_cast<__int128>(y.p()) * x.q();
  }
  friend std::ostream& operator<<(std::ostream& os, const Alpha& a) { return os << a.to_string(); }

 private:
  Phase value_;
};

inline std::int64_t n_of_alpha(const Alpha& a) { return a.n(); }

/// Exact fraction syntax only: `p/q` or an integer. Decimals are rejected.
inline Alpha parse_alpha(const std::string& s) {
  if (s.find_first_of(".eE") != std::string::npos)
    throw ParseError("alpha must be an exact fraction p/q, got '" + s + "'");
  return Alpha(parse_phase(s));
}

/// Freely reduced word in the free generators T and V = S T⁴ S of Γ₀(4).
class Gamma04Word {
 public:
  enum class Gen : std::uint8_t { T, V };
  struct Token {
    Gen gen;
    std::int64_t exp;  // never zero

    friend bool operator==(const Token&, const Token&) = default;
  };

  void push(Gen g, std::int64_t k) {
    if (k == 0) return;
    if (!tokens_.empty() && tokens_.back().gen == g) {
      tokens_.back().exp += k;
      if (tokens_.back().exp == 0) tokens_.pop_back();
      return;
    }
    tokens_.push_back({g, k});
  }

  const std::vector<Token>& tokens() const noexcept { return tokens_; }
  bool empty() const noexcept { return tokens_.empty(); }

  std::int64_t t_exponent() const noexcept {
    std::int64_t s = 0;
    for (const auto& t : tokens_)
      if (t.gen == Gen::T) s += t.exp;
    return s;
  }

  Gamma04Word inverse() const {
    Gamma04Word w;
    for (auto it = tokens_.rbegin(); it != tokens_.rend(); ++it) w.push(it->gen, -it->exp);
    return w;
  }

  friend Gamma04Word operator+(Gamma04Word lhs, const Gamma04Word& rhs) {
    for (const auto& t : rhs.tokens_) lhs.push(t.gen, t.exp);
    return lhs;
  }

  friend bool operator==(const Gamma04Word&, const Gamma04Word&) = default;

  /// Tokens `T^k` / `V^k`, space separated.
  std::string to_string() const {
    std::string out;
    for (const auto& t : tokens_) {
      if (!out.empty()) out += ' ';
      out += t.gen == Gen::T ? "T^" : "V^";
      out += std::to_string(t.exp);
    }
    return out;
  }

 private:
  std::vector<Token> tokens_;
};

/// V = S T⁴ S = ±[[-1,0],[4,-1]].
inline ModularElement gamma04_v() { return ModularElement(-1, 0, 4, -1); }

inline ModularElement eval_gamma04_word(const Gamma04Word& w) {
  ModularElement m;
  for (const auto& t : w.tokens())
    m *= t.gen == Gamma04Word::Gen::T ? ModularElement::T(t.exp)
                                      : ModularElement(1, 0, -4 * BigInt(t.exp), 1);
  return m;
}

/// Ping-pong descent with the parabolics T (fixing ∞) and V (fixing 0).
/// A T-step leaves |a| < |c|/2, a V-step leaves |c| < 2|a| (strict, since a is
/// odd and 4 | c), so |a| + |c| strictly decreases until c = 0.
inline Gamma04Word decompose_gamma04(const ModularElement& m) {
  if (!in_gamma0(m, 4)) throw MembershipError(m.to_string() + " is not in Gamma0(4)");
  Gamma04Word w;
  BigInt a = m.a(), b = m.b(), c = m.c(), d = m.d();
  while (c != 0) {
    // m = T^k · [[a - kc, b - kd], [c, d]]
    BigInt k = detail::nearest_quotient(a, c);
    if (k != 0) {
      w.push(Gamma04Word::Gen::T, detail::to_i64(k));
      a -= k * c;
      b -= k * d;
    }
    // m = V^k · [[a, b], [c + 4ka, d + 4kb]]
    k = detail::nearest_quotient(BigInt(-c), BigInt(4 * a));
    if (k != 0) {
      w.push(Gamma04Word::Gen::V, detail::to_i64(k));
      c += 4 * k * a;
      d += 4 * k * b;
    }
  }
  // ±[[1, b'], [0, 1]] with a = ±1
  w.push(Gamma04Word::Gen::T, detail::to_i64(BigInt(a * b)));
  return w;
}

/// The homomorphism Γ₀(4) → Z sending T ↦ 1, V ↦ 0.
inline std::int64_t t_exponent(const ModularElement& m) { return decompose_gamma04(m).t_exponent(); }

/// χ_α(m) as a phase: t_exponent(m) · α in Q/Z.
inline Phase chi(const Alpha& a, const ModularElement& m) {
  return phase_scale(a.phase(), t_exponent(m));
}

inline bool in_ker_chi(const Alpha& a, const ModularElement& m) {
  return in_gamma0(m, 4) && chi(a, m).is_zero();
}

}  // namespace indrep
