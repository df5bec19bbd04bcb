#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include "errors.hpp"

namespace indrep {

/// An element k/m of Q/Z, standing for the root of unity e^{2πi k/m}.
/// Always reduced with 0 <= k < m; zero is 0/1.
class Phase {
 public:
  constexpr Phase() = default;

  Phase(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("Phase: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    num %= den;
    if (num < 0) num += den;
    std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
  }

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_ == 0; }

  /// Multiplicative order of the root of unity.
  std::int64_t order() const noexcept { return den_; }

  friend Phase operator+(const Phase& x, const Phase& y) {
    __int128 g = std::gcd(x.den_, y.den_);
    __int128 den = static_cast<__int128>(x.den_) / g * y.den_;
    __int128 num = static_cast<__int128>(x.num_) * (den / x.den_) +
                   static_cast<__int128>(y.num_) * (den / y.den_);
    return from_wide(num, den);
  }
  friend Phase operator-(const Phase& x) { return Phase(-x.num_, x.den_); }
  friend Phase operator-(const Phase& x, const Phase& y) { return x + (-y); }
  Phase& operator+=(const Phase& y) { return *this = *this + y; }

  friend bool operator==(const Phase&, const Phase&) = default;
  friend auto operator<=>(const Phase&, const Phase&) = default;

  /// "0" for the zero phase, otherwise "k/m".
  std::string to_string() const {
    if (num_ == 0) return "0";
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Phase& p) { return os << p.to_string(); }

 private:
  static Phase from_wide(__int128 num, __int128 den) {
    num %= den;
    if (num < 0) num += den;
    // den fits in 128 bits; reduce before narrowing
    __int128 a = num, b = den;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    num /= a;
    den /= a;
    if (den > INT64_MAX) throw std::overflow_error("Phase: denominator overflow");
    Phase p;
    p.num_ = static_cast<std::int64_t>(num);
    p.den_ = static_cast<std::int64_t>(den);
    return p;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Phase phase_add(const Phase& x, const Phase& y) { return x + y; }
inline Phase phase_neg(const Phase& x) { return -x; }

/// k·p in Q/Z.
inline Phase phase_scale(const Phase& p, std::int64_t k) {
  __int128 num = static_cast<__int128>(k % p.den()) * p.num();
  return Phase(static_cast<std::int64_t>(num % p.den()), p.den());
}

/// Parses "k/m", or a bare integer (which is the zero phase).
inline Phase parse_phase(const std::string& s) {
  auto slash = s.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      std::int64_t k = std::stoll(s, &used);
      if (used != s.size()) throw ParseError("bad phase '" + s + "'");
      return Phase(k, 1);
    }
    std::int64_t k = std::stoll(s.substr(0, slash), &used);
    if (used != slash) throw ParseError("bad phase '" + s + "'");
    std::string rest = s.substr(slash + 1);
    std::int64_t m = std::stoll(rest, &used);
    if (used != rest.size() || m == 0) throw ParseError("bad phase '" + s + "'");
    return Phase(k, m);
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const ParseError*>(&e)) throw;
    throw ParseError("bad phase '" + s + "'");
  }
}

}  // namespace indrep
