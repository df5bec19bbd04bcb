#pragma once

// Exact arithmetic in the modular group PSL(2,Z) = SL(2,Z)/{±1}.

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace indrep {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

inline BigInt mod_floor(const BigInt& x, const BigInt& n) {
  BigInt r = x % n;
  if (r < 0) r += n;
  return r;
}

inline std::int64_t mod_floor(std::int64_t x, std::int64_t n) {
  std::int64_t r = x % n;
  return r < 0 ? r + n : r;
}

// Nearest integer to num/den (den != 0); exact halves go toward the smaller
// magnitude, then toward +.
inline BigInt nearest_quotient(const BigInt& num, const BigInt& den) {
  BigInt q = num / den;  // truncates toward zero
  BigInt best = q;
  BigInt best_err = abs(num - q * den);
  for (const BigInt& cand : {BigInt(q - 1), BigInt(q + 1)}) {
    BigInt err = abs(num - cand * den);
    if (err < best_err ||
        (err == best_err && (abs(cand) < abs(best) || (abs(cand) == abs(best) && cand > best)))) {
      best = cand;
      best_err = err;
    }
  }
  return best;
}

inline std::int64_t to_i64(const BigInt& x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("exponent does not fit in 64 bits");
  return static_cast<std::int64_t>(x);
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

inline void skip_space(std::string_view s, std::size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

inline BigInt parse_bigint(std::string_view s, std::size_t& pos) {
  skip_space(s, pos);
  bool neg = false;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
    neg = s[pos] == '-';
    ++pos;
  }
  std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (start == pos) throw ParseError("expected an integer in '" + std::string(s) + "'");
  BigInt v(std::string(s.substr(start, pos - start)));
  return neg ? BigInt(-v) : v;
}

inline void expect_char(std::string_view s, std::size_t& pos, char c) {
  skip_space(s, pos);
  if (pos >= s.size() || s[pos] != c)
    throw ParseError(std::string("expected '") + c + "' in '" + std::string(s) + "'");
  ++pos;
}

}  // namespace detail

/// An element of PSL(2,Z), stored as the sign-canonical representative of
/// ±[[a,b],[c,d]]: c > 0, or c = 0 and d > 0.
class ModularElement {
 public:
  ModularElement() : a_(1), b_(0), c_(0), d_(1) {}

  /// Throws ParseError unless ad - bc = 1.
  ModularElement(BigInt a, BigInt b, BigInt c, BigInt d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (a_ * d_ - b_ * c_ != 1) throw ParseError("matrix does not have determinant 1");
    canonicalize();
  }

  static ModularElement identity() { return {}; }
  static ModularElement S() { return ModularElement(0, -1, 1, 0); }
  static ModularElement T(const BigInt& k = 1) { return ModularElement(1, k, 0, 1); }

  const BigInt& a() const noexcept { return a_; }
  const BigInt& b() const noexcept { return b_; }
  const BigInt& c() const noexcept { return c_; }
  const BigInt& d() const noexcept { return d_; }

  bool is_identity() const { return c_ == 0 && b_ == 0 && a_ == 1; }

  ModularElement inverse() const { return unchecked(d_, -b_, -c_, a_); }

  friend ModularElement operator*(const ModularElement& x, const ModularElement& y) {
    return unchecked(x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
                     x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_);
  }

  ModularElement& operator*=(const ModularElement& y) { return *this = *this * y; }

  friend bool operator==(const ModularElement& x, const ModularElement& y) = default;

  /// Lexicographic on (a,b,c,d) of the canonical form.
  friend bool operator<(const ModularElement& x, const ModularElement& y) {
    return std::tie(x.a_, x.b_, x.c_, x.d_) < std::tie(y.a_, y.b_, y.c_, y.d_);
  }

  std::string to_string() const {
    std::ostringstream os;
    os << "[[" << a_ << "," << b_ << "],[" << c_ << "," << d_ << "]]";
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const ModularElement& m) {
    return os << m.to_string();
  }

 private:
  // For products of valid elements, where the determinant is known to be 1.
  static ModularElement unchecked(BigInt a, BigInt b, BigInt c, BigInt d) {
    ModularElement m;
    m.a_ = std::move(a);
    m.b_ = std::move(b);
    m.c_ = std::move(c);
    m.d_ = std::move(d);
    m.canonicalize();
    return m;
  }

  void canonicalize() {
    bool keep = c_ > 0 || (c_ == 0 && (d_ > 0 || (d_ == 0 && a_ > 0)));
    if (!keep) {
      a_ = -a_;
      b_ = -b_;
      c_ = -c_;
      d_ = -d_;
    }
  }

  BigInt a_, b_, c_, d_;
};

inline ModularElement mul(const ModularElement& x, const ModularElement& y) { return x * y; }
inline ModularElement inv(const ModularElement& x) { return x.inverse(); }

/// x^k for any integer k, by repeated squaring.
inline ModularElement power(ModularElement x, std::int64_t k) {
  if (k < 0) {
    x = x.inverse();
    k = -k;
  }
  ModularElement r;
  while (k > 0) {
    if (k & 1) r *= x;
    x *= x;
    k >>= 1;
  }
  return r;
}

/// (xy)⁻¹(yx) = y⁻¹x⁻¹yx.
inline ModularElement commutator(const ModularElement& x, const ModularElement& y) {
  return (x * y).inverse() * (y * x);
}

/// Word over S and T^k, kept freely reduced: T-powers merge, T^0 vanishes and
/// S S cancels (S² = 1 in PSL(2,Z)).
class STWord {
 public:
  struct Token {
    bool is_s = false;
    std::int64_t exp = 0;  // meaningful for T tokens only; never zero

    friend bool operator==(const Token&, const Token&) = default;
  };

  STWord() = default;

  static STWord s() {
    STWord w;
    w.push_s();
    return w;
  }
  static STWord t(std::int64_t k) {
    STWord w;
    w.push_t(k);
    return w;
  }

  void push_s() {
    if (!tokens_.empty() && tokens_.back().is_s)
      tokens_.pop_back();
    else
      tokens_.push_back({true, 0});
  }

  void push_t(std::int64_t k) {
    if (k == 0) return;
    if (!tokens_.empty() && !tokens_.back().is_s) {
      tokens_.back().exp += k;
      if (tokens_.back().exp == 0) tokens_.pop_back();
      return;
    }
    tokens_.push_back({false, k});
  }

  void push(const Token& t) {
    if (t.is_s)
      push_s();
    else
      push_t(t.exp);
  }

  STWord& operator+=(const STWord& rhs) {
    for (const auto& t : rhs.tokens_) push(t);
    return *this;
  }
  friend STWord operator+(STWord lhs, const STWord& rhs) { return lhs += rhs; }

  STWord inverse() const {
    STWord w;
    for (auto it = tokens_.rbegin(); it != tokens_.rend(); ++it)
      w.push(it->is_s ? Token{true, 0} : Token{false, -it->exp});
    return w;
  }

  const std::vector<Token>& tokens() const noexcept { return tokens_; }
  std::size_t size() const noexcept { return tokens_.size(); }
  bool empty() const noexcept { return tokens_.empty(); }

  friend bool operator==(const STWord&, const STWord&) = default;

  /// Space-separated tokens: `S`, `T`, `T^k`, `T^-k`; the empty word is "".
  std::string to_string() const {
    std::string out;
    for (const auto& t : tokens_) {
      if (!out.empty()) out += ' ';
      if (t.is_s)
        out += 'S';
      else if (t.exp == 1)
        out += 'T';
      else
        out += "T^" + std::to_string(t.exp);
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const STWord& w) { return os << w.to_string(); }

 private:
  std::vector<Token> tokens_;
};

inline ModularElement eval_word(const STWord& w) {
  ModularElement m;
  for (const auto& t : w.tokens()) m *= t.is_s ? ModularElement::S() : ModularElement::T(t.exp);
  return m;
}

/// Continued-fraction descent. Each step writes m = T^q S m' with
/// |c(m')| <= |c(m)|/2, so the word has O(log max|entry|) tokens.
inline STWord decompose_st(const ModularElement& m) {
  STWord w;
  BigInt a = m.a(), b = m.b(), c = m.c(), d = m.d();
  while (c != 0) {
    BigInt q = detail::nearest_quotient(a, c);
    // T^{-q} m
    BigInt a1 = a - q * c;
    BigInt b1 = b - q * d;
    // S^{-1} = S: S [[a1,b1],[c,d]] = [[-c,-d],[a1,b1]]
    w.push_t(detail::to_i64(q));
    w.push_s();
    a = -c;
    b = -d;
    c = a1;
    d = b1;
  }
  // ±[[1,b],[0,1]]
  BigInt k = a > 0 ? b : BigInt(-b);
  w.push_t(detail::to_i64(k));
  return w;
}

inline bool in_gamma0(const ModularElement& m, const BigInt& n) {
  return detail::mod_floor(m.c(), n) == 0;
}

/// m ≡ ±Id (mod n).
inline bool in_gamma(const ModularElement& m, const BigInt& n) {
  if (detail::mod_floor(m.b(), n) != 0 || detail::mod_floor(m.c(), n) != 0) return false;
  BigInt a = detail::mod_floor(m.a(), n), d = detail::mod_floor(m.d(), n);
  BigInt one = detail::mod_floor(BigInt(1), n), minus_one = detail::mod_floor(BigInt(-1), n);
  return (a == one && d == one) || (a == minus_one && d == minus_one);
}

/// Membership in the largest normal subgroup of PSL(2,Z) inside Γ₀(n):
/// m ≡ ±diag(s,s) (mod n) with s² ≡ 1.
inline bool in_h(const ModularElement& m, const BigInt& n) {
  if (detail::mod_floor(m.b(), n) != 0 || detail::mod_floor(m.c(), n) != 0) return false;
  BigInt a = detail::mod_floor(m.a(), n);
  if (a != detail::mod_floor(m.d(), n)) return false;
  return detail::mod_floor(BigInt(a * a), n) == detail::mod_floor(BigInt(1), n);
}

inline int delta_gamma04(const ModularElement& m) { return in_gamma0(m, 4) ? 1 : 0; }

/// [PSL(2,Z) : Γ(n)].
inline std::uint64_t index_gamma(std::uint64_t n) {
  if (n < 2) throw std::domain_error("index_gamma: modulus must be >= 2");
  if (n > (1u << 20)) throw std::overflow_error("index_gamma: modulus too large");
  if (n == 2) return 6;
  std::uint64_t num = n * n * n;
  for (auto p : detail::prime_divisors(n)) num = num / (p * p) * (p * p - 1);
  return num / 2;
}

/// [PSL(2,Z) : Γ₀(n)].
inline std::uint64_t index_gamma0(std::uint64_t n) {
  if (n < 1) throw std::domain_error("index_gamma0: modulus must be >= 1");
  std::uint64_t r = n;
  for (auto p : detail::prime_divisors(n)) r = r / p * (p + 1);
  return r;
}

/// An element of PSL(2, Z/n), with entries in [0,n) and the sign chosen so
/// the entry tuple is lexicographically smallest among {g, -g}.
class ResidueElement {
 public:
  ResidueElement(std::uint32_t n, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
      : n_(n) {
    if (n < 2) throw std::domain_error("ResidueElement: modulus must be >= 2");
    const auto nn = static_cast<std::int64_t>(n);
    std::array<std::uint32_t, 4> pos{}, neg{};
    std::array<std::int64_t, 4> in{a, b, c, d};
    for (std::size_t i = 0; i < 4; ++i) {
      pos[i] = static_cast<std::uint32_t>(detail::mod_floor(in[i], nn));
      neg[i] = static_cast<std::uint32_t>(detail::mod_floor(-in[i], nn));
    }
    e_ = std::min(pos, neg);
    if (detail::mod_floor(static_cast<std::int64_t>(e_[0]) * e_[3] -
                              static_cast<std::int64_t>(e_[1]) * e_[2],
                          nn) != 1 % nn)
      throw std::invalid_argument("ResidueElement: determinant is not 1 mod n");
  }

  static ResidueElement identity(std::uint32_t n) { return {n, 1, 0, 0, 1}; }

  static ResidueElement reduce(const ModularElement& m, std::uint32_t n) {
    BigInt nn(n);
    auto r = [&](const BigInt& x) {
      return static_cast<std::int64_t>(detail::mod_floor(x, nn));
    };
    return {n, r(m.a()), r(m.b()), r(m.c()), r(m.d())};
  }

  std::uint32_t modulus() const noexcept { return n_; }
  const std::array<std::uint32_t, 4>& entries() const noexcept { return e_; }

  friend ResidueElement operator*(const ResidueElement& x, const ResidueElement& y) {
    const std::int64_t a = x.e_[0], b = x.e_[1], c = x.e_[2], d = x.e_[3];
    const std::int64_t p = y.e_[0], q = y.e_[1], r = y.e_[2], s = y.e_[3];
    return {x.n_, a * p + b * r, a * q + b * s, c * p + d * r, c * q + d * s};
  }

  ResidueElement inverse() const {
    const std::int64_t a = e_[0], b = e_[1], c = e_[2], d = e_[3];
    return {n_, d, -b, -c, a};
  }

  bool is_identity() const { return *this == identity(n_); }

  /// Injective packing for n < 2^16.
  std::uint64_t key() const noexcept {
    return (std::uint64_t{e_[0]} << 48) | (std::uint64_t{e_[1]} << 32) |
           (std::uint64_t{e_[2]} << 16) | std::uint64_t{e_[3]};
  }

  friend bool operator==(const ResidueElement&, const ResidueElement&) = default;
  friend auto operator<=>(const ResidueElement&, const ResidueElement&) = default;

 private:
  std::uint32_t n_;
  std::array<std::uint32_t, 4> e_{};
};

// ---------------------------------------------------------------------------
// Text formats: matrices `[[a,b],[c,d]]`, words `S T^4 T^-1`.

inline ModularElement parse_matrix(std::string_view s) {
  std::size_t pos = 0;
  detail::expect_char(s, pos, '[');
  detail::expect_char(s, pos, '[');
  BigInt a = detail::parse_bigint(s, pos);
  detail::expect_char(s, pos, ',');
  BigInt b = detail::parse_bigint(s, pos);
  detail::expect_char(s, pos, ']');
  detail::expect_char(s, pos, ',');
  detail::expect_char(s, pos, '[');
  BigInt c = detail::parse_bigint(s, pos);
  detail::expect_char(s, pos, ',');
  BigInt d = detail::parse_bigint(s, pos);
  detail::expect_char(s, pos, ']');
  detail::expect_char(s, pos, ']');
  detail::skip_space(s, pos);
  if (pos != s.size()) throw ParseError("trailing characters in matrix '" + std::string(s) + "'");
  return ModularElement(a, b, c, d);
}

inline STWord parse_word(std::string_view s) {
  STWord w;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) {
    if (tok == "S") {
      w.push_s();
    } else if (tok == "T") {
      w.push_t(1);
    } else if (tok.size() > 2 && tok[0] == 'T' && tok[1] == '^') {
      std::int64_t k = 0;
      const char* first = tok.data() + 2;
      const char* last = tok.data() + tok.size();
      if (*first == '+') ++first;
      auto [ptr, ec] = std::from_chars(first, last, k);
      if (ec != std::errc() || ptr != last) throw ParseError("bad token '" + tok + "'");
      w.push_t(k);
    } else if (tok == "Id" || tok == "I") {
      continue;
    } else {
      throw ParseError("bad token '" + tok + "'");
    }
  }
  return w;
}

/// Accepts either the matrix or the word syntax.
inline ModularElement parse_element(std::string_view s) {
  std::size_t pos = 0;
  detail::skip_space(s, pos);
  if (pos < s.size() && s[pos] == '[') return parse_matrix(s);
  return eval_word(parse_word(s));
}

}  // namespace indrep

template <>
struct std::hash<indrep::ModularElement> {
  std::size_t operator()(const indrep::ModularElement& m) const noexcept {
    std::size_t h = 0;
    for (const auto* x : {&m.a(), &m.b(), &m.c(), &m.d()})
      h ^= boost::multiprecision::hash_value(*x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};
