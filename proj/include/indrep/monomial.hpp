#pragma once

// Monomial matrices with root-of-unity entries: a permutation (the Weyl part)
// together with one phase per column (the diagonal part).

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

#include "phase.hpp"

namespace indrep {

/// The matrix sending basis vector e_j to e^{2πi·phase[j]} e_{perm[j]}.
/// Indices are 0-based internally; text and JSON renderings are 1-based.
template <std::size_t Dim>
class BasicMonomial {
 public:
  using Perm = std::array<std::uint8_t, Dim>;
  using Phases = std::array<Phase, Dim>;
  using Dense = std::array<std::array<std::optional<Phase>, Dim>, Dim>;

  BasicMonomial() {
    for (std::size_t j = 0; j < Dim; ++j) perm_[j] = static_cast<std::uint8_t>(j);
  }

  BasicMonomial(const Perm& perm, const Phases& phases) : perm_(perm), phases_(phases) {
    std::array<bool, Dim> seen{};
    for (auto p : perm_) {
      if (p >= Dim || seen[p]) throw std::invalid_argument("BasicMonomial: not a permutation");
      seen[p] = true;
    }
  }

  static BasicMonomial identity() { return {}; }

  static BasicMonomial diagonal(const Phases& phases) {
    BasicMonomial m;
    m.phases_ = phases;
    return m;
  }

  const Perm& perm() const noexcept { return perm_; }
  const Phases& phases() const noexcept { return phases_; }

  bool is_diagonal() const noexcept {
    for (std::size_t j = 0; j < Dim; ++j)
      if (perm_[j] != j) return false;
    return true;
  }

  bool is_identity() const noexcept {
    if (!is_diagonal()) return false;
    for (const auto& p : phases_)
      if (!p.is_zero()) return false;
    return true;
  }

  /// (π¹,φ¹)·(π²,φ²) = (π¹∘π², j ↦ φ²_j + φ¹_{π²(j)}).
  friend BasicMonomial operator*(const BasicMonomial& x, const BasicMonomial& y) {
    BasicMonomial r;
    for (std::size_t j = 0; j < Dim; ++j) {
      r.perm_[j] = x.perm_[y.perm_[j]];
      r.phases_[j] = y.phases_[j] + x.phases_[y.perm_[j]];
    }
    return r;
  }

  BasicMonomial& operator*=(const BasicMonomial& y) { return *this = *this * y; }

  BasicMonomial inverse() const {
    BasicMonomial r;
    for (std::size_t j = 0; j < Dim; ++j) {
      r.perm_[perm_[j]] = static_cast<std::uint8_t>(j);
      r.phases_[perm_[j]] = -phases_[j];
    }
    return r;
  }

  /// Least n >= 1 with xⁿ = 1: the lcm over cycles of
  /// (cycle length × order of the phase sum around the cycle).
  std::uint64_t order() const {
    std::array<bool, Dim> seen{};
    std::uint64_t result = 1;
    for (std::size_t start = 0; start < Dim; ++start) {
      if (seen[start]) continue;
      std::uint64_t len = 0;
      Phase sum;
      for (std::size_t j = start; !seen[j]; j = perm_[j]) {
        seen[j] = true;
        sum += phases_[j];
        ++len;
      }
      result = std::lcm(result, len * static_cast<std::uint64_t>(sum.order()));
    }
    return result;
  }

  /// Entry (perm[j], j) holds phase[j]; every other entry is empty (zero).
  Dense to_dense() const {
    Dense d{};
    for (std::size_t j = 0; j < Dim; ++j) d[perm_[j]][j] = phases_[j];
    return d;
  }

  friend bool operator==(const BasicMonomial&, const BasicMonomial&) = default;
  friend auto operator<=>(const BasicMonomial&, const BasicMonomial&) = default;

 private:
  Perm perm_{};
  Phases phases_{};
};

using Monomial = BasicMonomial<6>;

template <std::size_t Dim>
BasicMonomial<Dim> mono_mul(const BasicMonomial<Dim>& x, const BasicMonomial<Dim>& y) {
  return x * y;
}

template <std::size_t Dim>
std::uint64_t mono_order(const BasicMonomial<Dim>& x) {
  return x.order();
}

template <std::size_t Dim>
typename BasicMonomial<Dim>::Dense to_dense(const BasicMonomial<Dim>& x) {
  return x.to_dense();
}

/// Rows of `0` / `e(k/m)` cells, space-aligned.
template <std::size_t Dim>
std::string render_dense(const BasicMonomial<Dim>& x) {
  auto dense = x.to_dense();
  std::array<std::array<std::string, Dim>, Dim> cells;
  std::size_t width = 1;
  for (std::size_t i = 0; i < Dim; ++i)
    for (std::size_t j = 0; j < Dim; ++j) {
      cells[i][j] = dense[i][j] ? "e(" + dense[i][j]->to_string() + ")" : "0";
      width = std::max(width, cells[i][j].size());
    }
  std::string out;
  for (std::size_t i = 0; i < Dim; ++i) {
    for (std::size_t j = 0; j < Dim; ++j) {
      if (j) out += ' ';
      out += std::string(width - cells[i][j].size(), ' ') + cells[i][j];
    }
    out += '\n';
  }
  return out;
}

}  // namespace indrep

template <std::size_t Dim>
struct std::hash<indrep::BasicMonomial<Dim>> {
  std::size_t operator()(const indrep::BasicMonomial<Dim>& m) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t v) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    for (std::size_t j = 0; j < Dim; ++j) {
      mix(m.perm()[j]);
      mix(static_cast<std::uint64_t>(m.phases()[j].num()) * 1000003ULL +
          static_cast<std::uint64_t>(m.phases()[j].den()));
    }
    return static_cast<std::size_t>(h);
  }
};
