#pragma once

// Finite-group machinery: BFS closure of monomial groups, PSL(2, Z/n) with
// its coset table over {S, T, S⁻¹, T⁻¹}, and Schreier generators of Γ(n).

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cache.hpp"
#include "errors.hpp"
#include "induced_rep.hpp"
#include "monomial.hpp"
#include "psl2z.hpp"

namespace indrep {

inline constexpr std::size_t kDefaultCap = 1'000'000;
inline constexpr unsigned kDefaultMaxModulus = 64;

/// A finite group of monomials listed explicitly, sorted ascending.
class EnumeratedMonomialGroup {
 public:
  EnumeratedMonomialGroup(std::vector<Monomial> elements, std::vector<Monomial> generators)
      : elements_(std::move(elements)), generators_(std::move(generators)) {
    std::sort(elements_.begin(), elements_.end());
  }

  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Monomial>& elements() const noexcept { return elements_; }
  const std::vector<Monomial>& generators() const noexcept { return generators_; }

  bool contains(const Monomial& m) const {
    return std::binary_search(elements_.begin(), elements_.end(), m);
  }

 private:
  std::vector<Monomial> elements_;
  std::vector<Monomial> generators_;
};

/// Closure of `gens` under multiplication. Throws GroupTooLarge once more
/// than `cap` elements have been found.
inline EnumeratedMonomialGroup enumerate_monomial_group(std::span<const Monomial> gens,
                                                        std::size_t cap = kDefaultCap) {
  if (cap < 1) throw std::domain_error("enumerate_monomial_group: cap must be >= 1");
  std::unordered_set<Monomial> seen{Monomial::identity()};
  std::vector<Monomial> order{Monomial::identity()};
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const auto& g : gens) {
      Monomial next = order[head] * g;
      if (seen.insert(next).second) {
        if (seen.size() > cap) throw GroupTooLarge(seen.size() - 1, cap);
        order.push_back(std::move(next));
      }
    }
  }
  return EnumeratedMonomialGroup(std::move(order), {gens.begin(), gens.end()});
}

/// The elements of `g` that are diagonal matrices.
inline EnumeratedMonomialGroup diagonal_subgroup(const EnumeratedMonomialGroup& g) {
  std::vector<Monomial> diag;
  for (const auto& m : g.elements())
    if (m.is_diagonal()) diag.push_back(m);
  return EnumeratedMonomialGroup(std::move(diag), {});
}

/// G_α = <U_α(S), U_α(T)>.
inline EnumeratedMonomialGroup image_group(const Alpha& a, std::size_t cap = kDefaultCap) {
  const std::array<Monomial, 2> gens{u_alpha(a, ModularElement::S()), u_alpha(a, ModularElement::T())};
  return enumerate_monomial_group(gens, cap);
}

// ---------------------------------------------------------------------------

/// One Reidemeister–Schreier generator word(e)·x·word(e·x)⁻¹ of Γ(n).
struct SchreierGenerator {
  ModularElement matrix;
  STWord word;
  std::uint32_t element = 0;  // index of e
  bool is_s = false;          // x = S, otherwise x = T
};

/// PSL(2, Z/n) enumerated by BFS from the identity under right
/// multiplication by S, T, S⁻¹, T⁻¹ (columns 0..3 of the transition table).
struct SchreierData {
  static constexpr std::size_t kGenCount = 4;

  unsigned modulus = 0;
  std::vector<ResidueElement> elements;
  std::vector<STWord> tree_words;
  std::vector<ModularElement> tree_matrices;  // eval_word(tree_words[i])
  std::vector<std::array<std::uint32_t, kGenCount>> table;
  std::vector<SchreierGenerator> generators;

  std::size_t index_of(const ResidueElement& r) const {
    auto it = lookup.find(r.key());
    if (it == lookup.end()) throw std::out_of_range("element not in PSL(2,Z/n) table");
    return it->second;
  }

  std::unordered_map<std::uint64_t, std::uint32_t> lookup;
};

namespace detail {

inline const std::array<ModularElement, SchreierData::kGenCount>& schreier_letters() {
  static const std::array<ModularElement, SchreierData::kGenCount> letters{
      ModularElement::S(), ModularElement::T(), ModularElement::S().inverse(), ModularElement::T(-1)};
  return letters;
}

inline STWord schreier_letter_word(std::size_t g) {
  switch (g) {
    case 0:
    case 2:
      return STWord::s();
    case 1:
      return STWord::t(1);
    default:
      return STWord::t(-1);
  }
}

}  // namespace detail

inline SchreierData enumerate_psl2_zn(unsigned n, unsigned max_modulus = kDefaultMaxModulus) {
  if (n < 2) throw std::domain_error("enumerate_psl2_zn: modulus must be >= 2");
  if (n > max_modulus) throw ModulusBoundExceeded(n, max_modulus);
  const auto& letters = detail::schreier_letters();
  std::array<ResidueElement, SchreierData::kGenCount> letters_mod{
      ResidueElement::reduce(letters[0], n), ResidueElement::reduce(letters[1], n),
      ResidueElement::reduce(letters[2], n), ResidueElement::reduce(letters[3], n)};

  SchreierData data;
  data.modulus = n;
  data.elements.push_back(ResidueElement::identity(n));
  data.tree_words.emplace_back();
  data.tree_matrices.emplace_back();
  data.lookup.emplace(data.elements[0].key(), 0);

  for (std::size_t head = 0; head < data.elements.size(); ++head) {
    std::array<std::uint32_t, SchreierData::kGenCount> row{};
    for (std::size_t g = 0; g < SchreierData::kGenCount; ++g) {
      ResidueElement next = data.elements[head] * letters_mod[g];
      auto [it, inserted] =
          data.lookup.emplace(next.key(), static_cast<std::uint32_t>(data.elements.size()));
      if (inserted) {
        data.elements.push_back(next);
        data.tree_words.push_back(data.tree_words[head] + detail::schreier_letter_word(g));
        data.tree_matrices.push_back(data.tree_matrices[head] * letters[g]);
      }
      row[g] = it->second;
    }
    data.table.push_back(row);
  }

  // word(e) x word(e·x)⁻¹ for x ∈ {S, T}, identities and repeats dropped
  std::unordered_set<ModularElement> seen;
  for (std::uint32_t e = 0; e < data.elements.size(); ++e) {
    for (std::size_t g : {std::size_t{0}, std::size_t{1}}) {
      std::uint32_t target = data.table[e][g];
      ModularElement m = data.tree_matrices[e] * letters[g] * data.tree_matrices[target].inverse();
      if (m.is_identity() || !seen.insert(m).second) continue;
      STWord w = data.tree_words[e] + detail::schreier_letter_word(g) + data.tree_words[target].inverse();
      data.generators.push_back({std::move(m), std::move(w), e, g == 0});
    }
  }
  return data;
}

inline std::vector<SchreierGenerator> schreier_generators(unsigned n,
                                                          unsigned max_modulus = kDefaultMaxModulus) {
  return enumerate_psl2_zn(n, max_modulus).generators;
}

/// Thread-safe memo of Schreier generator lists per modulus, optionally
/// backed by the on-disk cache.
class SchreierCache {
 public:
  explicit SchreierCache(unsigned max_modulus = kDefaultMaxModulus, DiskCache disk = {})
      : max_modulus_(max_modulus), disk_(std::move(disk)) {}

  unsigned max_modulus() const noexcept { return max_modulus_; }

  std::shared_ptr<const std::vector<SchreierGenerator>> generators(unsigned n) {
    if (n > max_modulus_) throw ModulusBoundExceeded(n, max_modulus_);
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(n); it != memo_.end()) return it->second;
    auto gens = std::make_shared<std::vector<SchreierGenerator>>();
    if (auto cached = load(n)) {
      *gens = std::move(*cached);
    } else {
      *gens = schreier_generators(n, max_modulus_);
      save(n, *gens);
    }
    memo_.emplace(n, gens);
    return gens;
  }

 private:
  std::optional<std::vector<SchreierGenerator>> load(unsigned n) const {
    auto j = disk_.load("schreier", std::to_string(n));
    if (!j) return std::nullopt;
    try {
      std::vector<SchreierGenerator> out;
      for (const auto& g : *j) {
        const auto& m = g.at("matrix");
        ModularElement matrix(BigInt(m.at(0).get<std::string>()), BigInt(m.at(1).get<std::string>()),
                              BigInt(m.at(2).get<std::string>()), BigInt(m.at(3).get<std::string>()));
        STWord word = parse_word(g.at("word").get<std::string>());
        if (!in_gamma(matrix, n) || eval_word(word) != matrix) return std::nullopt;
        out.push_back({std::move(matrix), std::move(word), g.at("element").get<std::uint32_t>(),
                       g.at("gen").get<std::string>() == "S"});
      }
      return out;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }

  void save(unsigned n, const std::vector<SchreierGenerator>& gens) const {
    if (!disk_.enabled()) return;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& g : gens)
      arr.push_back({{"matrix",
                      {g.matrix.a().str(), g.matrix.b().str(), g.matrix.c().str(), g.matrix.d().str()}},
                     {"word", g.word.to_string()},
                     {"element", g.element},
                     {"gen", g.is_s ? "S" : "T"}});
    disk_.store("schreier", std::to_string(n), arr);
  }

  unsigned max_modulus_;
  DiskCache disk_;
  std::mutex mutex_;
  std::map<unsigned, std::shared_ptr<const std::vector<SchreierGenerator>>> memo_;
};

/// Outcome of testing Γ(n) ⊆ ker U_α generator by generator.
struct KernelInclusion {
  bool contained = true;
  std::size_t generators_checked = 0;
  std::optional<SchreierGenerator> witness;  // first generator outside ker U_α
};

inline KernelInclusion contains_gamma_n_in_kernel(const Alpha& a, unsigned n, SchreierCache& cache) {
  KernelInclusion out;
  auto gens = cache.generators(n);
  for (const auto& g : *gens) {
    ++out.generators_checked;
    if (!in_ker_u(a, g.matrix)) {
      out.contained = false;
      out.witness = g;
      break;
    }
  }
  return out;
}

inline KernelInclusion contains_gamma_n_in_kernel(const Alpha& a, unsigned n,
                                                  unsigned max_modulus = kDefaultMaxModulus) {
  SchreierCache cache(max_modulus);
  return contains_gamma_n_in_kernel(a, n, cache);
}

}  // namespace indrep
