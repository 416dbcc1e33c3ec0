#pragma once

// Test-only oracles, kept independent of the library's computation paths.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <tuple>
#include <vector>

#include "ordmach/ordinal.hpp"

namespace oracles {

// Enumerates all pairs of naturals with max < bound in the (max, then
// lexicographic) order and returns the position of each pair. This is the
// defining order type computed by brute force.
class BrutePairTable {
 public:
  explicit BrutePairTable(std::uint64_t bound) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    for (std::uint64_t a = 0; a < bound; ++a)
      for (std::uint64_t b = 0; b < bound; ++b) pairs.push_back({a, b});
    std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) {
      auto mx = std::max(x.first, x.second);
      auto my = std::max(y.first, y.second);
      if (mx != my) return mx < my;
      return x < y;
    });
    for (std::uint64_t i = 0; i < pairs.size(); ++i) index_[pairs[i]] = i;
  }

  std::uint64_t at(std::uint64_t a, std::uint64_t b) const { return index_.at({a, b}); }

 private:
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> index_;
};

// Ordinals below w^2 as pairs (a, b) meaning w*a + b, with sum and product
// rules written out directly from the definitions. Product is partial: it is
// defined whenever the true product stays below w^2.
struct OmegaSq {
  std::uint64_t a = 0;  // coefficient of w
  std::uint64_t b = 0;  // finite part
};

inline OmegaSq osq_add(OmegaSq x, OmegaSq y) {
  if (y.a > 0) return {x.a + y.a, y.b};
  return {x.a, x.b + y.b};
}

inline bool osq_mul_defined(OmegaSq x, OmegaSq y) {
  if (x.a == 0 && x.b == 0) return true;
  if (y.a == 0 && y.b == 0) return true;
  return x.a == 0 || y.a == 0;  // otherwise the product reaches w^2
}

inline OmegaSq osq_mul(OmegaSq x, OmegaSq y) {
  if ((x.a == 0 && x.b == 0) || (y.a == 0 && y.b == 0)) return {0, 0};
  if (x.a == 0) {
    // b1 * (w*a2 + b2) = w*a2 + b1*b2 (or b1*b2 when a2 = 0)
    if (y.a > 0) return {y.a, x.b * y.b};
    return {0, x.b * y.b};
  }
  // (w*a1 + b1) * b2 = w*(a1*b2) + b1 for finite b2 >= 1
  return {x.a * y.b, x.b};
}

inline ordmach::Ordinal osq_to_ordinal(OmegaSq x) {
  using ordmach::Ordinal;
  return ord_add(Ordinal::omega_pow(Ordinal(std::uint64_t{1}), x.a == 0 ? 0 : x.a),
                 Ordinal(x.b));
}

// Random CNF ordinal with natural exponents below expBound and coefficients
// in [1, coeffBound].
inline ordmach::Ordinal random_cnf(std::mt19937_64& rng, std::uint64_t expBound,
                                   std::uint64_t coeffBound = 9) {
  using ordmach::Ordinal;
  std::vector<std::uint64_t> exps;
  for (std::uint64_t e = 0; e < expBound; ++e) exps.push_back(e);
  std::shuffle(exps.begin(), exps.end(), rng);
  std::size_t k = rng() % (expBound + 1);
  exps.resize(k);
  std::sort(exps.rbegin(), exps.rend());
  std::vector<Ordinal::Term> terms;
  for (auto e : exps)
    terms.push_back(Ordinal::Term{Ordinal(e), 1 + rng() % coeffBound});
  return Ordinal::from_terms(std::move(terms));
}

}  // namespace oracles
