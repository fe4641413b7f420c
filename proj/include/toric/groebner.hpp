#pragma once

#include "toric/polynomial.hpp"

#include <cstddef>
#include <vector>

namespace toric {

struct BuchbergerStats {
  std::size_t pairs_created = 0;
  std::size_t product_criterion_skips = 0;
  std::size_t chain_criterion_skips = 0;
  std::size_t reductions_to_zero = 0;
  std::size_t basis_additions = 0;
};

/// Leading-term cancellation of f and g.
MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g);

/// Complete remainder of p on division by `divisors` (every term reduced).
MultiPoly reduce(const MultiPoly& p, const std::vector<MultiPoly>& divisors);

/// Reduced Groebner basis in degrevlex, sorted by decreasing leading term.
/// Pairs are skipped by the product criterion (coprime leading monomials)
/// and the chain criterion.
std::vector<MultiPoly> buchberger(const std::vector<MultiPoly>& generators, BuchbergerStats* stats = nullptr);

/// Monic, minimal, and tail-reduced.
bool is_reduced(const std::vector<MultiPoly>& basis);

/// Buchberger's S-pair test: every S-polynomial reduces to zero.
bool is_groebner_basis(const std::vector<MultiPoly>& basis);

}  // namespace toric
