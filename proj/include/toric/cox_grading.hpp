#pragma once

#include "toric/fan.hpp"
#include "toric/integer_matrix.hpp"
#include "toric/numeric.hpp"

#include <vector>

namespace toric {

/// The map f: M -> Z^{rays}; entry (j, i) = <m_j, u_i>.
struct DivisorMapMatrix {
  IntMatrix entries;

  std::size_t dim() const { return entries.rows(); }
  std::size_t num_rays() const { return entries.cols(); }
};

/// A class in the Chow group A_{n-1}, in the fixed Chow coordinates.
using Degree = std::vector<Integer>;

/// Cokernel of the divisor map, i.e. the bottom row
/// 0 -> M -> Z^{rays} -> A_{n-1} -> 0.
///
/// Chow coordinates: the projection g is read off the Smith normal form and
/// then replaced by the Hermite normal form of its matrix, so the grading is
/// canonical (independent of pivoting) and matches hand computations where
/// each class is written in a basis of divisors.
struct ChowPresentation {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;
  /// (free_rank x num_rays) matrix of g; column i is deg(x_i).
  IntMatrix projection;
  std::vector<Degree> degree_of_variable;
};

/// Throws Error(RankDeficient) if f is not injective (torus factor).
DivisorMapMatrix divisor_map(const Fan& fan);

/// Throws Error(TorsionFound) if the cokernel has torsion.
ChowPresentation chow_group(const DivisorMapMatrix& dm);

/// deg of the anticanonical class, the sum of all variable degrees.
Degree anticanonical_degree(const ChowPresentation& cp);

/// Degree of x^a.
Degree degree_of_monomial(const ChowPresentation& cp, const std::vector<Integer>& exponents);

/// True when two gradings of the same variables differ by an automorphism of
/// the Chow group (equal row lattices of the projection matrices).
bool same_grading_up_to_basis(const IntMatrix& projection_a, const IntMatrix& projection_b);

}  // namespace toric
