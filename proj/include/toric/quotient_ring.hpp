#pragma once

#include "toric/cox_grading.hpp"
#include "toric/fan.hpp"
#include "toric/polynomial.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace toric {

/// One squarefree monomial (in the r ray variables) per primitive collection.
std::vector<MultiPoly> stanley_reisner(const Fan& fan, const std::vector<PrimitiveCollection>& pcs);

/// The forms sum_i <m_j, u_i> x_i, one per standard basis vector m_j of M.
std::vector<MultiPoly> linear_ideal(const DivisorMapMatrix& dm);

/// Result of solving the linear relations for the variables of one maximal
/// cone. The surviving ("active") variables are the rays outside the cone,
/// kept in original ray order.
struct LinearElimination {
  std::size_t dim = 0;
  std::size_t num_rays = 0;
  std::size_t cone_index = 0;
  Cone cone;
  std::vector<std::size_t> active_rays;
  /// x_i expressed as a linear form in the active variables, for every ray i.
  std::vector<MultiPoly> substitution;
  /// Stanley-Reisner generators after substitution.
  std::vector<MultiPoly> relations;

  /// Rewrites a polynomial in the r ray variables into the active variables.
  MultiPoly substitute(const MultiPoly& p) const;
};

/// Throws Error(EliminationSingular) if the chosen cone's rays are not a basis.
LinearElimination eliminate_linear(const Fan& fan, const std::vector<MultiPoly>& sr, const std::vector<MultiPoly>& lin,
                                   std::size_t cone_index = 0);

/// A cohomology class split into graded pieces 0..top_degree, each reduced.
struct CohomClass {
  std::vector<MultiPoly> components;

  std::size_t top_degree() const { return components.empty() ? 0 : components.size() - 1; }
  const MultiPoly& operator[](std::size_t k) const { return components.at(k); }
  MultiPoly total() const;
};

/// The integral cohomology ring R = Z[x_1..x_r]/(SR + J) of a smooth complete
/// toric variety, realised over Q in the active variables of a
/// LinearElimination with a reduced degrevlex Groebner basis.
///
/// Integration is normalised so that the product of the divisors of any
/// maximal cone integrates to 1 (the class of a torus-fixed point).
class RingContext {
 public:
  /// Throws Error(DegenerateTopDegree) if the quotient does not look like the
  /// cohomology of a smooth complete variety (top rank != 1, or the point
  /// class is not a nonzero multiple of the top basis monomial).
  explicit RingContext(LinearElimination elimination);

  /// Full construction from a validated fan.
  static RingContext from_fan(const Fan& fan, std::size_t elimination_cone = 0);

  std::size_t top_degree() const { return elim_.dim; }
  std::size_t num_rays() const { return elim_.num_rays; }
  std::size_t num_active() const { return elim_.active_rays.size(); }
  const LinearElimination& elimination() const { return elim_; }
  const std::vector<MultiPoly>& groebner() const { return groebner_; }
  /// Standard monomials per degree 0..top_degree, decreasing in degrevlex.
  const std::vector<std::vector<Exponent>>& monomial_basis() const { return basis_; }
  const Exponent& top_monomial() const { return basis_.back().front(); }
  /// s with NF(point monomial) = s * top_monomial.
  const Rational& point_scalar() const { return point_scalar_; }

  MultiPoly normal_form(const MultiPoly& p) const;
  /// Substitute then reduce a polynomial given in the r ray variables.
  MultiPoly reduce_original(const MultiPoly& p) const;
  /// [D_rho] for ray index i.
  MultiPoly divisor_class(std::size_t ray) const;
  /// Sum of all [D_rho], i.e. c_1 of the ambient variety.
  MultiPoly anticanonical_class() const;

  std::vector<std::int64_t> hilbert_ranks() const;

  CohomClass make_class(const MultiPoly& p) const;
  CohomClass one() const;
  /// Product truncated above the top degree.
  CohomClass multiply(const CohomClass& a, const CohomClass& b) const;
  CohomClass add(const CohomClass& a, const CohomClass& b) const;
  CohomClass scale(const CohomClass& a, const Rational& c) const;

  Rational integrate_top(const MultiPoly& p) const;
  Rational integrate_top(const CohomClass& c) const;

  /// Names of the active variables: "x<k>" with k the 1-based ray index.
  std::vector<std::string> variable_names() const;

 private:
  LinearElimination elim_;
  std::vector<MultiPoly> groebner_;
  std::vector<std::vector<Exponent>> basis_;
  Rational point_scalar_;
};

}  // namespace toric
