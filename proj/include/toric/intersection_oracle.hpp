#pragma once

#include "toric/fan.hpp"
#include "toric/numeric.hpp"
#include "toric/polynomial.hpp"

namespace toric {

/// Intersection number D_1^{a_1} ... D_r^{a_r} of torus-invariant divisors on
/// a smooth complete toric variety, computed directly from the fan without
/// any Groebner machinery.
///
/// Repeated factors are rewritten with a linear relation that expresses D_i
/// through divisors outside a maximal cone containing the support, which
/// strictly lowers the total excess multiplicity. Squarefree products are 1
/// on maximal cones and 0 on non-faces.
///
/// Requires a validated fan and total degree equal to fan.dim.
Rational multilinear_oracle(const Fan& fan, const Exponent& monomial);

}  // namespace toric
