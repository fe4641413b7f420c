#pragma once

#include "toric/cox_grading.hpp"
#include "toric/fan.hpp"
#include "toric/quotient_ring.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace toric {

/// Truncated total Chern class c_0 + c_1 + ... + c_n; c_0 is the unit.
struct ChernSeries {
  CohomClass graded;

  const MultiPoly& c(std::size_t k) const { return graded[k]; }
};

/// Hodge numbers of the anticanonical Calabi-Yau threefold D
/// (h30 = h00 = 1, h10 = h20 = 0).
struct HodgeDiamondCY3 {
  std::int64_t h00 = 1;
  std::int64_t h11 = 0;
  std::int64_t h21 = 0;

  std::int64_t euler() const { return 2 * (h11 - h21); }
};

/// Hodge numbers of the simply-connected surface S (h01 = h10 = 0).
struct HodgeDiamondSurface {
  std::int64_t h00 = 1;
  std::int64_t h01 = 0;
  std::int64_t h02 = 0;
  std::int64_t h11 = 0;

  std::int64_t euler() const { return 2 + 2 * h02 + h11; }
};

/// Holonomy of a simply-connected compact Spin(7)-manifold, keyed by A-hat.
enum class Holonomy { Spin7, SU4, Sp2, Sp1xSp1, Undetermined };

std::string_view holonomy_label(Holonomy h);
Holonomy holonomy_from_ahat(std::int64_t a_hat);

struct DoublingReport {
  std::int64_t chi_P = 0;
  std::int64_t tau_P = 0;
  std::int64_t chi_D = 0;
  std::int64_t h11_D = 0;
  std::int64_t h21_D = 0;
  std::int64_t chi_S = 0;
  std::int64_t h02_S = 0;
  std::int64_t h11_S = 0;
  std::int64_t tau_S = 0;
  std::int64_t chi_M = 0;
  std::int64_t tau_M = 0;
  std::int64_t a_hat = 0;
  Holonomy holonomy = Holonomy::Undetermined;

  bool operator==(const DoublingReport&) const = default;
};

/// c(P) = prod_rho (1 + [D_rho]).
ChernSeries total_chern_ambient(const RingContext& ctx);

/// cX * (1 + d)^{-multiplicity}, expanded with binomial coefficients and
/// truncated at the top degree. multiplicity 1 gives c(D), 2 gives c(S).
ChernSeries adjoint_chern(const ChernSeries& cX, const MultiPoly& d, unsigned multiplicity, const RingContext& ctx);

/// chi(D) = int_P c_3(D) . D
std::int64_t euler_of_divisor(const ChernSeries& cD, const MultiPoly& d, const RingContext& ctx);

/// Throws Error(NegativeHodgeNumber) or Error(DivisibilityViolation) for odd chi.
HodgeDiamondCY3 hodge_of_divisor(std::int64_t chi_D, std::int64_t picard_rank);

/// chi(S) = int_P c_2(S) . D^2
std::int64_t euler_of_surface(const ChernSeries& cS, const MultiPoly& d, const RingContext& ctx);

/// Noether's formula for S, both integrals taken over P against D^2.
HodgeDiamondSurface noether_surface(const ChernSeries& cS, const MultiPoly& d, const RingContext& ctx);

/// 2 - h11 + 2 h02
std::int64_t signature_surface(const HodgeDiamondSurface& hd);

/// Alternating sum of the even Betti numbers b0 - b2 + b4 - ...
std::int64_t signature_ambient(const std::vector<std::int64_t>& ranks);

/// Fills the chi/tau fields of P, S, D and the M invariants. Throws
/// Error(AhatNotIntegral) when 48 does not divide 3 tau(M) - chi(M).
DoublingReport doubling_invariants(std::int64_t chi_P, std::int64_t chi_S, std::int64_t chi_D, std::int64_t tau_P,
                                   std::int64_t tau_S);

struct PipelineOptions {
  /// Maximal cone used for linear elimination; defaults to the first one.
  std::size_t elimination_cone = 0;
};

/// Every intermediate of one run, for reporting and testing.
struct PipelineResult {
  std::vector<PrimitiveCollection> primitive_collections;
  ChowPresentation chow;
  Degree anticanonical_degree;
  RingContext ring;
  std::vector<std::int64_t> betti;
  MultiPoly anticanonical;
  ChernSeries c_ambient;
  ChernSeries c_divisor;
  ChernSeries c_surface;
  HodgeDiamondCY3 hodge_D;
  HodgeDiamondSurface hodge_S;
  DoublingReport report;
};

/// Runs the whole chain for a smooth complete toric fourfold. Throws
/// Error(UnsupportedDimension) when fan.dim != 4.
PipelineResult run_pipeline(const Fan& fan, const PipelineOptions& options = {});

DoublingReport compute_report(const Fan& fan, const PipelineOptions& options = {});

}  // namespace toric
