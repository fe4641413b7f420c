#include "toric/pipeline.hpp"

#include "toric/error.hpp"

namespace toric {

std::string_view holonomy_label(Holonomy h) {
  switch (h) {
    case Holonomy::Spin7: return "Spin(7)";
    case Holonomy::SU4: return "SU(4)";
    case Holonomy::Sp2: return "Sp(2)";
    case Holonomy::Sp1xSp1: return "Sp(1)xSp(1)";
    case Holonomy::Undetermined: return "undetermined";
  }
  return "undetermined";
}

Holonomy holonomy_from_ahat(std::int64_t a_hat) {
  switch (a_hat) {
    case 1: return Holonomy::Spin7;
    case 2: return Holonomy::SU4;
    case 3: return Holonomy::Sp2;
    case 4: return Holonomy::Sp1xSp1;
    default: return Holonomy::Undetermined;
  }
}

namespace {

std::int64_t integral_value(const Rational& q, const char* what) {
  if (!is_integral(q)) throw Error(ErrorCode::NonIntegralResult, std::string(what) + " = " + q.str() + " is not an integer");
  return to_int64(numerator_of(q));
}

Integer binomial(unsigned n, unsigned k) {
  Integer out = 1;
  for (unsigned i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

ChernSeries total_chern_ambient(const RingContext& ctx) {
  CohomClass c = ctx.one();
  const MultiPoly unit = MultiPoly::constant(ctx.num_active(), 1);
  for (std::size_t i = 0; i < ctx.num_rays(); ++i) c = ctx.multiply(c, ctx.make_class(unit + ctx.divisor_class(i)));
  return {c};
}

ChernSeries adjoint_chern(const ChernSeries& cX, const MultiPoly& d, unsigned multiplicity, const RingContext& ctx) {
  // (1 + d)^{-m} = sum_k binom(-m, k) d^k = sum_k (-1)^k binom(m + k - 1, k) d^k
  MultiPoly inverse(ctx.num_active());
  MultiPoly power = MultiPoly::constant(ctx.num_active(), 1);
  const int top = static_cast<int>(ctx.top_degree());
  for (int k = 0; k <= top; ++k) {
    Integer b = multiplicity == 0 ? Integer(k == 0 ? 1 : 0) : binomial(multiplicity + k - 1, k);
    inverse += power * Rational(k % 2 ? -b : b);
    power = MultiPoly::truncated_product(power, d, top);
  }
  return {ctx.multiply(cX.graded, ctx.make_class(inverse))};
}

std::int64_t euler_of_divisor(const ChernSeries& cD, const MultiPoly& d, const RingContext& ctx) {
  const std::size_t n = ctx.top_degree();
  return integral_value(ctx.integrate_top(cD.c(n - 1) * d), "chi(D)");
}

HodgeDiamondCY3 hodge_of_divisor(std::int64_t chi_D, std::int64_t picard_rank) {
  if (chi_D % 2 != 0) throw Error(ErrorCode::DivisibilityViolation, "chi(D) = " + std::to_string(chi_D) + " is odd");
  HodgeDiamondCY3 hd;
  hd.h11 = picard_rank;
  hd.h21 = picard_rank - chi_D / 2;
  if (hd.h11 < 0 || hd.h21 < 0)
    throw Error(ErrorCode::NegativeHodgeNumber, "h11(D) = " + std::to_string(hd.h11) + ", h21(D) = " + std::to_string(hd.h21));
  return hd;
}

std::int64_t euler_of_surface(const ChernSeries& cS, const MultiPoly& d, const RingContext& ctx) {
  const std::size_t n = ctx.top_degree();
  return integral_value(ctx.integrate_top(cS.c(n - 2) * d * d), "chi(S)");
}

HodgeDiamondSurface noether_surface(const ChernSeries& cS, const MultiPoly& d, const RingContext& ctx) {
  const MultiPoly d2 = d * d;
  const MultiPoly c1sq = cS.c(1) * cS.c(1);
  const std::int64_t todd = integral_value(ctx.integrate_top((c1sq + cS.c(2)) * d2), "int_S c1^2 + c2");
  const std::int64_t other = integral_value(ctx.integrate_top((c1sq - cS.c(2) * Rational(5)) * d2), "int_S c1^2 - 5 c2");
  if (todd % 12 != 0)
    throw Error(ErrorCode::DivisibilityViolation, "int_S (c1^2 + c2) = " + std::to_string(todd) + " is not divisible by 12");
  if (other % 6 != 0)
    throw Error(ErrorCode::DivisibilityViolation, "int_S (c1^2 - 5 c2) = " + std::to_string(other) + " is not divisible by 6");
  HodgeDiamondSurface hd;
  hd.h02 = todd / 12 - 1;
  hd.h11 = -other / 6;
  if (hd.h02 < 0 || hd.h11 < 0)
    throw Error(ErrorCode::NegativeHodgeNumber, "h02(S) = " + std::to_string(hd.h02) + ", h11(S) = " + std::to_string(hd.h11));
  return hd;
}

std::int64_t signature_surface(const HodgeDiamondSurface& hd) { return 2 - hd.h11 + 2 * hd.h02; }

std::int64_t signature_ambient(const std::vector<std::int64_t>& ranks) {
  std::int64_t tau = 0;
  for (std::size_t k = 0; k < ranks.size(); ++k) tau += (k % 2 ? -1 : 1) * ranks[k];
  return tau;
}

DoublingReport doubling_invariants(std::int64_t chi_P, std::int64_t chi_S, std::int64_t chi_D, std::int64_t tau_P,
                                   std::int64_t tau_S) {
  DoublingReport r;
  r.chi_P = chi_P;
  r.chi_S = chi_S;
  r.chi_D = chi_D;
  r.tau_P = tau_P;
  r.tau_S = tau_S;
  r.chi_M = 2 * (chi_P + chi_S - chi_D);
  r.tau_M = 2 * (tau_P - tau_S);
  const std::int64_t numerator = 3 * r.tau_M - r.chi_M;
  if (numerator % 48 != 0)
    throw Error(ErrorCode::AhatNotIntegral, "3 tau(M) - chi(M) = " + std::to_string(numerator) + " is not divisible by 48");
  r.a_hat = numerator / 48;
  r.holonomy = holonomy_from_ahat(r.a_hat);
  return r;
}

PipelineResult run_pipeline(const Fan& fan, const PipelineOptions& options) {
  if (fan.dim != 4)
    throw Error(ErrorCode::UnsupportedDimension, "the doubling pipeline needs a fourfold, got dimension " + std::to_string(fan.dim));
  require_valid_fan(fan);

  auto pcs = primitive_collections(fan);
  auto dm = divisor_map(fan);
  auto chow = chow_group(dm);
  auto alpha = anticanonical_degree(chow);
  RingContext ring(eliminate_linear(fan, stanley_reisner(fan, pcs), linear_ideal(dm), options.elimination_cone));
  auto betti = ring.hilbert_ranks();
  const MultiPoly d = ring.anticanonical_class();

  ChernSeries c_ambient = total_chern_ambient(ring);
  ChernSeries c_divisor = adjoint_chern(c_ambient, d, 1, ring);
  ChernSeries c_surface = adjoint_chern(c_ambient, d, 2, ring);

  const std::int64_t chi_D = euler_of_divisor(c_divisor, d, ring);
  HodgeDiamondCY3 hodge_D = hodge_of_divisor(chi_D, static_cast<std::int64_t>(chow.free_rank));
  const std::int64_t chi_S = euler_of_surface(c_surface, d, ring);
  HodgeDiamondSurface hodge_S = noether_surface(c_surface, d, ring);
  if (hodge_S.euler() != chi_S)
    throw Error(ErrorCode::InconsistentHodgeDiamond, "2 + 2 h02 + h11 = " + std::to_string(hodge_S.euler()) +
                                                          " but chi(S) = " + std::to_string(chi_S));
  const std::int64_t tau_S = signature_surface(hodge_S);
  const std::int64_t tau_P = signature_ambient(betti);

  DoublingReport report = doubling_invariants(euler_characteristic_ambient(fan), chi_S, chi_D, tau_P, tau_S);
  report.h11_D = hodge_D.h11;
  report.h21_D = hodge_D.h21;
  report.h02_S = hodge_S.h02;
  report.h11_S = hodge_S.h11;

  return PipelineResult{std::move(pcs), std::move(chow), std::move(alpha), std::move(ring), std::move(betti), d,
                        std::move(c_ambient), std::move(c_divisor), std::move(c_surface), hodge_D, hodge_S, report};
}

DoublingReport compute_report(const Fan& fan, const PipelineOptions& options) { return run_pipeline(fan, options).report; }

}  // namespace toric
