#include "toric/cox_grading.hpp"

#include "toric/error.hpp"

namespace toric {

DivisorMapMatrix divisor_map(const Fan& fan) {
  DivisorMapMatrix dm{IntMatrix(fan.dim, fan.num_rays())};
  for (std::size_t i = 0; i < fan.num_rays(); ++i)
    for (std::size_t j = 0; j < fan.dim; ++j) dm.entries(j, i) = fan.rays[i][j];
  if (rank(dm.entries) != fan.dim)
    throw Error(ErrorCode::RankDeficient, "rays do not span N_R; the variety has a torus factor");
  return dm;
}

ChowPresentation chow_group(const DivisorMapMatrix& dm) {
  const std::size_t n = dm.dim();
  const std::size_t r = dm.num_rays();
  if (rank(dm.entries) != n) throw Error(ErrorCode::RankDeficient, "divisor map is not injective");

  // f as an r x n matrix acting on column vectors of M.
  SmithForm snf = smith_normal_form(dm.entries.transposed());

  ChowPresentation cp;
  cp.free_rank = r - n;
  for (const Integer& d : snf.invariant_factors())
    if (d != 1) cp.torsion.push_back(d);
  if (!cp.torsion.empty()) {
    std::string list;
    for (const auto& t : cp.torsion) list += (list.empty() ? "" : ", ") + t.str();
    throw Error(ErrorCode::TorsionFound, "Chow group has torsion factors [" + list + "]");
  }

  // left * f * right = diag(1,..,1; 0): the last r - n rows of `left` kill im(f)
  // and map Z^r onto the free cokernel.
  IntMatrix g(cp.free_rank, r);
  for (std::size_t a = 0; a < cp.free_rank; ++a)
    for (std::size_t i = 0; i < r; ++i) g(a, i) = snf.left(n + a, i);
  cp.projection = cp.free_rank > 0 ? hermite_normal_form(g) : g;

  cp.degree_of_variable.assign(r, Degree(cp.free_rank));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t a = 0; a < cp.free_rank; ++a) cp.degree_of_variable[i][a] = cp.projection(a, i);
  return cp;
}

Degree anticanonical_degree(const ChowPresentation& cp) {
  return degree_of_monomial(cp, std::vector<Integer>(cp.degree_of_variable.size(), 1));
}

Degree degree_of_monomial(const ChowPresentation& cp, const std::vector<Integer>& exponents) {
  Degree out(cp.free_rank, 0);
  for (std::size_t i = 0; i < exponents.size() && i < cp.degree_of_variable.size(); ++i)
    for (std::size_t a = 0; a < cp.free_rank; ++a) out[a] += exponents[i] * cp.degree_of_variable[i][a];
  return out;
}

bool same_grading_up_to_basis(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  if (a.rows() == 0) return true;
  return hermite_normal_form(a) == hermite_normal_form(b);
}

}  // namespace toric
