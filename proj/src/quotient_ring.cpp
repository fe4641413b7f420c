#include "toric/quotient_ring.hpp"

#include "toric/error.hpp"
#include "toric/groebner.hpp"

#include <algorithm>
#include <functional>

namespace toric {

std::vector<MultiPoly> stanley_reisner(const Fan& fan, const std::vector<PrimitiveCollection>& pcs) {
  std::vector<MultiPoly> out;
  for (const auto& pc : pcs) {
    Exponent e(fan.num_rays(), 0);
    for (auto i : pc.rays) e.at(i) = 1;
    out.push_back(MultiPoly::monomial(e));
  }
  return out;
}

std::vector<MultiPoly> linear_ideal(const DivisorMapMatrix& dm) {
  std::vector<MultiPoly> out;
  for (std::size_t j = 0; j < dm.dim(); ++j) {
    MultiPoly form(dm.num_rays());
    for (std::size_t i = 0; i < dm.num_rays(); ++i) {
      Exponent e(dm.num_rays(), 0);
      e[i] = 1;
      form.add_term(e, Rational(dm.entries(j, i)));
    }
    out.push_back(std::move(form));
  }
  return out;
}

MultiPoly LinearElimination::substitute(const MultiPoly& p) const {
  if (p.num_vars() != num_rays) throw std::invalid_argument("substitute: polynomial is not in the ray variables");
  const std::size_t k = active_rays.size();
  MultiPoly out(k);
  for (const auto& [e, c] : p.terms()) {
    MultiPoly term = MultiPoly::constant(k, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) term = term * substitution[i].pow(static_cast<unsigned>(e[i]));
    out += term;
  }
  return out;
}

LinearElimination eliminate_linear(const Fan& fan, const std::vector<MultiPoly>& sr, const std::vector<MultiPoly>& lin,
                                   std::size_t cone_index) {
  if (cone_index >= fan.max_cones.size())
    throw Error(ErrorCode::EliminationSingular, "elimination cone index " + std::to_string(cone_index) + " out of range");
  const std::size_t n = fan.dim;
  const std::size_t r = fan.num_rays();

  LinearElimination el;
  el.dim = n;
  el.num_rays = r;
  el.cone_index = cone_index;
  el.cone = fan.max_cones[cone_index];
  if (lin.size() != n || el.cone.size() != n)
    throw Error(ErrorCode::EliminationSingular, "expected " + std::to_string(n) + " linear forms and cone rays");
  for (std::size_t i = 0; i < r; ++i)
    if (!el.cone.contains(i)) el.active_rays.push_back(i);
  const std::size_t k = el.active_rays.size();

  auto coeff = [&](std::size_t form, std::size_t ray) {
    Exponent e(r, 0);
    e[ray] = 1;
    return lin[form].coefficient(e);
  };

  // Augmented system [A_sigma | A_active]; Gauss-Jordan on the sigma block
  // gives x_sigma = -(A_sigma^{-1} A_active) x_active.
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + k));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t c = 0; c < n; ++c) a[j][c] = coeff(j, el.cone.rays[c]);
    for (std::size_t c = 0; c < k; ++c) a[j][n + c] = coeff(j, el.active_rays[c]);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw Error(ErrorCode::EliminationSingular, "linear forms cannot be solved on the chosen cone");
    std::swap(a[piv], a[col]);
    const Rational inv = 1 / a[col][col];
    for (auto& v : a[col]) v *= inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational f = a[row][col];
      for (std::size_t c = col; c < n + k; ++c) a[row][c] -= f * a[col][c];
    }
  }

  el.substitution.assign(r, MultiPoly(k));
  for (std::size_t c = 0; c < k; ++c) el.substitution[el.active_rays[c]] = MultiPoly::variable(k, c);
  for (std::size_t row = 0; row < n; ++row) {
    MultiPoly form(k);
    for (std::size_t c = 0; c < k; ++c) {
      if (!is_integral(a[row][n + c]))
        throw Error(ErrorCode::EliminationSingular, "rays of elimination cone " + std::to_string(cone_index) +
                                                        " are not a lattice basis");
      Exponent e(k, 0);
      e[c] = 1;
      form.add_term(e, -a[row][n + c]);
    }
    el.substitution[el.cone.rays[row]] = std::move(form);
  }
  for (const MultiPoly& g : sr) {
    MultiPoly s = el.substitute(g);
    if (!s.is_zero()) el.relations.push_back(std::move(s));
  }
  return el;
}

MultiPoly CohomClass::total() const {
  if (components.empty()) return MultiPoly();
  MultiPoly out(components.front().num_vars());
  for (const auto& c : components) out += c;
  return out;
}

namespace {

void for_each_exponent(std::size_t nvars, int degree, const std::function<void(const Exponent&)>& fn) {
  Exponent e(nvars, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
    if (nvars == 0) {
      if (left == 0) fn(e);
      return;
    }
    if (pos + 1 == nvars) {
      e[pos] = left;
      fn(e);
      e[pos] = 0;
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[pos] = v;
      rec(pos + 1, left - v);
    }
    e[pos] = 0;
  };
  rec(0, degree);
}

}  // namespace

RingContext::RingContext(LinearElimination elimination) : elim_(std::move(elimination)) {
  groebner_ = buchberger(elim_.relations);
  const std::size_t k = num_active();
  const int top = static_cast<int>(elim_.dim);

  basis_.assign(elim_.dim + 1, {});
  for (int d = 0; d <= top; ++d) {
    for_each_exponent(k, d, [&](const Exponent& e) {
      for (const MultiPoly& g : groebner_)
        if (divides(g.leading_exponent(), e)) return;
      basis_[d].push_back(e);
    });
    std::sort(basis_[d].begin(), basis_[d].end(), DegRevLexGreater{});
  }
  if (basis_[top].size() != 1)
    throw Error(ErrorCode::DegenerateTopDegree,
                "quotient ring has rank " + std::to_string(basis_[top].size()) + " in top degree");

  Exponent point(elim_.num_rays, 0);
  for (auto i : elim_.cone.rays) point[i] = 1;
  MultiPoly nf = reduce_original(MultiPoly::monomial(point));
  if (nf.num_terms() != 1 || nf.leading_exponent() != top_monomial())
    throw Error(ErrorCode::DegenerateTopDegree, "point class does not reduce to a multiple of the top monomial");
  point_scalar_ = nf.leading_coefficient();
}

RingContext RingContext::from_fan(const Fan& fan, std::size_t elimination_cone) {
  auto pcs = primitive_collections(fan);
  auto dm = divisor_map(fan);
  return RingContext(eliminate_linear(fan, stanley_reisner(fan, pcs), linear_ideal(dm), elimination_cone));
}

MultiPoly RingContext::normal_form(const MultiPoly& p) const { return reduce(p, groebner_); }

MultiPoly RingContext::reduce_original(const MultiPoly& p) const { return normal_form(elim_.substitute(p)); }

MultiPoly RingContext::divisor_class(std::size_t ray) const { return normal_form(elim_.substitution.at(ray)); }

MultiPoly RingContext::anticanonical_class() const {
  MultiPoly out(num_active());
  for (std::size_t i = 0; i < num_rays(); ++i) out += elim_.substitution[i];
  return normal_form(out);
}

std::vector<std::int64_t> RingContext::hilbert_ranks() const {
  std::vector<std::int64_t> out;
  for (const auto& level : basis_) out.push_back(static_cast<std::int64_t>(level.size()));
  return out;
}

CohomClass RingContext::make_class(const MultiPoly& p) const {
  MultiPoly nf = normal_form(p.truncated(static_cast<int>(top_degree())));
  CohomClass c;
  for (std::size_t d = 0; d <= top_degree(); ++d) c.components.push_back(nf.homogeneous_component(static_cast<int>(d)));
  return c;
}

CohomClass RingContext::one() const { return make_class(MultiPoly::constant(num_active(), 1)); }

CohomClass RingContext::multiply(const CohomClass& a, const CohomClass& b) const {
  return make_class(MultiPoly::truncated_product(a.total(), b.total(), static_cast<int>(top_degree())));
}

CohomClass RingContext::add(const CohomClass& a, const CohomClass& b) const { return make_class(a.total() + b.total()); }

CohomClass RingContext::scale(const CohomClass& a, const Rational& c) const { return make_class(a.total() * c); }

Rational RingContext::integrate_top(const MultiPoly& p) const {
  MultiPoly nf = normal_form(p.homogeneous_component(static_cast<int>(top_degree())));
  return nf.coefficient(top_monomial()) / point_scalar_;
}

Rational RingContext::integrate_top(const CohomClass& c) const { return integrate_top(c.total()); }

std::vector<std::string> RingContext::variable_names() const {
  std::vector<std::string> names;
  for (auto i : elim_.active_rays) names.push_back("x" + std::to_string(i + 1));
  return names;
}

}  // namespace toric
