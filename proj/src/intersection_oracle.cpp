#include "toric/intersection_oracle.hpp"

#include <map>
#include <stdexcept>

namespace toric {

namespace {

class Oracle {
 public:
  explicit Oracle(const Fan& fan) : fan_(fan) {}

  Rational eval(const Exponent& a) {
    if (auto it = memo_.find(a); it != memo_.end()) return it->second;

    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > 0) support.push_back(i);
    const Cone* sigma = containing_cone(support);
    Rational value = 0;
    if (sigma) {
      std::size_t repeated = a.size();
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] >= 2) {
          repeated = i;
          break;
        }
      if (repeated == a.size()) {
        value = 1;
      } else {
        auto m = dual_vector(*sigma, repeated);
        for (std::size_t j = 0; j < fan_.num_rays(); ++j) {
          if (sigma->contains(j)) continue;
          Rational pairing = 0;
          for (std::size_t c = 0; c < fan_.dim; ++c) pairing += m[c] * fan_.rays[j][c];
          if (pairing == 0) continue;
          Exponent next = a;
          --next[repeated];
          ++next[j];
          value -= pairing * eval(next);
        }
      }
    }
    memo_.emplace(a, value);
    return value;
  }

 private:
  const Cone* containing_cone(const std::vector<std::size_t>& support) const {
    const Cone s(support);
    for (const Cone& c : fan_.max_cones)
      if (c.contains(s)) return &c;
    return nullptr;
  }

  // m in M_Q with <m, u_ray> = 1 and <m, u_j> = 0 for the other rays of sigma.
  std::vector<Rational> dual_vector(const Cone& sigma, std::size_t ray) const {
    const std::size_t n = fan_.dim;
    // Solve U^T m = e where U has the cone's rays as columns.
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
    for (std::size_t row = 0; row < n; ++row) {
      const std::size_t idx = sigma.rays[row];
      for (std::size_t c = 0; c < n; ++c) a[row][c] = fan_.rays[idx][c];
      a[row][n] = idx == ray ? 1 : 0;
    }
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (piv < n && a[piv][col] == 0) ++piv;
      if (piv == n) throw std::invalid_argument("multilinear_oracle: degenerate cone");
      std::swap(a[piv], a[col]);
      for (std::size_t row = 0; row < n; ++row) {
        if (row == col || a[row][col] == 0) continue;
        Rational f = a[row][col] / a[col][col];
        for (std::size_t c = col; c <= n; ++c) a[row][c] -= f * a[col][c];
      }
    }
    std::vector<Rational> m(n);
    for (std::size_t c = 0; c < n; ++c) m[c] = a[c][n] / a[c][c];
    return m;
  }

  const Fan& fan_;
  std::map<Exponent, Rational> memo_;
};

}  // namespace

Rational multilinear_oracle(const Fan& fan, const Exponent& monomial) {
  if (monomial.size() != fan.num_rays()) throw std::invalid_argument("multilinear_oracle: exponent length mismatch");
  if (total_degree(monomial) != static_cast<int>(fan.dim))
    throw std::invalid_argument("multilinear_oracle: monomial degree must equal the fan dimension");
  Oracle oracle(fan);
  return oracle.eval(monomial);
}

}  // namespace toric
