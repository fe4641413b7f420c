#include "toric/fan.hpp"

#include "toric/integer_matrix.hpp"
#include "toric/numeric.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace toric {

Cone::Cone(std::vector<std::size_t> indices) : rays(std::move(indices)) { std::sort(rays.begin(), rays.end()); }

bool Cone::contains(std::size_t ray) const { return std::binary_search(rays.begin(), rays.end(), ray); }

bool Cone::contains(const Cone& other) const {
  return std::includes(rays.begin(), rays.end(), other.rays.begin(), other.rays.end());
}

namespace {

std::string describe(const Cone& c) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < c.rays.size(); ++i) os << (i ? "," : "") << c.rays[i];
  os << '}';
  return os.str();
}

ValidationReport fail(ValidationReport r, ErrorCode code, std::string message,
                      std::optional<std::size_t> cone = {}, std::optional<Cone> facet = {}) {
  r.code = code;
  r.message = std::move(message);
  r.cone_index = cone;
  r.facet = std::move(facet);
  return r;
}

IntMatrix column_matrix(const Fan& fan, const std::vector<std::size_t>& ray_indices) {
  IntMatrix m(fan.dim, ray_indices.size());
  for (std::size_t k = 0; k < ray_indices.size(); ++k)
    for (std::size_t j = 0; j < fan.dim; ++j) m(j, k) = fan.rays[ray_indices[k]][j];
  return m;
}

// Coordinates of p in the basis given by the columns of b (b invertible).
std::vector<Rational> solve_in_basis(const IntMatrix& b, const std::vector<Integer>& p) {
  const std::size_t n = b.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(b(i, j));
    a[i][n] = Rational(p[i]);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (a[piv][col] == 0) ++piv;
    std::swap(a[piv], a[col]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rational f = a[i][col] / a[col][col];
      for (std::size_t j = col; j <= n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

}  // namespace

ValidationReport validate_fan(const Fan& fan) {
  ValidationReport r;
  const std::size_t n = fan.dim;
  const std::size_t nr = fan.rays.size();

  if (n == 0) return fail(r, ErrorCode::MalformedInput, "dimension must be positive");
  if (nr == 0) return fail(r, ErrorCode::MalformedInput, "fan has no rays");
  if (fan.max_cones.empty()) return fail(r, ErrorCode::MalformedInput, "fan has no maximal cones");

  std::set<RayVector> seen_rays;
  for (std::size_t i = 0; i < nr; ++i) {
    const RayVector& u = fan.rays[i];
    if (u.size() != n)
      return fail(r, ErrorCode::MalformedInput, "ray " + std::to_string(i) + " has wrong number of coordinates");
    Integer g = 0;
    for (auto c : u) g = gcd_of(g, Integer(c));
    if (g == 0) return fail(r, ErrorCode::MalformedInput, "ray " + std::to_string(i) + " is zero");
    if (g != 1) return fail(r, ErrorCode::MalformedInput, "ray " + std::to_string(i) + " is not primitive");
    if (!seen_rays.insert(u).second)
      return fail(r, ErrorCode::MalformedInput, "ray " + std::to_string(i) + " is repeated");
  }

  std::vector<bool> used(nr, false);
  std::set<Cone> seen_cones;
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    const Cone& cone = fan.max_cones[c];
    for (std::size_t k = 0; k < cone.rays.size(); ++k) {
      if (cone.rays[k] >= nr)
        return fail(r, ErrorCode::MalformedInput, "cone " + std::to_string(c) + " references ray out of range", c);
      if (k > 0 && cone.rays[k] <= cone.rays[k - 1])
        return fail(r, ErrorCode::MalformedInput, "cone " + std::to_string(c) + " has repeated or unsorted rays", c);
      used[cone.rays[k]] = true;
    }
    if (!seen_cones.insert(cone).second)
      return fail(r, ErrorCode::MalformedInput, "cone " + std::to_string(c) + " is repeated", c);
  }
  for (std::size_t i = 0; i < nr; ++i)
    if (!used[i]) return fail(r, ErrorCode::MalformedInput, "ray " + std::to_string(i) + " lies in no maximal cone");
  r.well_formed = true;

  std::vector<Integer> dets;
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    const Cone& cone = fan.max_cones[c];
    if (cone.size() != n)
      return fail(r, ErrorCode::MalformedInput,
                  "cone " + std::to_string(c) + " has " + std::to_string(cone.size()) + " rays, expected " +
                      std::to_string(n),
                  c);
    Integer det = determinant(column_matrix(fan, cone.rays));
    if (det == 0) return fail(r, ErrorCode::MalformedInput, "cone " + std::to_string(c) + " is degenerate", c);
    dets.push_back(det);
  }
  r.simplicial = true;

  for (std::size_t c = 0; c < dets.size(); ++c)
    if (abs(dets[c]) != 1)
      return fail(r, ErrorCode::NonSmoothCone,
                  "cone " + std::to_string(c) + " " + describe(fan.max_cones[c]) + " has determinant " + dets[c].str(),
                  c);
  r.smooth = true;

  // Facet pairing: each facet bounds exactly two maximal cones, one on each side.
  struct Incidence {
    std::size_t cone;
    std::size_t opposite;
  };
  std::map<Cone, std::vector<Incidence>> facets;
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    const auto& rays = fan.max_cones[c].rays;
    for (std::size_t drop = 0; drop < rays.size(); ++drop) {
      std::vector<std::size_t> f;
      for (std::size_t k = 0; k < rays.size(); ++k)
        if (k != drop) f.push_back(rays[k]);
      facets[Cone(std::move(f))].push_back({c, rays[drop]});
    }
  }
  for (const auto& [facet, inc] : facets) {
    if (inc.size() != 2)
      return fail(r, ErrorCode::IncompleteFan,
                  "facet " + describe(facet) + " bounds " + std::to_string(inc.size()) + " maximal cone(s)",
                  inc.front().cone, facet);
    auto side = [&](std::size_t opposite) {
      std::vector<std::size_t> cols = facet.rays;
      cols.push_back(opposite);
      return determinant(column_matrix(fan, cols)) > 0;
    };
    if (side(inc[0].opposite) == side(inc[1].opposite))
      return fail(r, ErrorCode::MalformedInput,
                  "maximal cones " + std::to_string(inc[0].cone) + " and " + std::to_string(inc[1].cone) +
                      " overlap across facet " + describe(facet),
                  inc[1].cone, facet);
  }

  // Covering degree one: an interior point of the first cone lies in no other cone.
  std::vector<Integer> p(n, 0);
  for (std::size_t k : fan.max_cones[0].rays)
    for (std::size_t j = 0; j < n; ++j) p[j] += fan.rays[k][j];
  for (std::size_t c = 1; c < fan.max_cones.size(); ++c) {
    auto coords = solve_in_basis(column_matrix(fan, fan.max_cones[c].rays), p);
    if (std::all_of(coords.begin(), coords.end(), [](const Rational& x) { return x >= 0; }))
      return fail(r, ErrorCode::MalformedInput,
                  "maximal cones 0 and " + std::to_string(c) + " overlap (fan covers N_R more than once)", c);
  }
  r.complete = true;
  return r;
}

void require_valid_fan(const Fan& fan) {
  ValidationReport r = validate_fan(fan);
  if (!r.ok()) throw Error(*r.code, r.message);
}

std::set<Cone> enumerate_cones(const Fan& fan) {
  std::set<Cone> out;
  for (const Cone& sigma : fan.max_cones) {
    const std::size_t k = sigma.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      std::vector<std::size_t> face;
      for (std::size_t b = 0; b < k; ++b)
        if (mask & (std::uint64_t{1} << b)) face.push_back(sigma.rays[b]);
      out.insert(Cone(std::move(face)));
    }
  }
  return out;
}

std::vector<PrimitiveCollection> primitive_collections(const Fan& fan) {
  const std::size_t nr = fan.num_rays();
  if (nr > 63) throw Error(ErrorCode::MalformedInput, "too many rays for primitive-collection search");

  std::unordered_set<std::uint64_t> faces;
  for (const Cone& c : enumerate_cones(fan)) {
    std::uint64_t m = 0;
    for (auto i : c.rays) m |= std::uint64_t{1} << i;
    faces.insert(m);
  }

  // A minimal non-face of a simplicial fan has at most dim + 1 elements, and
  // it is minimal iff dropping any single element yields a face.
  std::vector<PrimitiveCollection> out;
  const std::size_t max_size = std::min(nr, fan.dim + 1);
  for (std::size_t size = 2; size <= max_size; ++size) {
    std::vector<std::size_t> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      std::uint64_t m = 0;
      for (auto i : idx) m |= std::uint64_t{1} << i;
      if (!faces.count(m)) {
        bool minimal = true;
        for (auto i : idx)
          if (!faces.count(m & ~(std::uint64_t{1} << i))) {
            minimal = false;
            break;
          }
        if (minimal) out.emplace_back(idx);
      }
      // next combination in lexicographic order
      std::size_t pos = size;
      while (pos > 0 && idx[pos - 1] == nr - size + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t k = pos; k < size; ++k) idx[k] = idx[k - 1] + 1;
    }
  }
  return out;
}

std::int64_t euler_characteristic_ambient(const Fan& fan) { return static_cast<std::int64_t>(fan.max_cones.size()); }

std::vector<std::int64_t> face_numbers(const Fan& fan) {
  std::vector<std::int64_t> f(fan.dim + 1, 0);
  for (const Cone& c : enumerate_cones(fan)) ++f[c.size()];
  return f;
}

}  // namespace toric
