#pragma once

#include "toric/fan.hpp"
#include "toric/fan_file.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace toric::testing {

inline std::filesystem::path data_dir() { return TORIC_DATA_DIR; }

inline std::filesystem::path fan_path(const std::string& stem) { return data_dir() / "fans" / (stem + ".fan"); }

inline Fan load_fan(const std::string& stem) { return parse_fan_file(fan_path(stem)).fan; }

inline Fan make_fan(std::size_t dim, std::vector<RayVector> rays, const std::vector<std::vector<std::size_t>>& cones) {
  Fan f;
  f.dim = dim;
  f.rays = std::move(rays);
  for (const auto& c : cones) f.max_cones.emplace_back(c);
  return f;
}

inline Fan cp4_fan() {
  return make_fan(4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {-1, -1, -1, -1}},
                  {{0, 1, 2, 3}, {0, 1, 2, 4}, {0, 1, 3, 4}, {0, 2, 3, 4}, {1, 2, 3, 4}});
}

// rays e4, e1, e2, e3, -e4, -e1-e2-e3+3e4; first cone leaves out rays 0 and 5
inline Fan b1_fan() {
  return make_fan(4, {{0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}, {-1, -1, -1, 3}},
                  {{1, 2, 3, 4},
                   {0, 1, 2, 3},
                   {0, 1, 2, 5},
                   {0, 1, 3, 5},
                   {0, 2, 3, 5},
                   {1, 2, 4, 5},
                   {1, 3, 4, 5},
                   {2, 3, 4, 5}});
}

inline Fan cp1_fan() { return make_fan(1, {{1}, {-1}}, {{0}, {1}}); }

inline Fan p1xp1_fan() { return make_fan(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

/// Complete 2-dim fan from rays listed counter-clockwise; cones are
/// consecutive pairs.
inline Fan polygon_fan(std::vector<RayVector> rays) {
  std::vector<std::vector<std::size_t>> cones;
  for (std::size_t i = 0; i < rays.size(); ++i) cones.push_back({i, (i + 1) % rays.size()});
  return make_fan(2, std::move(rays), cones);
}

/// The five smooth toric del Pezzo surfaces: P2, P1xP1, F1, P2 blown up in
/// two points, and the hexagon.
inline Fan fano_polygon(int which) {
  switch (which) {
    case 0: return polygon_fan({{1, 0}, {0, 1}, {-1, -1}});
    case 1: return polygon_fan({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
    case 2: return polygon_fan({{1, 0}, {0, 1}, {-1, 1}, {0, -1}});
    case 3: return polygon_fan({{1, 0}, {1, 1}, {0, 1}, {-1, -1}, {0, -1}});
    default: return polygon_fan({{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}});
  }
}

inline Fan product_fan(const Fan& a, const Fan& b) {
  Fan f;
  f.dim = a.dim + b.dim;
  for (const auto& r : a.rays) {
    RayVector v(r);
    v.resize(f.dim, 0);
    f.rays.push_back(v);
  }
  for (const auto& r : b.rays) {
    RayVector v(a.dim, 0);
    v.insert(v.end(), r.begin(), r.end());
    f.rays.push_back(v);
  }
  for (const auto& ca : a.max_cones) {
    for (const auto& cb : b.max_cones) {
      std::vector<std::size_t> idx(ca.rays);
      for (auto j : cb.rays) idx.push_back(a.num_rays() + j);
      f.max_cones.emplace_back(idx);
    }
  }
  return f;
}

/// A smooth complete surface obtained from P2 or a Hirzebruch surface by
/// repeated toric blow-ups at random fixed points. Generally not Fano.
inline Fan random_surface(std::mt19937_64& rng, int max_blowups = 4) {
  std::vector<RayVector> rays;
  if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
    rays = {{1, 0}, {0, 1}, {-1, -1}};
  } else {
    std::int64_t a = std::uniform_int_distribution<std::int64_t>(0, 3)(rng);
    rays = {{1, 0}, {0, 1}, {-1, a}, {0, -1}};
  }
  int blowups = std::uniform_int_distribution<int>(0, max_blowups)(rng);
  for (int k = 0; k < blowups; ++k) {
    std::size_t i = std::uniform_int_distribution<std::size_t>(0, rays.size() - 1)(rng);
    const auto& u = rays[i];
    const auto& v = rays[(i + 1) % rays.size()];
    RayVector w{u[0] + v[0], u[1] + v[1]};
    rays.insert(rays.begin() + static_cast<std::ptrdiff_t>(i) + 1, w);
  }
  return polygon_fan(rays);
}

/// perm[i] is the new index of ray i.
inline Fan relabel(const Fan& fan, const std::vector<std::size_t>& perm) {
  Fan f;
  f.dim = fan.dim;
  f.rays.resize(fan.num_rays());
  for (std::size_t i = 0; i < fan.num_rays(); ++i) f.rays[perm[i]] = fan.rays[i];
  for (const auto& c : fan.max_cones) {
    std::vector<std::size_t> idx;
    for (auto i : c.rays) idx.push_back(perm[i]);
    f.max_cones.emplace_back(idx);
  }
  return f;
}

inline std::vector<std::size_t> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline Fan shuffle_cones(Fan fan, std::mt19937_64& rng) {
  std::shuffle(fan.max_cones.begin(), fan.max_cones.end(), rng);
  return fan;
}

/// Every exponent vector with `num_vars` entries and total degree `degree`.
inline std::vector<std::vector<int>> exponents_of_degree(std::size_t num_vars, int degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(num_vars, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == num_vars) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  if (num_vars == 0) {
    if (degree == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, degree);
  return out;
}

}  // namespace toric::testing
