#pragma once

#include "toric/error.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace toric {

/// Primitive lattice generator u_rho of a ray.
using RayVector = std::vector<std::int64_t>;

/// A cone given by the (sorted, distinct) indices of its generating rays.
struct Cone {
  std::vector<std::size_t> rays;

  Cone() = default;
  explicit Cone(std::vector<std::size_t> indices);

  std::size_t size() const { return rays.size(); }
  bool contains(std::size_t ray) const;
  bool contains(const Cone& other) const;

  auto operator<=>(const Cone&) const = default;
};

using PrimitiveCollection = Cone;

/// A complete simplicial fan in N = Z^dim, maximal cones given explicitly.
struct Fan {
  std::size_t dim = 0;
  std::vector<RayVector> rays;
  std::vector<Cone> max_cones;

  std::size_t num_rays() const { return rays.size(); }
};

/// Outcome of validate_fan. On failure `code` names the first violated
/// condition and `cone_index`/`facet` locate it.
struct ValidationReport {
  bool well_formed = false;
  bool simplicial = false;
  bool smooth = false;
  bool complete = false;

  std::optional<ErrorCode> code;
  std::optional<std::size_t> cone_index;
  std::optional<Cone> facet;
  std::string message;

  bool ok() const { return !code.has_value(); }
};

ValidationReport validate_fan(const Fan& fan);

/// Throws Error with the report's code when the fan is not a smooth complete fan.
void require_valid_fan(const Fan& fan);

/// All faces of all maximal cones, the zero cone included.
std::set<Cone> enumerate_cones(const Fan& fan);

/// Minimal non-faces, sorted by size then lexicographically.
std::vector<PrimitiveCollection> primitive_collections(const Fan& fan);

/// chi of a smooth complete toric variety: the number of maximal cones.
std::int64_t euler_characteristic_ambient(const Fan& fan);

/// Number of cones of each dimension 0..dim (the face numbers of the fan).
std::vector<std::int64_t> face_numbers(const Fan& fan);

}  // namespace toric
