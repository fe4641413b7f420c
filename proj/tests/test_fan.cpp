#include "support.hpp"

#include "toric/fan.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace toric;
using namespace toric::testing;

namespace {

std::set<Cone> brute_force_faces(const Fan& fan) {
  std::set<Cone> faces;
  for (const auto& c : fan.max_cones) {
    std::size_t k = c.size();
    for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
      std::vector<std::size_t> idx;
      for (std::size_t b = 0; b < k; ++b)
        if (mask & (1ull << b)) idx.push_back(c.rays[b]);
      faces.insert(Cone(idx));
    }
  }
  return faces;
}

// minimal non-faces by checking every proper subset, over all 2^r subsets
std::vector<Cone> brute_force_primitive(const Fan& fan) {
  auto faces = brute_force_faces(fan);
  std::size_t r = fan.num_rays();
  std::vector<Cone> out;
  for (std::uint64_t mask = 1; mask < (1ull << r); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t b = 0; b < r; ++b)
      if (mask & (1ull << b)) idx.push_back(b);
    Cone c(idx);
    if (faces.count(c)) continue;
    bool minimal = true;
    for (std::uint64_t sub = (mask - 1) & mask; sub != mask && minimal; sub = (sub - 1) & mask) {
      std::vector<std::size_t> sidx;
      for (std::size_t b = 0; b < r; ++b)
        if (sub & (1ull << b)) sidx.push_back(b);
      if (!faces.count(Cone(sidx))) minimal = false;
      if (sub == 0) break;
    }
    if (minimal) out.push_back(c);
  }
  std::sort(out.begin(), out.end(), [](const Cone& a, const Cone& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.rays < b.rays;
  });
  return out;
}

std::vector<std::string> fan_stems() {
  return {"cp4", "b1", "b2", "b3", "c4", "h8", "k4", "s2xs2", "s2xs3", "s3xs3", "v4"};
}

}  // namespace

TEST(ValidateFan, AcceptsProjectiveSpaceAndB1) {
  auto a = validate_fan(cp4_fan());
  EXPECT_TRUE(a.ok()) << a.message;
  EXPECT_TRUE(a.well_formed && a.simplicial && a.smooth && a.complete);
  auto b = validate_fan(b1_fan());
  EXPECT_TRUE(b.ok()) << b.message;
}

TEST(ValidateFan, AcceptsEveryShippedFan) {
  for (const auto& stem : fan_stems()) {
    auto r = validate_fan(load_fan(stem));
    EXPECT_TRUE(r.ok()) << stem << ": " << r.message;
  }
}

TEST(ValidateFan, AcceptsLowDimensionalFans) {
  EXPECT_TRUE(validate_fan(cp1_fan()).ok());
  EXPECT_TRUE(validate_fan(p1xp1_fan()).ok());
  for (int k = 0; k < 5; ++k) EXPECT_TRUE(validate_fan(fano_polygon(k)).ok()) << k;
}

TEST(ValidateFan, DetectsNonSmoothCone) {
  Fan f = cp4_fan();
  f.rays[4] = {-2, -1, -1, -1};
  auto r = validate_fan(f);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(*r.code, ErrorCode::NonSmoothCone);
  EXPECT_TRUE(r.cone_index.has_value());
  EXPECT_THROW(require_valid_fan(f), Error);
}

TEST(ValidateFan, DetectsMissingCone) {
  Fan f = cp4_fan();
  f.max_cones.pop_back();
  auto r = validate_fan(f);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(*r.code, ErrorCode::IncompleteFan);
  EXPECT_TRUE(r.facet.has_value());
}

TEST(ValidateFan, SingleConeIsIncomplete) {
  Fan f = make_fan(4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, {{0, 1, 2, 3}});
  auto r = validate_fan(f);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(*r.code, ErrorCode::IncompleteFan);
}

TEST(ValidateFan, RejectsDuplicatedCones) {
  Fan f = p1xp1_fan();
  auto cones = f.max_cones;
  f.max_cones.insert(f.max_cones.end(), cones.begin(), cones.end());
  EXPECT_FALSE(validate_fan(f).ok());
}

TEST(ValidateFan, RejectsMalformedInput) {
  Fan wrong_arity = cp4_fan();
  wrong_arity.max_cones[0] = Cone({0, 1, 2});
  EXPECT_EQ(*validate_fan(wrong_arity).code, ErrorCode::MalformedInput);

  Fan out_of_range = cp4_fan();
  out_of_range.max_cones[0] = Cone({0, 1, 2, 9});
  EXPECT_EQ(*validate_fan(out_of_range).code, ErrorCode::MalformedInput);

  Fan bad_length = cp4_fan();
  bad_length.rays[2] = {0, 0, 1};
  EXPECT_EQ(*validate_fan(bad_length).code, ErrorCode::MalformedInput);

  Fan empty;
  EXPECT_EQ(*validate_fan(empty).code, ErrorCode::MalformedInput);
}

TEST(EnumerateCones, ProjectiveSpaceHasAllProperSubsets) {
  auto cones = enumerate_cones(cp4_fan());
  // 2^5 - 1 proper subsets, the empty one included
  EXPECT_EQ(cones.size(), 31u);
  EXPECT_TRUE(cones.count(Cone()));
  EXPECT_FALSE(cones.count(Cone({0, 1, 2, 3, 4})));
}

TEST(EnumerateCones, SingleSimplexHasSixteenFaces) {
  Fan f = make_fan(4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, {{0, 1, 2, 3}});
  EXPECT_EQ(enumerate_cones(f).size(), 16u);
}

TEST(EnumerateCones, B1HasNoConeThroughOppositeRays) {
  auto cones = enumerate_cones(b1_fan());
  EXPECT_FALSE(cones.count(Cone({0, 4})));
  EXPECT_TRUE(cones.count(Cone({0, 1})));
}

TEST(EnumerateCones, AgreesWithBruteForce) {
  for (const auto& stem : fan_stems()) {
    Fan f = load_fan(stem);
    EXPECT_EQ(enumerate_cones(f), brute_force_faces(f)) << stem;
  }
}

TEST(PrimitiveCollections, ProjectiveSpace) {
  auto pcs = primitive_collections(cp4_fan());
  ASSERT_EQ(pcs.size(), 1u);
  EXPECT_EQ(pcs[0], Cone({0, 1, 2, 3, 4}));
}

TEST(PrimitiveCollections, B1) {
  auto pcs = primitive_collections(b1_fan());
  ASSERT_EQ(pcs.size(), 2u);
  EXPECT_EQ(pcs[0], Cone({0, 4}));
  EXPECT_EQ(pcs[1], Cone({1, 2, 3, 5}));
}

TEST(PrimitiveCollections, ProductOfLines) {
  auto pcs = primitive_collections(p1xp1_fan());
  ASSERT_EQ(pcs.size(), 2u);
  EXPECT_EQ(pcs[0], Cone({0, 2}));
  EXPECT_EQ(pcs[1], Cone({1, 3}));
}

TEST(PrimitiveCollections, AgreeWithBruteForceOnShippedFans) {
  for (const auto& stem : fan_stems()) {
    Fan f = load_fan(stem);
    EXPECT_EQ(primitive_collections(f), brute_force_primitive(f)) << stem;
  }
}

TEST(PrimitiveCollections, RandomSurfacesAndProducts) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    Fan f = random_surface(rng, 3);
    if (trial % 2 == 1) f = product_fan(f, cp1_fan());
    auto pcs = primitive_collections(f);
    ASSERT_EQ(pcs, brute_force_primitive(f)) << "trial " << trial;
    auto cones = enumerate_cones(f);
    for (const auto& pc : pcs) {
      ASSERT_FALSE(cones.count(pc));
      for (auto drop : pc.rays) {
        std::vector<std::size_t> rest;
        for (auto i : pc.rays)
          if (i != drop) rest.push_back(i);
        ASSERT_TRUE(cones.count(Cone(rest)));
      }
    }
  }
}

TEST(PrimitiveCollections, OrderIndependent) {
  std::mt19937_64 rng(7);
  for (const auto& stem : fan_stems()) {
    Fan f = load_fan(stem);
    auto base = primitive_collections(f);
    for (int k = 0; k < 10; ++k) {
      auto perm = random_permutation(f.num_rays(), rng);
      Fan g = shuffle_cones(relabel(f, perm), rng);
      std::set<Cone> expected;
      for (const auto& pc : base) {
        std::vector<std::size_t> idx;
        for (auto i : pc.rays) idx.push_back(perm[i]);
        expected.insert(Cone(idx));
      }
      auto got = primitive_collections(g);
      ASSERT_EQ(std::set<Cone>(got.begin(), got.end()), expected) << stem;
    }
  }
}

TEST(EnumerateCones, FaceClosed) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    Fan f = product_fan(random_surface(rng), trial % 3 == 0 ? cp1_fan() : random_surface(rng, 1));
    auto cones = enumerate_cones(f);
    for (const auto& c : cones) {
      for (auto drop : c.rays) {
        std::vector<std::size_t> rest;
        for (auto i : c.rays)
          if (i != drop) rest.push_back(i);
        ASSERT_TRUE(cones.count(Cone(rest)));
      }
    }
  }
}

TEST(EulerCharacteristic, CountsMaximalCones) {
  EXPECT_EQ(euler_characteristic_ambient(cp4_fan()), 5);
  EXPECT_EQ(euler_characteristic_ambient(b1_fan()), 8);
  EXPECT_EQ(euler_characteristic_ambient(p1xp1_fan()), 4);
}

// Normalized volume of the convex hull of the rays, computed independently
// with a convex hull routine. For a smooth Fano fan it equals the number of
// maximal cones, since every cone contributes a unimodular simplex.
TEST(EulerCharacteristic, MatchesFrozenHullVolumes) {
  const std::map<std::string, std::int64_t> volumes = {
      {"cp4", 5},    {"b1", 8},     {"b2", 8},     {"b3", 8},     {"c4", 9}, {"h8", 15},
      {"k4", 18},    {"s2xs2", 25}, {"s2xs3", 30}, {"s3xs3", 36}, {"v4", 30}};
  for (const auto& [stem, vol] : volumes) EXPECT_EQ(euler_characteristic_ambient(load_fan(stem)), vol) << stem;
}

TEST(FaceNumbers, ProjectiveSpace) {
  EXPECT_EQ(face_numbers(cp4_fan()), (std::vector<std::int64_t>{1, 5, 10, 10, 5}));
  EXPECT_EQ(face_numbers(b1_fan()), (std::vector<std::int64_t>{1, 6, 14, 16, 8}));
}
