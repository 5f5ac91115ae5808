#include <gtest/gtest.h>

#include "girth/generator.hpp"
#include "girth/io.hpp"
#include "girth/oracle.hpp"
#include "girth/peel.hpp"
#include "girth/preprocess.hpp"

namespace girth {
namespace {

TEST(Generator, CycleAndGrid) {
  EXPECT_EQ(oracle::brute_girth(gen::cycle(5)), DistVal(5));
  EXPECT_EQ(oracle::brute_girth(gen::grid(10, 10)), DistVal(4));
  EXPECT_THROW(gen::cycle(2), GirthError);
  EXPECT_THROW(gen::grid(0, 3), GirthError);
}

TEST(Generator, WheelShape) {
  PlaneGraph w = gen::wheel(5);
  EXPECT_EQ(w.n, 6);
  EXPECT_EQ(w.m(), 10);
  EXPECT_EQ(w.degree(0), 5);
  EXPECT_EQ(oracle::brute_girth(w), DistVal(3));
}

TEST(Generator, AllOutputsValid) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    PlaneGraph g = gen::random_planar(20 + seed, 0.03 * (seed % 30), seed);
    ValidationReport r = validate(g);
    ASSERT_TRUE(r.ok) << r.violations[0];
  }
  EXPECT_TRUE(validate(gen::grid(1, 7)).ok);
  EXPECT_TRUE(validate(gen::grid(2, 2)).ok);
}

TEST(Generator, DeterministicPerSeed) {
  PlaneGraph a = gen::random_planar(50, 0.3, 42);
  PlaneGraph b = gen::random_planar(50, 0.3, 42);
  EXPECT_EQ(serialize_graph(a), serialize_graph(b));
  PlaneGraph c = gen::random_planar(50, 0.3, 43);
  EXPECT_NE(serialize_graph(a), serialize_graph(c));

  PlaneGraph w1 = gen::random_weights(a, 8, 7);
  PlaneGraph w2 = gen::random_weights(a, 8, 7);
  EXPECT_EQ(serialize_graph(w1), serialize_graph(w2));
}

// Frozen golden footprint of the seeded generator; a change here means every
// derived corpus shifts.
TEST(Generator, GoldenFootprint) {
  PlaneGraph g = gen::random_planar(50, 0.3, 42);
  EXPECT_EQ(g.n, 50);
  int expected = 49 + static_cast<int>(0.3 * ((3 * 50 - 6) - 49) + 0.5);
  EXPECT_EQ(g.m(), expected);
}

TEST(Generator, RandomWeightsRange) {
  PlaneGraph g = gen::random_weights(gen::random_planar(40, 0.5, 9), 8, 11);
  for (const auto& e : g.edges) {
    EXPECT_GE(e.w, 1);
    EXPECT_LE(e.w, 8);
  }
  PlaneGraph z = gen::random_weights(gen::random_planar(40, 0.5, 9), 3, 11, 0);
  bool saw_zero = false;
  for (const auto& e : z.edges) saw_zero |= e.w == 0;
  EXPECT_TRUE(saw_zero);
}

TEST(Fixtures, Fig1Values) {
  PlaneGraph a = gen::figure_fixture(gen::Figure::Fig1a);
  EXPECT_EQ(a.n, 6);
  EXPECT_EQ(a.max_weight(), 2);
  EXPECT_EQ(preprocess::density(a), Rational(3, 2));
  EXPECT_EQ(outerplane_radius(a), 2);

  PlaneGraph c = gen::figure_fixture(gen::Figure::Fig1c);
  EXPECT_EQ(c.n, 5);
  EXPECT_EQ(preprocess::density(c), Rational(9, 5));
  EXPECT_EQ(outerplane_radius(c), 1);

  PlaneGraph b = gen::figure_fixture(gen::Figure::Fig1b);
  EXPECT_EQ(b.n, 9);
  EXPECT_TRUE(b.unweighted());
  EXPECT_EQ(outerplane_radius(b), 2);
}

TEST(Fixtures, Fig5DepthProfile) {
  PlaneGraph g = gen::figure_fixture(gen::Figure::Fig5a);
  DepthMap dm = outerplane_depths(g);
  int ones = 0, twos = 0;
  for (int v = 0; v < g.n; ++v) {
    if (dm.depth[v] == 1) ++ones;
    if (dm.depth[v] == 2) ++twos;
  }
  EXPECT_EQ(ones, 4);
  EXPECT_EQ(twos, 5);
}

TEST(Fixtures, Fig7aShape) {
  PlaneGraph g = gen::figure_fixture(gen::Figure::Fig7a);
  EXPECT_EQ(g.n, 5);
  EXPECT_EQ(g.m(), 5);
  EXPECT_EQ(oracle::brute_girth(g), DistVal(7));
}

}  // namespace
}  // namespace girth
