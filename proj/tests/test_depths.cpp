#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <vector>

#include "fdepth/depths.hpp"
#include "fdepth/errors.hpp"
#include "fdepth/evaluate.hpp"
#include "fdepth/stats.hpp"
#include "oracle_depths.hpp"
#include "test_helpers.hpp"

using Catch::Approx;
using namespace fdepth;

namespace {

DepthParams with_bandwidth(Method m, double h) {
  DepthParams p;
  p.method = m;
  p.bandwidth_override = h;
  return p;
}

}  // namespace

// ---------------------------------------------------------------------------
// bandwidth selection

TEST_CASE("quantile of {1,2,3,4} at 0.25 is 1.75") {
  REQUIRE(quantile7(std::vector<double>{1, 2, 3, 4}, 0.25) == 1.75);
  REQUIRE(oracle::quantile_type7({1, 2, 3, 4}, 0.25) == 1.75);
}

TEST_CASE("bandwidth interpolates the pairwise distances") {
  // constants {0, 1, 3} on [0,1]: distances {1, 3, 2}
  const Grid g = make_grid({0.0, 1.0});
  const auto sample = testutil::constant_sample({0.0, 1.0, 3.0}, g);
  const PairwiseGeometry geom = pairwise_geometry(sample);
  REQUIRE(bandwidth(geom, 0.5) == Approx(2.0).margin(1e-12));
  REQUIRE(bandwidth(geom, 0.25) == Approx(1.5).margin(1e-12));
  REQUIRE(bandwidth(geom, 0.25) ==
          Approx(oracle::bandwidth(sample, 0.25)).margin(1e-15));
}

TEST_CASE("single pair gives the one distance at any quantile") {
  const Grid g = make_grid({0.0, 1.0});
  const auto two = testutil::constant_sample({0.0, 1.75}, g);
  const PairwiseGeometry geom = pairwise_geometry(two);
  for (double q : {0.1, 0.25, 0.5, 0.99}) {
    REQUIRE(bandwidth(geom, q) == Approx(1.75).margin(1e-15));
  }
}

TEST_CASE("equal distances give that distance at any quantile") {
  // three curves pairwise equidistant (vertices of an equilateral triangle
  // are not realizable with constants, so patch a geometry directly)
  PairwiseGeometry geom;
  geom.dist.resize(3, 3);
  geom.dist.setZero();
  geom.dist(0, 1) = geom.dist(1, 0) = 0.7;
  geom.dist(0, 2) = geom.dist(2, 0) = 0.7;
  geom.dist(1, 2) = geom.dist(2, 1) = 0.7;
  for (double q : {0.1, 0.25, 0.5, 0.99}) {
    REQUIRE(bandwidth(geom, q) == Approx(0.7).margin(1e-15));
  }
}

TEST_CASE("identical curves make the bandwidth degenerate") {
  const Grid g = testutil::unit_grid();
  const auto same = testutil::constant_sample({2.0, 2.0, 2.0}, g);
  REQUIRE_THROWS_AS(bandwidth(pairwise_geometry(same), 0.25),
                    DegenerateSampleError);
}

// ---------------------------------------------------------------------------
// hand-evaluated depth values

TEST_CASE("fmd on constant configurations") {
  const Grid g = testutil::unit_grid();
  const auto sample = testutil::constant_sample({0.0, 2.0, 3.0}, g);
  REQUIRE(fmd(sample, testutil::constant_curve(2.0, g)) ==
          Approx(5.0 / 6.0).margin(1e-12));
  REQUIRE(fmd(sample, testutil::constant_curve(5.0, g)) ==
          Approx(0.5).margin(1e-12));
  REQUIRE(fmd(sample, testutil::constant_curve(-1.0, g)) ==
          Approx(0.5).margin(1e-12));

  const auto degenerate = testutil::constant_sample({1.0, 1.0, 1.0}, g);
  REQUIRE(fmd(degenerate, testutil::constant_curve(1.0, g)) == 0.5);
}

TEST_CASE("mbd on constant configurations") {
  const Grid g = testutil::unit_grid();
  const auto pair = testutil::constant_sample({0.0, 2.0}, g);
  REQUIRE(mbd(pair, testutil::constant_curve(1.0, g)) == Approx(1.0).margin(1e-12));
  REQUIRE(mbd(pair, testutil::constant_curve(5.0, g)) == 0.0);

  const auto three = testutil::constant_sample({0.0, 2.0, 3.0}, g);
  REQUIRE(mbd(three, testutil::constant_curve(1.0, g)) ==
          Approx(2.0 / 3.0).margin(1e-12));

  const auto single = testutil::constant_sample({0.0}, g);
  REQUIRE_THROWS_AS(mbd(single, testutil::constant_curve(1.0, g)),
                    InsufficientSampleError);
}

TEST_CASE("fsd exclusion, symmetry and constants") {
  const Grid g = testutil::unit_grid();
  const auto self = testutil::constant_sample({1.0}, g);
  REQUIRE(fsd(self, testutil::constant_curve(1.0, g)) == 1.0);

  rng::Stream stream(5);
  Eigen::VectorXd x(3), offset(3);
  for (int s = 0; s < 3; ++s) {
    x(s) = stream.normal();
    offset(s) = stream.normal();
  }
  CurveMatrix pair(2, 3);
  pair.row(0) = (x + offset).transpose();
  pair.row(1) = (x - offset).transpose();
  const auto sym = make_sample(pair, g);
  REQUIRE(fsd(sym, x) == 1.0);

  const auto three = testutil::constant_sample({0.0, 3.0, 4.0}, g);
  REQUIRE(fsd(three, testutil::constant_curve(1.0, g)) ==
          Approx(2.0 / 3.0).margin(1e-12));
}

TEST_CASE("hmd kernel values") {
  const Grid g = testutil::unit_grid();
  const auto same = testutil::constant_sample({0.5, 0.5}, g);
  REQUIRE(hmd(same, testutil::constant_curve(0.5, g),
              with_bandwidth(Method::HMD, 1.0)) == 1.0);

  // query at distances h and 2h: (e^-1/2 + e^-2)/2
  const auto two = testutil::constant_sample({1.0, 2.0}, g);
  REQUIRE(hmd(two, testutil::constant_curve(0.0, g),
              with_bandwidth(Method::HMD, 1.0)) ==
          Approx(0.37093297147462306).margin(1e-9));

  // kernel tail: all curves at distance 10h
  const auto far = testutil::constant_sample({10.0}, g);
  REQUIRE(hmd(far, testutil::constant_curve(0.0, g),
              with_bandwidth(Method::HMD, 1.0)) < 1e-6);
}

TEST_CASE("kfsd hand values") {
  const Grid g = testutil::unit_grid();
  const auto one = testutil::constant_sample({1.0}, g);
  REQUIRE(kfsd(one, testutil::constant_curve(0.0, g),
               with_bandwidth(Method::KFSD, 2.5)) == Approx(0.0).margin(1e-9));

  const auto same = testutil::constant_sample({0.25, 0.25}, g);
  REQUIRE(kfsd(same, testutil::constant_curve(0.25, g),
               with_bandwidth(Method::KFSD, 1.0)) == 1.0);

  // symmetric pair at distance h from the query, 2h from each other
  const auto sym = testutil::constant_sample({1.0, -1.0}, g);
  REQUIRE(kfsd(sym, testutil::constant_curve(0.0, g),
               with_bandwidth(Method::KFSD, 1.0)) ==
          Approx(0.32872141793300629).margin(1e-9));
}

// ---------------------------------------------------------------------------
// batch evaluation

TEST_CASE("batch equals per-query evaluation") {
  const Grid g = testutil::unit_grid();
  const auto consts = testutil::constant_sample({0.0, 2.0, 3.0}, g);
  for (Method m : {Method::FSD, Method::FMD, Method::MBD}) {
    DepthParams p;
    p.method = m;
    const DepthResult batch = depth_all(consts, p);
    for (Eigen::Index k = 0; k < 3; ++k) {
      const Eigen::VectorXd q = consts.values.row(k).transpose();
      const double single = m == Method::FSD   ? fsd(consts, q)
                            : m == Method::FMD ? fmd(consts, q)
                                               : mbd(consts, q);
      REQUIRE(batch.values(k) == single);
    }
  }

  rng::Stream stream(11);
  const auto sample = testutil::random_sample(stream, 6, 5);
  const auto results = depth_all_methods(sample);
  const double h = *results[3].bandwidth_used;
  REQUIRE(h == *results[4].bandwidth_used);
  DepthParams kernel_params = with_bandwidth(Method::KFSD, h);
  for (Eigen::Index k = 0; k < 6; ++k) {
    const Eigen::VectorXd q = sample.values.row(k).transpose();
    REQUIRE(results[0].values(k) == fsd(sample, q));
    REQUIRE(results[1].values(k) == fmd(sample, q));
    REQUIRE(results[2].values(k) == mbd(sample, q));
    REQUIRE(results[3].values(k) == kfsd(sample, q, kernel_params));
    kernel_params.method = Method::HMD;
    REQUIRE(results[4].values(k) == hmd(sample, q, kernel_params));
    kernel_params.method = Method::KFSD;
  }
}

TEST_CASE("fsd batch on constants 0,3,4") {
  const Grid g = testutil::unit_grid();
  const auto sample = testutil::constant_sample({0.0, 3.0, 4.0}, g);
  DepthParams p;
  p.method = Method::FSD;
  const DepthResult r = depth_all(sample, p);
  REQUIRE(r.values(1) == 1.0);  // +1 and -1 unit directions cancel
  REQUIRE(r.values(0) == Approx(1.0 / 3.0).margin(1e-12));
  REQUIRE(r.values(2) == Approx(1.0 / 3.0).margin(1e-12));
}

TEST_CASE("duplicated curves get equal depth") {
  rng::Stream stream(123);
  const auto sample = testutil::random_sample(stream, 5, 6, true);
  const auto results = depth_all_methods(sample);
  for (const DepthResult& r : results) {
    REQUIRE(r.values(0) == r.values(4));
  }
}

// ---------------------------------------------------------------------------
// oracle equivalence (spot check; the acceptance suite runs 200 samples)

TEST_CASE("depths match the literal definitions on random samples") {
  rng::Stream stream(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(stream.uniform01() * 5);
    const int pts = 3 + static_cast<int>(stream.uniform01() * 6);
    const bool dup = trial % 3 == 0;
    const auto sample = testutil::random_sample(stream, n, pts, dup);
    const auto results = depth_all_methods(sample);
    const double h = oracle::bandwidth(sample, 0.25);
    REQUIRE(*results[3].bandwidth_used == Approx(h).margin(1e-12));
    for (Eigen::Index k = 0; k < n; ++k) {
      const Eigen::VectorXd q = sample.values.row(k).transpose();
      REQUIRE(results[0].values(k) == Approx(oracle::fsd(sample, q)).margin(1e-12));
      REQUIRE(results[1].values(k) == Approx(oracle::fmd(sample, q)).margin(1e-12));
      REQUIRE(results[2].values(k) == Approx(oracle::mbd(sample, q)).margin(1e-12));
      REQUIRE(results[3].values(k) == Approx(oracle::kfsd(sample, q, h)).margin(1e-12));
      REQUIRE(results[4].values(k) == Approx(oracle::hmd(sample, q, h)).margin(1e-12));
    }
  }
}

// ---------------------------------------------------------------------------
// invariants

TEST_CASE("depth ranges") {
  rng::Stream stream(31);
  for (int trial = 0; trial < 50; ++trial) {
    const auto sample = testutil::random_sample(stream, 4, 5);
    const auto results = depth_all_methods(sample);
    for (int m = 0; m < 5; ++m) {
      for (Eigen::Index k = 0; k < 4; ++k) {
        REQUIRE(results[m].values(k) >= 0.0);
        REQUIRE(results[m].values(k) <= 1.0);
      }
    }
    for (Eigen::Index k = 0; k < 4; ++k) {
      REQUIRE(results[4].values(k) > 0.0);  // hmd is strictly positive
    }
  }
}

TEST_CASE("translation invariance") {
  rng::Stream stream(32);
  for (int trial = 0; trial < 25; ++trial) {
    const auto sample = testutil::random_sample(stream, 5, 6);
    Eigen::VectorXd shift(6);
    for (int s = 0; s < 6; ++s) {
      shift(s) = stream.normal();
    }
    FunctionalSample shifted = sample;
    shifted.values.rowwise() += shift.transpose();

    const auto base = depth_all_methods(sample);
    const auto moved = depth_all_methods(shifted);
    for (Eigen::Index k = 0; k < 5; ++k) {
      REQUIRE(moved[0].values(k) == Approx(base[0].values(k)).margin(1e-10));
      REQUIRE(moved[3].values(k) == Approx(base[3].values(k)).margin(1e-10));
      REQUIRE(moved[4].values(k) == Approx(base[4].values(k)).margin(1e-10));
      REQUIRE(moved[1].values(k) == base[1].values(k));  // fmd exact
      REQUIRE(moved[2].values(k) == base[2].values(k));  // mbd exact
    }
  }
}

TEST_CASE("permutation invariance is exact") {
  rng::Stream stream(33);
  for (int trial = 0; trial < 25; ++trial) {
    const auto sample = testutil::random_sample(stream, 6, 5);
    std::vector<Eigen::Index> perm = {3, 0, 5, 1, 4, 2};
    FunctionalSample shuffled = sample;
    for (Eigen::Index i = 0; i < 6; ++i) {
      shuffled.values.row(i) = sample.values.row(perm[i]);
    }
    const auto base = depth_all_methods(sample);
    const auto mixed = depth_all_methods(shuffled);
    for (int m = 0; m < 5; ++m) {
      for (Eigen::Index i = 0; i < 6; ++i) {
        REQUIRE(mixed[m].values(i) == base[m].values(perm[i]));
      }
    }
  }
}

TEST_CASE("monotone pointwise maps leave fmd and mbd unchanged") {
  rng::Stream stream(34);
  for (int trial = 0; trial < 25; ++trial) {
    const auto sample = testutil::random_sample(stream, 5, 6);
    FunctionalSample mapped = sample;
    for (Eigen::Index i = 0; i < 5; ++i) {
      for (Eigen::Index s = 0; s < 6; ++s) {
        const double v = sample.values(i, s);
        mapped.values(i, s) = v * v * v + v;  // strictly increasing
      }
    }
    DepthParams fmd_params;
    fmd_params.method = Method::FMD;
    DepthParams mbd_params;
    mbd_params.method = Method::MBD;
    REQUIRE(depth_all(mapped, fmd_params).values ==
            depth_all(sample, fmd_params).values);
    REQUIRE(depth_all(mapped, mbd_params).values ==
            depth_all(sample, mbd_params).values);
  }
}

TEST_CASE("local depth penalizes the curve between two clusters") {
  const Grid g = make_grid({0.0, 0.25, 0.5, 0.75, 1.0});
  std::vector<double> levels;
  for (int i = 0; i < 5; ++i) {
    levels.push_back(0.0 + 0.05 * i);
    levels.push_back(10.0 + 0.05 * i);
  }
  levels.push_back(5.0);  // isolated midpoint curve
  const auto sample = testutil::constant_sample(levels, g);
  const auto results = depth_all_methods(sample);
  const Eigen::VectorXd fsd_ranks = ranks(results[0].values);
  const Eigen::VectorXd kfsd_ranks = ranks(results[3].values);
  const Eigen::Index mid = sample.curve_count() - 1;
  REQUIRE(kfsd_ranks(mid) < fsd_ranks(mid));
}
