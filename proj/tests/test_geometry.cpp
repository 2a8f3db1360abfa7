#include <cmath>
#include <numbers>

#include "doctest.h"
#include "gljunction/error.hpp"
#include "gljunction/geometry.hpp"

using namespace gljunction;
using std::numbers::pi;

TEST_CASE("disk-in-disk measures") {
  const DiskInDisk g(1.0, 2.0);
  CHECK(g.inner_area() == doctest::Approx(pi));
  CHECK(g.outer_area() == doctest::Approx(3.0 * pi));
  CHECK(g.interface_length() == doctest::Approx(2.0 * pi));
  CHECK_THROWS_AS(DiskInDisk(0.0, 1.0), InvalidArgument);
  CHECK_THROWS_AS(DiskInDisk(2.0, 2.0), InvalidArgument);
}

TEST_CASE("signed distance and curvature") {
  const DiskInDisk g(1.5, 3.0);
  CHECK(signed_distance(Point(0.0, 0.0), g) == doctest::Approx(1.5));
  CHECK(signed_distance(Point(1.5, 0.0), g) == doctest::Approx(0.0));
  CHECK(signed_distance(Point(0.0, -2.0), g) == doctest::Approx(-0.5));
  CHECK(curvature(0.3, g) == doctest::Approx(1.0 / 1.5));
  for (double r1 : {0.3, 1.0, 7.0}) {
    CHECK(std::abs(total_curvature(DiskInDisk(r1, 2.0 * r1)) - 2.0 * pi) < 1e-12);
  }
}

TEST_CASE("boundary coordinates invert the signed distance") {
  const DiskInDisk g(1.0, 2.0);
  const BoundaryCoords bc(g, 0.5);
  for (double s : {0.0, 1.0, 4.0}) {
    for (double t : {-0.4, -0.1, 0.0, 0.2, 0.49}) {
      const Point x = bc.map(s, t);
      CHECK(signed_distance(x, g) == doctest::Approx(t).epsilon(1e-14));
      CHECK(bc.jacobian(s, t) == doctest::Approx(1.0 - t));
    }
  }
  CHECK_THROWS_AS(bc.map(0.0, 0.5), OutOfTube);
  CHECK_THROWS_AS(bc.jacobian(0.0, -0.6), OutOfTube);
  CHECK_THROWS_AS(BoundaryCoords(g, 1.0), InvalidArgument);
  CHECK_THROWS_AS(BoundaryCoords(g, 0.0), InvalidArgument);
}

TEST_CASE("tube mask") {
  const DiskInDisk g(1.0, 2.0);
  Eigen::Matrix<double, Eigen::Dynamic, 2> pts(4, 2);
  pts << 0.0, 0.0, 0.95, 0.0, 0.0, 1.05, 1.5, 0.0;
  const auto idx = tube_mask(pts, 0.1, g);
  REQUIRE(idx.size() == 2);
  CHECK(idx[0] == 1);
  CHECK(idx[1] == 2);
  Eigen::VectorXd d(3);
  d << 0.2, -0.05, 0.1;
  CHECK(tube_mask(d, 0.1).size() == 1);
}
