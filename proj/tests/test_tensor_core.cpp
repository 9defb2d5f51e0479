#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cosserat/rotation.hpp"
#include "cosserat/tensor.hpp"

using namespace cosserat;

namespace {

std::mt19937 rng(12345);

Vec3 rand_vec() {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return {u(rng), u(rng), u(rng)};
}

Mat3 rand_mat() {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = u(rng);
  return m;
}

int perm_sign(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  int sign = 1;
  int p[3] = {i, j, k};
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      if (p[a] > p[b]) {
        std::swap(p[a], p[b]);
        sign = -sign;
      }
  return sign;
}

}  // namespace

TEST_CASE("alternator symbol equals the permutation sign") {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        CHECK(levi_civita(i, j, k) == doctest::Approx(perm_sign(i, j, k)));
}

TEST_CASE("alternator contraction e_ijk e_ljk = 2 delta_il") {
  for (int i = 0; i < 3; ++i)
    for (int l = 0; l < 3; ++l) {
      double s = 0.0;
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) s += levi_civita(i, j, k) * levi_civita(l, j, k);
      CHECK(s == doctest::Approx(i == l ? 2.0 : 0.0));
    }
}

TEST_CASE("axial vector round trips through the skew map") {
  for (int rep = 0; rep < 20; ++rep) {
    Vec3 a = rand_vec();
    Mat3 s = skew_from_axial(a);
    CHECK(norm(s + transpose(s)) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(norm(axl(s) - a) == doctest::Approx(0.0).epsilon(1e-15));
    // skew(a) b = a x b
    Vec3 b = rand_vec();
    CHECK(norm(s * b - cross(a, b)) < 1e-14);
  }
}

TEST_CASE("axl rejects non-skew input, axl_unchecked reads the triangle") {
  Mat3 m = Mat3::identity();
  CHECK_THROWS_AS(axl(m), NotSkew);
  Mat3 s = skew_from_axial(Vec3(1, 2, 3));
  CHECK(norm(axl_unchecked(s + 0.5 * Mat3::identity()) - Vec3(1, 2, 3)) <
        1e-14);
}

TEST_CASE("epsilon double contraction of a skew tensor gives -2 axl") {
  for (int rep = 0; rep < 10; ++rep) {
    Vec3 a = rand_vec();
    CHECK(norm(eps_double_dot(skew_from_axial(a)) + 2.0 * a) < 1e-14);
  }
}

TEST_CASE("tensor cross vector acts on dyads as u (x) (v x w)") {
  for (int rep = 0; rep < 20; ++rep) {
    Vec3 u = rand_vec(), v = rand_vec(), w = rand_vec();
    CHECK(norm(tensor_cross_vector(dyad(u, v), w) - dyad(u, cross(v, w))) <
          1e-14);
    CHECK(norm(vector_cross_tensor(w, dyad(u, v)) - dyad(cross(w, u), v)) <
          1e-14);
  }
}

TEST_CASE("tensor cross vector is bilinear") {
  Mat3 a = rand_mat(), b = rand_mat();
  Vec3 w = rand_vec();
  CHECK(norm(tensor_cross_vector(a + b, w) -
             (tensor_cross_vector(a, w) + tensor_cross_vector(b, w))) < 1e-13);
  CHECK(norm(tensor_cross_vector(2.5 * a, w) -
             2.5 * tensor_cross_vector(a, w)) < 1e-13);
}

TEST_CASE("orthogonal split reassembles and is norm-orthogonal") {
  for (int rep = 0; rep < 20; ++rep) {
    Mat3 x = rand_mat();
    SplitParts p = split(x);
    CHECK(norm(p.sym + p.skew - x) < 1e-14);
    CHECK(norm(p.dev3sym + (p.trace / 3.0) * Mat3::identity() - p.sym) <
          1e-14);
    CHECK(trace(p.dev3sym) == doctest::Approx(0.0).epsilon(1e-13));
    double lhs = double_contract(x, x);
    double rhs = double_contract(p.dev3sym, p.dev3sym) +
                 double_contract(p.skew, p.skew) +
                 p.trace * p.trace / 3.0;
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("matrix inverse and determinant") {
  for (int rep = 0; rep < 20; ++rep) {
    Mat3 a = rand_mat() + 3.0 * Mat3::identity();
    CHECK(norm(a * inverse(a) - Mat3::identity()) < 1e-12);
    Mat3 b = rand_mat();
    CHECK(det(a * b) == doctest::Approx(det(a) * det(b)).epsilon(1e-10));
  }
  CHECK_THROWS_AS(inverse(Mat3::zero()), Degenerate);
}

TEST_CASE("unit quaternions land in SO(3)") {
  for (int rep = 0; rep < 20; ++rep) {
    Quat q = Quat::from_rotvec(rand_vec());
    Mat3 r = q.to_matrix();
    CHECK(rotation_defect(r) < 1e-14);
    CHECK(det(r) == doctest::Approx(1.0).epsilon(1e-12));
    // antipodal quaternions give the same rotation
    Quat mq{-q.w, -q.x, -q.y, -q.z};
    CHECK(norm(r - mq.to_matrix()) < 1e-14);
  }
}

TEST_CASE("rotation vector and axis-angle constructions agree") {
  Vec3 axis = normalized(Vec3(1, -2, 0.5));
  double angle = 1.234;
  Mat3 a = Quat::from_axis_angle(axis, angle).to_matrix();
  Mat3 b = Quat::from_rotvec(angle * axis).to_matrix();
  CHECK(norm(a - b) < 1e-14);
  // exp of the skew generator: R acts as rotation about the axis
  CHECK(norm(a * axis - axis) < 1e-14);
}

TEST_CASE("quaternion product composes rotations") {
  Quat a = Quat::from_rotvec(rand_vec());
  Quat b = Quat::from_rotvec(rand_vec());
  CHECK(norm((a * b).to_matrix() - a.to_matrix() * b.to_matrix()) < 1e-13);
}

TEST_CASE("Rot3 rejects matrices off SO(3)") {
  CHECK_THROWS_AS(Rot3(1.1 * Mat3::identity()), NotARotation);
  CHECK_THROWS_AS(Rot3(Mat3::diag(1, 1, -1)), NotARotation);  // reflection
  CHECK_NOTHROW(Rot3(Quat::from_rotvec(Vec3(0.3, 0.1, -0.8)).to_matrix(),
                     1e-12));
}

TEST_CASE("polar factor recovers the rotation of a rotation-stretch product") {
  for (int rep = 0; rep < 20; ++rep) {
    Mat3 q = Quat::from_rotvec(rand_vec()).to_matrix();
    Mat3 s = rand_mat();
    Mat3 p = 0.5 * (s + transpose(s)) + 3.0 * Mat3::identity();  // SPD
    Rot3 r = polar_factor(q * p);
    CHECK(norm(r.matrix() - q) < 1e-10);
  }
}

TEST_CASE("polar factor of a rotation is the rotation itself") {
  Mat3 q = Quat::from_rotvec(Vec3(0.4, -1.1, 0.2)).to_matrix();
  CHECK(norm(polar_factor(q).matrix() - q) < 1e-12);
}

TEST_CASE("polar factor rejects degenerate input") {
  CHECK_THROWS_AS(polar_factor(Mat3::zero()), Degenerate);
  Mat3 singular = dyad(Vec3(1, 0, 0), Vec3(1, 0, 0));
  CHECK_THROWS_AS(polar_factor(singular), Degenerate);
}
