#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cosserat/chart.hpp"
#include "cosserat/field.hpp"
#include "cosserat/surface.hpp"

namespace cosserat::catalog {

// chart families: identity, affine(d1,d2,d3), cylindrical,
// perturbed(amplitude)
Chart3 make_chart(const std::string& family,
                  const std::vector<double>& params = {});

// patch families: plane, tilted_plane, cylinder(R), sphere(R),
// graph(amplitude)
SurfacePatch make_patch(const std::string& family,
                        const std::vector<double>& params = {});

struct AngleFn {
  enum Kind { Linear, Sin } kind = Linear;
  double coeff = 1.0;
  int coord = 0;

  double eval(double t) const;
  double deriv(double t) const;
};

// rotation field families: constant, axis_angle(axis, angle_fn),
// composed (product of two axis_angle factors)
struct RotationSpec {
  enum Kind { Constant, AxisAngle, Composed } kind = Constant;
  Vec3 axis{0, 0, 1};
  double const_angle = 0.0;  // Constant
  AngleFn angle;             // AxisAngle / Composed first factor
  Vec3 axis2{1, 0, 0};
  AngleFn angle2;            // Composed second factor
};

MatField3 make_rotation3(const RotationSpec& spec);
SurfMatField make_rotation2(const RotationSpec& spec);

// standard validation ensembles
std::vector<std::pair<std::string, Chart3>> default_charts();
std::vector<std::pair<std::string, SurfacePatch>> default_patches();
std::vector<std::pair<std::string, RotationSpec>> default_rotation_specs();

// random polynomial fields with degree <= 3 and analytic derivatives
ScalarField3 random_poly_scalar3(std::mt19937& rng);
VecField3 random_poly_vec3(std::mt19937& rng);
MatField3 random_poly_mat3(std::mt19937& rng);
ScalarField2 random_poly_scalar2(std::mt19937& rng);
SurfVecField random_poly_vec2(std::mt19937& rng);
SurfMatField random_poly_mat2(std::mt19937& rng);

Vec3 random_interior_point(const Box3& box, std::mt19937& rng,
                           double margin_frac = 0.1);
Vec2 random_interior_point(const Box2& box, std::mt19937& rng,
                           double margin_frac = 0.1);

Mat3 random_rotation(std::mt19937& rng);

}  // namespace cosserat::catalog
