#pragma once
// Shared fixtures: small structures, linear hom-algebra bases, and builders
// for deformation inputs used across the tests and the acceptance suite.

#include <vector>

#include "homforge/deformation.hpp"
#include "homforge/hom_core.hpp"

namespace fixtures {

using homforge::FiniteHomStructure;
using homforge::deform::DeformationTriple;
using homforge::deform::LinearHomAlgebra;
using homforge::deform::TruncatedBilinearSeries;
using homforge::deform::TruncatedLinearSeries;
using homforge::fp::Mat;
using homforge::fp::Tensor3;

// ---- finite structures ----

inline FiniteHomStructure z2_add() { return {2, {0, 1, 1, 0}, {0, 1}}; }
inline FiniteHomStructure z2_add_swap() { return {2, {0, 1, 1, 0}, {1, 0}}; }
inline FiniteHomStructure const0() { return {2, {0, 0, 0, 0}, {0, 1}}; }
inline FiniteHomStructure left_proj() { return {2, {0, 0, 1, 1}, {0, 1}}; }

// ---- linear bases ----

// Group algebra F_2[Z/2] with basis {1, g}, g^2 = 1; alpha = identity.
inline LinearHomAlgebra f2_group_algebra() {
  Tensor3 mul(2, 2);
  mul.at(0, 0, 0) = 1;
  mul.at(0, 1, 1) = 1;
  mul.at(1, 0, 1) = 1;
  mul.at(1, 1, 0) = 1;
  return {2, 2, mul, Mat::identity(2, 2)};
}

// Coordinatewise product on F_p^2.
inline Tensor3 coordinatewise(int p) {
  Tensor3 mul(2, p);
  mul.at(0, 0, 0) = 1;
  mul.at(1, 1, 1) = 1;
  return mul;
}

inline Mat swap_matrix(int p) {
  Mat m(2, 2, p);
  m.at(0, 1) = 1;
  m.at(1, 0) = 1;
  return m;
}

// F_2 x F_2 with coordinatewise product; alpha = coordinate swap, which is a
// nonidentity algebra automorphism. The base carries the twisted product
// mu = swap . coordprod, so (mu, swap) is hom-associative.
inline LinearHomAlgebra f2_swap_twist() {
  Mat swap = swap_matrix(2);
  Tensor3 mu = homforge::fp::compose_linear_bilinear(swap, coordinatewise(2));
  return {2, 2, mu, swap};
}

inline LinearHomAlgebra coordprod_identity(int p) {
  return {p, 2, coordinatewise(p), Mat::identity(2, p)};
}

// Truncated polynomials F_p[x]/(x^3), basis {1, x, x^2}; alpha = identity.
inline LinearHomAlgebra poly3(int p) {
  Tensor3 mul(3, p);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i + j < 3) mul.at(i, j, i + j) = 1;
  return {p, 3, mul, Mat::identity(3, p)};
}

// F_p^3 coordinatewise twisted by the cyclic shift automorphism.
inline LinearHomAlgebra coord3_shift(int p) {
  Tensor3 coord(3, p);
  for (int i = 0; i < 3; ++i) coord.at(i, i, i) = 1;
  Mat shift(3, 3, p);
  shift.at(0, 1) = 1;
  shift.at(1, 2) = 1;
  shift.at(2, 0) = 1;
  return {p, 3, homforge::fp::compose_linear_bilinear(shift, coord), shift};
}

// Every linear base used by the defect acceptance sweep (d <= 3, p in {2,3}).
inline std::vector<LinearHomAlgebra> linear_bases() {
  return {f2_group_algebra(), f2_swap_twist(),      coordprod_identity(2),
          coordprod_identity(3), poly3(2),          poly3(3),
          coord3_shift(2),       coord3_shift(3)};
}

// ---- deformation builders ----

inline DeformationTriple trivial_deformation(const LinearHomAlgebra& base, int order) {
  TruncatedBilinearSeries mu{order,
                             std::vector<Tensor3>(order + 1, Tensor3(base.dim, base.p))};
  mu.coeffs[0] = base.mul;
  TruncatedLinearSeries alpha{order,
                              std::vector<Mat>(order + 1, Mat(base.dim, base.dim, base.p))};
  alpha.coeffs[0] = base.alpha_mat;
  return {base, mu, alpha};
}

}  // namespace fixtures
