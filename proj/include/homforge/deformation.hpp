#pragma once
// Truncated formal deformations of linear hom-algebras over F_p: order-by-order
// defect tensors, series inversion, twisting/untwisting of deformations,
// equivalence of deformations, and conjugation transport of twisting maps.

#include <cstdint>
#include <optional>
#include <vector>

#include "homforge/fp.hpp"
#include "homforge/hom_core.hpp"  // PreconditionError

namespace homforge::deform {

using fp::Mat;
using fp::Tensor3;
using fp::Vec;

// A finite-dimensional algebra A = F_p^d with bilinear multiplication mul and
// linear twisting map alpha_mat. Shapes and entry ranges are enforced here;
// each operation checks the algebraic laws it actually relies on.
struct LinearHomAlgebra {
  int p = 2;
  int dim = 1;
  Tensor3 mul;
  Mat alpha_mat;
};

void validate(const LinearHomAlgebra& a);

// alpha(x)(yz) == (xy)alpha(z) on basis triples (sufficient by trilinearity).
bool is_hom_associative(const LinearHomAlgebra& a);

// alpha(alpha(x) mul(alpha(y), alpha(z)))-style compatibility of a twisting
// map with an associative multiplication:
//     alpha(alpha(x) . alpha(y . z)) == alpha(alpha(x . y) . alpha(z)).
// Returns the first violating basis triple, if any.
std::optional<std::array<int, 3>> twist_compat_witness(const Tensor3& mul, const Mat& alpha);

// Nonzero c with x.c == c.x == 0 for all x, if one exists.
std::optional<Vec> two_sided_annihilator(const Tensor3& mul);
bool strongly_degenerate(const LinearHomAlgebra& a);

// alpha_t = sum t^i coeffs[i] modulo t^{N+1}.
struct TruncatedLinearSeries {
  int order = 0;
  std::vector<Mat> coeffs;

  int p() const { return coeffs.at(0).p; }
  int dim() const { return coeffs.at(0).rows; }
  bool operator==(const TruncatedLinearSeries&) const = default;
};

struct TruncatedBilinearSeries {
  int order = 0;
  std::vector<Tensor3> coeffs;

  int p() const { return coeffs.at(0).p; }
  int dim() const { return coeffs.at(0).dim; }
  bool operator==(const TruncatedBilinearSeries&) const = default;
};

// Invertible series with identity degree-zero coefficient.
struct FormalIsomorphism {
  int order = 0;
  std::vector<Mat> coeffs;
};

struct DeformationTriple {
  LinearHomAlgebra base;
  TruncatedBilinearSeries mu_t;
  TruncatedLinearSeries alpha_t;
};

void validate(const TruncatedLinearSeries& s);
void validate(const TruncatedBilinearSeries& s);
void validate(const FormalIsomorphism& phi);     // also checks phi_0 == id
void validate(const DeformationTriple& d);       // mu_0 == base.mul, alpha_0 == base.alpha_mat

TruncatedLinearSeries identity_series(int p, int dim, int order);
TruncatedLinearSeries constant_series(const Mat& m, int order);
TruncatedBilinearSeries constant_series(const Tensor3& t, int order);
TruncatedLinearSeries to_series(const FormalIsomorphism& phi);

// Assembles a deformation whose base is read off the degree-zero coefficients.
DeformationTriple make_deformation(TruncatedBilinearSeries mu_t, TruncatedLinearSeries alpha_t);

// Truncated element of A[[t]]: coeffs[k] is the t^k coefficient vector.
struct VecSeries {
  int order = 0;
  std::vector<Vec> coeffs;

  bool is_zero() const;
  // Least k with coeffs[k] != 0, or nullopt for the zero element.
  std::optional<int> valuation() const;
  bool operator==(const VecSeries&) const = default;
};

VecSeries zero_element(int dim, int order);
VecSeries constant_element(const Vec& v, int order);
VecSeries basis_element(int dim, int order, int i);

// Order-by-order evaluation: out_k = sum_{i+j=k} s_i(v_j), resp.
// out_k = sum_{i+j+l=k} m_i(u_j, v_l).
VecSeries apply(const TruncatedLinearSeries& s, const VecSeries& v);
VecSeries apply(const TruncatedBilinearSeries& m, const VecSeries& u, const VecSeries& v);

// (s.r)_k = sum_{i+j=k} s_i r_j as matrices.
TruncatedLinearSeries compose(const TruncatedLinearSeries& s, const TruncatedLinearSeries& r);

VecSeries add(const VecSeries& a, const VecSeries& b, int p);
VecSeries sub(const VecSeries& a, const VecSeries& b, int p);

// Trilinear defect of an identity, per order: at(x, y, z, k) is the e_k
// coefficient of the defect evaluated on the basis triple (x, y, z).
struct DefectTensor {
  int dim = 0;
  int p = 2;
  std::vector<int> a;

  DefectTensor() = default;
  DefectTensor(int dim_, int p_);
  int& at(int x, int y, int z, int k) {
    return a[((static_cast<size_t>(x) * dim + y) * dim + z) * dim + k];
  }
  int at(int x, int y, int z, int k) const {
    return a[((static_cast<size_t>(x) * dim + y) * dim + z) * dim + k];
  }
  bool is_zero() const;
  bool operator==(const DefectTensor&) const = default;
};

// Hom-associativity defects of the deformation, orders 0..N:
//   coefficient k of  mu_t(alpha_t(x), mu_t(y, z)) - mu_t(mu_t(x, y), alpha_t(z)).
// The deformation is valid up to order N iff every tensor is zero.
std::vector<DefectTensor> hom_assoc_defect(const DeformationTriple& d);

// Plain associativity defects of a multiplication series:
//   coefficient k of  star_t(star_t(x, y), z) - star_t(x, star_t(y, z)).
std::vector<DefectTensor> assoc_defect(const TruncatedBilinearSeries& star_t);

// Two-sided inverse modulo t^{N+1}, by r_0 = a_0^{-1},
// r_k = -a_0^{-1} . sum_{i=1..k} a_i r_{k-i}. Rejects singular a_0.
TruncatedLinearSeries invert_series(const TruncatedLinearSeries& s);

// nu_t = alpha_t^{-1} . mu_t. Requires zero hom-associativity defect, a base
// that is not strongly degenerate, and invertible alpha_0; each failure is
// reported individually. The result is associative up to order N with
// nu_0 = alpha^{-1} . mu (checked by the harness, not re-asserted here).
TruncatedBilinearSeries untwist_deformation(const DeformationTriple& d);

// Twisting-law defects, orders 0..N: coefficient k of
//   alpha_t(alpha_t(x) * alpha_t(y * z)) - alpha_t(alpha_t(x * y) * alpha_t(z))
// with * = star_t. Requires star_t associative up to order N (the offending
// order is reported otherwise). Basis triples suffice by trilinearity.
std::vector<DefectTensor> formal_twist_defect(const TruncatedLinearSeries& alpha_t,
                                              const TruncatedBilinearSeries& star_t);

// mu_t = alpha_t . star_t given a zero twisting-law defect. The result's
// hom-associativity defect vanishes by construction (asserted).
DeformationTriple twist_deformation(const TruncatedLinearSeries& alpha_t,
                                    const TruncatedBilinearSeries& star_t);

// phi_t . mu_t == mu'_t . (phi_t x phi_t) and phi_t . alpha_t == alpha'_t . phi_t,
// order by order on basis elements. The deformations must share a base.
bool equivalence_check(const FormalIsomorphism& phi_t, const DeformationTriple& d,
                       const DeformationTriple& d_prime);

// m(phi^{-1} x, phi^{-1} y) pushed forward through phi: the transported
// multiplication phi . m . (phi^{-1} x phi^{-1}).
Tensor3 transport_bilinear(const Mat& phi, const Tensor3& m);
// Same, order by order, for series along a formal isomorphism.
TruncatedBilinearSeries transport_bilinear(const FormalIsomorphism& phi_t,
                                           const TruncatedBilinearSeries& m_t);

// Whether phi(x . y) == phi(x) .' phi(y) on basis pairs.
bool intertwines(const Mat& phi, const Tensor3& mul, const Tensor3& mul_prime);

// Given phi an isomorphism (A, mul) -> (A, mul_prime) of associative
// multiplications and alpha compatible with mul, produces alpha' =
// phi . alpha . phi^{-1} together with mul_prime. Checks that alpha' is
// compatible with mul_prime and that phi intertwines the two twisted
// products alpha(x . y) and alpha'(x .' y); both hold for structural
// reasons, so their failure raises logic_error.
LinearHomAlgebra conjugate_twist(const Mat& phi, const LinearHomAlgebra& a,
                                 const Tensor3& mul_prime);

struct NondegeneracyReport {
  std::int64_t elements_checked = 0;
  bool exhaustive = false;
  bool all_witnessed = true;
  bool leading_identity_ok = true;
  std::optional<VecSeries> first_failure;

  bool pass() const { return all_witnessed && leading_identity_ok; }
};

// For nonzero truncated elements a with valuation n, finds a base element b
// with mul_0(b, a_n) != 0 or mul_0(a_n, b) != 0 and confirms the truncated
// product is nonzero with leading coefficient mul_0(b, a_n) at order n.
// Exhaustive over all nonzero elements when dim <= 2 and p <= 3, otherwise
// `trials` seeded samples.
NondegeneracyReport nondegeneracy_preserved_check(const DeformationTriple& d, int trials,
                                                  std::uint64_t seed = 0x9e3779b9u);

// Exhaustive order-1 coefficient search: all (mu_1, alpha_1) pairs making
// (mu_0 + t mu_1, alpha_0 + t alpha_1) a valid deformation at order 1.
// Budget-checked: the coefficient space p^(d^3 + d^2) must stay desk-sized.
std::vector<std::pair<Tensor3, Mat>> search_order1_deformations(const LinearHomAlgebra& base);

}  // namespace homforge::deform
