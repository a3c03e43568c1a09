#include "homforge/deformation.hpp"

#include <random>
#include <string>

namespace homforge::deform {

namespace {

void require(bool cond, const std::string& msg, std::vector<int> witness = {}) {
  if (!cond) throw PreconditionError(msg, std::move(witness));
}

Vec basis_vec(int dim, int i) {
  Vec v(dim, 0);
  v[i] = 1;
  return v;
}

}  // namespace

void validate(const LinearHomAlgebra& a) {
  require(fp::is_prime(a.p), "modulus must be prime");
  require(a.dim >= 1 && a.dim <= 4, "dimension budget exceeded (1 <= d <= 4)");
  require(a.mul.dim == a.dim && a.mul.p == a.p, "mul has wrong shape");
  require(a.alpha_mat.rows == a.dim && a.alpha_mat.cols == a.dim && a.alpha_mat.p == a.p,
          "alpha has wrong shape");
  for (int v : a.mul.a) require(v >= 0 && v < a.p, "entry out of range in mul", {v});
  for (int v : a.alpha_mat.a) require(v >= 0 && v < a.p, "entry out of range in alpha", {v});
}

bool is_hom_associative(const LinearHomAlgebra& a) {
  validate(a);
  for (int x = 0; x < a.dim; ++x) {
    Vec ax = a.alpha_mat.apply(basis_vec(a.dim, x));
    for (int y = 0; y < a.dim; ++y) {
      Vec xy = a.mul.apply_basis(x, y);
      for (int z = 0; z < a.dim; ++z) {
        Vec az = a.alpha_mat.apply(basis_vec(a.dim, z));
        Vec lhs = a.mul.apply(ax, a.mul.apply_basis(y, z));
        Vec rhs = a.mul.apply(xy, az);
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

std::optional<std::array<int, 3>> twist_compat_witness(const Tensor3& mul, const Mat& alpha) {
  int d = mul.dim;
  require(alpha.rows == d && alpha.cols == d && alpha.p == mul.p, "shape mismatch");
  for (int x = 0; x < d; ++x) {
    Vec ax = alpha.apply(basis_vec(d, x));
    for (int y = 0; y < d; ++y)
      for (int z = 0; z < d; ++z) {
        Vec ayz = alpha.apply(mul.apply_basis(y, z));
        Vec axy = alpha.apply(mul.apply_basis(x, y));
        Vec az = alpha.apply(basis_vec(d, z));
        Vec lhs = alpha.apply(mul.apply(ax, ayz));
        Vec rhs = alpha.apply(mul.apply(axy, az));
        if (lhs != rhs) return std::array<int, 3>{x, y, z};
      }
  }
  return std::nullopt;
}

std::optional<Vec> two_sided_annihilator(const Tensor3& mul) {
  int d = mul.dim;
  // Stack the linear conditions x.c = 0 and c.x = 0 for all basis x.
  Mat constraints(2 * d * d, d, mul.p);
  for (int x = 0; x < d; ++x)
    for (int k = 0; k < d; ++k)
      for (int j = 0; j < d; ++j) {
        constraints.at(x * d + k, j) = mul.at(x, j, k);
        constraints.at(d * d + x * d + k, j) = mul.at(j, x, k);
      }
  auto basis = fp::kernel_basis(constraints);
  if (basis.empty()) return std::nullopt;
  return basis.front();
}

bool strongly_degenerate(const LinearHomAlgebra& a) {
  validate(a);
  return two_sided_annihilator(a.mul).has_value();
}

void validate(const TruncatedLinearSeries& s) {
  require(s.order >= 0, "order must be nonnegative");
  require(static_cast<int>(s.coeffs.size()) == s.order + 1, "coefficient count != order + 1");
  const Mat& head = s.coeffs.front();
  require(head.rows == head.cols && head.rows >= 1, "coefficients must be square");
  for (const Mat& m : s.coeffs) {
    require(m.rows == head.rows && m.cols == head.cols && m.p == head.p,
            "coefficient shape mismatch");
    for (int v : m.a) require(v >= 0 && v < m.p, "entry out of range", {v});
  }
}

void validate(const TruncatedBilinearSeries& s) {
  require(s.order >= 0, "order must be nonnegative");
  require(static_cast<int>(s.coeffs.size()) == s.order + 1, "coefficient count != order + 1");
  const Tensor3& head = s.coeffs.front();
  require(head.dim >= 1, "coefficients must be nonempty");
  for (const Tensor3& t : s.coeffs) {
    require(t.dim == head.dim && t.p == head.p, "coefficient shape mismatch");
    for (int v : t.a) require(v >= 0 && v < t.p, "entry out of range", {v});
  }
}

void validate(const FormalIsomorphism& phi) {
  TruncatedLinearSeries as_series{phi.order, phi.coeffs};
  validate(as_series);
  require(phi.coeffs.front().is_identity(), "phi_0 must be the identity");
}

void validate(const DeformationTriple& d) {
  validate(d.base);
  validate(d.mu_t);
  validate(d.alpha_t);
  require(d.mu_t.order == d.alpha_t.order, "mu_t and alpha_t orders differ");
  require(d.mu_t.dim() == d.base.dim && d.mu_t.p() == d.base.p, "mu_t shape mismatch");
  require(d.alpha_t.dim() == d.base.dim && d.alpha_t.p() == d.base.p,
          "alpha_t shape mismatch");
  require(d.mu_t.coeffs.front() == d.base.mul, "mu_0 must equal the base multiplication");
  require(d.alpha_t.coeffs.front() == d.base.alpha_mat,
          "alpha_0 must equal the base twisting map");
}

TruncatedLinearSeries identity_series(int p, int dim, int order) {
  TruncatedLinearSeries s{order, std::vector<Mat>(order + 1, Mat(dim, dim, p))};
  s.coeffs[0] = Mat::identity(dim, p);
  return s;
}

TruncatedLinearSeries constant_series(const Mat& m, int order) {
  TruncatedLinearSeries s{order, std::vector<Mat>(order + 1, Mat(m.rows, m.cols, m.p))};
  s.coeffs[0] = m;
  return s;
}

TruncatedBilinearSeries constant_series(const Tensor3& t, int order) {
  TruncatedBilinearSeries s{order, std::vector<Tensor3>(order + 1, Tensor3(t.dim, t.p))};
  s.coeffs[0] = t;
  return s;
}

TruncatedLinearSeries to_series(const FormalIsomorphism& phi) {
  validate(phi);
  return TruncatedLinearSeries{phi.order, phi.coeffs};
}

DeformationTriple make_deformation(TruncatedBilinearSeries mu_t, TruncatedLinearSeries alpha_t) {
  validate(mu_t);
  validate(alpha_t);
  require(mu_t.order == alpha_t.order, "mu_t and alpha_t orders differ");
  require(mu_t.dim() == alpha_t.dim() && mu_t.p() == alpha_t.p(),
          "mu_t and alpha_t shapes differ");
  LinearHomAlgebra base{mu_t.p(), mu_t.dim(), mu_t.coeffs.front(), alpha_t.coeffs.front()};
  DeformationTriple d{std::move(base), std::move(mu_t), std::move(alpha_t)};
  validate(d);
  return d;
}

bool VecSeries::is_zero() const { return !valuation().has_value(); }

std::optional<int> VecSeries::valuation() const {
  for (int k = 0; k <= order; ++k)
    if (!fp::is_zero(coeffs[k])) return k;
  return std::nullopt;
}

VecSeries zero_element(int dim, int order) {
  return VecSeries{order, std::vector<Vec>(order + 1, Vec(dim, 0))};
}

VecSeries constant_element(const Vec& v, int order) {
  VecSeries s = zero_element(static_cast<int>(v.size()), order);
  s.coeffs[0] = v;
  return s;
}

VecSeries basis_element(int dim, int order, int i) {
  return constant_element(basis_vec(dim, i), order);
}

VecSeries apply(const TruncatedLinearSeries& s, const VecSeries& v) {
  require(s.order == v.order, "order mismatch");
  VecSeries out = zero_element(s.dim(), s.order);
  for (int i = 0; i <= s.order; ++i)
    for (int j = 0; i + j <= s.order; ++j)
      out.coeffs[i + j] = fp::add(out.coeffs[i + j], s.coeffs[i].apply(v.coeffs[j]), s.p());
  return out;
}

VecSeries apply(const TruncatedBilinearSeries& m, const VecSeries& u, const VecSeries& v) {
  require(m.order == u.order && m.order == v.order, "order mismatch");
  VecSeries out = zero_element(m.dim(), m.order);
  for (int i = 0; i <= m.order; ++i)
    for (int j = 0; i + j <= m.order; ++j)
      for (int l = 0; i + j + l <= m.order; ++l)
        out.coeffs[i + j + l] = fp::add(out.coeffs[i + j + l],
                                        m.coeffs[i].apply(u.coeffs[j], v.coeffs[l]), m.p());
  return out;
}

TruncatedLinearSeries compose(const TruncatedLinearSeries& s, const TruncatedLinearSeries& r) {
  require(s.order == r.order, "order mismatch");
  require(s.dim() == r.dim() && s.p() == r.p(), "shape mismatch");
  TruncatedLinearSeries out{s.order,
                            std::vector<Mat>(s.order + 1, Mat(s.dim(), s.dim(), s.p()))};
  for (int i = 0; i <= s.order; ++i)
    for (int j = 0; i + j <= s.order; ++j)
      out.coeffs[i + j] = out.coeffs[i + j].add(s.coeffs[i].mul(r.coeffs[j]));
  return out;
}

VecSeries add(const VecSeries& a, const VecSeries& b, int p) {
  require(a.order == b.order, "order mismatch");
  VecSeries out = a;
  for (int k = 0; k <= a.order; ++k) out.coeffs[k] = fp::add(a.coeffs[k], b.coeffs[k], p);
  return out;
}

VecSeries sub(const VecSeries& a, const VecSeries& b, int p) {
  require(a.order == b.order, "order mismatch");
  VecSeries out = a;
  for (int k = 0; k <= a.order; ++k) out.coeffs[k] = fp::sub(a.coeffs[k], b.coeffs[k], p);
  return out;
}

DefectTensor::DefectTensor(int dim_, int p_) : dim(dim_), p(p_) {
  a.assign(static_cast<size_t>(dim) * dim * dim * dim, 0);
}

bool DefectTensor::is_zero() const {
  for (int v : a)
    if (v != 0) return false;
  return true;
}

namespace {

// Collects per-order defect tensors of lhs - rhs where both sides are
// computed per basis triple as truncated elements.
template <typename SidesFn>
std::vector<DefectTensor> defect_from_sides(int dim, int p, int order, SidesFn&& sides) {
  std::vector<DefectTensor> defects(order + 1, DefectTensor(dim, p));
  for (int x = 0; x < dim; ++x)
    for (int y = 0; y < dim; ++y)
      for (int z = 0; z < dim; ++z) {
        auto [lhs, rhs] = sides(x, y, z);
        for (int k = 0; k <= order; ++k)
          for (int c = 0; c < dim; ++c)
            defects[k].at(x, y, z, c) = fp::sub(lhs.coeffs[k][c], rhs.coeffs[k][c], p);
      }
  return defects;
}

}  // namespace

std::vector<DefectTensor> hom_assoc_defect(const DeformationTriple& d) {
  validate(d);
  int dim = d.base.dim, p = d.base.p, order = d.mu_t.order;
  return defect_from_sides(dim, p, order, [&](int x, int y, int z) {
    VecSeries ex = basis_element(dim, order, x);
    VecSeries ey = basis_element(dim, order, y);
    VecSeries ez = basis_element(dim, order, z);
    VecSeries lhs = apply(d.mu_t, apply(d.alpha_t, ex), apply(d.mu_t, ey, ez));
    VecSeries rhs = apply(d.mu_t, apply(d.mu_t, ex, ey), apply(d.alpha_t, ez));
    return std::pair{lhs, rhs};
  });
}

std::vector<DefectTensor> assoc_defect(const TruncatedBilinearSeries& star_t) {
  validate(star_t);
  int dim = star_t.dim(), p = star_t.p(), order = star_t.order;
  return defect_from_sides(dim, p, order, [&](int x, int y, int z) {
    VecSeries ex = basis_element(dim, order, x);
    VecSeries ey = basis_element(dim, order, y);
    VecSeries ez = basis_element(dim, order, z);
    VecSeries lhs = apply(star_t, apply(star_t, ex, ey), ez);
    VecSeries rhs = apply(star_t, ex, apply(star_t, ey, ez));
    return std::pair{lhs, rhs};
  });
}

TruncatedLinearSeries invert_series(const TruncatedLinearSeries& s) {
  validate(s);
  auto inv0 = fp::inverse(s.coeffs[0]);
  if (!inv0) throw PreconditionError("singular leading coefficient");
  TruncatedLinearSeries r{s.order, std::vector<Mat>(s.order + 1, Mat(s.dim(), s.dim(), s.p()))};
  r.coeffs[0] = *inv0;
  for (int k = 1; k <= s.order; ++k) {
    Mat acc(s.dim(), s.dim(), s.p());
    for (int i = 1; i <= k; ++i) acc = acc.add(s.coeffs[i].mul(r.coeffs[k - i]));
    Mat zero(s.dim(), s.dim(), s.p());
    r.coeffs[k] = inv0->mul(zero.sub(acc));
  }
  return r;
}

TruncatedBilinearSeries untwist_deformation(const DeformationTriple& d) {
  validate(d);
  for (int k = 0; const DefectTensor& defect : hom_assoc_defect(d)) {
    if (!defect.is_zero())
      throw PreconditionError("not a valid deformation: nonzero defect at order " +
                              std::to_string(k));
    ++k;
  }
  if (auto c = two_sided_annihilator(d.base.mul))
    throw PreconditionError("base is strongly degenerate", *c);
  if (!fp::inverse(d.base.alpha_mat))
    throw PreconditionError("alpha_0 is singular");
  TruncatedLinearSeries r = invert_series(d.alpha_t);
  int dim = d.base.dim, p = d.base.p, order = d.mu_t.order;
  TruncatedBilinearSeries nu{order, std::vector<Tensor3>(order + 1, Tensor3(dim, p))};
  for (int i = 0; i <= order; ++i)
    for (int j = 0; i + j <= order; ++j)
      nu.coeffs[i + j] =
          nu.coeffs[i + j].add(fp::compose_linear_bilinear(r.coeffs[i], d.mu_t.coeffs[j]));
  return nu;
}

std::vector<DefectTensor> formal_twist_defect(const TruncatedLinearSeries& alpha_t,
                                              const TruncatedBilinearSeries& star_t) {
  validate(alpha_t);
  validate(star_t);
  require(alpha_t.order == star_t.order, "order mismatch");
  require(alpha_t.dim() == star_t.dim() && alpha_t.p() == star_t.p(), "shape mismatch");
  for (int k = 0; const DefectTensor& defect : assoc_defect(star_t)) {
    if (!defect.is_zero())
      throw PreconditionError("star_t is not associative: nonzero defect at order " +
                              std::to_string(k));
    ++k;
  }
  int dim = star_t.dim(), p = star_t.p(), order = star_t.order;
  return defect_from_sides(dim, p, order, [&](int x, int y, int z) {
    VecSeries ex = basis_element(dim, order, x);
    VecSeries ey = basis_element(dim, order, y);
    VecSeries ez = basis_element(dim, order, z);
    VecSeries lhs = apply(
        alpha_t, apply(star_t, apply(alpha_t, ex), apply(alpha_t, apply(star_t, ey, ez))));
    VecSeries rhs = apply(
        alpha_t, apply(star_t, apply(alpha_t, apply(star_t, ex, ey)), apply(alpha_t, ez)));
    return std::pair{lhs, rhs};
  });
}

DeformationTriple twist_deformation(const TruncatedLinearSeries& alpha_t,
                                    const TruncatedBilinearSeries& star_t) {
  for (int k = 0; const DefectTensor& defect : formal_twist_defect(alpha_t, star_t)) {
    if (!defect.is_zero())
      throw PreconditionError("alpha_t is not a formal twisting: nonzero defect at order " +
                              std::to_string(k));
    ++k;
  }
  int dim = star_t.dim(), p = star_t.p(), order = star_t.order;
  TruncatedBilinearSeries mu{order, std::vector<Tensor3>(order + 1, Tensor3(dim, p))};
  for (int i = 0; i <= order; ++i)
    for (int j = 0; i + j <= order; ++j)
      mu.coeffs[i + j] =
          mu.coeffs[i + j].add(fp::compose_linear_bilinear(alpha_t.coeffs[i], star_t.coeffs[j]));
  DeformationTriple d = make_deformation(std::move(mu), alpha_t);
  for (const DefectTensor& defect : hom_assoc_defect(d))
    if (!defect.is_zero())
      throw std::logic_error("twist of a formal twisting must be hom-associative");
  return d;
}

bool equivalence_check(const FormalIsomorphism& phi_t, const DeformationTriple& d,
                       const DeformationTriple& d_prime) {
  validate(phi_t);
  validate(d);
  validate(d_prime);
  require(d.mu_t.order == d_prime.mu_t.order && phi_t.order == d.mu_t.order,
          "order mismatch");
  require(d.base.mul == d_prime.base.mul && d.base.alpha_mat == d_prime.base.alpha_mat &&
              d.base.p == d_prime.base.p && d.base.dim == d_prime.base.dim,
          "deformations must share a base");
  TruncatedLinearSeries phi = to_series(phi_t);
  require(phi.dim() == d.base.dim && phi.p() == d.base.p, "phi shape mismatch");
  if (compose(phi, d.alpha_t) != compose(d_prime.alpha_t, phi)) return false;
  int dim = d.base.dim, order = d.mu_t.order;
  for (int x = 0; x < dim; ++x)
    for (int y = 0; y < dim; ++y) {
      VecSeries ex = basis_element(dim, order, x);
      VecSeries ey = basis_element(dim, order, y);
      VecSeries lhs = apply(phi, apply(d.mu_t, ex, ey));
      VecSeries rhs = apply(d_prime.mu_t, apply(phi, ex), apply(phi, ey));
      if (lhs != rhs) return false;
    }
  return true;
}

Tensor3 transport_bilinear(const Mat& phi, const Tensor3& m) {
  auto inv = fp::inverse(phi);
  if (!inv) throw PreconditionError("phi is singular");
  require(phi.rows == m.dim && phi.p == m.p, "shape mismatch");
  Tensor3 out(m.dim, m.p);
  for (int x = 0; x < m.dim; ++x)
    for (int y = 0; y < m.dim; ++y) {
      Vec img = phi.apply(m.apply(inv->apply(basis_vec(m.dim, x)),
                                  inv->apply(basis_vec(m.dim, y))));
      for (int k = 0; k < m.dim; ++k) out.at(x, y, k) = img[k];
    }
  return out;
}

TruncatedBilinearSeries transport_bilinear(const FormalIsomorphism& phi_t,
                                           const TruncatedBilinearSeries& m_t) {
  validate(m_t);
  TruncatedLinearSeries phi = to_series(phi_t);
  require(phi.order == m_t.order, "order mismatch");
  require(phi.dim() == m_t.dim() && phi.p() == m_t.p(), "shape mismatch");
  TruncatedLinearSeries inv = invert_series(phi);
  int dim = m_t.dim(), p = m_t.p(), order = m_t.order;
  TruncatedBilinearSeries out{order, std::vector<Tensor3>(order + 1, Tensor3(dim, p))};
  for (int x = 0; x < dim; ++x)
    for (int y = 0; y < dim; ++y) {
      VecSeries ex = basis_element(dim, order, x);
      VecSeries ey = basis_element(dim, order, y);
      VecSeries img = apply(phi, apply(m_t, apply(inv, ex), apply(inv, ey)));
      for (int k = 0; k <= order; ++k)
        for (int c = 0; c < dim; ++c) out.coeffs[k].at(x, y, c) = img.coeffs[k][c];
    }
  return out;
}

bool intertwines(const Mat& phi, const Tensor3& mul, const Tensor3& mul_prime) {
  int d = mul.dim;
  require(phi.rows == d && phi.cols == d && phi.p == mul.p && mul_prime.dim == d &&
              mul_prime.p == mul.p,
          "shape mismatch");
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      Vec lhs = phi.apply(mul.apply_basis(x, y));
      Vec rhs = mul_prime.apply(phi.apply(basis_vec(d, x)), phi.apply(basis_vec(d, y)));
      if (lhs != rhs) return false;
    }
  return true;
}

LinearHomAlgebra conjugate_twist(const Mat& phi, const LinearHomAlgebra& a,
                                 const Tensor3& mul_prime) {
  validate(a);
  require(mul_prime.dim == a.dim && mul_prime.p == a.p, "mul' has wrong shape");
  auto phi_inv = fp::inverse(phi);
  if (!phi_inv) throw PreconditionError("phi is singular");
  require(fp::is_associative(a.mul), "mul is not associative");
  if (auto w = twist_compat_witness(a.mul, a.alpha_mat))
    throw PreconditionError("alpha is not compatible with mul",
                            {(*w)[0], (*w)[1], (*w)[2]});
  if (!intertwines(phi, a.mul, mul_prime))
    throw PreconditionError("phi is not an isomorphism onto mul'");

  Mat alpha_prime = phi.mul(a.alpha_mat).mul(*phi_inv);
  if (twist_compat_witness(mul_prime, alpha_prime))
    throw std::logic_error("conjugated twisting map must be compatible with mul'");
  Tensor3 star = fp::compose_linear_bilinear(a.alpha_mat, a.mul);
  Tensor3 star_prime = fp::compose_linear_bilinear(alpha_prime, mul_prime);
  if (!intertwines(phi, star, star_prime))
    throw std::logic_error("phi must intertwine the twisted products");
  return LinearHomAlgebra{a.p, a.dim, mul_prime, alpha_prime};
}

NondegeneracyReport nondegeneracy_preserved_check(const DeformationTriple& d, int trials,
                                                  std::uint64_t seed) {
  validate(d);
  for (const DefectTensor& defect : hom_assoc_defect(d))
    if (!defect.is_zero()) throw PreconditionError("not a valid deformation");
  if (two_sided_annihilator(d.base.mul))
    throw PreconditionError("base is strongly degenerate");

  int dim = d.base.dim, p = d.base.p, order = d.mu_t.order;
  NondegeneracyReport rep;

  auto check_one = [&](const VecSeries& elem) {
    ++rep.elements_checked;
    int n = *elem.valuation();
    const Vec& lead = elem.coeffs[n];
    // By bilinearity it suffices to probe basis vectors for a witness.
    int witness = -1;
    bool left = true;
    for (int i = 0; i < dim && witness < 0; ++i) {
      if (!fp::is_zero(d.base.mul.apply(basis_vec(dim, i), lead))) {
        witness = i;
        left = true;
      } else if (!fp::is_zero(d.base.mul.apply(lead, basis_vec(dim, i)))) {
        witness = i;
        left = false;
      }
    }
    bool ok = witness >= 0;
    if (ok) {
      VecSeries b = basis_element(dim, order, witness);
      VecSeries prod = left ? apply(d.mu_t, b, elem) : apply(d.mu_t, elem, b);
      if (prod.is_zero()) ok = false;
      // Leading term: t^n (b * a_n), nothing below.
      Vec expected = left ? d.base.mul.apply(basis_vec(dim, witness), lead)
                          : d.base.mul.apply(lead, basis_vec(dim, witness));
      for (int k = 0; k < n; ++k)
        if (!fp::is_zero(prod.coeffs[k])) rep.leading_identity_ok = false;
      if (prod.coeffs[n] != expected) rep.leading_identity_ok = false;
    }
    if (!ok) {
      rep.all_witnessed = false;
      if (!rep.first_failure) rep.first_failure = elem;
    }
  };

  if (dim <= 2 && p <= 3) {
    rep.exhaustive = true;
    int entries = dim * (order + 1);
    std::vector<int> digits(entries, 0);
    while (true) {
      int i = entries - 1;
      while (i >= 0 && digits[i] == p - 1) digits[i--] = 0;
      if (i < 0) break;
      ++digits[i];
      VecSeries elem = zero_element(dim, order);
      for (int k = 0; k <= order; ++k)
        for (int c = 0; c < dim; ++c) elem.coeffs[k][c] = digits[k * dim + c];
      check_one(elem);
    }
  } else {
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
      VecSeries elem = zero_element(dim, order);
      do {
        for (int k = 0; k <= order; ++k)
          for (int c = 0; c < dim; ++c)
            elem.coeffs[k][c] = static_cast<int>(rng() % static_cast<unsigned>(p));
      } while (elem.is_zero());
      check_one(elem);
    }
  }
  return rep;
}

std::vector<std::pair<Tensor3, Mat>> search_order1_deformations(const LinearHomAlgebra& base) {
  validate(base);
  require(is_hom_associative(base), "base must be hom-associative");
  int d = base.dim, p = base.p;
  int cells = d * d * d + d * d;
  double space = 1;
  for (int i = 0; i < cells; ++i) {
    space *= p;
    require(space <= 65536.0, "order-1 coefficient space budget exceeded");
  }
  std::vector<std::pair<Tensor3, Mat>> found;
  std::vector<int> digits(cells, 0);
  while (true) {
    Tensor3 mu1(d, p);
    Mat alpha1(d, d, p);
    for (int i = 0; i < d * d * d; ++i) mu1.a[i] = digits[i];
    for (int i = 0; i < d * d; ++i) alpha1.a[i] = digits[d * d * d + i];
    DeformationTriple cand{
        base,
        TruncatedBilinearSeries{1, {base.mul, mu1}},
        TruncatedLinearSeries{1, {base.alpha_mat, alpha1}}};
    auto defects = hom_assoc_defect(cand);
    if (defects[0].is_zero() && defects[1].is_zero()) found.emplace_back(mu1, alpha1);
    int i = cells - 1;
    while (i >= 0 && digits[i] == p - 1) digits[i--] = 0;
    if (i < 0) break;
    ++digits[i];
  }
  return found;
}

}  // namespace homforge::deform
