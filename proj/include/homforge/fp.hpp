#pragma once
// Exact linear algebra over prime fields F_p, sized for structure-constant work.

#include <optional>
#include <vector>

namespace homforge::fp {

bool is_prime(int p);

// Reduces any signed value into [0, p).
int normalize(long long v, int p);

int add(int a, int b, int p);
int sub(int a, int b, int p);
int mul(int a, int b, int p);

// Multiplicative inverse of a nonzero residue.
int inv(int a, int p);

using Vec = std::vector<int>;

bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b, int p);
Vec sub(const Vec& a, const Vec& b, int p);

struct Mat {
  int rows = 0;
  int cols = 0;
  int p = 2;
  std::vector<int> a;  // row-major, entries in [0, p)

  Mat() = default;
  Mat(int rows_, int cols_, int p_);
  static Mat identity(int n, int p);

  int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  int at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  Vec apply(const Vec& v) const;
  Mat mul(const Mat& rhs) const;
  Mat add(const Mat& rhs) const;
  Mat sub(const Mat& rhs) const;
  bool is_zero() const;
  bool is_identity() const;

  bool operator==(const Mat&) const = default;
};

int rank(Mat m);
std::optional<Mat> inverse(const Mat& m);

// Basis of the right kernel {v : m v = 0}, echelon order.
std::vector<Vec> kernel_basis(const Mat& m);

// Structure constants of a bilinear map: at(x, y, k) is the e_k
// coefficient of e_x * e_y.
struct Tensor3 {
  int dim = 0;
  int p = 2;
  std::vector<int> a;

  Tensor3() = default;
  Tensor3(int dim_, int p_);

  int& at(int x, int y, int k) {
    return a[(static_cast<size_t>(x) * dim + y) * dim + k];
  }
  int at(int x, int y, int k) const {
    return a[(static_cast<size_t>(x) * dim + y) * dim + k];
  }

  Vec apply(const Vec& u, const Vec& v) const;
  Vec apply_basis(int x, int y) const;  // the product e_x e_y
  Tensor3 add(const Tensor3& rhs) const;
  Tensor3 sub(const Tensor3& rhs) const;
  bool is_zero() const;

  bool operator==(const Tensor3&) const = default;
};

// Structure constants of l ∘ t, i.e. (x, y) -> l(t(x, y)).
Tensor3 compose_linear_bilinear(const Mat& l, const Tensor3& t);

// (e_x e_y) e_z == e_x (e_y e_z) for all basis triples.
bool is_associative(const Tensor3& t);

}  // namespace homforge::fp
