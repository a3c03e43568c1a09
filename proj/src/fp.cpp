#include "homforge/fp.hpp"

#include <stdexcept>

namespace homforge::fp {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int normalize(long long v, int p) {
  long long r = v % p;
  if (r < 0) r += p;
  return static_cast<int>(r);
}

int add(int a, int b, int p) { return (a + b) % p; }
int sub(int a, int b, int p) { return normalize(static_cast<long long>(a) - b, p); }
int mul(int a, int b, int p) {
  return static_cast<int>(static_cast<long long>(a) * b % p);
}

int inv(int a, int p) {
  require(a % p != 0, "inv of zero residue");
  // Fermat: a^(p-2) mod p.
  long long base = normalize(a, p), acc = 1;
  for (int e = p - 2; e > 0; e >>= 1) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
  }
  return static_cast<int>(acc);
}

bool is_zero(const Vec& v) {
  for (int x : v)
    if (x != 0) return false;
  return true;
}

Vec add(const Vec& a, const Vec& b, int p) {
  require(a.size() == b.size(), "vector size mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = add(a[i], b[i], p);
  return r;
}

Vec sub(const Vec& a, const Vec& b, int p) {
  require(a.size() == b.size(), "vector size mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = sub(a[i], b[i], p);
  return r;
}

Mat::Mat(int rows_, int cols_, int p_) : rows(rows_), cols(cols_), p(p_) {
  require(rows >= 0 && cols >= 0, "negative matrix shape");
  require(is_prime(p), "modulus must be prime");
  a.assign(static_cast<size_t>(rows) * cols, 0);
}

Mat Mat::identity(int n, int p) {
  Mat m(n, n, p);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Vec Mat::apply(const Vec& v) const {
  require(static_cast<int>(v.size()) == cols, "vector size mismatch");
  Vec r(rows, 0);
  for (int i = 0; i < rows; ++i) {
    long long s = 0;
    for (int j = 0; j < cols; ++j) s += static_cast<long long>(at(i, j)) * v[j];
    r[i] = normalize(s, p);
  }
  return r;
}

Mat Mat::mul(const Mat& rhs) const {
  require(cols == rhs.rows && p == rhs.p, "matrix shape mismatch");
  Mat r(rows, rhs.cols, p);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      int aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < rhs.cols; ++j)
        r.at(i, j) = fp::add(r.at(i, j), fp::mul(aik, rhs.at(k, j), p), p);
    }
  return r;
}

Mat Mat::add(const Mat& rhs) const {
  require(rows == rhs.rows && cols == rhs.cols && p == rhs.p, "matrix shape mismatch");
  Mat r(rows, cols, p);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = fp::add(a[i], rhs.a[i], p);
  return r;
}

Mat Mat::sub(const Mat& rhs) const {
  require(rows == rhs.rows && cols == rhs.cols && p == rhs.p, "matrix shape mismatch");
  Mat r(rows, cols, p);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = fp::sub(a[i], rhs.a[i], p);
  return r;
}

bool Mat::is_zero() const {
  for (int x : a)
    if (x != 0) return false;
  return true;
}

bool Mat::is_identity() const {
  if (rows != cols) return false;
  return *this == identity(rows, p);
}

namespace {

// Row-reduces m in place, returns pivot columns.
std::vector<int> row_reduce(Mat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int pr = -1;
    for (int r = row; r < m.rows; ++r)
      if (m.at(r, col) != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    for (int c = 0; c < m.cols; ++c) std::swap(m.at(row, c), m.at(pr, c));
    int scale = inv(m.at(row, col), m.p);
    for (int c = 0; c < m.cols; ++c) m.at(row, c) = mul(m.at(row, c), scale, m.p);
    for (int r = 0; r < m.rows; ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      int f = m.at(r, col);
      for (int c = 0; c < m.cols; ++c)
        m.at(r, c) = sub(m.at(r, c), mul(f, m.at(row, c), m.p), m.p);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(Mat m) { return static_cast<int>(row_reduce(m).size()); }

std::optional<Mat> inverse(const Mat& m) {
  require(m.rows == m.cols, "inverse of non-square matrix");
  int n = m.rows;
  Mat aug(n, 2 * n, m.p);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  auto pivots = row_reduce(aug);
  // [m | I] always has n pivots; m is invertible iff none falls in the
  // identity block.
  if (static_cast<int>(pivots.size()) != n) return std::nullopt;
  for (int col : pivots)
    if (col >= n) return std::nullopt;
  Mat r(n, n, m.p);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i, j) = aug.at(i, n + j);
  return r;
}

std::vector<Vec> kernel_basis(const Mat& m) {
  Mat red = m;
  auto pivots = row_reduce(red);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int free_col = 0; free_col < m.cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec v(m.cols, 0);
    v[free_col] = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = sub(0, red.at(static_cast<int>(r), free_col), m.p);
    basis.push_back(std::move(v));
  }
  return basis;
}

Tensor3::Tensor3(int dim_, int p_) : dim(dim_), p(p_) {
  require(dim >= 0, "negative tensor dimension");
  require(is_prime(p), "modulus must be prime");
  a.assign(static_cast<size_t>(dim) * dim * dim, 0);
}

Vec Tensor3::apply(const Vec& u, const Vec& v) const {
  require(static_cast<int>(u.size()) == dim && static_cast<int>(v.size()) == dim,
          "vector size mismatch");
  Vec r(dim, 0);
  for (int x = 0; x < dim; ++x) {
    if (u[x] == 0) continue;
    for (int y = 0; y < dim; ++y) {
      if (v[y] == 0) continue;
      int uv = mul(u[x], v[y], p);
      for (int k = 0; k < dim; ++k)
        r[k] = fp::add(r[k], mul(uv, at(x, y, k), p), p);
    }
  }
  return r;
}

Vec Tensor3::apply_basis(int x, int y) const {
  Vec r(dim);
  for (int k = 0; k < dim; ++k) r[k] = at(x, y, k);
  return r;
}

Tensor3 Tensor3::add(const Tensor3& rhs) const {
  require(dim == rhs.dim && p == rhs.p, "tensor shape mismatch");
  Tensor3 r(dim, p);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = fp::add(a[i], rhs.a[i], p);
  return r;
}

Tensor3 Tensor3::sub(const Tensor3& rhs) const {
  require(dim == rhs.dim && p == rhs.p, "tensor shape mismatch");
  Tensor3 r(dim, p);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = fp::sub(a[i], rhs.a[i], p);
  return r;
}

bool Tensor3::is_zero() const {
  for (int x : a)
    if (x != 0) return false;
  return true;
}

Tensor3 compose_linear_bilinear(const Mat& l, const Tensor3& t) {
  require(l.rows == t.dim && l.cols == t.dim && l.p == t.p, "shape mismatch");
  Tensor3 r(t.dim, t.p);
  for (int x = 0; x < t.dim; ++x)
    for (int y = 0; y < t.dim; ++y) {
      Vec img = l.apply(t.apply_basis(x, y));
      for (int k = 0; k < t.dim; ++k) r.at(x, y, k) = img[k];
    }
  return r;
}

bool is_associative(const Tensor3& t) {
  for (int x = 0; x < t.dim; ++x)
    for (int y = 0; y < t.dim; ++y) {
      Vec xy = t.apply_basis(x, y);
      for (int z = 0; z < t.dim; ++z) {
        Vec ez(t.dim, 0);
        ez[z] = 1;
        Vec lhs = t.apply(xy, ez);
        Vec ex(t.dim, 0);
        ex[x] = 1;
        Vec rhs = t.apply(ex, t.apply_basis(y, z));
        if (lhs != rhs) return false;
      }
    }
  return true;
}

}  // namespace homforge::fp
