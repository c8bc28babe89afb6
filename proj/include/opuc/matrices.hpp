#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "opuc/functional.hpp"
#include "opuc/paths.hpp"
#include "opuc/scalar.hpp"
#include "opuc/verblunsky.hpp"

namespace opuc {

template <Scalar T>
class Matrix {
 public:
  explicit Matrix(int dim) : dim_(dim), data_(static_cast<std::size_t>(dim) * dim, T(0)) {
    if (dim < 1) throw std::invalid_argument("matrix dimension must be >= 1");
  }

  static Matrix identity(int dim) {
    Matrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = T(1);
    return m;
  }

  int dim() const { return dim_; }
  T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * dim_ + j]; }
  const T& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * dim_ + j]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
    Matrix out(a.dim_);
    for (int i = 0; i < a.dim_; ++i)
      for (int k = 0; k < a.dim_; ++k) {
        if (is_zero(a(i, k))) continue;
        for (int j = 0; j < a.dim_; ++j)
          if (!is_zero(b(k, j))) out(i, j) = out(i, j) + a(i, k) * b(k, j);
      }
    return out;
  }

  // Row vector times matrix.
  friend std::vector<T> operator*(const std::vector<T>& v, const Matrix& m) {
    std::vector<T> out(m.dim_, T(0));
    for (int k = 0; k < m.dim_; ++k) {
      if (is_zero(v[k])) continue;
      for (int j = 0; j < m.dim_; ++j)
        if (!is_zero(m(k, j))) out[j] += v[k] * m(k, j);
    }
    return out;
  }

 private:
  int dim_;
  std::vector<T> data_;
};

template <Scalar T>
Matrix<T> power(const Matrix<T>& m, int e) {
  if (e < 0) throw std::invalid_argument("negative matrix power");
  Matrix<T> out = Matrix<T>::identity(m.dim());
  for (int i = 0; i < e; ++i) out = out * m;
  return out;
}

// u_{i,i+1} = 1, u_{i,j} = -alpha_i ab_{j-1} prod_{k=j}^{i-1} rho_k (j <= i).
template <Scalar T>
Matrix<T> build_U(const VerblunskySequence<T>& vs, int dim) {
  Matrix<T> u(dim);
  for (int i = 0; i < dim; ++i) {
    if (i + 1 < dim) u(i, i + 1) = T(1);
    for (int j = 0; j <= i; ++j) u(i, j) = lukasiewicz_weight(vs, i, j - i);
  }
  return u;
}

template <Scalar T>
T u_power_entry(const VerblunskySequence<T>& vs, int n, int r, int s, int extra_dim = 0) {
  if (n < 0 || r < 0 || s < 0) throw std::invalid_argument("u_power_entry: negative parameter");
  const int dim = r + n + 1 + extra_dim;
  if (s >= dim) return T(0);
  Matrix<T> u = build_U(vs, dim);
  std::vector<T> row(dim, T(0));
  row[r] = T(1);
  for (int i = 0; i < n; ++i) row = row * u;
  return row[s];
}

// Theta_j = [[alpha_j, 1], [rho_j, -ab_j]] placed on rows/cols j, j+1.
template <Scalar T>
void place_theta(Matrix<T>& m, const VerblunskySequence<T>& vs, int j) {
  // A block cut off by the truncation is left empty: walks of the lengths
  // used here never carry weight from the last row back to row s.
  if (j + 1 >= m.dim()) return;
  m(j, j) = vs.alpha(j);
  m(j, j + 1) = T(1);
  m(j + 1, j) = vs.rho(j);
  m(j + 1, j + 1) = -vs.alpha_bar(j);
}

// L = Theta_0 (+) Theta_2 (+) ...
template <Scalar T>
Matrix<T> cmv_L(const VerblunskySequence<T>& vs, int dim) {
  Matrix<T> m(dim);
  for (int j = 0; j < dim; j += 2) place_theta(m, vs, j);
  return m;
}

// M = 1 (+) Theta_1 (+) Theta_3 (+) ...
template <Scalar T>
Matrix<T> cmv_M(const VerblunskySequence<T>& vs, int dim) {
  Matrix<T> m(dim);
  m(0, 0) = T(1);
  for (int j = 1; j < dim; j += 2) place_theta(m, vs, j);
  return m;
}

// (r,s) entry of A_{-r} A_{-r+1} ... A_{2n-s-1}, A_x = L for even x, M for odd x.
template <Scalar T>
T cmv_walk_entry(const VerblunskySequence<T>& vs, int n, int r, int s, int extra_dim = 0) {
  if (n < 0 || r < 0 || s < 0) throw std::invalid_argument("cmv_walk_entry: negative parameter");
  const int dim = r + n + 2 + extra_dim;
  const int x_end = 2 * n - s;
  if (x_end < -r || s >= dim) return T(0);
  const Matrix<T> L = cmv_L(vs, dim), M = cmv_M(vs, dim);
  std::vector<T> row(dim, T(0));
  row[r] = T(1);
  for (int x = -r; x < x_end; ++x) row = row * (detail::parity(x) == 0 ? L : M);
  return row[s];
}

// Bareiss elimination in symbolic mode, partial-pivot LU in numeric mode.
template <Scalar T>
T determinant(Matrix<T> a) {
  const int n = a.dim();
  if constexpr (ScalarTraits<T>::mode == Mode::symbolic) {
    T sign(1), prev(1);
    for (int k = 0; k < n - 1; ++k) {
      if (is_zero(a(k, k))) {
        int p = k + 1;
        while (p < n && is_zero(a(p, k))) ++p;
        if (p == n) return T(0);
        for (int j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
        sign = -sign;
      }
      for (int i = k + 1; i < n; ++i) {
        for (int j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        a(i, k) = T(0);
      }
      prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
  } else {
    T det(1);
    for (int k = 0; k < n; ++k) {
      int p = k;
      for (int i = k + 1; i < n; ++i)
        if (std::abs(a(i, k)) > std::abs(a(p, k))) p = i;
      if (a(p, k) == T(0)) return T(0);
      if (p != k) {
        for (int j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
        det = -det;
      }
      det *= a(k, k);
      for (int i = k + 1; i < n; ++i) {
        T f = a(i, k) / a(k, k);
        for (int j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
      }
    }
    return det;
  }
}

// (mu_{i-j})_{0<=i,j<=n}
template <Scalar T>
Matrix<T> toeplitz_matrix(const MomentTable<T>& table, int n) {
  Matrix<T> m(n + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) m(i, j) = table.moment(i - j);
  return m;
}

template <Scalar T>
T toeplitz_det(const MomentTable<T>& table, int n) {
  return determinant(toeplitz_matrix(table, n));
}

template <Scalar T>
T toeplitz_det(const VerblunskySequence<T>& vs, int n) {
  return toeplitz_det(MomentTable<T>(vs), n);
}

// prod_{k<n} rho_k^{n-k}
template <Scalar T>
T rho_staircase(const VerblunskySequence<T>& vs, int n) {
  T out(1);
  for (int k = 0; k < n; ++k)
    for (int e = 0; e < n - k; ++e) out = out * vs.rho(k);
  return out;
}

template <Scalar T>
struct DetIdentity {
  T lhs;
  T rhs;
  bool equal = false;
};

// det(mu_{m+i-j}) against prod rho_k^{n-k} * det(mu_{m+i,0,j}); the right-hand
// entries come from the path models, the left from the functional.
template <Scalar T>
DetIdentity<T> det_identity_check(const MomentTable<T>& table, int m, int n) {
  const auto& vs = table.sequence();
  Matrix<T> left(n + 1), right(n + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      left(i, j) = table.moment(m + i - j);
      const int k = m + i;
      right(i, j) = k >= 0 ? moment_lukasiewicz(vs, k, 0, j) : moment_negative(vs, -k, 0, j);
    }
  DetIdentity<T> out{determinant(left), rho_staircase(vs, n) * determinant(right)};
  out.equal = same_value(out.lhs, out.rhs);
  return out;
}

}  // namespace opuc
