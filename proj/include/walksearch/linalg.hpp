#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <stdexcept>
#include <vector>

namespace walksearch::linalg {

using cplx = std::complex<double>;

namespace detail {
inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const cplx& v) { return std::abs(v); }
inline double conjugate(double v) { return v; }
inline cplx conjugate(const cplx& v) { return std::conj(v); }
inline bool is_finite(double v) { return std::isfinite(v); }
inline bool is_finite(const cplx& v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}
}  // namespace detail

/// Dense row-major matrix over double or std::complex<double>.
template <typename T>
class Matrix {
 public:
  Matrix() = default;

  Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows <= 0 || cols <= 0) {
      throw std::invalid_argument("matrix dimensions must be positive");
    }
    data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), T{});
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(int r, int c) {
    return data_[static_cast<std::size_t>(r) * cols_ + static_cast<std::size_t>(c)];
  }
  const T& operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + static_cast<std::size_t>(c)];
  }

  std::vector<T>& data() { return data_; }
  const std::vector<T>& data() const { return data_; }

  bool all_finite() const {
    for (const T& v : data_) {
      if (!detail::is_finite(v)) return false;
    }
    return true;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using RealMatrix = Matrix<double>;
using ComplexMatrix = Matrix<cplx>;

template <typename T>
std::vector<T> matvec(const Matrix<T>& m, const std::vector<T>& x) {
  if (static_cast<std::size_t>(m.cols()) != x.size()) {
    throw std::invalid_argument("matvec dimension mismatch");
  }
  std::vector<T> y(static_cast<std::size_t>(m.rows()), T{});
  for (int r = 0; r < m.rows(); ++r) {
    T acc{};
    for (int c = 0; c < m.cols(); ++c) acc += m(r, c) * x[c];
    y[r] = acc;
  }
  return y;
}

template <typename T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul dimension mismatch");
  Matrix<T> c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const T aik = a(i, k);
      if (aik == T{}) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

/// Maximum absolute row sum.
template <typename T>
double inf_norm(const Matrix<T>& m) {
  double best = 0.0;
  for (int r = 0; r < m.rows(); ++r) {
    double s = 0.0;
    for (int c = 0; c < m.cols(); ++c) s += detail::magnitude(m(r, c));
    best = std::max(best, s);
  }
  return best;
}

/// e^{m t} by scaling and squaring: m t is halved until its norm is at most
/// 1/2, the exponential of the scaled matrix is summed as a truncated Taylor
/// series, and the result is repeatedly squared. Truncation is driven well
/// below `tol`, which bounds the elementwise error of the result.
template <typename T>
Matrix<T> expm(const Matrix<T>& m, double t, double tol = 1e-12) {
  if (!m.is_square()) throw std::invalid_argument("expm requires a square matrix");
  if (!m.all_finite() || !std::isfinite(t)) {
    throw std::invalid_argument("expm requires finite input");
  }
  if (!(tol > 0)) throw std::invalid_argument("expm tolerance must be positive");

  const int n = m.rows();
  Matrix<T> scaled(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) scaled(r, c) = m(r, c) * t;
  }

  int squarings = 0;
  double norm = inf_norm(scaled);
  while (norm > 0.5) {
    norm *= 0.5;
    ++squarings;
  }
  const double inv_scale = std::ldexp(1.0, -squarings);
  for (T& v : scaled.data()) v *= inv_scale;

  // With the scaled norm <= 1/2 the series terms shrink faster than 2^-k/k!.
  const double cutoff = std::min(tol, 1e-13) * 1e-3;
  Matrix<T> sum = Matrix<T>::identity(n);
  Matrix<T> term = Matrix<T>::identity(n);
  for (int k = 1; k <= 64; ++k) {
    term = matmul(term, scaled);
    const double inv_k = 1.0 / k;
    for (T& v : term.data()) v *= inv_k;
    for (std::size_t i = 0; i < sum.data().size(); ++i) sum.data()[i] += term.data()[i];
    if (inf_norm(term) <= cutoff) break;
  }
  for (int s = 0; s < squarings; ++s) sum = matmul(sum, sum);
  return sum;
}

/// e^{m t} x with elementwise error at most tol.
template <typename T>
std::vector<T> expm_apply(const Matrix<T>& m, double t, const std::vector<T>& x,
                          double tol = 1e-12) {
  if (!m.is_square()) throw std::invalid_argument("expm_apply requires a square matrix");
  if (static_cast<std::size_t>(m.rows()) != x.size()) {
    throw std::invalid_argument("expm_apply dimension mismatch");
  }
  return matvec(expm(m, t, tol), x);
}

/// Largest singular value by power iteration on m^H m, relative tolerance
/// 1e-10 on the Rayleigh quotient, iteration cap 1e5.
template <typename T>
double spectral_norm(const Matrix<T>& m) {
  if (!m.is_square()) throw std::invalid_argument("spectral_norm requires a square matrix");
  const int n = m.rows();

  double frob = 0.0;
  for (const T& v : m.data()) frob += detail::magnitude(v) * detail::magnitude(v);
  if (frob == 0.0) return 0.0;

  // Fixed-seed start vector keeps results reproducible and generically
  // avoids starting orthogonal to the top singular space.
  std::mt19937_64 rng(0x5eed5eed1234ULL);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<T> v(static_cast<std::size_t>(n));
  for (T& e : v) e = T{unit(rng)};

  auto normalize = [](std::vector<T>& w) {
    double s = 0.0;
    for (const T& e : w) s += detail::magnitude(e) * detail::magnitude(e);
    s = std::sqrt(s);
    if (s == 0.0) return false;
    for (T& e : w) e *= T{1.0 / s};
    return true;
  };
  if (!normalize(v)) throw std::runtime_error("spectral_norm start vector degenerated");

  double lambda_prev = -1.0;
  for (long iter = 0; iter < 100000; ++iter) {
    // w = m v, lambda = ||w||^2 is the Rayleigh quotient of m^H m at v.
    std::vector<T> w = matvec(m, v);
    double lambda = 0.0;
    for (const T& e : w) lambda += detail::magnitude(e) * detail::magnitude(e);
    if (std::abs(lambda - lambda_prev) <= 1e-10 * std::max(lambda, 1e-300)) {
      return std::sqrt(lambda);
    }
    lambda_prev = lambda;
    // v <- normalized m^H w
    std::vector<T> next(static_cast<std::size_t>(n), T{});
    for (int r = 0; r < n; ++r) {
      const T wr = w[r];
      for (int c = 0; c < n; ++c) next[c] += detail::conjugate(m(r, c)) * wr;
    }
    v = std::move(next);
    if (!normalize(v)) return 0.0;  // m annihilated v: m^H m v = 0
  }
  throw std::runtime_error("spectral_norm power iteration did not converge");
}

/// Eigendecomposition of a real symmetric matrix. Values ascend; vectors(:,k)
/// is the orthonormal eigenvector paired with values[k].
struct RealEigenSystem {
  std::vector<double> values;
  RealMatrix vectors;
};

/// Same contract for complex Hermitian input; the eigenvalues are still real.
struct ComplexEigenSystem {
  std::vector<double> values;
  ComplexMatrix vectors;
};

RealEigenSystem hermitian_eigen(const RealMatrix& m);
ComplexEigenSystem hermitian_eigen(const ComplexMatrix& m);

}  // namespace walksearch::linalg
