#include "walksearch/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace walksearch::linalg {

namespace {

// One real Jacobi rotation zeroing a(p,q), accumulated into v.
void rotate(RealMatrix& a, RealMatrix& v, int p, int q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double sgn = (tau >= 0.0) ? 1.0 : -1.0;
  const double t = sgn / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const int n = a.rows();
  a(p, p) -= t * apq;
  a(q, q) += t * apq;
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  for (int r = 0; r < n; ++r) {
    if (r != p && r != q) {
      const double arp = a(r, p);
      const double arq = a(r, q);
      a(r, p) = c * arp - s * arq;
      a(p, r) = a(r, p);
      a(r, q) = s * arp + c * arq;
      a(q, r) = a(r, q);
    }
    const double vrp = v(r, p);
    const double vrq = v(r, q);
    v(r, p) = c * vrp - s * vrq;
    v(r, q) = s * vrp + c * vrq;
  }
}

double off_diagonal_sq(const RealMatrix& a) {
  double s = 0.0;
  for (int p = 0; p < a.rows(); ++p) {
    for (int q = p + 1; q < a.cols(); ++q) s += 2.0 * a(p, q) * a(p, q);
  }
  return s;
}

double max_abs(const RealMatrix& m) {
  double best = 0.0;
  for (double v : m.data()) best = std::max(best, std::abs(v));
  return best;
}

double max_abs(const ComplexMatrix& m) {
  double best = 0.0;
  for (const cplx& v : m.data()) best = std::max(best, std::abs(v));
  return best;
}

// Cyclic Jacobi on a working copy; a is destroyed into the eigenvalues.
void jacobi(RealMatrix& a, RealMatrix& v) {
  const int n = a.rows();
  v = RealMatrix::identity(n);
  double scale = 0.0;
  for (double e : a.data()) scale += e * e;
  if (scale == 0.0) return;
  const double target = scale * 1e-30;  // off(A)^2 down to ~1e-15 * ||A||_F

  for (int sweep = 0; sweep < 100; ++sweep) {
    if (off_diagonal_sq(a) <= target) return;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        // Skip rotations that cannot move the off-diagonal mass.
        const double apq = std::abs(a(p, q));
        if (apq * apq > target / (static_cast<double>(n) * n)) rotate(a, v, p, q);
      }
    }
  }
  if (off_diagonal_sq(a) > scale * 1e-24) {
    throw std::runtime_error("hermitian_eigen Jacobi iteration did not converge");
  }
}

template <typename MatrixT, typename SystemT>
void sort_ascending(MatrixT& vectors, std::vector<double>& values, SystemT& out) {
  const int n = static_cast<int>(values.size());
  std::vector<int> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return values[i] < values[j]; });
  out.values.resize(values.size());
  out.vectors = MatrixT(n, n);
  for (int k = 0; k < n; ++k) {
    out.values[k] = values[order[k]];
    for (int r = 0; r < n; ++r) out.vectors(r, k) = vectors(r, order[k]);
  }
}

}  // namespace

RealEigenSystem hermitian_eigen(const RealMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("hermitian_eigen requires a square matrix");
  if (!m.all_finite()) throw std::invalid_argument("hermitian_eigen requires finite input");
  const double tol = 1e-12 * std::max(1.0, max_abs(m));
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = r + 1; c < m.cols(); ++c) {
      if (std::abs(m(r, c) - m(c, r)) > tol) {
        throw std::invalid_argument("hermitian_eigen requires a symmetric matrix");
      }
    }
  }

  RealMatrix a = m;
  // Symmetrize exactly so the rotations see a(p,q) == a(q,p).
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = r + 1; c < a.cols(); ++c) {
      const double avg = 0.5 * (a(r, c) + a(c, r));
      a(r, c) = avg;
      a(c, r) = avg;
    }
  }
  RealMatrix v;
  jacobi(a, v);

  std::vector<double> values(static_cast<std::size_t>(a.rows()));
  for (int i = 0; i < a.rows(); ++i) values[i] = a(i, i);
  RealEigenSystem out;
  sort_ascending(v, values, out);
  return out;
}

ComplexEigenSystem hermitian_eigen(const ComplexMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("hermitian_eigen requires a square matrix");
  if (!m.all_finite()) throw std::invalid_argument("hermitian_eigen requires finite input");
  const int n = m.rows();
  const double tol = 1e-12 * std::max(1.0, max_abs(m));
  for (int r = 0; r < n; ++r) {
    if (std::abs(m(r, r).imag()) > tol) {
      throw std::invalid_argument("hermitian_eigen requires a Hermitian matrix");
    }
    for (int c = r + 1; c < n; ++c) {
      if (std::abs(m(r, c) - std::conj(m(c, r))) > tol) {
        throw std::invalid_argument("hermitian_eigen requires a Hermitian matrix");
      }
    }
  }

  ComplexMatrix a = m;
  for (int r = 0; r < n; ++r) {
    a(r, r) = cplx{a(r, r).real(), 0.0};
    for (int c = r + 1; c < n; ++c) {
      const cplx avg = 0.5 * (a(r, c) + std::conj(a(c, r)));
      a(r, c) = avg;
      a(c, r) = std::conj(avg);
    }
  }

  ComplexMatrix v = ComplexMatrix::identity(n);
  double scale = 0.0;
  for (const cplx& e : a.data()) scale += std::norm(e);
  ComplexEigenSystem out;
  if (scale == 0.0) {
    out.values.assign(static_cast<std::size_t>(n), 0.0);
    out.vectors = v;
    return out;
  }
  const double target = scale * 1e-30;

  auto off_sq = [&]() {
    double s = 0.0;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) s += 2.0 * std::norm(a(p, q));
    }
    return s;
  };

  bool converged = false;
  for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
    if (off_sq() <= target) {
      converged = true;
      break;
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double r = std::abs(a(p, q));
        if (r * r <= target / (static_cast<double>(n) * n)) continue;
        // Absorb the phase of a(p,q) into column q, leaving a real pivot,
        // then apply a standard real rotation.
        const cplx omega = a(p, q) / r;  // a(p,q) = r * omega
        for (int k = 0; k < n; ++k) {
          a(q, k) *= omega;              // row q of D^H A
          a(k, q) *= std::conj(omega);   // column q of A D
          v(k, q) *= std::conj(omega);
        }
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * r);
        const double sgn = (tau >= 0.0) ? 1.0 : -1.0;
        const double t = sgn / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        a(p, p) = app - t * r;
        a(q, q) = aqq + t * r;
        a(p, q) = cplx{0.0, 0.0};
        a(q, p) = cplx{0.0, 0.0};
        for (int k = 0; k < n; ++k) {
          if (k != p && k != q) {
            const cplx akp = a(k, p);
            const cplx akq = a(k, q);
            a(k, p) = c * akp - s * akq;
            a(p, k) = std::conj(a(k, p));
            a(k, q) = s * akp + c * akq;
            a(q, k) = std::conj(a(k, q));
          }
          const cplx vkp = v(k, p);
          const cplx vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  if (!converged && off_sq() > scale * 1e-24) {
    throw std::runtime_error("hermitian_eigen Jacobi iteration did not converge");
  }

  std::vector<double> values(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) values[i] = a(i, i).real();
  sort_ascending(v, values, out);
  return out;
}

}  // namespace walksearch::linalg
