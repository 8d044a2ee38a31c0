#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "bary/spectra.hpp"

namespace bary {

namespace {

double hypot2(double a, double b) { return std::sqrt(a * a + b * b); }

// Householder reduction to tridiagonal form (lower triangle of a is
// used and destroyed). The reflector application is split into an
// A*v pass, a correction pass and a rank-2 update so each pass
// parallelizes over rows.
void householder_tridiag(std::vector<double>& a, int n, std::vector<double>& d,
                         std::vector<double>& e) {
  auto A = [&](int i, int j) -> double& {
    return a[static_cast<std::size_t>(i) * n + j];
  };
  std::vector<double> p(n), q(n);
  for (int i = n - 1; i >= 1; --i) {
    int l = i - 1;
    double h = 0, scale = 0;
    if (l > 0) {
      for (int k = 0; k <= l; ++k) scale += std::abs(A(i, k));
      if (scale == 0.0) {
        e[i] = A(i, l);
      } else {
        for (int k = 0; k <= l; ++k) {
          A(i, k) /= scale;
          h += A(i, k) * A(i, k);
        }
        double f = A(i, l);
        double g = f >= 0 ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        A(i, l) = f - g;
        // p = A v / h over the active (l+1) x (l+1) block
#pragma omp parallel for schedule(static)
        for (int j = 0; j <= l; ++j) {
          double s = 0;
          for (int k = 0; k <= j; ++k) s += A(j, k) * A(i, k);
          for (int k = j + 1; k <= l; ++k) s += A(k, j) * A(i, k);
          p[j] = s / h;
        }
        double f2 = 0;
        for (int j = 0; j <= l; ++j) f2 += p[j] * A(i, j);
        double hh = f2 / (h + h);
        for (int j = 0; j <= l; ++j) q[j] = p[j] - hh * A(i, j);
        // rank-2 update of the lower triangle
#pragma omp parallel for schedule(dynamic, 32)
        for (int j = 0; j <= l; ++j) {
          double vj = A(i, j), qj = q[j];
          for (int k = 0; k <= j; ++k)
            A(j, k) -= vj * q[k] + qj * A(i, k);
        }
      }
    } else {
      e[i] = A(i, l);
    }
    d[i] = h;
  }
  e[0] = 0;
  for (int i = 0; i < n; ++i) d[i] = A(i, i);
}

// Implicit-shift QL on a tridiagonal (d, e), eigenvalues only.
void ql_implicit(std::vector<double>& d, std::vector<double>& e, int n) {
  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0;
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= 1e-300 || std::abs(e[m]) <= 1e-16 * dd) break;
      }
      if (m != l) {
        if (++iter == 50)
          throw std::runtime_error(
              "eig_tridiagonal_ql: no convergence for order " +
              std::to_string(n));
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = hypot2(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + (g >= 0 ? std::abs(r) : -std::abs(r)));
        double s = 1.0, c = 1.0, pp = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          double b = c * e[i];
          r = hypot2(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= pp;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - pp;
          r = (d[i] - g) * s + 2.0 * c * b;
          pp = s * r;
          d[i + 1] = g + pp;
          g = c * r - b;
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= pp;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace

std::vector<double> eig_tridiagonal_ql(const SymMatrix& m) {
  int n = m.order();
  if (n == 0) return {};
  std::vector<double> a(m.data(), m.data() + static_cast<std::size_t>(n) * n);
  std::vector<double> d(n), e(n);
  if (n == 1) {
    d[0] = a[0];
  } else {
    householder_tridiag(a, n, d, e);
    ql_implicit(d, e, n);
  }
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<double> eig_jacobi(const SymMatrix& m) {
  int n = m.order();
  if (n == 0) return {};
  std::vector<double> a(m.data(), m.data() + static_cast<std::size_t>(n) * n);
  auto A = [&](int i, int j) -> double& {
    return a[static_cast<std::size_t>(i) * n + j];
  };
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += A(i, j) * A(i, j);
    if (off <= 1e-30 * (1.0 + m.max_abs() * m.max_abs())) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(A(p, q)) == 0.0) continue;
        double theta = (A(q, q) - A(p, p)) / (2.0 * A(p, q));
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        double tau = s / (1.0 + c);
        double apq = A(p, q);
        A(p, p) -= t * apq;
        A(q, q) += t * apq;
        A(p, q) = 0.0;
        A(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          double akp = A(k, p), akq = A(k, q);
          A(k, p) = akp - s * (akq + tau * akp);
          A(p, k) = A(k, p);
          A(k, q) = akq + s * (akp - tau * akq);
          A(q, k) = A(k, q);
        }
      }
  }
  std::vector<double> vals(n);
  for (int i = 0; i < n; ++i) vals[i] = A(i, i);
  std::sort(vals.begin(), vals.end());
  return vals;
}

Spectrum eigenvalues(const SymMatrix& m, double tol) {
  if (!m.symmetric())
    throw std::invalid_argument("eigenvalues: matrix is not symmetric");
  int n = m.order();
  double norm = 0;  // infinity norm
  for (int i = 0; i < n; ++i) {
    double row = 0;
    for (int j = 0; j < n; ++j) row += std::abs(m.at(i, j));
    norm = std::max(norm, row);
  }
  if (tol <= 0) tol = 1e-10 * std::max(norm, 1.0);
  Spectrum s;
  s.tol = tol;
  s.values = n <= 64 ? eig_jacobi(m) : eig_tridiagonal_ql(m);
  double sum = 0;
  for (double v : s.values) sum += v;
  if (std::abs(sum - m.trace()) > tol * std::max(1, n))
    throw std::runtime_error("eigenvalues: trace check failed for order " +
                             std::to_string(n));
  return s;
}

double SymMatrix::trace() const {
  double t = 0;
  for (int i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

double SymMatrix::max_abs() const {
  double t = 0;
  for (double v : a_) t = std::max(t, std::abs(v));
  return t;
}

bool SymMatrix::symmetric() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

}  // namespace bary
