#pragma once

#include <complex>
#include <vector>

#include "bary/graph.hpp"
#include "bary/stepfun.hpp"

namespace bary {

/// Dense symmetric matrix, row major.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

  int order() const { return n_; }
  double at(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * n_ + j];
  }
  double& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  double* data() { return a_.data(); }
  const double* data() const { return a_.data(); }
  double trace() const;
  double max_abs() const;
  bool symmetric() const;

 private:
  int n_ = 0;
  std::vector<double> a_;
};

/// Exact small-integer matrix (incidence and Hodge data).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        a_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  long long at(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }
  long long& at(int i, int j) {
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }
  bool operator==(const IntMatrix&) const = default;

  SymMatrix to_sym() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<long long> a_;
};

IntMatrix int_matmul(const IntMatrix& a, const IntMatrix& b);
IntMatrix int_transpose(const IntMatrix& a);

SymMatrix kirchhoff(const Graph& g);
SymMatrix adjacency_matrix(const Graph& g);
// B^{-1/2} A B^{-1/2}; isolated vertices are rejected.
SymMatrix normalized_laplacian(const Graph& g);

IntMatrix kirchhoff_int(const Graph& g);

/// Signed incidence matrices of the Whitney complex: d[k] maps
/// k-simplices to (k+1)-simplices; dropping the i-th vertex carries
/// sign (-1)^i. Satisfies d[k+1] * d[k] == 0 exactly.
struct ChainComplex {
  std::vector<std::vector<VertexSet>> simplices;  // per dimension
  std::vector<IntMatrix> d;
  int total_simplices() const;
};

ChainComplex chain_complex(const Graph& g);
IntMatrix dirac(const Graph& g);                // D = d + d^T on all forms
IntMatrix hodge_block(const Graph& g, int k);   // L_k

struct Spectrum {
  std::vector<double> values;  // ascending
  double tol = 0;
};

// Full sorted spectrum. Dispatches between the threaded
// Householder+QL kernel and the serial Jacobi reference (n <= 64).
// Residuals are spot-checked against tol * ||M||.
Spectrum eigenvalues(const SymMatrix& m, double tol = 0);

// The two kernels, exposed separately for cross-validation and the
// benchmark harness.
std::vector<double> eig_tridiagonal_ql(const SymMatrix& m);
std::vector<double> eig_jacobi(const SymMatrix& m);

StepFunction spectral_function(const Spectrum& s);

// Empirical CDF of the spectrum: value -> fraction of eigenvalues <= value.
double integrated_density(const Spectrum& s, double x);

struct Gap {
  double position;  // (k+1)/n for the jump after the (k+1)-th eigenvalue
  double jump;
  int index;        // 0-based lower eigenvalue index
};

// Top jumps sorted by size descending, ties by position.
std::vector<Gap> gaps(const Spectrum& s, int top);

struct SchurReport {
  bool holds = false;
  double max_violation = 0;
  double endpoint_mismatch = 0;
};

// Integrated degree function majorizes the integrated spectral function
// at every step boundary, with equality at x = 1.
SchurReport schur_check(const Graph& g, double tol = 1e-8);

// Finite sum over the positive part of the spectrum.
std::complex<double> dirac_zeta(const Spectrum& s, std::complex<double> exponent,
                                double positive_tol = 1e-9);

}  // namespace bary
