#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "bary/clique.hpp"

namespace bary {

/// Exact integer operator mapping clique vectors under refinement.
/// Upper triangular, diagonal k! at 1-based index k, top row all ones.
class BaryMatrix {
 public:
  explicit BaryMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

  int size() const { return n_; }
  const mpz_class& at(int row, int col) const {
    return a_[static_cast<std::size_t>(row) * n_ + col];
  }
  mpz_class& at(int row, int col) {
    return a_[static_cast<std::size_t>(row) * n_ + col];
  }

 private:
  int n_;
  std::vector<mpz_class> a_;
};

inline std::vector<mpz_class> to_mpz(const CliqueVector& v) {
  std::vector<mpz_class> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<long>(v[i]);
  return out;
}

// Bootstrap construction: given the k x k prefix A, the next column is
// (1, c_1, ..., c_{k-1}, (k+1)!) where c = A * (B(k+1,1),...,B(k+1,k)).
BaryMatrix barycentric_operator(int n);

struct RationalVector {
  mpz_class eigenvalue;        // k!
  std::vector<mpz_class> f;    // primitive integers, first nonzero > 0
};

// One eigenvector of A^T per eigenvalue 1!..N!, solved by exact forward
// substitution on the lower-triangular A^T.
std::vector<RationalVector> left_eigenvectors(const BaryMatrix& a);

// <f, v>, with v zero-padded to the length of f.
mpz_class invariant(const std::vector<mpz_class>& f, const CliqueVector& v);

// A^m v with the truncation sized to len(v); exact for fixed clique
// number because A is upper triangular.
std::vector<mpz_class> predict_clique_vector(const CliqueVector& v, int m);

struct GrowthReport {
  // ratios[k][step] = v_k(G_{step+1}) / v_k(G_step)
  std::vector<std::vector<double>> ratios;
  double dominant;  // (d+1)!
};

GrowthReport growth_rate_check(const CliqueVector& v, int m);

std::string to_text(const BaryMatrix& a);
std::string to_json(const BaryMatrix& a);

}  // namespace bary
