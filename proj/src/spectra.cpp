#include "bary/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "bary/clique.hpp"

namespace bary {

SymMatrix IntMatrix::to_sym() const {
  if (rows_ != cols_) throw std::logic_error("to_sym: not square");
  SymMatrix m(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      m.at(i, j) = static_cast<double>(at(i, j));
  return m;
}

IntMatrix int_matmul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::logic_error("int_matmul: shape");
  IntMatrix c(a.rows(), b.cols());
#pragma omp parallel for schedule(static)
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      long long aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

IntMatrix int_transpose(const IntMatrix& a) {
  IntMatrix t(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) t.at(j, i) = a.at(i, j);
  return t;
}

SymMatrix kirchhoff(const Graph& g) { return kirchhoff_int(g).to_sym(); }

IntMatrix kirchhoff_int(const Graph& g) {
  IntMatrix m(g.order(), g.order());
  for (auto [a, b] : g.edges()) {
    m.at(a, b) = -1;
    m.at(b, a) = -1;
    m.at(a, a) += 1;
    m.at(b, b) += 1;
  }
  return m;
}

SymMatrix adjacency_matrix(const Graph& g) {
  SymMatrix m(g.order());
  for (auto [a, b] : g.edges()) {
    m.at(a, b) = 1;
    m.at(b, a) = 1;
  }
  return m;
}

SymMatrix normalized_laplacian(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0)
      throw std::invalid_argument(
          "normalized_laplacian: isolated vertex " + std::to_string(v));
  SymMatrix m(g.order());
  for (auto [a, b] : g.edges()) {
    double w = 1.0 / std::sqrt(static_cast<double>(g.degree(a)) *
                               static_cast<double>(g.degree(b)));
    m.at(a, b) = w;
    m.at(b, a) = w;
  }
  return m;
}

int ChainComplex::total_simplices() const {
  int t = 0;
  for (const auto& lvl : simplices) t += static_cast<int>(lvl.size());
  return t;
}

ChainComplex chain_complex(const Graph& g) {
  ChainComplex cc;
  int dmax = clique_number(g);
  for (int k = 1; k <= dmax; ++k)
    cc.simplices.push_back(enumerate_cliques(g, k));
  for (std::size_t k = 0; k + 1 < cc.simplices.size(); ++k) {
    const auto& faces = cc.simplices[k];
    const auto& cells = cc.simplices[k + 1];
    std::map<VertexSet, int> index;
    for (std::size_t i = 0; i < faces.size(); ++i)
      index[faces[i]] = static_cast<int>(i);
    IntMatrix d(static_cast<int>(cells.size()), static_cast<int>(faces.size()));
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const auto& s = cells[c];
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        VertexSet face;
        for (std::size_t j = 0; j < s.size(); ++j)
          if (j != drop) face.push_back(s[j]);
        d.at(static_cast<int>(c), index[face]) = (drop % 2 ? -1 : 1);
      }
    }
    cc.d.push_back(std::move(d));
  }
  return cc;
}

IntMatrix dirac(const Graph& g) {
  auto cc = chain_complex(g);
  int n = cc.total_simplices();
  IntMatrix m(n, n);
  std::vector<int> offset;
  int acc = 0;
  for (const auto& lvl : cc.simplices) {
    offset.push_back(acc);
    acc += static_cast<int>(lvl.size());
  }
  for (std::size_t k = 0; k < cc.d.size(); ++k) {
    const auto& d = cc.d[k];
    for (int i = 0; i < d.rows(); ++i)
      for (int j = 0; j < d.cols(); ++j)
        if (d.at(i, j) != 0) {
          m.at(offset[k + 1] + i, offset[k] + j) = d.at(i, j);
          m.at(offset[k] + j, offset[k + 1] + i) = d.at(i, j);
        }
  }
  return m;
}

IntMatrix hodge_block(const Graph& g, int k) {
  auto cc = chain_complex(g);
  if (k < 0 || k >= static_cast<int>(cc.simplices.size()))
    throw std::invalid_argument("hodge_block: no such form degree");
  int nk = static_cast<int>(cc.simplices[k].size());
  IntMatrix L(nk, nk);
  if (k < static_cast<int>(cc.d.size())) {
    auto dt_d = int_matmul(int_transpose(cc.d[k]), cc.d[k]);
    for (int i = 0; i < nk; ++i)
      for (int j = 0; j < nk; ++j) L.at(i, j) += dt_d.at(i, j);
  }
  if (k >= 1) {
    auto d_dt = int_matmul(cc.d[k - 1], int_transpose(cc.d[k - 1]));
    for (int i = 0; i < nk; ++i)
      for (int j = 0; j < nk; ++j) L.at(i, j) += d_dt.at(i, j);
  }
  return L;
}

StepFunction spectral_function(const Spectrum& s) {
  return StepFunction(s.values);
}

double integrated_density(const Spectrum& s, double x) {
  auto it = std::upper_bound(s.values.begin(), s.values.end(), x);
  return static_cast<double>(it - s.values.begin()) /
         static_cast<double>(s.values.size());
}

std::vector<Gap> gaps(const Spectrum& s, int top) {
  int n = static_cast<int>(s.values.size());
  std::vector<Gap> all;
  for (int k = 0; k + 1 < n; ++k)
    all.push_back({static_cast<double>(k + 1) / n,
                   s.values[k + 1] - s.values[k], k});
  std::sort(all.begin(), all.end(), [](const Gap& a, const Gap& b) {
    if (a.jump != b.jump) return a.jump > b.jump;
    return a.position < b.position;
  });
  if (top >= 0 && static_cast<int>(all.size()) > top) all.resize(top);
  return all;
}

SchurReport schur_check(const Graph& g, double tol) {
  auto lam = eigenvalues(kirchhoff(g)).values;
  auto deg = degree_sequence(g);
  SchurReport rep;
  double sl = 0, sd = 0, worst = 0;
  for (std::size_t k = 0; k < lam.size(); ++k) {
    sl += lam[k];
    sd += deg[k];
    worst = std::max(worst, sl - sd);
  }
  rep.max_violation = worst;
  rep.endpoint_mismatch = std::abs(sl - sd);
  rep.holds = worst <= tol && rep.endpoint_mismatch <= tol;
  return rep;
}

std::complex<double> dirac_zeta(const Spectrum& s,
                                std::complex<double> exponent,
                                double positive_tol) {
  std::complex<double> acc = 0;
  for (double lam : s.values)
    if (lam > positive_tol) acc += std::exp(-exponent * std::log(lam));
  return acc;
}

}  // namespace bary
