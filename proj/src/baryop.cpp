#include "bary/baryop.hpp"

#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace bary {

namespace {

mpz_class factorial(int k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  return f;
}

mpz_class binomial(int n, int k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return b;
}

}  // namespace

BaryMatrix barycentric_operator(int n) {
  if (n < 1) throw std::invalid_argument("barycentric_operator: n >= 1");
  BaryMatrix a(n);
  a.at(0, 0) = 1;
  for (int k = 1; k < n; ++k) {
    // c = (k x k prefix) * (B(k+1,1), ..., B(k+1,k))
    std::vector<mpz_class> c(k);
    for (int i = 0; i < k; ++i)
      for (int j = i; j < k; ++j) c[i] += a.at(i, j) * binomial(k + 1, j + 1);
    a.at(0, k) = 1;
    for (int i = 1; i < k; ++i) a.at(i, k) = c[i - 1];
    a.at(k, k) = factorial(k + 1);
  }
  return a;
}

std::vector<RationalVector> left_eigenvectors(const BaryMatrix& a) {
  int n = a.size();
  std::vector<RationalVector> out;
  for (int k = 0; k < n; ++k) {
    mpz_class lambda = a.at(k, k);  // (k+1)!
    std::vector<mpq_class> f(n, 0);
    f[k] = 1;
    // Row i of A^T f = lambda f: sum_{j<=i} A(j,i) f_j = lambda f_i.
    for (int i = k + 1; i < n; ++i) {
      mpq_class s = 0;
      for (int j = k; j < i; ++j) s += mpq_class(a.at(j, i)) * f[j];
      f[i] = s / mpq_class(lambda - a.at(i, i));
      f[i].canonicalize();
    }
    // Clear denominators and reduce to primitive form.
    mpz_class den = 1;
    for (auto& x : f) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(),
                              x.get_den().get_mpz_t());
    std::vector<mpz_class> fi(n);
    mpz_class gcd = 0;
    for (int i = 0; i < n; ++i) {
      fi[i] = mpq_class(f[i] * den).get_num();
      mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), fi[i].get_mpz_t());
    }
    for (auto& x : fi) x /= gcd;
    for (auto& x : fi) {
      if (x != 0) {
        if (x < 0)
          for (auto& y : fi) y = -y;
        break;
      }
    }
    out.push_back({lambda, std::move(fi)});
  }
  return out;
}

mpz_class invariant(const std::vector<mpz_class>& f, const CliqueVector& v) {
  if (v.size() > f.size())
    throw std::invalid_argument("invariant: eigenvector shorter than v");
  mpz_class x = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    x += f[i] * static_cast<long>(v[i]);
  return x;
}

std::vector<mpz_class> predict_clique_vector(const CliqueVector& v, int m) {
  if (m < 0) throw std::invalid_argument("predict_clique_vector: m >= 0");
  int n = static_cast<int>(v.size());
  std::vector<mpz_class> w = to_mpz(v);
  if (n == 0) return w;
  BaryMatrix a = barycentric_operator(n);
  for (int step = 0; step < m; ++step) {
    std::vector<mpz_class> next(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) next[i] += a.at(i, j) * w[j];
    w = std::move(next);
  }
  return w;
}

GrowthReport growth_rate_check(const CliqueVector& v, int m) {
  int d = static_cast<int>(v.size()) - 1;
  GrowthReport rep;
  rep.dominant = mpz_class(factorial(d + 1)).get_d();
  rep.ratios.assign(v.size(), {});
  std::vector<mpz_class> prev = to_mpz(v);
  for (int step = 1; step <= m; ++step) {
    auto cur = predict_clique_vector(v, step);
    for (std::size_t k = 0; k < v.size(); ++k)
      if (prev[k] != 0)
        rep.ratios[k].push_back(mpq_class(cur[k], prev[k]).get_d());
    prev = std::move(cur);
  }
  return rep;
}

std::string to_text(const BaryMatrix& a) {
  int n = a.size();
  std::vector<std::size_t> width(n, 0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      width[j] = std::max(width[j], a.at(i, j).get_str().size());
  std::ostringstream os;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::string s = a.at(i, j).get_str();
      os << std::string(width[j] - s.size() + (j ? 2 : 0), ' ') << s;
    }
    os << "\n";
  }
  return os.str();
}

std::string to_json(const BaryMatrix& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < a.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < a.size(); ++j) row.push_back(a.at(i, j).get_str());
    rows.push_back(row);
  }
  return rows.dump();
}

}  // namespace bary
