#include "bary/stepfun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bary {

StepFunction::StepFunction(std::vector<double> sorted_values)
    : vals_(std::move(sorted_values)) {
  if (!std::is_sorted(vals_.begin(), vals_.end()))
    throw std::invalid_argument("StepFunction: values must be sorted");
}

double StepFunction::operator()(double x) const {
  if (vals_.empty()) throw std::logic_error("StepFunction: empty");
  auto n = static_cast<double>(vals_.size());
  auto k = static_cast<long long>(std::ceil(n * x)) - 1;
  k = std::clamp<long long>(k, 0, static_cast<long long>(vals_.size()) - 1);
  return vals_[static_cast<std::size_t>(k)];
}

double StepFunction::l1_norm() const {
  double s = 0;
  for (double v : vals_) s += v;
  return s / static_cast<double>(vals_.size());
}

double l1_distance(const StepFunction& f, const StepFunction& g) {
  const auto& a = f.values();
  const auto& b = g.values();
  if (a.empty() || b.empty())
    throw std::invalid_argument("l1_distance: empty step function");
  long long na = static_cast<long long>(a.size());
  long long nb = static_cast<long long>(b.size());
  // Merge the grids k/na and k/nb exactly over the common denominator.
  long long i = 0, j = 0;
  long long prev = 0;  // position in units of 1/(na*nb)
  double total = 0;
  while (i < na || j < nb) {
    long long next_a = (i + 1) * nb;
    long long next_b = (j + 1) * na;
    long long next = std::min(next_a, next_b);
    total += std::abs(a[static_cast<std::size_t>(i)] -
                      b[static_cast<std::size_t>(j)]) *
             static_cast<double>(next - prev);
    if (next == next_a) ++i;
    if (next == next_b) ++j;
    prev = next;
  }
  return total / (static_cast<double>(na) * static_cast<double>(nb));
}

namespace {

double simpson(const std::function<double(double)>& h, double a, double fa,
               double b, double fb, double m, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive(const std::function<double(double)>& h, double a, double fa,
                double b, double fb, double m, double fm, double whole,
                double eps, int depth) {
  double lm = (a + m) / 2, rm = (m + b) / 2;
  double flm = h(lm), frm = h(rm);
  double left = simpson(h, a, fa, m, fm, lm, flm);
  double right = simpson(h, m, fm, b, fb, rm, frm);
  if (depth <= 0 || std::abs(left + right - whole) < 15 * eps)
    return left + right + (left + right - whole) / 15.0;
  return adaptive(h, a, fa, m, fm, lm, flm, left, eps / 2, depth - 1) +
         adaptive(h, m, fm, b, fb, rm, frm, right, eps / 2, depth - 1);
}

double integrate(const std::function<double(double)>& h, double a, double b,
                 double eps) {
  double m = (a + b) / 2;
  double fa = h(a), fb = h(b), fm = h(m);
  return adaptive(h, a, fa, b, fb, m, fm, simpson(h, a, fa, b, fb, m, fm),
                  eps, 40);
}

}  // namespace

double l1_distance(const StepFunction& f,
                   const std::function<double(double)>& form) {
  const auto& vals = f.values();
  auto n = static_cast<double>(vals.size());
  double total = 0;
  for (std::size_t k = 0; k < vals.size(); ++k) {
    double lo = static_cast<double>(k) / n;
    double hi = static_cast<double>(k + 1) / n;
    double c = vals[k];
    auto h = [&](double x) { return std::abs(c - form(x)); };
    total += integrate(h, lo, hi, 1e-8 / n * (1.0 + std::abs(c)));
  }
  return total;
}

double limit_d1(double x) {
  double s = std::sin(M_PI * x / 2);
  return 4.0 * s * s;
}

double dos_d1(double x) { return 1.0 / (M_PI * std::sqrt(x * (4.0 - x))); }

double ids_d1(double x) {
  if (x <= 0) return 0;
  if (x >= 4) return 1;
  return (2.0 / M_PI) * std::asin(std::sqrt(x) / 2.0);
}

}  // namespace bary
