#pragma once

#include <functional>
#include <vector>

namespace bary {

/// Monotone step function F(x) = vals[ceil(n x) - 1] on (0,1], with
/// F(0) = vals[0]. Built from sorted eigenvalue or degree lists.
class StepFunction {
 public:
  StepFunction() = default;
  explicit StepFunction(std::vector<double> sorted_values);

  const std::vector<double>& values() const { return vals_; }
  std::size_t steps() const { return vals_.size(); }
  double operator()(double x) const;
  double l1_norm() const;  // mean of the values

 private:
  std::vector<double> vals_;
};

// Exact piecewise integration on the union grid of both step functions.
double l1_distance(const StepFunction& f, const StepFunction& g);

// Adaptive Simpson quadrature of |f - form| per step interval,
// relative error <= 1e-8.
double l1_distance(const StepFunction& f,
                   const std::function<double(double)>& form);

// d = 1 closed forms.
double limit_d1(double x);  // 4 sin^2(pi x / 2)
double dos_d1(double x);    // 1 / (pi sqrt(x (4 - x)))
double ids_d1(double x);    // (2/pi) arcsin(sqrt(x) / 2)

}  // namespace bary
