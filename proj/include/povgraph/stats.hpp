#pragma once

#include <span>
#include <vector>

namespace povgraph {

struct GroupStats {
  double mean = 0.0;
  double std_dev = 0.0;  // sample standard deviation (n - 1)
  int count = 0;
};

GroupStats group_stats(std::span<const double> values);

struct TTestResult {
  double t = 0.0;
  double df = 0.0;  // Welch-Satterthwaite degrees of freedom
  double p = 0.0;   // two-sided
};

// Two-sided Welch (unequal-variance) t-test. Requires at least two values
// per group and a nonzero variance in at least one group.
TTestResult welch_t_test(std::span<const double> a, std::span<const double> b);

// Regularized incomplete beta function I_x(a, b), continued-fraction
// evaluation (Lentz).
double regularized_incomplete_beta(double a, double b, double x);

// Two-sided p-value of Student's t with df degrees of freedom.
double student_t_two_sided_p(double t, double df);

}  // namespace povgraph
