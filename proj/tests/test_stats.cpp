#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "povgraph/stats.hpp"

using namespace povgraph;

namespace {
bool close_rel(double a, double b, double tol = 1e-9) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}
}  // namespace

TEST_CASE("group stats use the sample standard deviation") {
  const std::vector<double> v = {1, 2, 3, 4};
  const GroupStats s = group_stats(v);
  CHECK(s.count == 4);
  CHECK(close_rel(s.mean, 2.5));
  CHECK(close_rel(s.std_dev, std::sqrt(5.0 / 3.0)));
}

// Reference values from scipy.stats.ttest_ind(equal_var=False), SciPy 1.15.
TEST_CASE("welch t-test against reference values") {
  {
    const std::vector<double> a = {0, 0, 0, 1}, b = {10, 10, 10, 11};
    const TTestResult r = welch_t_test(a, b);
    CHECK(close_rel(r.t, -28.2842712475, 1e-8));
    CHECK(close_rel(r.df, 6.0, 1e-8));
    CHECK(close_rel(r.p, 1.2927505966e-07, 1e-6));
    CHECK(r.p < 0.001);
  }
  {
    const std::vector<double> a = {1.2, 3.4, 2.2, 5.1, 4.4}, b = {2.0, 2.5, 1.9, 2.2};
    const TTestResult r = welch_t_test(a, b);
    CHECK(close_rel(r.t, 1.53766752461, 1e-8));
    CHECK(close_rel(r.df, 4.27594405865, 1e-8));
    CHECK(close_rel(r.p, 0.194408211975, 1e-8));
  }
  {
    const std::vector<double> a = {10.0, 12.0, 9.5, 11.1, 10.4, 12.2};
    const std::vector<double> b = {10.1, 11.9, 9.7, 11.0, 10.6, 12.0};
    const TTestResult r = welch_t_test(a, b);
    CHECK(close_rel(r.t, -0.0283866477902, 1e-8));
    CHECK(close_rel(r.p, 0.977924883047, 1e-8));
  }
}

TEST_CASE("identical groups give t = 0, p = 1") {
  const std::vector<double> a = {1, 2, 3, 4};
  const TTestResult r = welch_t_test(a, a);
  CHECK(r.t == 0.0);
  CHECK(r.p == 1.0);
}

TEST_CASE("degenerate inputs are rejected") {
  const std::vector<double> one = {1.0};
  const std::vector<double> flat = {2.0, 2.0, 2.0};
  const std::vector<double> ok = {1.0, 2.0, 3.0};
  CHECK_THROWS_AS(welch_t_test(one, ok), std::invalid_argument);
  CHECK_THROWS_AS(welch_t_test(flat, flat), std::invalid_argument);
  CHECK_NOTHROW(welch_t_test(flat, ok));  // one nonzero variance is enough
}

// scipy.stats.t.sf spot values
TEST_CASE("student-t two-sided p-values") {
  CHECK(close_rel(student_t_two_sided_p(1.0, 5.0), 0.363217467649, 1e-9));
  CHECK(close_rel(student_t_two_sided_p(2.5, 10.0), 0.0314468442366, 1e-9));
  CHECK(close_rel(student_t_two_sided_p(0.3, 3.0), 0.78376329204, 1e-9));
  CHECK(close_rel(student_t_two_sided_p(-2.5, 10.0), 0.0314468442366, 1e-9));
}
