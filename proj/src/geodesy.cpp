#include "povgraph/geodesy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace povgraph {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kDegToRad = kPi / 180.0;

double normalize_lon_diff(double l) {
  while (l > kPi) l -= 2.0 * kPi;
  while (l < -kPi) l += 2.0 * kPi;
  return l;
}

struct VincentyOutcome {
  double km = 0.0;
  bool converged = false;
};

// Vincenty inverse formula. Returns converged=false for nearly antipodal
// pairs where the lambda iteration diverges.
VincentyOutcome vincenty(double lat1_deg, double lon1_deg,
                         double lat2_deg, double lon2_deg) {
  const double a = kWgs84SemiMajorKm;
  const double b = kWgs84SemiMinorKm;
  const double f = kWgs84Flattening;

  const double phi1 = lat1_deg * kDegToRad;
  const double phi2 = lat2_deg * kDegToRad;
  const double big_l = normalize_lon_diff((lon2_deg - lon1_deg) * kDegToRad);

  const double u1 = std::atan((1.0 - f) * std::tan(phi1));
  const double u2 = std::atan((1.0 - f) * std::tan(phi2));
  const double sin_u1 = std::sin(u1), cos_u1 = std::cos(u1);
  const double sin_u2 = std::sin(u2), cos_u2 = std::cos(u2);

  double lambda = big_l;
  double sin_sigma = 0.0, cos_sigma = 0.0, sigma = 0.0;
  double cos2_alpha = 0.0, cos_2sigma_m = 0.0;
  bool converged = false;

  for (int iter = 0; iter < 200; ++iter) {
    const double sin_lambda = std::sin(lambda);
    const double cos_lambda = std::cos(lambda);
    const double t1 = cos_u2 * sin_lambda;
    const double t2 = cos_u1 * sin_u2 - sin_u1 * cos_u2 * cos_lambda;
    sin_sigma = std::sqrt(t1 * t1 + t2 * t2);
    if (sin_sigma == 0.0) return {0.0, true};  // coincident points
    cos_sigma = sin_u1 * sin_u2 + cos_u1 * cos_u2 * cos_lambda;
    sigma = std::atan2(sin_sigma, cos_sigma);
    const double sin_alpha = cos_u1 * cos_u2 * sin_lambda / sin_sigma;
    cos2_alpha = 1.0 - sin_alpha * sin_alpha;
    // both points on the equator: cos2_alpha == 0
    cos_2sigma_m = cos2_alpha != 0.0
                       ? cos_sigma - 2.0 * sin_u1 * sin_u2 / cos2_alpha
                       : 0.0;
    const double c = f / 16.0 * cos2_alpha * (4.0 + f * (4.0 - 3.0 * cos2_alpha));
    const double lambda_prev = lambda;
    lambda = big_l +
             (1.0 - c) * f * sin_alpha *
                 (sigma + c * sin_sigma *
                              (cos_2sigma_m +
                               c * cos_sigma * (-1.0 + 2.0 * cos_2sigma_m * cos_2sigma_m)));
    if (std::abs(lambda - lambda_prev) < 1e-13) {
      converged = true;
      break;
    }
  }
  if (!converged) return {0.0, false};

  const double u_sq = cos2_alpha * (a * a - b * b) / (b * b);
  const double big_a =
      1.0 + u_sq / 16384.0 * (4096.0 + u_sq * (-768.0 + u_sq * (320.0 - 175.0 * u_sq)));
  const double big_b =
      u_sq / 1024.0 * (256.0 + u_sq * (-128.0 + u_sq * (74.0 - 47.0 * u_sq)));
  const double delta_sigma =
      big_b * sin_sigma *
      (cos_2sigma_m +
       big_b / 4.0 *
           (cos_sigma * (-1.0 + 2.0 * cos_2sigma_m * cos_2sigma_m) -
            big_b / 6.0 * cos_2sigma_m * (-3.0 + 4.0 * sin_sigma * sin_sigma) *
                (-3.0 + 4.0 * cos_2sigma_m * cos_2sigma_m)));
  return {b * big_a * (sigma - delta_sigma), true};
}

double vincenty_or_inf(double lat1, double lon1, double lat2, double lon2) {
  const VincentyOutcome o = vincenty(lat1, lon1, lat2, lon2);
  return o.converged ? o.km : std::numeric_limits<double>::infinity();
}

// Shortest path through a waypoint on the meridian at lon_c. Every path
// between the nearly antipodal endpoints crosses that meridian circle, so
// minimizing the two-leg sum over the crossing latitude recovers the
// geodesic length. Both legs span ~90 degrees of longitude and are far from
// antipodal, so Vincenty converges on them.
double min_through_meridian(double lat1, double lon1, double lat2, double lon2,
                            double lon_c) {
  auto through = [&](double t_deg) {
    return vincenty_or_inf(lat1, lon1, t_deg, lon_c) +
           vincenty_or_inf(t_deg, lon_c, lat2, lon2);
  };
  // coarse scan, then golden-section refinement around the best cell
  double best_t = 0.0, best_v = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= 90; ++k) {
    const double t = -90.0 + 2.0 * k;
    const double v = through(t);
    if (v < best_v) {
      best_v = v;
      best_t = t;
    }
  }
  double lo = std::max(-90.0, best_t - 2.0);
  double hi = std::min(90.0, best_t + 2.0);
  const double gr = 0.6180339887498949;
  double x1 = hi - gr * (hi - lo);
  double x2 = lo + gr * (hi - lo);
  double f1 = through(x1), f2 = through(x2);
  for (int it = 0; it < 60 && hi - lo > 1e-10; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = through(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = through(x2);
    }
  }
  return std::min({best_v, f1, f2});
}

double antipodal_fallback(double lat1, double lon1, double lat2, double lon2) {
  const double east = min_through_meridian(lat1, lon1, lat2, lon2, lon1 + 90.0);
  const double west = min_through_meridian(lat1, lon1, lat2, lon2, lon1 - 90.0);
  return std::min(east, west);
}

}  // namespace

GeodesicResult geodesic_inverse(double lat1_deg, double lon1_deg,
                                double lat2_deg, double lon2_deg) {
  if (lat1_deg == lat2_deg && lon1_deg == lon2_deg) return {0.0, false};
  // canonical argument order makes the result exactly symmetric
  if (lat2_deg < lat1_deg || (lat2_deg == lat1_deg && lon2_deg < lon1_deg)) {
    std::swap(lat1_deg, lat2_deg);
    std::swap(lon1_deg, lon2_deg);
  }
  const VincentyOutcome o = vincenty(lat1_deg, lon1_deg, lat2_deg, lon2_deg);
  if (o.converged) return {o.km, false};
  return {antipodal_fallback(lat1_deg, lon1_deg, lat2_deg, lon2_deg), true};
}

double geodesic_km(double lat1_deg, double lon1_deg,
                   double lat2_deg, double lon2_deg) {
  return geodesic_inverse(lat1_deg, lon1_deg, lat2_deg, lon2_deg).km;
}

double haversine_km(double lat1_deg, double lon1_deg,
                    double lat2_deg, double lon2_deg) {
  const double phi1 = lat1_deg * kDegToRad;
  const double phi2 = lat2_deg * kDegToRad;
  const double dphi = (lat2_deg - lat1_deg) * kDegToRad;
  const double dlam = (lon2_deg - lon1_deg) * kDegToRad;
  const double s1 = std::sin(dphi / 2.0);
  const double s2 = std::sin(dlam / 2.0);
  const double h = s1 * s1 + std::cos(phi1) * std::cos(phi2) * s2 * s2;
  return 2.0 * kMeanEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(h)));
}

}  // namespace povgraph
