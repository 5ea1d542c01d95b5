#include "povgraph/homophily.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "povgraph/geodesy.hpp"

namespace povgraph {

std::vector<HomophilyPoint> homophily_curve(const Dataset& ds,
                                            const std::vector<double>& radii_km,
                                            bool spherical) {
  if (radii_km.empty()) throw std::invalid_argument("homophily_curve: no radii");
  for (std::size_t k = 0; k < radii_km.size(); ++k) {
    if (!(radii_km[k] > 0.0))
      throw std::invalid_argument("homophily_curve: radii must be positive");
    if (k > 0 && !(radii_km[k] > radii_km[k - 1]))
      throw std::invalid_argument("homophily_curve: radii must be strictly increasing");
  }

  std::vector<int> labeled;
  for (int i = 0; i < ds.size(); ++i)
    if (ds.records[i].label != Label::Unknown) labeled.push_back(i);
  const int nl = static_cast<int>(labeled.size());
  if (nl == 0) throw std::invalid_argument("homophily_curve: no labeled villages");

  const double max_r = radii_km.back();
  const double band_deg = max_r / kMinKmPerDegLat;

  // Distances of labeled pairs within the largest radius. Latitude-sorted
  // two-pointer sweep keeps this near-linear for geographically compact data.
  std::vector<int> order = labeled;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return ds.records[a].lat < ds.records[b].lat;
  });
  struct Pair {
    double dist;
    bool poor_a;
    bool poor_b;
  };
  std::vector<Pair> pairs;
  for (int a = 0; a < nl; ++a) {
    const auto& ra = ds.records[order[a]];
    for (int b = a + 1; b < nl; ++b) {
      const auto& rb = ds.records[order[b]];
      if (rb.lat - ra.lat > band_deg) break;
      const double d = spherical ? haversine_km(ra.lat, ra.lon, rb.lat, rb.lon)
                                 : geodesic_km(ra.lat, ra.lon, rb.lat, rb.lon);
      if (d < max_r)
        pairs.push_back({d, ra.label == Label::Poor, rb.label == Label::Poor});
    }
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const Pair& x, const Pair& y) { return x.dist < y.dist; });

  std::vector<HomophilyPoint> curve;
  curve.reserve(radii_km.size());
  // running ordered-pair counts: [center poor][neighbor poor]
  double cnt[2][2] = {{0, 0}, {0, 0}};
  std::size_t cursor = 0;
  for (double r : radii_km) {
    while (cursor < pairs.size() && pairs[cursor].dist < r) {
      const Pair& p = pairs[cursor];
      // each unordered pair contributes one neighbor to each center
      cnt[p.poor_a ? 1 : 0][p.poor_b ? 1 : 0] += 1.0;
      cnt[p.poor_b ? 1 : 0][p.poor_a ? 1 : 0] += 1.0;
      ++cursor;
    }
    HomophilyPoint pt;
    pt.radius_km = r;
    pt.poor_neighbors_of_poor = cnt[1][1] / nl;
    pt.nonpoor_neighbors_of_poor = cnt[1][0] / nl;
    pt.poor_neighbors_of_nonpoor = cnt[0][1] / nl;
    pt.nonpoor_neighbors_of_nonpoor = cnt[0][0] / nl;
    const double poor_center_total = cnt[1][1] + cnt[1][0];
    const double nonpoor_center_total = cnt[0][1] + cnt[0][0];
    pt.poor_pct_around_poor =
        poor_center_total > 0.0 ? cnt[1][1] / poor_center_total
                                : std::numeric_limits<double>::quiet_NaN();
    pt.poor_pct_around_nonpoor =
        nonpoor_center_total > 0.0 ? cnt[0][1] / nonpoor_center_total
                                   : std::numeric_limits<double>::quiet_NaN();
    curve.push_back(pt);
  }
  return curve;
}

}  // namespace povgraph
