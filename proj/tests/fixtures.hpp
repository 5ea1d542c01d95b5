#pragma once

// Shared dataset fixtures for the unit and acceptance suites.

#include <cmath>
#include <string>

#include "povgraph/dataset.hpp"
#include "povgraph/rng.hpp"

namespace fixtures {

// Isolated pairs of opposite-type clusters: within ~1.5 km neighbors mostly
// share the label, the twin cluster ~3 km away is always the opposite type,
// and no edges reach other pairs. Label agreement therefore decays to zero
// over roughly 2 km, which is what makes moderate distance decay pay off.
inline povgraph::Dataset twin_pairs_dataset(std::uint64_t seed, int pairs = 40) {
  povgraph::Rng rng(seed);
  povgraph::Dataset ds;
  ds.name = "twin-pairs";
  const double lat0 = 30.0, lon0 = 109.3;
  const double kmlat = 110.861;
  const double kmlon = 111.320 * std::cos(30.0 * 3.14159265358979324 / 180.0);
  const int per_side = static_cast<int>(std::ceil(std::sqrt(pairs)));
  int id = 0;
  for (int p = 0; p < pairs; ++p) {
    const int gx = p % per_side, gy = p / per_side;
    const double cx = gx * 14.0 + rng.uniform(-1, 1);
    const double cy = gy * 14.0 + rng.uniform(-1, 1);
    const double ang = rng.uniform(0, 2 * 3.14159265358979324);
    const double dx = 3.0 * std::cos(ang), dy = 3.0 * std::sin(ang);
    for (int side = 0; side < 2; ++side) {
      const bool poor = side == 0;
      const int members = poor ? 6 : 9;
      const double sig = poor ? 1.2 : 0.9;
      const double bx = cx + (side == 0 ? dx : 0.0);
      const double by = cy + (side == 0 ? dy : 0.0);
      for (int m = 0; m < members; ++m) {
        povgraph::VillageRecord r;
        r.id = "v" + std::to_string(id++);
        r.lat = lat0 + (by + rng.normal() * sig) / kmlat;
        r.lon = lon0 + (bx + rng.normal() * sig) / kmlon;
        r.label = rng.uniform() < (poor ? 0.95 : 0.05) ? povgraph::Label::Poor
                                                       : povgraph::Label::NonPoor;
        ds.records.push_back(r);
      }
    }
  }
  return ds;
}

// Two single-label clusters far apart, villages within ~1 km of their
// center. Used for exact homophily-curve expectations.
inline povgraph::Dataset two_far_clusters(int members_each = 8) {
  povgraph::Rng rng(3);
  povgraph::Dataset ds;
  ds.name = "two-far-clusters";
  int id = 0;
  for (int c = 0; c < 2; ++c) {
    const double lat0 = 30.0 + c * 0.5;  // ~55 km apart
    const double lon0 = 109.0;
    for (int m = 0; m < members_each; ++m) {
      povgraph::VillageRecord r;
      r.id = "v" + std::to_string(id++);
      r.lat = lat0 + rng.uniform(-0.005, 0.005);
      r.lon = lon0 + rng.uniform(-0.005, 0.005);
      r.label = c == 0 ? povgraph::Label::Poor : povgraph::Label::NonPoor;
      ds.records.push_back(r);
    }
  }
  return ds;
}

}  // namespace fixtures
