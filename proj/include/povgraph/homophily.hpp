#pragma once

#include <vector>

#include "povgraph/dataset.hpp"

namespace povgraph {

// One row of the distance-homophily curve. Neighbor counts are averaged over
// all labeled center villages (not per label group), so the four averages sum
// to the mean labeled-neighborhood size at that radius. Percentages are
// aggregate ratios, NaN when the corresponding neighborhood is empty.
struct HomophilyPoint {
  double radius_km = 0.0;
  double poor_neighbors_of_poor = 0.0;
  double nonpoor_neighbors_of_poor = 0.0;
  double poor_neighbors_of_nonpoor = 0.0;
  double nonpoor_neighbors_of_nonpoor = 0.0;
  double poor_pct_around_poor = 0.0;
  double poor_pct_around_nonpoor = 0.0;
};

// Counts labeled neighbors strictly within each radius, per center label.
// Radii must be strictly increasing and positive. Unknown-label villages are
// ignored both as centers and as neighbors.
std::vector<HomophilyPoint> homophily_curve(const Dataset& ds,
                                            const std::vector<double>& radii_km,
                                            bool spherical = false);

}  // namespace povgraph
