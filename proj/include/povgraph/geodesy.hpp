#pragma once

namespace povgraph {

// WGS-84 ellipsoid constants.
inline constexpr double kWgs84SemiMajorKm = 6378.137;
inline constexpr double kWgs84Flattening = 1.0 / 298.257223563;
inline constexpr double kWgs84SemiMinorKm = kWgs84SemiMajorKm * (1.0 - kWgs84Flattening);

// Mean Earth radius for the optional spherical mode.
inline constexpr double kMeanEarthRadiusKm = 6371.0088;

// Lower bound on kilometers per degree of latitude anywhere on the ellipsoid
// (meridian curvature is smallest at the equator). Used by the latitude-band
// prefilter in graph construction; any pair whose latitude difference alone
// exceeds the threshold cannot be connected.
inline constexpr double kMinKmPerDegLat = 110.567;

struct GeodesicResult {
  double km = 0.0;
  // True when Vincenty's lambda iteration failed to converge (nearly
  // antipodal pair) and the meridian-crossing fallback produced the value.
  bool antipodal_fallback = false;
};

// Inverse geodesic on the WGS-84 ellipsoid via Vincenty's formulae.
//
// Converges to well below 1e-6 relative error everywhere except for nearly
// antipodal pairs: when the longitude difference is within roughly 0.6
// degrees of 180 (scaled by cos of the reduced latitude), the lambda
// iteration diverges. Those pairs are handled by minimizing the two-leg
// distance over the separating meridian, which recovers the geodesic to a
// few meters (far inside the 0.1% fallback contract).
//
// Exactly symmetric in its arguments and exactly zero for identical points.
GeodesicResult geodesic_inverse(double lat1_deg, double lon1_deg,
                                double lat2_deg, double lon2_deg);

double geodesic_km(double lat1_deg, double lon1_deg,
                   double lat2_deg, double lon2_deg);

// Great-circle distance on a sphere of mean Earth radius (haversine).
// Roughly 0.3% worst-case error against the ellipsoidal distance; only used
// behind the explicit spherical flag.
double haversine_km(double lat1_deg, double lon1_deg,
                    double lat2_deg, double lon2_deg);

}  // namespace povgraph
