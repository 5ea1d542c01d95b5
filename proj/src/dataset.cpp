#include "povgraph/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "povgraph/geodesy.hpp"
#include "povgraph/rng.hpp"

namespace povgraph {

const char* label_name(Label l) {
  switch (l) {
    case Label::Poor: return "poor";
    case Label::NonPoor: return "non_poor";
    case Label::Unknown: return "unknown";
  }
  return "unknown";
}

Label parse_label(const std::string& s) {
  if (s == "poor") return Label::Poor;
  if (s == "non_poor") return Label::NonPoor;
  if (s == "unknown") return Label::Unknown;
  throw std::invalid_argument("unknown label value '" + s + "'");
}

int Dataset::labeled_count() const {
  int c = 0;
  for (const auto& r : records)
    if (r.label != Label::Unknown) ++c;
  return c;
}

int Dataset::count(Label l) const {
  int c = 0;
  for (const auto& r : records)
    if (r.label == l) ++c;
  return c;
}

std::vector<int> Dataset::class_labels() const {
  std::vector<int> out(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    switch (records[i].label) {
      case Label::NonPoor: out[i] = 0; break;
      case Label::Poor: out[i] = 1; break;
      case Label::Unknown: out[i] = -1; break;
    }
  }
  return out;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(trim(cur));
  return out;
}

double parse_double(const std::string& s, int line_no, const char* what) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing junk");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": bad " +
                                what + " value '" + s + "'");
  }
}

long long parse_count(const std::string& s, int line_no, const char* what) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing junk");
    if (v < 0) throw std::invalid_argument("negative");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": bad " +
                                what + " value '" + s + "'");
  }
}

void validate_record(const VillageRecord& r, int line_no) {
  if (!(r.lat >= -90.0 && r.lat <= 90.0))
    throw std::invalid_argument("line " + std::to_string(line_no) +
                                ": latitude out of range: " + std::to_string(r.lat));
  if (!(r.lon >= -180.0 && r.lon <= 180.0))
    throw std::invalid_argument("line " + std::to_string(line_no) +
                                ": longitude out of range: " + std::to_string(r.lon));
  if (r.population && r.poor_population && *r.poor_population > *r.population)
    throw std::invalid_argument("line " + std::to_string(line_no) +
                                ": poor_population exceeds population");
}

std::string format_coord(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

}  // namespace

Dataset parse_csv(const std::string& text, const std::string& name) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;

  if (!std::getline(in, line)) throw std::invalid_argument("empty file");
  ++line_no;
  const std::vector<std::string> header = split_fields(line);
  const std::vector<std::string> base = {"id", "lat", "lon", "label"};
  const std::vector<std::string> full = {"id",  "lat",        "lon",
                                         "label", "population", "poor_population"};
  bool with_population;
  if (header == base) {
    with_population = false;
  } else if (header == full) {
    with_population = true;
  } else {
    throw std::invalid_argument(
        "bad header: expected id,lat,lon,label[,population,poor_population]");
  }

  Dataset ds;
  ds.name = name;
  std::unordered_set<std::string> seen_ids;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const std::vector<std::string> f = split_fields(line);
    const std::size_t expected = with_population ? 6 : 4;
    if (f.size() != expected)
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected " +
                                  std::to_string(expected) + " fields, got " +
                                  std::to_string(f.size()));
    VillageRecord r;
    r.id = f[0];
    if (r.id.empty())
      throw std::invalid_argument("line " + std::to_string(line_no) + ": empty id");
    if (!seen_ids.insert(r.id).second)
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": duplicate id '" + r.id + "'");
    r.lat = parse_double(f[1], line_no, "lat");
    r.lon = parse_double(f[2], line_no, "lon");
    try {
      r.label = parse_label(f[3]);
    } catch (const std::exception& e) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (with_population) {
      if (!f[4].empty()) r.population = parse_count(f[4], line_no, "population");
      if (!f[5].empty()) r.poor_population = parse_count(f[5], line_no, "poor_population");
    }
    validate_record(r, line_no);
    ds.records.push_back(std::move(r));
  }
  if (ds.records.empty()) throw std::invalid_argument("empty dataset");
  return ds;
}

Dataset load_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open dataset file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string name = path;
  const std::size_t slash = name.find_last_of('/');
  if (slash != std::string::npos) name = name.substr(slash + 1);
  const std::size_t dot = name.find_last_of('.');
  if (dot != std::string::npos) name = name.substr(0, dot);
  return parse_csv(buf.str(), name);
}

std::string to_csv(const Dataset& ds) {
  bool with_population = false;
  for (const auto& r : ds.records)
    if (r.population || r.poor_population) with_population = true;

  std::ostringstream out;
  out << (with_population ? "id,lat,lon,label,population,poor_population\n"
                          : "id,lat,lon,label\n");
  for (const auto& r : ds.records) {
    out << r.id << ',' << format_coord(r.lat) << ',' << format_coord(r.lon) << ','
        << label_name(r.label);
    if (with_population) {
      out << ',';
      if (r.population) out << *r.population;
      out << ',';
      if (r.poor_population) out << *r.poor_population;
    }
    out << '\n';
  }
  return out.str();
}

void write_csv(const Dataset& ds, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write dataset file: " + path);
  out << to_csv(ds);
}

Dataset generate_synthetic(const SyntheticParams& p) {
  return generate_synthetic_detailed(p).dataset;
}

SyntheticDetail generate_synthetic_detailed(const SyntheticParams& p) {
  if (p.n < 1 || p.n_clusters < 1 || p.n < p.n_clusters)
    throw std::invalid_argument("generate_synthetic: need n >= n_clusters >= 1");
  if (!(p.poor_fraction > 0.0 && p.poor_fraction < 1.0))
    throw std::invalid_argument("generate_synthetic: poor_fraction must be in (0,1)");
  if (!(p.homophily_strength >= 0.0 && p.homophily_strength <= 1.0))
    throw std::invalid_argument("generate_synthetic: homophily_strength must be in [0,1]");

  Rng rng(mix_seed(p.seed, 0xda7a5e7ULL));

  // Region: square box sized for a rural survey-like density of roughly
  // 0.04 villages per km^2, so poor villages scattered between clusters stay
  // genuinely remote regardless of n.
  const double center_lat = 30.0, center_lon = 109.3;
  const double side_km = std::sqrt(p.n / 0.04);
  const double km_per_deg_lat = 110.574;
  const double km_per_deg_lon = 111.320 * std::cos(center_lat * 3.14159265358979323846 / 180.0);

  // Cluster centers with a minimum separation so clusters stay distinct.
  struct Cluster {
    double lat, lon;
    double weight;
    double sigma_km;
    double poor_rate;
    bool poor_type;
  };
  std::vector<Cluster> clusters(p.n_clusters);
  const double min_sep_km = 0.5 * side_km / std::sqrt(static_cast<double>(p.n_clusters));
  for (int c = 0; c < p.n_clusters; ++c) {
    double lat = 0.0, lon = 0.0;
    for (int attempt = 0; attempt < 1000; ++attempt) {
      lat = center_lat + (rng.uniform() - 0.5) * side_km / km_per_deg_lat;
      lon = center_lon + (rng.uniform() - 0.5) * side_km / km_per_deg_lon;
      bool ok = true;
      for (int q = 0; q < c; ++q) {
        if (geodesic_km(lat, lon, clusters[q].lat, clusters[q].lon) < min_sep_km) {
          ok = false;
          break;
        }
      }
      if (ok) break;
    }
    clusters[c].lat = lat;
    clusters[c].lon = lon;
    clusters[c].weight = 0.5 + rng.uniform();  // relative size
  }

  // Mark clusters poor-leaning until their weight share reaches the target
  // fraction. Poor-leaning clusters get fewer villages spread over a wider
  // area, which is what depresses their graph centrality.
  std::vector<int> order(p.n_clusters);
  for (int c = 0; c < p.n_clusters; ++c) order[c] = c;
  rng.shuffle(order);
  double total_w = 0.0;
  for (const auto& c : clusters) total_w += c.weight;
  double poor_w = 0.0;
  for (int c : order) {
    clusters[c].poor_type = poor_w / total_w < p.poor_fraction;
    if (clusters[c].poor_type) poor_w += clusters[c].weight;
  }
  double resampled_total = 0.0;
  for (auto& c : clusters) {
    if (c.poor_type) c.weight *= 0.5;
    resampled_total += c.weight;
  }
  for (auto& c : clusters) {
    // scatter grows with expected cluster size, keeping the local density
    // (and hence graph degree) roughly size-independent; poor-leaning
    // clusters are spread 3x wider, which thins their neighborhoods
    const double expected_members = p.n * c.weight / resampled_total;
    c.sigma_km = 0.60 * std::sqrt(std::max(expected_members, 4.0));
    if (c.poor_type) c.sigma_km *= 3.0;
    c.poor_rate = p.homophily_strength * (c.poor_type ? 1.0 : 0.0) +
                  (1.0 - p.homophily_strength) * p.poor_fraction;
  }

  // Cumulative weights for cluster assignment.
  std::vector<double> cum(p.n_clusters);
  double acc = 0.0;
  for (int c = 0; c < p.n_clusters; ++c) {
    acc += clusters[c].weight / resampled_total;
    cum[c] = acc;
  }
  cum.back() = 1.0;

  SyntheticDetail out;
  Dataset& ds = out.dataset;
  {
    std::ostringstream name;
    name << "synthetic-n" << p.n << "-k" << p.n_clusters << "-seed" << p.seed;
    ds.name = name.str();
  }
  ds.records.reserve(p.n);
  out.cluster_of.reserve(p.n);
  for (int i = 0; i < p.n; ++i) {
    const double u = rng.uniform();
    int c = static_cast<int>(std::lower_bound(cum.begin(), cum.end(), u) - cum.begin());
    if (c >= p.n_clusters) c = p.n_clusters - 1;
    const Cluster& cl = clusters[c];
    VillageRecord r;
    r.id = "v" + std::to_string(i);
    double lat, lon;
    do {
      lat = cl.lat + rng.normal() * cl.sigma_km / km_per_deg_lat;
      lon = cl.lon + rng.normal() * cl.sigma_km / km_per_deg_lon;
    } while (lat < -90.0 || lat > 90.0 || lon < -180.0 || lon > 180.0);
    r.lat = lat;
    r.lon = lon;
    r.label = rng.uniform() < cl.poor_rate ? Label::Poor : Label::NonPoor;
    ds.records.push_back(std::move(r));
    out.cluster_of.push_back(c);
  }
  return out;
}

}  // namespace povgraph
