#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace povgraph {

enum class Label { Poor, NonPoor, Unknown };

const char* label_name(Label l);
Label parse_label(const std::string& s);  // "poor" / "non_poor" / "unknown"

struct VillageRecord {
  std::string id;
  double lat = 0.0;  // degrees, [-90, 90]
  double lon = 0.0;  // degrees, [-180, 180]
  Label label = Label::Unknown;
  std::optional<long long> population;
  std::optional<long long> poor_population;

  bool operator==(const VillageRecord&) const = default;
};

// Ordered village table. The position of a record is the node index used by
// every downstream module.
struct Dataset {
  std::string name;
  std::vector<VillageRecord> records;

  int size() const { return static_cast<int>(records.size()); }
  int labeled_count() const;
  int count(Label l) const;

  // 0 = NonPoor, 1 = Poor, -1 = Unknown, one entry per node
  std::vector<int> class_labels() const;

  bool operator==(const Dataset&) const = default;
};

// CSV schema: header `id,lat,lon,label[,population,poor_population]`,
// UTF-8, comma-delimited, `.` decimal point, labels in
// {poor, non_poor, unknown}. Row order defines node indices.
Dataset load_csv(const std::string& path);
Dataset parse_csv(const std::string& text, const std::string& name);
void write_csv(const Dataset& ds, const std::string& path);
std::string to_csv(const Dataset& ds);

struct SyntheticParams {
  int n = 1000;
  int n_clusters = 10;
  double poor_fraction = 0.27;
  double homophily_strength = 0.8;  // 0 = labels independent of geometry, 1 = single-label clusters
  std::uint64_t seed = 1;
};

// Villages scattered around cluster centers. Poor-leaning clusters are
// sparser and smaller, so poor villages end up with lower graph centrality,
// and labels agree more for nearby villages than for distant ones, with the
// agreement decaying over a few kilometers. Pure function of its arguments.
Dataset generate_synthetic(const SyntheticParams& p);

struct SyntheticDetail {
  Dataset dataset;
  std::vector<int> cluster_of;  // cluster index per village
};

SyntheticDetail generate_synthetic_detailed(const SyntheticParams& p);

}  // namespace povgraph
