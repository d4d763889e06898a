#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "layoutcode/layout.hpp"

namespace layoutcode {

struct FieldBins {
  Field field = Field::X;
  std::vector<double> centroids;  // strictly increasing, all finite
};

// Fitted 1-D centroid sets for the four numeric fields. Immutable after fit.
struct Quantizer {
  int k = 0;
  std::uint64_t seed = 0;
  std::array<FieldBins, 4> bins;     // indexed by Field
  std::array<double, 4> fit_sse{};   // within-cluster SSE per field at fit time

  const FieldBins& field_bins(Field f) const {
    return bins[static_cast<int>(f)];
  }
};

// 1-D k-means over a value multiset: k-means++ seeding from the given seed,
// Lloyd iteration to an assignment fixpoint (cap 300), empty clusters
// repaired by splitting the largest-SSE cluster. Runs a fixed number of
// seeded restarts and keeps the lowest-SSE result; fully deterministic for
// identical (values, k, seed). If the multiset has fewer than k distinct
// values, returns one centroid per distinct value. Centroids come back
// sorted ascending.
std::vector<double> kmeans_1d(std::vector<double> values, int k,
                              std::uint64_t seed);

// Within-cluster SSE of values under nearest-centroid assignment.
double sse_for_centroids(const std::vector<double>& values,
                         const std::vector<double>& centroids);

// Fits one centroid set per field from every element of every layout.
Quantizer fit_quantizer(const std::vector<Layout>& layouts, int k,
                        std::uint64_t seed);

// Nearest centroid for the field, rounded to one decimal place
// (half away from zero). Equidistant ties resolve to the smaller centroid.
double encode_value(const Quantizer& q, Field field, double v);

std::size_t nearest_centroid_index(const std::vector<double>& centroids,
                                   double v);

// Copy of the layout with every x/y/w/h replaced by its encoded value.
Layout quantize_layout(const Quantizer& q, const Layout& layout);

// {"k": int, "seed": int, "fields": {"x": {"centroids": [...]}, ...}}
// Centroids persist at full precision; rounding happens only at encode time.
std::string quantizer_to_json(const Quantizer& q);
Quantizer quantizer_from_json(std::string_view text);
void save_quantizer(const std::string& path, const Quantizer& q);
Quantizer load_quantizer(const std::string& path);

}  // namespace layoutcode
