#include "layoutcode/quantizer.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include <json.hpp>

#include "layoutcode/error.hpp"
#include "layoutcode/rng.hpp"

namespace layoutcode {

namespace {

constexpr int kMaxLloydIterations = 300;
constexpr int kRestarts = 10;

struct Prefix {
  std::vector<double> sum;    // sum[i]   = v[0] + ... + v[i-1]
  std::vector<double> sumsq;  // sumsq[i] = v[0]^2 + ... + v[i-1]^2

  explicit Prefix(const std::vector<double>& v)
      : sum(v.size() + 1, 0.0), sumsq(v.size() + 1, 0.0) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      sum[i + 1] = sum[i] + v[i];
      sumsq[i + 1] = sumsq[i] + v[i] * v[i];
    }
  }

  double mean(std::size_t lo, std::size_t hi) const {  // [lo,hi)
    return (sum[hi] - sum[lo]) / static_cast<double>(hi - lo);
  }

  double sse(std::size_t lo, std::size_t hi) const {  // [lo,hi)
    if (hi <= lo) return 0.0;
    const double s = sum[hi] - sum[lo];
    const double s2 = sumsq[hi] - sumsq[lo];
    const double n = static_cast<double>(hi - lo);
    const double r = s2 - s * s / n;
    return r > 0.0 ? r : 0.0;
  }
};

// Cluster boundaries over sorted values: cluster i owns [split[i], split[i+1]).
// A value equal to the midpoint between two centroids goes left (the smaller
// centroid), matching the encode-time tie rule.
std::vector<std::size_t> assign_boundaries(const std::vector<double>& sorted,
                                           const std::vector<double>& centers) {
  const std::size_t k = centers.size();
  std::vector<std::size_t> split(k + 1, 0);
  split[k] = sorted.size();
  for (std::size_t i = 1; i < k; ++i) {
    const double mid = (centers[i - 1] + centers[i]) / 2.0;
    split[i] = static_cast<std::size_t>(
        std::upper_bound(sorted.begin(), sorted.end(), mid) - sorted.begin());
  }
  for (std::size_t i = 1; i < k; ++i) {
    split[i] = std::max(split[i], split[i - 1]);  // guard against unsorted centers
  }
  return split;
}

struct LloydResult {
  std::vector<double> centroids;
  double sse = std::numeric_limits<double>::infinity();
};

std::vector<double> kmeanspp_init(const std::vector<double>& sorted, int k,
                                  std::mt19937_64& rng) {
  const std::size_t n = sorted.size();
  std::vector<double> centers;
  centers.reserve(static_cast<std::size_t>(k));
  centers.push_back(sorted[rng() % n]);

  std::vector<double> d2(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double d = sorted[i] - centers[0];
    d2[i] = d * d;
  }
  while (centers.size() < static_cast<std::size_t>(k)) {
    double total = 0.0;
    for (double d : d2) total += d;
    std::size_t pick = n;  // sentinel
    if (total > 0.0) {
      const double u = u01(rng) * total;
      double acc = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        acc += d2[i];
        if (acc > u && d2[i] > 0.0) {
          pick = i;
          break;
        }
      }
    }
    if (pick == n) {
      // All mass rounded away; take the point farthest from its center.
      double best = -1.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (d2[i] > best) {
          best = d2[i];
          pick = i;
        }
      }
    }
    const double c = sorted[pick];
    centers.push_back(c);
    for (std::size_t i = 0; i < n; ++i) {
      const double d = sorted[i] - c;
      d2[i] = std::min(d2[i], d * d);
    }
  }
  std::sort(centers.begin(), centers.end());
  return centers;
}

LloydResult lloyd_1d(const std::vector<double>& sorted, const Prefix& pre,
                     std::vector<double> centers) {
  const std::size_t k = centers.size();
  std::vector<std::size_t> split = assign_boundaries(sorted, centers);

  for (int iter = 0; iter < kMaxLloydIterations; ++iter) {
    // Repair empty clusters: hand them the farthest point of the
    // largest-SSE cluster. In sorted order that point is an endpoint.
    for (std::size_t rep = 0; rep < k; ++rep) {
      std::size_t empty = k;
      for (std::size_t i = 0; i < k; ++i) {
        if (split[i] == split[i + 1]) {
          empty = i;
          break;
        }
      }
      if (empty == k) break;
      std::size_t worst = k;
      double worst_sse = -1.0;
      for (std::size_t i = 0; i < k; ++i) {
        const double s = pre.sse(split[i], split[i + 1]);
        if (split[i + 1] - split[i] >= 2 && s > worst_sse) {
          worst_sse = s;
          worst = i;
        }
      }
      if (worst == k) break;  // nothing splittable
      const double mu = pre.mean(split[worst], split[worst + 1]);
      const double lo = sorted[split[worst]];
      const double hi = sorted[split[worst + 1] - 1];
      centers[empty] = (mu - lo >= hi - mu) ? lo : hi;
      centers[worst] = mu;
      std::sort(centers.begin(), centers.end());
      split = assign_boundaries(sorted, centers);
    }

    // Update step.
    std::vector<double> next(k);
    for (std::size_t i = 0; i < k; ++i) {
      next[i] = (split[i] < split[i + 1]) ? pre.mean(split[i], split[i + 1])
                                          : centers[i];
    }
    std::sort(next.begin(), next.end());
    std::vector<std::size_t> next_split = assign_boundaries(sorted, next);
    const bool converged = (next_split == split) && (next == centers);
    centers = std::move(next);
    split = std::move(next_split);
    if (converged) break;
  }

  double sse = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    sse += pre.sse(split[i], split[i + 1]);
  }
  return LloydResult{std::move(centers), sse};
}

}  // namespace

std::vector<double> kmeans_1d(std::vector<double> values, int k,
                              std::uint64_t seed) {
  if (values.empty()) throw Error("kmeans_1d: empty value set");
  if (k < 1) throw Error("kmeans_1d: k must be >= 1");
  for (double v : values) {
    if (!std::isfinite(v)) throw Error("kmeans_1d: non-finite value");
  }
  std::sort(values.begin(), values.end());

  std::vector<double> distinct(values);
  distinct.erase(std::unique(distinct.begin(), distinct.end()),
                 distinct.end());
  if (distinct.size() <= static_cast<std::size_t>(k)) {
    return distinct;  // k effectively reduced
  }

  const Prefix pre(values);
  LloydResult best;
  for (int r = 0; r < kRestarts; ++r) {
    std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(r)));
    LloydResult res = lloyd_1d(values, pre, kmeanspp_init(values, k, rng));
    if (res.sse < best.sse) best = std::move(res);
  }
  return best.centroids;
}

double sse_for_centroids(const std::vector<double>& values,
                         const std::vector<double>& centroids) {
  double total = 0.0;
  for (double v : values) {
    double bd = std::numeric_limits<double>::infinity();
    for (double c : centroids) {
      const double d = (v - c) * (v - c);
      if (d < bd) bd = d;
    }
    total += bd;
  }
  return total;
}

Quantizer fit_quantizer(const std::vector<Layout>& layouts, int k,
                        std::uint64_t seed) {
  if (layouts.empty()) throw Error("fit_quantizer: empty layout collection");
  if (k < 1) throw Error("fit_quantizer: k must be >= 1");

  std::array<std::vector<double>, 4> values;
  for (const Layout& l : layouts) {
    for (const Element& e : l.elements) {
      for (Field f : kAllFields) {
        const double v = e.field(f);
        if (!std::isfinite(v)) {
          throw Error("fit_quantizer: non-finite " +
                      std::string(field_name(f)) + " in layout '" +
                      l.source_id + "'");
        }
        values[static_cast<int>(f)].push_back(v);
      }
    }
  }
  if (values[0].empty()) {
    throw Error("fit_quantizer: no elements in any layout");
  }

  Quantizer q;
  q.k = k;
  q.seed = seed;
  for (Field f : kAllFields) {
    const int fi = static_cast<int>(f);
    auto& vals = values[fi];
    std::vector<double> centroids =
        kmeans_1d(vals, k, mix_seed(seed, field_name(f)));
    q.fit_sse[fi] = sse_for_centroids(vals, centroids);
    q.bins[fi] = FieldBins{f, std::move(centroids)};
  }
  return q;
}

std::size_t nearest_centroid_index(const std::vector<double>& centroids,
                                   double v) {
  auto it = std::lower_bound(centroids.begin(), centroids.end(), v);
  if (it == centroids.begin()) return 0;
  if (it == centroids.end()) return centroids.size() - 1;
  const std::size_t hi = static_cast<std::size_t>(it - centroids.begin());
  const std::size_t lo = hi - 1;
  // Strict comparison keeps equidistant ties on the smaller centroid.
  return (v - centroids[lo] <= centroids[hi] - v) ? lo : hi;
}

namespace {

double round_one_decimal(double v) {
  const double r = std::round(v * 10.0) / 10.0;
  return r == 0.0 ? 0.0 : r;  // normalize -0.0
}

}  // namespace

double encode_value(const Quantizer& q, Field field, double v) {
  if (!std::isfinite(v)) throw Error("encode_value: non-finite input");
  const auto& centroids = q.field_bins(field).centroids;
  if (centroids.empty()) throw Error("encode_value: quantizer not fitted");
  return round_one_decimal(centroids[nearest_centroid_index(centroids, v)]);
}

Layout quantize_layout(const Quantizer& q, const Layout& layout) {
  Layout out = layout;
  for (Element& e : out.elements) {
    for (Field f : kAllFields) {
      e.set_field(f, encode_value(q, f, e.field(f)));
    }
  }
  return out;
}

std::string quantizer_to_json(const Quantizer& q) {
  nlohmann::ordered_json doc;
  doc["k"] = q.k;
  doc["seed"] = q.seed;
  nlohmann::ordered_json fields;
  for (Field f : kAllFields) {
    fields[field_name(f)] = {{"centroids", q.field_bins(f).centroids}};
  }
  doc["fields"] = std::move(fields);
  return doc.dump();
}

Quantizer quantizer_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(std::string("quantizer JSON parse error: ") + e.what());
  }
  Quantizer q;
  try {
    q.k = doc.at("k").get<int>();
    q.seed = doc.at("seed").get<std::uint64_t>();
    for (Field f : kAllFields) {
      auto centroids = doc.at("fields")
                           .at(field_name(f))
                           .at("centroids")
                           .get<std::vector<double>>();
      if (centroids.empty() ||
          !std::is_sorted(centroids.begin(), centroids.end())) {
        throw Error(std::string("quantizer field ") + field_name(f) +
                    ": centroids must be non-empty and sorted");
      }
      q.bins[static_cast<int>(f)] = FieldBins{f, std::move(centroids)};
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("quantizer JSON schema error: ") + e.what());
  }
  return q;
}

void save_quantizer(const std::string& path, const Quantizer& q) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path);
  out << quantizer_to_json(q) << '\n';
  if (!out) throw Error("write failed for " + path);
}

Quantizer load_quantizer(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return quantizer_from_json(ss.str());
}

}  // namespace layoutcode
