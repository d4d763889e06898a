#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "layoutcode/codec.hpp"
#include "layoutcode/layout.hpp"

namespace layoutcode {

// Intersection-over-union of two axis-aligned boxes, in [0,1].
double iou(const Element& a, const Element& b);

// Mean IoU under the optimal per-category assignment between g's and r's
// elements. Returns nullopt when the category multisets differ. Invariant
// under any permutation of either layout's element order.
std::optional<double> layout_pair_miou(const Layout& g, const Layout& r);

// Pairs generated[i] with reference[i]; incomparable pairs score 0. Throws
// on length mismatch.
double collection_miou(const std::vector<Layout>& generated,
                       const std::vector<Layout>& reference);

// Mean over elements of the distance from each element's closest anchor
// (left/center/right/top/middle/bottom, canvas-normalized) to the matching
// anchor of its nearest neighbor, scaled by 100. Zero for perfectly aligned
// layouts and for single-element layouts.
double alignment_score(const Layout& layout);

// 100 * mean over non-underlay elements i of sum_j area(i∩j)/area(i).
// Underlay categories are excluded entirely; zero when no element qualifies.
double overlap_score(const Layout& layout, const CategoryVocab& vocab);

// Frechet distance between Gaussian fits of the two feature collections:
// |mu_a-mu_b|^2 + tr(Sa + Sb - 2(Sa^1/2 Sb Sa^1/2)^1/2), unbiased
// covariances regularized with 1e-6*I, matrix roots via symmetric
// eigendecomposition with negative eigenvalues clamped to zero.
// Requires equal dimensions and at least two vectors per side.
double fid(const std::vector<std::vector<double>>& features_a,
           const std::vector<std::vector<double>>& features_b);

// Deterministic layout embedding: per category, 8-bin histograms of the
// canvas-normalized x/y/w/h values, then element count and per-field
// mean/variance, truncated or zero-padded to `dimension`.
struct FeatureEmbedder {
  CategoryVocab vocab;
  int dimension = 0;

  static int natural_dimension(const CategoryVocab& vocab);
  static FeatureEmbedder for_vocab(const CategoryVocab& vocab);
  static FeatureEmbedder for_vocab(const CategoryVocab& vocab, int dimension);

  std::vector<double> embed(const Layout& layout) const;
};

struct EvalCounts {
  int generated = 0;
  int failed = 0;
  int compared = 0;
};

struct EvalReport {
  std::optional<double> miou;
  std::optional<double> fid;
  std::optional<double> align;
  std::optional<double> overlap;
  double fail_rate = 0.0;
  EvalCounts counts;
};

std::string eval_report_to_json(const EvalReport& report);

// One generation outcome, ready for scoring.
struct GenerationResult {
  std::string source_id;
  ParseOutcome outcome;
};

// Scores generation results against references matched by source_id:
// fail_rate = failed/generated; mIoU over (survivor, reference) pairs;
// alignment and overlap averaged over survivors; FID between survivor
// features and the features of all references. Metrics that cannot be
// computed (no survivors, fewer than two feature vectors) come back absent.
// Throws when a record's source_id has no reference.
EvalReport evaluate(const std::vector<GenerationResult>& records,
                    const std::vector<Layout>& reference,
                    const FeatureEmbedder& embedder,
                    const CategoryVocab& vocab);

// Feature vectors as JSONL: {"source_id": "...", "v": [d floats]}.
void write_features_jsonl(
    const std::string& path,
    const std::vector<std::pair<std::string, std::vector<double>>>& features);
std::vector<std::pair<std::string, std::vector<double>>> read_features_jsonl(
    const std::string& path);

}  // namespace layoutcode
