#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "layoutcode/codec.hpp"
#include "layoutcode/layout.hpp"
#include "layoutcode/quantizer.hpp"

namespace layoutcode {

// The three conditional generation tasks.
enum class TaskKind {
  CToSP,       // categories given; predict sizes and positions
  CSToP,       // categories and sizes given; predict positions
  Completion,  // random subset of numeric fields masked
};

const char* task_id(TaskKind t);  // "c_to_sp" / "cs_to_p" / "completion"
std::optional<TaskKind> task_from_id(std::string_view id);

struct TaskSample {
  TaskKind task = TaskKind::CToSP;
  int permutation_index = 0;
  std::string prompt;  // instruction + masked code
  std::string target;  // instruction + full code
  std::string source_id;
  int mask_count = 0;

  bool operator==(const TaskSample&) const = default;
};

struct SplitSpec {
  double train_fraction = 0.95;
  int max_elements = 25;
  std::uint64_t seed = 0;
};

struct SplitResult {
  std::vector<Layout> train;
  std::vector<Layout> validation;
};

// Drops empty and oversized layouts, shuffles deterministically by seed, and
// assigns the first ceil(train_fraction * M) to train.
SplitResult filter_and_split(const std::vector<Layout>& layouts,
                             const SplitSpec& spec);

// Per-task instruction wording. Only the completion condition is fixed;
// the other two are configurable defaults.
struct TaskTemplates {
  std::string domain_name;
  std::string condition_c_to_sp = "categories";
  std::string condition_cs_to_p = "categories and sizes";
  std::string condition_completion = "remaining values";

  const std::string& condition_for(TaskKind t) const;
  CodeTemplate template_for(TaskKind t) const;
};

struct SampleOptions {
  int k_permutations = 10;  // permutations per layout; index 0 is identity
  std::vector<TaskKind> tasks = {TaskKind::CToSP, TaskKind::CSToP,
                                 TaskKind::Completion};
  std::uint64_t seed = 0;
  // When false, the completion mask is drawn once per layout and follows the
  // elements through every permutation instead of being resampled per sample.
  bool resample_completion_mask = true;
};

// Completion mask at a fixed ratio: each of the 4N numeric fields is masked
// independently with probability ratio. Categories are never masked.
std::vector<FieldMask> completion_mask_plan(std::size_t element_count,
                                            double ratio,
                                            std::mt19937_64& rng);

// Task-specific mask plan; the Completion ratio is drawn uniform in [0, 0.8].
std::vector<FieldMask> mask_plan(TaskKind task, const Layout& layout,
                                 std::mt19937_64& rng);

// Quantizes the layout, draws k_permutations element orders (index 0 the
// identity), and emits one sample per (order, task). Output and all
// randomness are fully determined by (options.seed, layout.source_id).
std::vector<TaskSample> build_samples(const Layout& layout, const Quantizer& q,
                                      const CategoryVocab& vocab,
                                      const TaskTemplates& templates,
                                      const SampleOptions& options);

// JSONL, one {"source_id","task","perm","prompt","target"} object per line.
std::size_t export_corpus(const std::vector<TaskSample>& samples,
                          const std::string& path);
std::vector<TaskSample> read_corpus(const std::string& path);

}  // namespace layoutcode
