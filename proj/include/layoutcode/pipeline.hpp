#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "layoutcode/generation.hpp"
#include "layoutcode/layout.hpp"
#include "layoutcode/taskgen.hpp"

namespace layoutcode {

struct PipelineConfig {
  std::string domain_name;
  std::string train_jsonl;
  std::string val_jsonl;  // optional pre-split validation corpus

  // Vocabulary; empty labels means "derive from the training corpus".
  std::vector<std::string> vocab_labels;
  std::vector<std::string> underlay_labels;

  std::string output_dir = "out";

  int quantizer_k = 128;
  std::uint64_t quantizer_seed = 0;

  SplitSpec split;
  SampleOptions tasks;
  TaskTemplates templates;

  GenConfig gen;
  int completions_per_prompt = 1;
  std::uint64_t baseline_seed = 0;
  double baseline_pseudocount = 1.0;

  double render_opacity = 0.65;
  double render_stroke_width = 1.0;
  bool render_labels = false;

  // Derived paths under output_dir.
  std::string quantizer_path() const;
  std::string corpus_path() const;
  std::string conditions_path() const;
  std::string reference_path() const;
  std::string records_path() const;
  std::string svg_dir() const;
  std::string report_path() const;
};

// Loads the JSON config file. String values may interpolate environment
// variables with ${VAR}. Unknown keys are ignored.
PipelineConfig load_config(const std::string& path);

// Overrides every stage seed (quantizer, split, tasks, baseline) at once.
void apply_seed_override(PipelineConfig& cfg, std::uint64_t seed);

// One inference condition: a prompt plus what is needed to parse its answer.
struct ConditionRecord {
  std::string source_id;
  TaskKind task = TaskKind::CToSP;
  std::string prompt;
  double canvas_w = 0.0;
  double canvas_h = 0.0;
};

// One generation outcome as persisted to JSONL:
// {"source_id","task","raw","status","repairs","clipped"}.
struct GenerationRecord {
  std::string source_id;
  std::string task;
  std::string raw;
  std::string status;
  std::vector<std::string> repairs;
  int clipped = 0;
};

std::vector<GenerationRecord> read_generation_records(const std::string& path);

// Vocabulary from config labels, or derived from a corpus (sorted unique
// categories) when the config gives none.
CategoryVocab resolve_vocab(const PipelineConfig& cfg,
                            const std::vector<Layout>& corpus);

// Subcommand bodies. Each returns a process exit code; structural failures
// (unreadable files, broken schemas) throw Error instead.
int cmd_fit_quantizer(const PipelineConfig& cfg);
int cmd_build_corpus(const PipelineConfig& cfg);
int cmd_generate(const PipelineConfig& cfg, const std::string& backend);
int cmd_render(const PipelineConfig& cfg);
int cmd_evaluate(const PipelineConfig& cfg);

}  // namespace layoutcode
