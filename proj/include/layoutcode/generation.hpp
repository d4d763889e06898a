#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "layoutcode/codec.hpp"
#include "layoutcode/layout.hpp"
#include "layoutcode/quantizer.hpp"

namespace layoutcode {

struct GenConfig {
  double top_p = 0.9;
  double temperature = 0.6;
  int max_new_tokens = 512;
  std::string endpoint_url;  // empty = not configured
  std::string model_name;
  std::string api_key_env = "OPENAI_API_KEY";
  double timeout_s = 30.0;
  int max_concurrency = 4;
  int retries = 2;
};

enum class CompletionErrorKind { None, Config, Permanent, Transport };

struct CompletionResult {
  bool ok = false;
  std::string text;
  CompletionErrorKind error_kind = CompletionErrorKind::None;
  std::string error;
  int http_status = 0;
  int attempts = 0;
};

// Chat-completions client for any endpoint speaking the common JSON shape:
// request {"model","messages":[{"role":"user","content"}],"temperature",
// "top_p","max_tokens"}, response = first choice's message content. The API
// key is read from the environment variable named in the config. Safe for
// concurrent use; an internal semaphore keeps at most max_concurrency
// requests in flight. Transient failures (transport errors, 5xx) retry with
// exponential backoff up to cfg.retries; 4xx is permanent. Never throws for
// per-request failures.
class LlmClient {
 public:
  explicit LlmClient(GenConfig cfg);
  ~LlmClient();

  LlmClient(const LlmClient&) = delete;
  LlmClient& operator=(const LlmClient&) = delete;

  CompletionResult complete(const std::string& prompt);

  const GenConfig& config() const { return cfg_; }

 private:
  GenConfig cfg_;
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Offline stand-in for a tuned model: per (category, field) empirical
// distributions over the quantizer's bins, Laplace-smoothed. Exists so the
// full pipeline and the metric suite run deterministically with no network.
struct BaselineModel {
  // One-decimal bin values per field, aligned with probs.
  std::array<std::vector<double>, 4> bin_values;
  std::map<std::string, std::array<std::vector<double>, 4>> category_probs;
  double pseudo_count = 1.0;
};

BaselineModel fit_baseline(const std::vector<Layout>& train_layouts,
                           const Quantizer& q, const CategoryVocab& vocab,
                           double pseudo_count = 1.0);

struct BaselineCompletion {
  std::string text;
  std::vector<std::string> notes;  // e.g. unknown-category fallbacks
};

// Fills every mask placeholder in the body with a value sampled from the
// matching (category, field) distribution. Categories absent from the model
// fall back to a uniform draw over the bins (noted). Deterministic per seed;
// the output always parses.
BaselineCompletion complete_baseline(const MaskedCode& masked,
                                     const BaselineModel& model,
                                     std::uint64_t seed);

}  // namespace layoutcode
