#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "layoutcode/layout.hpp"

namespace layoutcode {

// Placeholder written into masked attribute values. A printable sentinel
// works with any endpoint and survives tokenization boundaries.
inline constexpr std::string_view kMaskToken = "<M>";

struct CodeTemplate {
  std::string domain_name;     // substituted for {Domain}
  std::string task_condition;  // substituted for {Task Condition}
};

struct MaskedCode {
  std::string instruction;  // prompt line; empty until build_prompt runs
  std::string body;         // HTML with zero or more mask placeholders
  int mask_count = 0;
};

enum class ParseStatus { Ok, Repaired, Failed };

const char* to_string(ParseStatus s);
ParseStatus parse_status_from_string(std::string_view s);

struct ParseOutcome {
  ParseStatus status = ParseStatus::Failed;
  Layout layout;                      // meaningful unless status == Failed
  std::vector<std::string> repairs;   // what was dropped or ignored, and why
  int clipped = 0;                    // elements clipped to the canvas
};

// Which of one element's numeric fields to mask.
struct FieldMask {
  bool x = false;
  bool y = false;
  bool w = false;
  bool h = false;

  bool has(Field f) const;
  void set(Field f, bool on);
  int count() const { return int(x) + int(y) + int(w) + int(h); }
};

// --- tolerant rect scanning (shared by mask_fields, parse_completion and
// the baseline sampler) ---

struct AttrSpan {
  std::string name;
  std::string value;
  std::size_t value_begin = 0;  // [begin,end) span of the raw value bytes
  std::size_t value_end = 0;
};

struct RectFragment {
  std::size_t begin = 0;  // [begin,end) span of the fragment in the input
  std::size_t end = 0;
  bool terminated = false;  // saw a closing '>'
  std::vector<AttrSpan> attrs;

  const AttrSpan* find(std::string_view name) const;
};

// Scans arbitrary bytes for <rect ...> fragments. Attribute order-insensitive;
// single/double/no quotes accepted; unknown attributes kept verbatim. Never
// throws.
std::vector<RectFragment> scan_rect_fragments(std::string_view code);

// Exactly one decimal place, period separator, half rounded away from zero.
std::string format_one_decimal(double v);

// Emits the HTML code for a quantized layout:
//   <html><body><svg width="{W}" height="{H}">
//   <rect data-category="{c}" x="{x}" y="{y}" width="{w}" height="{h}">
//   ...
//   </svg></body></html>
// One element per line, LF newlines, attribute values quoted, all numbers
// with exactly one decimal place. Throws on a category missing from vocab.
std::string serialize(const Layout& layout, const CategoryVocab& vocab);

// Replaces the selected attribute values with the mask token; every other
// byte is left unchanged. fields_to_mask[i] applies to the i-th rect; the
// vector may be shorter than the element count but not longer.
MaskedCode mask_fields(const std::string& code,
                       const std::vector<FieldMask>& fields_to_mask);

std::string instruction_line(const CodeTemplate& tmpl);

// Instruction line + '\n' + masked body.
std::string build_prompt(const CodeTemplate& tmpl, const MaskedCode& masked);

// Parses arbitrary completion text back into a layout. Malformed fragments
// (missing/non-numeric values, unresolved masks, unknown categories,
// non-positive sizes) are dropped and logged; elements exceeding the canvas
// are clipped to it and dropped when the intersection is degenerate.
// status == Failed iff no element survives; Ok iff nothing was repaired or
// clipped. Total over arbitrary bytes; never throws.
ParseOutcome parse_completion(std::string_view text, double canvas_w,
                              double canvas_h, const CategoryVocab& vocab);

}  // namespace layoutcode
