#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace layoutcode {

// The four numeric fields of an element.
enum class Field : int { X = 0, Y = 1, W = 2, H = 3 };

inline constexpr std::array<Field, 4> kAllFields{Field::X, Field::Y, Field::W,
                                                 Field::H};

const char* field_name(Field f);

// One rectangular element. (x, y) is the box center in absolute canvas
// units; w and h are the full width and height.
struct Element {
  std::string category;
  double x = 0.0;
  double y = 0.0;
  double w = 0.0;
  double h = 0.0;

  double field(Field f) const;
  void set_field(Field f, double v);

  bool operator==(const Element&) const = default;
};

struct Layout {
  std::string source_id;
  double canvas_w = 0.0;
  double canvas_h = 0.0;
  std::vector<Element> elements;

  bool operator==(const Layout&) const = default;
};

// Category vocabulary for one dataset/domain. Label order is meaningful: it
// fixes palette colors and the feature layout.
struct CategoryVocab {
  std::string domain_name;
  std::vector<std::string> labels;
  std::vector<std::string> underlay_labels;  // excluded from overlap penalties

  bool contains(std::string_view label) const;
  bool is_underlay(std::string_view label) const;
  int index_of(std::string_view label) const;  // -1 if absent
};

// Corner-form axis-aligned box. All center-to-corner conversion goes through
// to_box so the convention lives in exactly one place.
struct Box {
  double x0 = 0.0;
  double y0 = 0.0;
  double x1 = 0.0;
  double y1 = 0.0;

  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
  double area() const;
};

Box to_box(const Element& e);
Element element_from_box(std::string category, const Box& b);

// Returns one human-readable description per violated invariant; empty means
// the layout is valid. Never throws, even on NaN/Inf fields.
std::vector<std::string> validate_layout(const Layout& layout);

// Canonical JSON, one layout per document:
//   {"source_id": "...", "canvas_w": W, "canvas_h": H,
//    "elements": [{"category": "...", "x":., "y":., "w":., "h":.}, ...]}
// write_canonical emits fixed key order with no insignificant whitespace, so
// output is byte-stable and write(read(write(L))) == write(L).
Layout read_canonical(std::string_view bytes);
std::string write_canonical(const Layout& layout);

// JSON Lines collections: one canonical layout document per line.
std::vector<Layout> read_layouts_jsonl(const std::string& path);
void write_layouts_jsonl(const std::string& path,
                         const std::vector<Layout>& layouts);

}  // namespace layoutcode
