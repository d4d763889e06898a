#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "layoutcode/layout.hpp"

namespace layoutcode {

// Visual style for SVG output. Colors come from a fixed palette assigned by
// category index in the vocabulary, so identical inputs always render to
// identical bytes.
struct RenderStyle {
  std::vector<std::pair<std::string, std::string>> fill_colors;
  double opacity = 0.65;
  double stroke_width = 1.0;
  bool label_text = false;

  static RenderStyle for_vocab(const CategoryVocab& vocab,
                               double opacity = 0.65,
                               double stroke_width = 1.0,
                               bool label_text = false);

  std::string_view color_for(std::string_view category) const;
};

// Renders the layout as an SVG 1.1 document: white background, one rect per
// element in element order (later elements paint on top). Elements are
// re-clipped to the canvas defensively. Deterministic, byte-identical output
// for identical inputs.
std::string render_svg(const Layout& layout, const RenderStyle& style);

}  // namespace layoutcode
