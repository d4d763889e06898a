#include "layoutcode/layout.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "layoutcode/error.hpp"

namespace layoutcode {

using json = nlohmann::ordered_json;

const char* field_name(Field f) {
  switch (f) {
    case Field::X: return "x";
    case Field::Y: return "y";
    case Field::W: return "w";
    case Field::H: return "h";
  }
  return "?";
}

double Element::field(Field f) const {
  switch (f) {
    case Field::X: return x;
    case Field::Y: return y;
    case Field::W: return w;
    case Field::H: return h;
  }
  return 0.0;
}

void Element::set_field(Field f, double v) {
  switch (f) {
    case Field::X: x = v; return;
    case Field::Y: y = v; return;
    case Field::W: w = v; return;
    case Field::H: h = v; return;
  }
}

bool CategoryVocab::contains(std::string_view label) const {
  return index_of(label) >= 0;
}

bool CategoryVocab::is_underlay(std::string_view label) const {
  return std::find(underlay_labels.begin(), underlay_labels.end(), label) !=
         underlay_labels.end();
}

int CategoryVocab::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return static_cast<int>(i);
  }
  return -1;
}

double Box::area() const {
  const double w = width();
  const double h = height();
  return (w > 0.0 && h > 0.0) ? w * h : 0.0;
}

Box to_box(const Element& e) {
  return Box{e.x - e.w / 2.0, e.y - e.h / 2.0, e.x + e.w / 2.0,
             e.y + e.h / 2.0};
}

Element element_from_box(std::string category, const Box& b) {
  Element e;
  e.category = std::move(category);
  e.x = (b.x0 + b.x1) / 2.0;
  e.y = (b.y0 + b.y1) / 2.0;
  e.w = b.x1 - b.x0;
  e.h = b.y1 - b.y0;
  return e;
}

namespace {

void check_finite(std::vector<std::string>& out, std::size_t idx,
                  const char* field, double v) {
  if (!std::isfinite(v)) {
    out.push_back("element " + std::to_string(idx) + ": " + field +
                  " is not finite");
  }
}

}  // namespace

std::vector<std::string> validate_layout(const Layout& layout) {
  std::vector<std::string> out;
  if (!std::isfinite(layout.canvas_w)) {
    out.push_back("canvas_w is not finite");
  } else if (layout.canvas_w <= 0.0) {
    out.push_back("canvas_w must be > 0");
  }
  if (!std::isfinite(layout.canvas_h)) {
    out.push_back("canvas_h is not finite");
  } else if (layout.canvas_h <= 0.0) {
    out.push_back("canvas_h must be > 0");
  }
  for (std::size_t i = 0; i < layout.elements.size(); ++i) {
    const Element& e = layout.elements[i];
    if (e.category.empty()) {
      out.push_back("element " + std::to_string(i) +
                    ": category must be non-empty");
    }
    check_finite(out, i, "x", e.x);
    check_finite(out, i, "y", e.y);
    if (std::isfinite(e.w) && e.w <= 0.0) {
      out.push_back("element " + std::to_string(i) + ": w must be > 0");
    }
    check_finite(out, i, "w", e.w);
    if (std::isfinite(e.h) && e.h <= 0.0) {
      out.push_back("element " + std::to_string(i) + ": h must be > 0");
    }
    check_finite(out, i, "h", e.h);
  }
  return out;
}

namespace {

double require_number(const json& obj, const std::string& key,
                      const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw Error(path + key + ": missing required field");
  }
  if (!it->is_number()) {
    throw Error(path + key + ": expected a number");
  }
  return it->get<double>();
}

}  // namespace

Layout read_canonical(std::string_view bytes) {
  json doc;
  try {
    doc = json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error("layout JSON parse error at byte " + std::to_string(e.byte) +
                ": " + e.what());
  }
  if (!doc.is_object()) {
    throw Error("layout document: expected a JSON object");
  }

  Layout layout;
  if (auto it = doc.find("source_id"); it != doc.end()) {
    if (!it->is_string()) throw Error("source_id: expected a string");
    layout.source_id = it->get<std::string>();
  }
  layout.canvas_w = require_number(doc, "canvas_w", "");
  layout.canvas_h = require_number(doc, "canvas_h", "");

  auto elems = doc.find("elements");
  if (elems == doc.end() || !elems->is_array()) {
    throw Error("elements: missing or not an array");
  }
  layout.elements.reserve(elems->size());
  for (std::size_t i = 0; i < elems->size(); ++i) {
    const json& ej = (*elems)[i];
    const std::string path = "elements[" + std::to_string(i) + "].";
    if (!ej.is_object()) {
      throw Error("elements[" + std::to_string(i) + "]: expected an object");
    }
    Element e;
    auto cat = ej.find("category");
    if (cat == ej.end() || !cat->is_string()) {
      throw Error(path + "category: missing or not a string");
    }
    e.category = cat->get<std::string>();
    e.x = require_number(ej, "x", path);
    e.y = require_number(ej, "y", path);
    e.w = require_number(ej, "w", path);
    e.h = require_number(ej, "h", path);
    layout.elements.push_back(std::move(e));
  }
  return layout;
}

std::string write_canonical(const Layout& layout) {
  json doc;
  doc["source_id"] = layout.source_id;
  doc["canvas_w"] = layout.canvas_w;
  doc["canvas_h"] = layout.canvas_h;
  json elems = json::array();
  for (const Element& e : layout.elements) {
    json ej;
    ej["category"] = e.category;
    ej["x"] = e.x;
    ej["y"] = e.y;
    ej["w"] = e.w;
    ej["h"] = e.h;
    elems.push_back(std::move(ej));
  }
  doc["elements"] = std::move(elems);
  return doc.dump();
}

std::vector<Layout> read_layouts_jsonl(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::vector<Layout> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      out.push_back(read_canonical(line));
    } catch (const Error& e) {
      throw Error(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

void write_layouts_jsonl(const std::string& path,
                         const std::vector<Layout>& layouts) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path);
  for (const Layout& l : layouts) {
    out << write_canonical(l) << '\n';
  }
  if (!out) throw Error("write failed for " + path);
}

}  // namespace layoutcode
