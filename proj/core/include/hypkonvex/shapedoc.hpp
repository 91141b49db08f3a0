#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>

#include "hypkonvex/even_fn.hpp"
#include "hypkonvex/shapes.hpp"

namespace hypkonvex::shapedoc {

/// Raw samples of an even function on their own grid.
struct Samples {
  std::size_t grid = 0;
  std::vector<double> values;
};

using ShapeDoc = std::variant<Ellipse, Segment, Polygon, Samples>;

/// Parses a ShapeDoc JSON document:
///   {"type":"ellipse","matrix":[[a,b],[c,d]]}     (determinant 1 within 1e-9)
///   {"type":"segment","endpoint":[x,y]}
///   {"type":"polygon","vertices":[[x1,y1],...]}   (centrally symmetric, convex, ccw)
///   {"type":"samples","grid":M,"values":[...]}
/// Throws ParseError for malformed JSON and for documents describing invalid shapes.
ShapeDoc parse(std::string_view text);

/// Reads and parses a file. Throws ParseError when it cannot be read.
ShapeDoc load(const std::string& path);

/// Serialises a document; doubles are written in shortest round-trip form.
std::string dump(const ShapeDoc& doc);

/// Support function on a grid of size M. Shapes keep their tag; samples on a
/// different grid are resampled by trigonometric interpolation.
EvenFn to_even_fn(const ShapeDoc& doc, std::size_t M);

}  // namespace hypkonvex::shapedoc
