#pragma once

// Shape files: {"n": 2, "omega": 3.14159, "coefficients": [[degree, index, value], ...]}
// Indices follow the harmonic numbering in sphere.hpp.

#include "steklov/shape.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace steklov::shape_io {

class ShapeFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Coefficient {
    int degree;
    int index;
    double value;
};

struct ShapeDocument {
    int n = 2;
    double omega = 0.0;
    std::vector<Coefficient> coefficients;
};

ShapeDocument parse_shape(const std::string& text);
std::string format_shape(const ShapeDocument& doc);

ShapeDocument document_of(const shape::StarShape& shape);
shape::StarShape build_shape(const ShapeDocument& doc, sphere::GridPtr grid);

ShapeDocument read_shape_file(const std::string& path);
void write_shape_file(const std::string& path, const ShapeDocument& doc);

} // namespace steklov::shape_io
