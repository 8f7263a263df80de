#include "steklov/shape_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace steklov::shape_io {

using nlohmann::json;

ShapeDocument parse_shape(const std::string& text)
{
    ShapeDocument doc;
    try {
        const json j = json::parse(text);
        doc.n = j.at("n").get<int>();
        doc.omega = j.at("omega").get<double>();
        for (const auto& c : j.at("coefficients")) {
            if (!c.is_array() || c.size() != 3)
                throw ShapeFormatError("coefficient entries must be [degree, index, value]");
            doc.coefficients.push_back({c[0].get<int>(), c[1].get<int>(), c[2].get<double>()});
        }
    } catch (const json::exception& e) {
        throw ShapeFormatError(std::string("malformed shape document: ") + e.what());
    }
    if (doc.n != 2 && doc.n != 3)
        throw ShapeFormatError("shape dimension must be 2 or 3");
    if (!(doc.omega > 0.0))
        throw ShapeFormatError("shape omega must be positive");
    for (const auto& c : doc.coefficients) {
        try {
            sphere::flat_index(doc.n, {c.degree, c.index});
        } catch (const std::out_of_range& e) {
            throw ShapeFormatError(std::string("bad harmonic index: ") + e.what());
        }
    }
    return doc;
}

std::string format_shape(const ShapeDocument& doc)
{
    json j;
    j["n"] = doc.n;
    j["omega"] = doc.omega;
    j["coefficients"] = json::array();
    for (const auto& c : doc.coefficients)
        j["coefficients"].push_back({c.degree, c.index, c.value});
    return j.dump(2);
}

ShapeDocument document_of(const shape::StarShape& shape)
{
    if (!shape.band_limited())
        throw ShapeFormatError("shape is not band-limited; its coefficients do not describe it");
    ShapeDocument doc;
    doc.n = shape.dimension();
    doc.omega = shape.omega();
    const auto& coeffs = shape.coefficients();
    for (std::size_t i = 0; i < coeffs.coefficients.size(); ++i) {
        if (coeffs.coefficients[i] == 0.0)
            continue;
        const auto h = sphere::harmonic_at(doc.n, i);
        doc.coefficients.push_back({h.degree, h.index, coeffs.coefficients[i]});
    }
    return doc;
}

shape::StarShape build_shape(const ShapeDocument& doc, sphere::GridPtr grid)
{
    if (grid->dimension() != doc.n)
        throw ShapeFormatError("shape dimension does not match grid");
    int degree = 1;
    for (const auto& c : doc.coefficients)
        degree = std::max(degree, c.degree);
    if (degree > grid->max_degree())
        throw ShapeFormatError("shape degree " + std::to_string(degree)
                               + " exceeds grid limit " + std::to_string(grid->max_degree()));
    sphere::HarmonicExpansion coeffs(doc.n, degree);
    for (const auto& c : doc.coefficients)
        coeffs.at({c.degree, c.index}) += c.value;
    return shape::from_coefficients(std::move(grid), doc.omega, std::move(coeffs));
}

ShapeDocument read_shape_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ShapeFormatError("cannot open shape file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_shape(ss.str());
}

void write_shape_file(const std::string& path, const ShapeDocument& doc)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write shape file " + path);
    out << format_shape(doc) << '\n';
}

} // namespace steklov::shape_io
