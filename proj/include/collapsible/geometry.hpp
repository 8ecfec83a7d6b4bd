#pragma once

#include <collapsible/complex.hpp>
#include <collapsible/iso.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace collapsible {

using Rational = boost::multiprecision::cpp_rational;
using Point3 = std::array<Rational, 3>;
using Point4 = std::array<Rational, 4>;

class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PointConfig {
    std::vector<Point4> points;
};

/// Facets of the convex hull of points in general position in R^4.
/// Throws GeometryError if some 5 points lie on a common hyperplane.
std::vector<Face> brute_force_facets(const PointConfig& config);

/// Integer coordinates drawn uniformly from [lo, hi]^4.
struct BoxSampler {
    std::int64_t lo = -1000;
    std::int64_t hi = 1000;
};

struct Realization {
    PointConfig config;
    /// target vertex -> point index
    Relabeling labels;
    std::uint64_t trial = 0;
};

/// Random point sets until the hull is isomorphic to target (a simplicial
/// 3-sphere on at most 12 vertices 0..n-1). Degenerate samples count as trials.
std::optional<Realization> realize_search(const SimplicialComplex& target, std::uint64_t trials, std::uint64_t seed,
                                          BoxSampler sampler = {});

struct SchlegelProjection {
    Face base;
    Point4 viewpoint;
    /// Affine coordinates in the frame of the base tetrahedron: base vertices
    /// (in increasing order) go to the origin and the three unit vectors.
    std::vector<Point3> coords;
    /// Hull facets other than the base.
    std::vector<Face> tetrahedra;
    /// Orientation of each hull facet relative to the hull interior, same order.
    std::vector<int> facet_signs;
};

/// Throws GeometryError if base is not among facets or no viewpoint is found.
SchlegelProjection schlegel(const PointConfig& config, const std::vector<Face>& facets, Face base);

/// Among the first five facets, the base whose diagram has the largest smallest cell.
Face choose_schlegel_base(const PointConfig& config, const std::vector<Face>& facets);

/// Nondegenerate cells, consistently oriented, volumes adding up to the base.
bool verify_schlegel(const SchlegelProjection& proj);

struct GeometricComplex {
    std::vector<Point3> coords;
    std::vector<Face> triangles;
};

/// Throws GeometryError if some triangle is not a face of the diagram.
GeometricComplex extract_embedding(const SchlegelProjection& proj, const std::vector<Face>& triangles);

struct EmbeddingCheck {
    bool ok = false;
    std::optional<std::pair<Face, Face>> offending;
};

/// Every pair of triangles meets exactly in their common face.
EmbeddingCheck verify_embedding(const GeometricComplex& gc);

std::string export_off(const GeometricComplex& gc, int decimal_digits = 6);

/// Counts from the header of OFF text: vertices, faces, edges.
std::array<std::size_t, 3> off_counts(const std::string& off);

/// One point per line, coordinates as "p/q".
std::string write_coordinates(const std::vector<std::vector<Rational>>& points);
std::vector<std::vector<Rational>> parse_coordinates(const std::string& text);

std::string to_decimal(const Rational& r, int digits);

} // namespace collapsible
