#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "poncelet/families.hpp"

namespace poncelet {

enum class Basis { trilinear, barycentric };

// First homogeneous coordinate as a function of (s1, s2, s3); the others follow cyclically.
using WeightFn = std::function<double(double, double, double)>;
using Construction = std::function<Point(const Triangle&)>;

struct CenterDefinition {
    int id = 0;
    std::string name;
    Basis basis = Basis::barycentric;
    WeightFn weight;          // empty when the center is a construction
    Construction construct;   // used when weight is empty
};

struct ExcentralTriangle {
    Point P1p;
    Point P2p;
    Point P3p;
};

// Throws DegenerateTriangle below area_tol * diameter^2.
void require_nondegenerate(const Triangle& T, double area_tol = 1e-14);

Point center(const Triangle& T, const CenterDefinition& def);
std::array<double, 3> weights(const Triangle& T, const CenterDefinition& def);

ExcentralTriangle excenters(const Triangle& T);
Point incenter(const Triangle& T);
Point centroid(const Triangle& T);
Point circumcenter(const Triangle& T);
Conic circumcircle(const Triangle& T);
Point bevan_point(const Triangle& T);
Point excentral_centroid(const Triangle& T);

const std::vector<CenterDefinition>& builtin_centers();
const CenterDefinition* find_center(int id);

// Tracked point: a Kimberling center, an excenter, or a vertex.
struct TrackedPoint {
    enum class Kind { Center, Excenter, Vertex };
    Kind kind = Kind::Center;
    int index = 1;  // Kimberling id, or 1..3

    std::string label() const;
};

// Accepts "X40", "P1'" / "E1" (excenters), "P2" (vertices).
std::optional<TrackedPoint> parse_tracked(std::string_view text);
Point evaluate(const Triangle& T, const TrackedPoint& tracked);

}  // namespace poncelet
