#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "poncelet/error.hpp"

namespace poncelet {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend Point operator+(Point p, Point q) { return {p.x + q.x, p.y + q.y}; }
    friend Point operator-(Point p, Point q) { return {p.x - q.x, p.y - q.y}; }
    friend Point operator-(Point p) { return {-p.x, -p.y}; }
    friend Point operator*(double k, Point p) { return {k * p.x, k * p.y}; }
    friend Point operator*(Point p, double k) { return {k * p.x, k * p.y}; }
    friend Point operator/(Point p, double k) { return {p.x / k, p.y / k}; }
    friend bool operator==(Point p, Point q) = default;
};

inline double dot(Point p, Point q) { return p.x * q.x + p.y * q.y; }
inline double cross(Point p, Point q) { return p.x * q.y - p.y * q.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double distance(Point p, Point q) { return norm(p - q); }

// ax + by + c = 0 with a^2 + b^2 = 1
struct Line {
    double a = 1.0;
    double b = 0.0;
    double c = 0.0;

    static Line through(Point p, Point q);
    static Line from_coefficients(double a, double b, double c);

    double signed_distance(Point p) const { return a * p.x + b * p.y + c; }
    Point direction() const { return {-b, a}; }
    Point foot() const { return {-a * c, -b * c}; }
};

std::optional<Point> intersect(const Line& l, const Line& m);

enum class ConicKind { Point, Circle, Ellipse, Parabola, Hyperbola, Degenerate, Empty };

const char* to_string(ConicKind kind);

struct SemiAxes {
    double major = 0.0;
    double minor = 0.0;
};

struct ConicTolerances {
    double circle_tol = 1e-8;      // |A-C|, |B| after scaling |A|+|C| = 1
    double degenerate_tol = 1e-12;  // |det| of the unit-norm matrix
    double boundary_tol = 1e-12;    // |C(P)| relative, for "P on C"
};

struct ConicShape {
    ConicKind kind = ConicKind::Degenerate;
    std::optional<Point> center;
    std::optional<SemiAxes> semi_axes;
    double angle = 0.0;  // direction of the major axis
};

class Conic {
public:
    Conic() = default;
    explicit Conic(const std::array<double, 6>& raw, const ConicTolerances& tol = {});

    static Conic circle(Point center, double radius);
    static Conic ellipse(Point center, double ax, double by);  // axis-parallel, ax along x
    static Conic point(Point p);

    const std::array<double, 6>& coeffs() const { return coeffs_; }
    ConicKind kind() const { return shape_.kind; }
    const ConicShape& shape() const { return shape_; }
    std::optional<Point> center() const { return shape_.center; }
    std::optional<SemiAxes> semi_axes() const { return shape_.semi_axes; }

    double evaluate(Point p) const;
    std::array<double, 9> matrix() const;  // row-major symmetric 3x3

    // characteristic length: major semi-axis for bounded conics, 1 otherwise
    double scale() const;

private:
    std::array<double, 6> coeffs_{1.0, 0.0, 1.0, 0.0, 0.0, 0.0};
    ConicShape shape_;
};

std::array<double, 6> unit_normalize(const std::array<double, 6>& raw);

ConicShape classify_conic(const Conic& c, const ConicTolerances& tol = {});

Conic pencil_member(const Conic& c1, const Conic& c2, double u);

// Distance of the unit 6-vector of c from span{g1, g2}.
double pencil_span_distance(const Conic& c, const Conic& g1, const Conic& g2);

struct TangentPair {
    Line first;
    Line second;
    Point contact_first;
    Point contact_second;
};

// Contacts are ordered counterclockwise about the conic center, starting at the ray center -> P.
TangentPair tangent_lines_from_point(Point p, const Conic& c, const ConicTolerances& tol = {});

Point circle_inverse(Point p, const Conic& circle);

struct CirclePencil {
    Conic c1;
    Conic c2;

    std::optional<Line> radical_axis() const;
};

std::pair<Point, Point> limiting_points(const CirclePencil& pencil);

// Signed squared half-chord of L in C divided by scale^2. Zero iff tangent, positive for secants.
double line_tangent_to_conic_residual(const Line& l, const Conic& c);

// Point on C along p + s*dir other than p itself (p assumed on C).
Point second_intersection(const Conic& c, Point p, Point dir);

struct DualConicFit {
    Conic conic;                  // point-form envelope (Point kind when the envelope collapses)
    std::array<double, 6> dual{};  // l^T D l coefficients on (a^2, ab, b^2, ac, bc, c^2)
    double residual = 0.0;
    bool is_point = false;
    Point point;
};

// Conic tangent to every line in the list, by least squares on line coordinates.
DualConicFit fit_dual_conic(const std::vector<Line>& lines, double rank_tol = 1e-7);

}  // namespace poncelet
