#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "poncelet/centers.hpp"
#include "poncelet/families.hpp"

namespace poncelet {

struct LocusSample {
    double t = 0.0;
    Point p;
    bool valid = false;
};

struct Locus {
    FamilyConfig family;
    TrackedPoint tracked;
    std::vector<LocusSample> samples;

    std::vector<Point> valid_points() const;
    std::size_t valid_count() const;
};

inline constexpr int kMinLocusSamples = 32;

// n uniform parameters in [0, 2pi) with no sample minimum; for export only.
Locus sample_locus(const FamilyConfig& cfg, const TrackedPoint& tracked, int n);
// n uniform parameters in [0, 2pi); throws InsufficientSamples below 32 valid samples.
Locus trace_locus(const FamilyConfig& cfg, const TrackedPoint& tracked, int n = 512);

struct LocusTolerances {
    double point_tol = 1e-8;
    double conic_tol = 1e-7;
    double curve_tol = 1e-13;
    int max_degree = 8;
    double circle_tol = 1e-8;
};

enum class Verdict { Point, Circle, Ellipse, AlgebraicDegree, NonConic };

const char* to_string(Verdict v);

struct Normalization {
    Point center;
    double scale = 1.0;  // RMS radius about center
};

Normalization normalization_of(const std::vector<Point>& pts);

struct CurveFit {
    int degree = 0;
    std::vector<std::pair<int, int>> monomials;  // (i, j) for x^i y^j, normalized frame
    std::vector<double> coeffs;                  // unit norm
    double residual = 0.0;
    Verdict verdict = Verdict::NonConic;
    bool ambiguous = false;  // null space wider than one direction
    Normalization frame;
    std::optional<Conic> conic;             // original frame, degree 2 only
    std::map<int, double> residual_by_degree;
    double spread = 0.0;
};

// Least-squares implicit fit; samples are normalized internally.
CurveFit fit_curve(const std::vector<Point>& pts, int degree);

// Verdict ladder: point, conic, smallest adequate degree, non-conic.
CurveFit classify_points(const std::vector<Point>& pts, double scale, const LocusTolerances& tol = {});
CurveFit classify_locus(const Locus& L, const LocusTolerances& tol = {});

double stationarity_spread(const Locus& L);
double stationarity_spread(const std::vector<Point>& pts, double scale);

// Sparse bivariate polynomial.
class Poly2 {
public:
    void add(int i, int j, double c);
    double evaluate(Point p) const;
    // sum |c_ij| |x|^i |y|^j at p
    double magnitude(Point p) const;
    double weighted_norm(double s) const;  // sum |c_ij| s^(i+j)
    int degree() const;
    const std::map<std::pair<int, int>, double>& terms() const { return terms_; }

    friend Poly2 operator+(const Poly2& p, const Poly2& q);
    friend Poly2 operator*(const Poly2& p, const Poly2& q);
    friend Poly2 operator*(double k, const Poly2& p);

private:
    std::map<std::pair<int, int>, double> terms_;
};

// Printed degree-6 polynomial for the bic-II barycenter locus.
Poly2 x2_sextic_printed(const BicentricParams& p);
// Same curve obtained by eliminating the barycenter parametrization.
Poly2 x2_sextic_eliminated(const BicentricParams& p);
// Closed-form barycenter of the bic-II triangle at t.
Point x2_parametrization(const BicentricParams& p, double t);

// max |f(p)| / sum |c_ij| S^(i+j), S the largest sample radius
double sextic_residual(const Poly2& f, const std::vector<Point>& pts);
double verify_implicit_sextic_x2(const BicentricParams& p, const Locus& L);

struct ConvexityResult {
    bool convex = false;
    double min_turn = 0.0;       // smallest signed turn sine, oriented
    double total_turning = 0.0;  // radians
    int sign_runs = 0;
    double hull_gap = 0.0;       // largest sample distance inside the hull, relative
};

ConvexityResult convexity_report(const std::vector<Point>& closed_curve, double zero_tol = 1e-12);
bool convexity_check(const std::vector<Point>& closed_curve, double zero_tol = 1e-12);

// Coefficients of the convexity quintic, highest power first.
std::vector<double> convexity_quintic(double a, double b);
std::vector<double> real_polynomial_roots(const std::vector<double>& coeffs_high_first);
double polynomial_residual(const std::vector<double>& coeffs_high_first, double x);

struct ConvexityRoot {
    double lambda_o = 0.0;
    double bound = 0.0;
    std::vector<double> real_roots;
    double residual = 0.0;
};

// Largest non-negative real root below the conf-I critical lambda.
ConvexityRoot convexity_lambda_root(double a, double b);
// Largest non-negative real root below an explicit bound; nullopt when none qualifies.
std::optional<double> largest_root_below(const std::vector<double>& roots, double bound);

}  // namespace poncelet
