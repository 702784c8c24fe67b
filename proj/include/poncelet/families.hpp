#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "poncelet/geometry.hpp"

namespace poncelet {

enum class FamilyKind { BicI, BicII, BicIII, ConfI, ConfII, ConfIII };

const char* to_string(FamilyKind kind);
std::optional<FamilyKind> parse_family(std::string_view name);
bool is_bicentric(FamilyKind kind);

struct BicentricParams {
    double R = 1.0;
    double r = 0.2;
    double d = 0.3;
    std::optional<double> u;

    void validate() const;
};

struct ConfocalParams {
    double a = 2.0;
    double b = 1.0;
    double lambda = 0.5;
    std::optional<double> pencil_u;

    double c2() const { return a * a - b * b; }
    double delta() const { return std::sqrt(a * a * a * a - a * a * b * b + b * b * b * b); }
    double caustic_a() const { return std::sqrt(a * a - lambda); }
    double caustic_b() const { return std::sqrt(b * b - lambda); }

    void validate() const;
};

enum class Tangent { plus, minus };

struct TangentBranch {
    Tangent first = Tangent::plus;
    Tangent second = Tangent::plus;

    static std::array<TangentBranch, 4> all();
    friend bool operator==(const TangentBranch&, const TangentBranch&) = default;
};

std::string to_string(TangentBranch branch);
std::optional<TangentBranch> parse_branch(std::string_view text);

struct Triangle {
    Point P1;
    Point P2;
    Point P3;
    double t = 0.0;
    bool valid = true;

    // s1 = |P2P3|, s2 = |P3P1|, s3 = |P1P2|
    std::array<double, 3> sides() const;
    double perimeter() const;
    double signed_area() const;
    double diameter() const;
};

struct FamilyConfig {
    FamilyKind kind = FamilyKind::BicII;
    BicentricParams bic;
    ConfocalParams conf;
    TangentBranch branch;
};

// Fills in d for bic-I and lambda for conf-I, then validates.
FamilyConfig resolve(const FamilyConfig& cfg);

Conic outer_conic(const FamilyConfig& cfg);
// Caustics in chain order; the second entry exists for bic-III and conf-III.
std::vector<Conic> caustics(const FamilyConfig& cfg);
double family_scale(const FamilyConfig& cfg);

// Throws VertexInsideCaustic when the construction is not real at t.
Triangle triangle_at(const FamilyConfig& cfg, double t);

double chapple_distance(double R, double r);

struct KerawalaResult {
    bool holds = false;
    double residual = 0.0;
};
KerawalaResult kerawala_holds(double R, double r, double d);

struct AxisPair {
    double a = 0.0;
    double b = 0.0;
};

AxisPair confocal_caustic(double a, double b);
double critical_lambda(double a, double b);
AxisPair n4_caustic(double a, double b);
AxisPair n6_caustic(double a, double b);

Triangle bic2_vertices(const BicentricParams& p, double t);
Conic bic3_caustic2(const BicentricParams& p);
Triangle bic3_vertices(const BicentricParams& p, double t, TangentBranch branch);
// Tangent-chain points P2(u), P3(u) from the closed form: second endpoints of the two tangents from P1 to C_u.
std::pair<Point, Point> bic3_closed_form(const BicentricParams& p, double t);

Triangle conf2_vertices(const ConfocalParams& p, double t, TangentBranch branch);
// Printed closed form with b_c read as b'.
Triangle conf2_vertices_closed_form(const ConfocalParams& p, double t);
Conic conf3_caustic2(const ConfocalParams& p);
Triangle conf3_vertices(const ConfocalParams& p, double t, TangentBranch branch);

struct Bic2Envelope {
    Conic conic;
    Point center;
    double radius = 0.0;     // signed closed form
    double radius_pq = 0.0;  // same radius from p=(R+d)/r, q=(R-d)/r
    double pencil_distance = 0.0;
};
Bic2Envelope bic2_envelope(const BicentricParams& p);

struct Conf2Envelope {
    Conic conic;
    double a = 0.0;
    double b = 0.0;
    double zeta = 0.0;
    double pencil_distance = 0.0;
};
Conf2Envelope conf2_envelope(const ConfocalParams& p);

// Lines P2P3 over n uniform t samples, invalid samples skipped.
std::vector<Line> free_side_lines(const FamilyConfig& cfg, int n);
DualConicFit sample_free_side_envelope(const FamilyConfig& cfg, int n);

}  // namespace poncelet
