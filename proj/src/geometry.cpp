#include "poncelet/geometry.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <numeric>

namespace poncelet {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::DegeneratePencilMember: return "DegeneratePencilMember";
        case ErrorCode::TangentFromBoundary: return "TangentFromBoundary";
        case ErrorCode::NoRealTangent: return "NoRealTangent";
        case ErrorCode::InversionOfCenter: return "InversionOfCenter";
        case ErrorCode::ComplexLimitingPoints: return "ComplexLimitingPoints";
        case ErrorCode::NoPoristicPair: return "NoPoristicPair";
        case ErrorCode::CircularOuterUnsupported: return "CircularOuterUnsupported";
        case ErrorCode::VertexInsideCaustic: return "VertexInsideCaustic";
        case ErrorCode::ImaginaryPencilCircle: return "ImaginaryPencilCircle";
        case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
        case ErrorCode::InsufficientSamples: return "InsufficientSamples";
        case ErrorCode::NoConvexityRoot: return "NoConvexityRoot";
        case ErrorCode::InvalidParameters: return "InvalidParameters";
        case ErrorCode::UnknownTrackedPoint: return "UnknownTrackedPoint";
    }
    return "Unknown";
}

const char* to_string(ConicKind kind) {
    switch (kind) {
        case ConicKind::Point: return "point";
        case ConicKind::Circle: return "circle";
        case ConicKind::Ellipse: return "ellipse";
        case ConicKind::Parabola: return "parabola";
        case ConicKind::Hyperbola: return "hyperbola";
        case ConicKind::Degenerate: return "degenerate";
        case ConicKind::Empty: return "empty";
    }
    return "unknown";
}

Line Line::from_coefficients(double a, double b, double c) {
    const double n = std::hypot(a, b);
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw GeometryError(ErrorCode::InvalidParameters, "line normal vanishes");
    }
    return {a / n, b / n, c / n};
}

Line Line::through(Point p, Point q) {
    const Point v = q - p;
    return from_coefficients(-v.y, v.x, v.y * p.x - v.x * p.y);
}

std::optional<Point> intersect(const Line& l, const Line& m) {
    const double det = l.a * m.b - l.b * m.a;
    if (std::abs(det) < 1e-15) return std::nullopt;
    return Point{(l.b * m.c - m.b * l.c) / det, (m.a * l.c - l.a * m.c) / det};
}

std::array<double, 6> unit_normalize(const std::array<double, 6>& raw) {
    double n = 0.0;
    for (double v : raw) n += v * v;
    n = std::sqrt(n);
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw GeometryError(ErrorCode::DegeneratePencilMember, "all conic coefficients vanish");
    }
    std::array<double, 6> out{};
    for (int i = 0; i < 6; ++i) out[i] = raw[i] / n;
    for (double v : out) {
        if (std::abs(v) > 1e-14) {
            if (v < 0.0) {
                for (double& w : out) w = -w;
            }
            break;
        }
    }
    return out;
}

Conic::Conic(const std::array<double, 6>& raw, const ConicTolerances& tol)
    : coeffs_(unit_normalize(raw)) {
    shape_ = classify_conic(*this, tol);
}

Conic Conic::circle(Point c, double r) {
    return Conic({1.0, 0.0, 1.0, -2.0 * c.x, -2.0 * c.y, c.x * c.x + c.y * c.y - r * r});
}

Conic Conic::ellipse(Point c, double ax, double by) {
    const double ia = 1.0 / (ax * ax), ib = 1.0 / (by * by);
    return Conic({ia, 0.0, ib, -2.0 * c.x * ia, -2.0 * c.y * ib,
                  c.x * c.x * ia + c.y * c.y * ib - 1.0});
}

Conic Conic::point(Point p) { return circle(p, 0.0); }

double Conic::evaluate(Point p) const {
    const auto& k = coeffs_;
    return k[0] * p.x * p.x + k[1] * p.x * p.y + k[2] * p.y * p.y + k[3] * p.x + k[4] * p.y + k[5];
}

std::array<double, 9> Conic::matrix() const {
    const auto& k = coeffs_;
    return {k[0], k[1] / 2, k[3] / 2, k[1] / 2, k[2], k[4] / 2, k[3] / 2, k[4] / 2, k[5]};
}

double Conic::scale() const {
    if (shape_.semi_axes && shape_.semi_axes->major > 0.0) return shape_.semi_axes->major;
    return 1.0;
}

ConicShape classify_conic(const Conic& c, const ConicTolerances& tol) {
    const auto [A, B, C, D, E, F] = c.coeffs();
    ConicShape out;
    const double det3 = A * (C * F - E * E / 4) - B / 2 * (B / 2 * F - E * D / 4) +
                        D / 2 * (B / 2 * E / 2 - C * D / 2);
    double q = std::abs(A) + std::abs(C);
    if (q == 0.0) q = std::abs(B);
    if (q == 0.0) {
        out.kind = ConicKind::Degenerate;
        return out;
    }
    const double disc = (B * B - 4 * A * C) / (q * q);

    if (disc < -tol.degenerate_tol) {
        const double den = 4 * A * C - B * B;
        const Point center{(B * E - 2 * C * D) / den, (B * D - 2 * A * E) / den};
        const double fc = c.evaluate(center);
        const double mean = (A + C) / 2;
        const double rad = std::hypot((A - C) / 2, B / 2);
        double l1 = mean - rad, l2 = mean + rad;  // |l1| <= |l2| when A, C > 0
        if (mean < 0) std::swap(l1, l2);
        out.center = center;
        if (std::abs(fc) / q <= tol.degenerate_tol) {
            out.kind = ConicKind::Point;
            out.semi_axes = SemiAxes{0.0, 0.0};
            return out;
        }
        const double s1 = -fc / l1, s2 = -fc / l2;
        if (s1 <= 0.0 || s2 <= 0.0) {
            out.kind = ConicKind::Empty;
            return out;
        }
        out.semi_axes = SemiAxes{std::sqrt(s1), std::sqrt(s2)};
        // eigenvector of l1 gives the major axis
        if (std::abs(B) <= 1e-300) {
            out.angle = (std::abs(A) <= std::abs(C)) ? 0.0 : M_PI / 2;
        } else {
            out.angle = std::atan2(l1 - A, B / 2);
        }
        if (std::abs(A - C) / q <= tol.circle_tol && std::abs(B) / q <= tol.circle_tol) {
            out.kind = ConicKind::Circle;
            const double r = std::sqrt(-fc / mean);
            out.semi_axes = SemiAxes{r, r};
            out.angle = 0.0;
        } else {
            out.kind = ConicKind::Ellipse;
        }
        return out;
    }
    if (std::abs(det3) <= tol.degenerate_tol) {
        out.kind = ConicKind::Degenerate;
        return out;
    }
    out.kind = disc > tol.degenerate_tol ? ConicKind::Hyperbola : ConicKind::Parabola;
    return out;
}

Conic pencil_member(const Conic& c1, const Conic& c2, double u) {
    auto rep = [](const Conic& c) {
        auto k = c.coeffs();
        const double s = k[0] + k[2];
        if (std::abs(s) > 1e-14) {
            for (double& v : k) v /= s;
        }
        return k;
    };
    const auto k1 = rep(c1), k2 = rep(c2);
    std::array<double, 6> mix{};
    double n = 0.0, n0 = 0.0;
    for (int i = 0; i < 6; ++i) {
        mix[i] = (1.0 - u) * k1[i] + u * k2[i];
        n += mix[i] * mix[i];
        n0 = std::max({n0, std::abs((1.0 - u) * k1[i]), std::abs(u * k2[i])});
    }
    if (std::sqrt(n) <= 1e-14 * std::max(n0, 1.0)) {
        throw GeometryError(ErrorCode::DegeneratePencilMember, "pencil combination vanishes");
    }
    return Conic(mix);
}

double pencil_span_distance(const Conic& c, const Conic& g1, const Conic& g2) {
    Eigen::Matrix<double, 6, 2> G;
    Eigen::Matrix<double, 6, 1> v;
    for (int i = 0; i < 6; ++i) {
        G(i, 0) = g1.coeffs()[i];
        G(i, 1) = g2.coeffs()[i];
        v(i) = c.coeffs()[i];
    }
    const Eigen::Vector2d x = G.colPivHouseholderQr().solve(v);
    return (G * x - v).norm();
}

namespace {

bool is_closed(const Conic& c) {
    return c.kind() == ConicKind::Circle || c.kind() == ConicKind::Ellipse;
}

// C(p + s*dir) = alpha s^2 + beta s + gamma
std::array<double, 3> restrict_to_line(const Conic& c, Point p, Point dir) {
    const auto [A, B, C, D, E, F] = c.coeffs();
    (void)F;
    const double alpha = A * dir.x * dir.x + B * dir.x * dir.y + C * dir.y * dir.y;
    const double beta = 2 * A * p.x * dir.x + B * (p.x * dir.y + p.y * dir.x) +
                        2 * C * p.y * dir.y + D * dir.x + E * dir.y;
    return {alpha, beta, c.evaluate(p)};
}

}  // namespace

TangentPair tangent_lines_from_point(Point p, const Conic& c, const ConicTolerances& tol) {
    if (!is_closed(c)) {
        throw GeometryError(ErrorCode::InvalidParameters, "tangents need a circle or ellipse");
    }
    const auto& k = c.coeffs();
    const double q = std::abs(k[0]) + std::abs(k[2]);
    const double L = c.scale();
    const double rel = c.evaluate(p) / (q * L * L);
    if (std::abs(rel) <= tol.boundary_tol) {
        throw GeometryError(ErrorCode::TangentFromBoundary, "point lies on the conic");
    }
    if (rel < 0.0) {
        throw GeometryError(ErrorCode::NoRealTangent, "point lies inside the conic");
    }

    // contacts are the intersections of the polar of p with c
    const auto m = c.matrix();
    const Line polar = Line::from_coefficients(m[0] * p.x + m[1] * p.y + m[2],
                                               m[3] * p.x + m[4] * p.y + m[5],
                                               m[6] * p.x + m[7] * p.y + m[8]);
    const Point base = polar.foot();
    const Point dir = polar.direction();
    const auto [alpha, beta, gamma] = restrict_to_line(c, base, dir);
    const double disc = beta * beta - 4 * alpha * gamma;
    if (!(disc > 0.0)) {
        throw GeometryError(ErrorCode::TangentFromBoundary, "polar does not cut the conic");
    }
    const double sq = std::sqrt(disc);
    const double qq = -0.5 * (beta + std::copysign(sq, beta));
    double s1 = qq / alpha;
    double s2 = (qq != 0.0) ? gamma / qq : -s1;
    Point q1 = base + s1 * dir;
    Point q2 = base + s2 * dir;

    const Point o = *c.center();
    if (cross(p - o, q1 - o) < 0.0) std::swap(q1, q2);
    return {Line::through(p, q1), Line::through(p, q2), q1, q2};
}

Point circle_inverse(Point p, const Conic& circle) {
    if (circle.kind() != ConicKind::Circle) {
        throw GeometryError(ErrorCode::InvalidParameters, "inversion needs a circle");
    }
    const Point o = *circle.center();
    const double r = circle.semi_axes()->major;
    const Point v = p - o;
    const double n2 = dot(v, v);
    if (n2 <= 1e-24 * r * r) {
        throw GeometryError(ErrorCode::InversionOfCenter, "cannot invert the circle center");
    }
    return o + (r * r / n2) * v;
}

namespace {

std::pair<Point, double> circle_data(const Conic& c) {
    if (c.kind() == ConicKind::Circle) return {*c.center(), c.semi_axes()->major};
    if (c.kind() == ConicKind::Point) return {*c.center(), 0.0};
    throw GeometryError(ErrorCode::InvalidParameters, "pencil generators must be circles");
}

}  // namespace

std::optional<Line> CirclePencil::radical_axis() const {
    const auto [o1, r1] = circle_data(c1);
    const auto [o2, r2] = circle_data(c2);
    const Point e = o2 - o1;
    if (norm(e) <= 1e-14) return std::nullopt;
    return Line::from_coefficients(2 * e.x, 2 * e.y,
                                   dot(o1, o1) - r1 * r1 - dot(o2, o2) + r2 * r2);
}

std::pair<Point, Point> limiting_points(const CirclePencil& pencil) {
    const auto [o1, r1] = circle_data(pencil.c1);
    const auto [o2, r2] = circle_data(pencil.c2);
    const Point e = o2 - o1;
    const double e2 = dot(e, e);
    if (e2 <= 1e-28) return {o1, o1};
    // squared radius of the monic member: e2 u^2 + (r2^2 - r1^2 - e2) u + r1^2
    const double b = r2 * r2 - r1 * r1 - e2;
    const double disc = b * b - 4 * e2 * r1 * r1;
    if (disc < -1e-14 * std::max(b * b, 1.0)) {
        throw GeometryError(ErrorCode::ComplexLimitingPoints, "pencil circles intersect");
    }
    const double sq = std::sqrt(std::max(disc, 0.0));
    const double u1 = (-b - sq) / (2 * e2), u2 = (-b + sq) / (2 * e2);
    Point l1 = o1 + u1 * e, l2 = o1 + u2 * e;
    if (l2.x < l1.x || (l2.x == l1.x && l2.y < l1.y)) std::swap(l1, l2);
    return {l1, l2};
}

double line_tangent_to_conic_residual(const Line& l, const Conic& c) {
    const auto [alpha, beta, gamma] = restrict_to_line(c, l.foot(), l.direction());
    const double L = c.scale();
    const double disc = beta * beta - 4 * alpha * gamma;
    if (std::abs(alpha) < 1e-300) return disc;
    return disc / (4 * alpha * alpha * L * L);
}

Point second_intersection(const Conic& c, Point p, Point dir) {
    const auto [alpha, beta, gamma] = restrict_to_line(c, p, dir);
    (void)gamma;
    if (std::abs(alpha) < 1e-300) {
        throw GeometryError(ErrorCode::InvalidParameters, "direction is asymptotic");
    }
    return p + (-beta / alpha) * dir;
}

DualConicFit fit_dual_conic(const std::vector<Line>& lines, double rank_tol) {
    if (lines.size() < 5) {
        throw GeometryError(ErrorCode::InsufficientSamples, "dual conic fit needs five lines");
    }
    Eigen::MatrixXd M(static_cast<Eigen::Index>(lines.size()), 6);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto& l = lines[i];
        M.row(static_cast<Eigen::Index>(i)) << l.a * l.a, l.a * l.b, l.b * l.b, l.a * l.c,
            l.b * l.c, l.c * l.c;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeThinV);
    const Eigen::VectorXd v = svd.matrixV().col(5);

    DualConicFit out;
    const auto& sv = svd.singularValues();
    if (sv(4) <= rank_tol * sv(0)) {
        // concurrent lines: every product (line through the point) * (any line) fits, so the
        // null space is not one-dimensional; solve for the common point directly
        Eigen::MatrixXd A(static_cast<Eigen::Index>(lines.size()), 2);
        Eigen::VectorXd rhs(static_cast<Eigen::Index>(lines.size()));
        for (std::size_t i = 0; i < lines.size(); ++i) {
            const double n = std::hypot(lines[i].a, lines[i].b);
            A.row(static_cast<Eigen::Index>(i)) << lines[i].a / n, lines[i].b / n;
            rhs(static_cast<Eigen::Index>(i)) = -lines[i].c / n;
        }
        const Eigen::Vector2d x = A.colPivHouseholderQr().solve(rhs);
        out.is_point = true;
        out.point = {x(0), x(1)};
        out.conic = Conic::point(out.point);
        out.residual = (A * x - rhs).norm() / std::sqrt(static_cast<double>(lines.size()));
        const Eigen::Vector3d m(x(0), x(1), 1.0);
        const Eigen::Matrix3d D = m * m.transpose();
        const double s = D.norm();
        out.dual = {D(0, 0) / s, 2 * D(0, 1) / s, D(1, 1) / s, 2 * D(0, 2) / s, 2 * D(1, 2) / s, D(2, 2) / s};
        return out;
    }
    for (int i = 0; i < 6; ++i) out.dual[i] = v(i);
    out.residual = svd.singularValues()(5) / std::sqrt(static_cast<double>(lines.size()));

    Eigen::Matrix3d D;
    D << v(0), v(1) / 2, v(3) / 2, v(1) / 2, v(2), v(4) / 2, v(3) / 2, v(4) / 2, v(5);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eig(D);
    Eigen::Vector3d ev = eig.eigenvalues();
    std::array<int, 3> idx{0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](int i, int j) { return std::abs(ev(i)) > std::abs(ev(j)); });
    const double big = std::abs(ev(idx[0]));
    if (std::abs(ev(idx[1])) <= rank_tol * big) {
        const Eigen::Vector3d m = eig.eigenvectors().col(idx[0]);
        out.is_point = true;
        out.point = {m(0) / m(2), m(1) / m(2)};
        out.conic = Conic::point(out.point);
        return out;
    }
    Eigen::Matrix3d adj;
    adj(0, 0) = D(1, 1) * D(2, 2) - D(1, 2) * D(2, 1);
    adj(0, 1) = D(0, 2) * D(2, 1) - D(0, 1) * D(2, 2);
    adj(0, 2) = D(0, 1) * D(1, 2) - D(0, 2) * D(1, 1);
    adj(1, 1) = D(0, 0) * D(2, 2) - D(0, 2) * D(2, 0);
    adj(1, 2) = D(0, 2) * D(1, 0) - D(0, 0) * D(1, 2);
    adj(2, 2) = D(0, 0) * D(1, 1) - D(0, 1) * D(1, 0);
    out.conic = Conic({adj(0, 0), 2 * adj(0, 1), adj(1, 1), 2 * adj(0, 2), 2 * adj(1, 2), adj(2, 2)});
    return out;
}

}  // namespace poncelet
