#include "poncelet/loci.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>

namespace poncelet {

std::vector<Point> Locus::valid_points() const {
    std::vector<Point> out;
    out.reserve(samples.size());
    for (const auto& s : samples) {
        if (s.valid) out.push_back(s.p);
    }
    return out;
}

std::size_t Locus::valid_count() const {
    return static_cast<std::size_t>(
        std::count_if(samples.begin(), samples.end(), [](const LocusSample& s) { return s.valid; }));
}

Locus sample_locus(const FamilyConfig& cfg, const TrackedPoint& tracked, int n) {
    if (n < 1) throw GeometryError(ErrorCode::InsufficientSamples, "need at least one sample");
    Locus L;
    L.family = resolve(cfg);
    L.tracked = tracked;
    L.samples.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        auto& s = L.samples[static_cast<std::size_t>(i)];
        s.t = 2 * M_PI * i / n;
        try {
            s.p = evaluate(triangle_at(L.family, s.t), tracked);
            s.valid = std::isfinite(s.p.x) && std::isfinite(s.p.y);
        } catch (const GeometryError& e) {
            if (e.code() != ErrorCode::VertexInsideCaustic && e.code() != ErrorCode::DegenerateTriangle) throw;
            s.valid = false;
        }
    }
    return L;
}

Locus trace_locus(const FamilyConfig& cfg, const TrackedPoint& tracked, int n) {
    if (n < kMinLocusSamples) {
        throw GeometryError(ErrorCode::InsufficientSamples, "need at least 32 samples");
    }
    Locus L = sample_locus(cfg, tracked, n);
    if (L.valid_count() < static_cast<std::size_t>(kMinLocusSamples)) {
        throw GeometryError(ErrorCode::InsufficientSamples, "fewer than 32 valid samples");
    }
    return L;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Point: return "point";
        case Verdict::Circle: return "circle";
        case Verdict::Ellipse: return "ellipse";
        case Verdict::AlgebraicDegree: return "algebraic";
        case Verdict::NonConic: return "nonconic";
    }
    return "?";
}

Normalization normalization_of(const std::vector<Point>& pts) {
    Normalization n;
    if (pts.empty()) return n;
    Point c;
    for (const auto& p : pts) c = c + p;
    c = c / static_cast<double>(pts.size());
    double ss = 0.0;
    for (const auto& p : pts) ss += dot(p - c, p - c);
    n.center = c;
    n.scale = std::sqrt(ss / static_cast<double>(pts.size()));
    if (!(n.scale > 0.0)) n.scale = 1.0;
    return n;
}

namespace {

std::vector<std::pair<int, int>> monomials_upto(int degree) {
    std::vector<std::pair<int, int>> m;
    for (int total = 0; total <= degree; ++total) {
        for (int j = 0; j <= total; ++j) m.emplace_back(total - j, j);
    }
    return m;
}

// Conic coefficients of q((x - c)/s) in the original frame.
std::array<double, 6> unframe_conic(const std::array<double, 6>& k, const Normalization& f) {
    const double s = f.scale, cx = f.center.x, cy = f.center.y;
    const double A = k[0] / (s * s), B = k[1] / (s * s), C = k[2] / (s * s);
    const double D = k[3] / s, E = k[4] / s, F = k[5];
    return {A,
            B,
            C,
            -2 * A * cx - B * cy + D,
            -2 * C * cy - B * cx + E,
            A * cx * cx + B * cx * cy + C * cy * cy - D * cx - E * cy + F};
}

}  // namespace

CurveFit fit_curve(const std::vector<Point>& pts, int degree) {
    if (degree < 1) throw GeometryError(ErrorCode::InvalidParameters, "degree must be >= 1");
    CurveFit fit;
    fit.degree = degree;
    fit.monomials = monomials_upto(degree);
    const auto m = static_cast<Eigen::Index>(fit.monomials.size());
    const auto n = static_cast<Eigen::Index>(pts.size());
    if (n < 2 * m) {
        throw GeometryError(ErrorCode::InsufficientSamples, "need twice as many samples as monomials");
    }
    fit.frame = normalization_of(pts);

    Eigen::MatrixXd M(n, m);
    std::vector<double> xp(static_cast<std::size_t>(degree) + 1), yp(xp.size());
    for (Eigen::Index r = 0; r < n; ++r) {
        const Point q = (pts[static_cast<std::size_t>(r)] - fit.frame.center) / fit.frame.scale;
        xp[0] = yp[0] = 1.0;
        for (int k = 1; k <= degree; ++k) {
            xp[k] = xp[k - 1] * q.x;
            yp[k] = yp[k - 1] * q.y;
        }
        for (Eigen::Index c = 0; c < m; ++c) {
            const auto [i, j] = fit.monomials[static_cast<std::size_t>(c)];
            M(r, c) = xp[i] * yp[j];
        }
    }
    Eigen::BDCSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const Eigen::VectorXd v = svd.matrixV().col(m - 1);
    fit.coeffs.assign(v.data(), v.data() + m);
    const double root_n = std::sqrt(static_cast<double>(n));
    fit.residual = sv(m - 1) / root_n;
    fit.residual_by_degree[degree] = fit.residual;
    // a second near-null direction means the samples also satisfy a lower-degree relation
    fit.ambiguous = m >= 2 && sv(m - 2) / root_n <= std::max(1e3 * fit.residual, 1e-12);

    if (degree == 2) {
        std::array<double, 6> k{};
        // monomial order: 1, x, y, x^2, xy, y^2
        k[0] = fit.coeffs[3];
        k[1] = fit.coeffs[4];
        k[2] = fit.coeffs[5];
        k[3] = fit.coeffs[1];
        k[4] = fit.coeffs[2];
        k[5] = fit.coeffs[0];
        try {
            fit.conic = Conic(unframe_conic(k, fit.frame));
        } catch (const GeometryError&) {
            fit.conic.reset();
        }
    }
    return fit;
}

double stationarity_spread(const std::vector<Point>& pts, double scale) {
    double best = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::max(best, distance(pts[i], pts[j]));
    }
    return best / scale;
}

double stationarity_spread(const Locus& L) {
    return stationarity_spread(L.valid_points(), family_scale(L.family));
}

CurveFit classify_points(const std::vector<Point>& pts, double scale, const LocusTolerances& tol) {
    if (pts.size() < static_cast<std::size_t>(kMinLocusSamples)) {
        throw GeometryError(ErrorCode::InsufficientSamples, "fewer than 32 valid samples");
    }
    const double spread = stationarity_spread(pts, scale);
    if (spread <= tol.point_tol) {
        CurveFit fit;
        fit.degree = 0;
        fit.verdict = Verdict::Point;
        fit.frame = normalization_of(pts);
        fit.spread = spread;
        fit.conic = Conic::point(fit.frame.center);
        return fit;
    }

    std::map<int, double> history;
    CurveFit conic_fit = fit_curve(pts, 2);
    history[2] = conic_fit.residual;
    if (conic_fit.residual <= tol.conic_tol && conic_fit.conic) {
        const ConicShape shape = classify_conic(*conic_fit.conic, ConicTolerances{tol.circle_tol});
        conic_fit.conic = Conic(conic_fit.conic->coeffs(), ConicTolerances{tol.circle_tol});
        if (shape.kind == ConicKind::Circle || shape.kind == ConicKind::Ellipse) {
            conic_fit.verdict = shape.kind == ConicKind::Circle ? Verdict::Circle : Verdict::Ellipse;
            conic_fit.residual_by_degree = history;
            conic_fit.spread = spread;
            return conic_fit;
        }
    }
    CurveFit last = conic_fit;
    for (int d = 3; d <= tol.max_degree; ++d) {
        CurveFit fit = fit_curve(pts, d);
        history[d] = fit.residual;
        if (fit.residual <= tol.curve_tol) {
            fit.verdict = Verdict::AlgebraicDegree;
            fit.residual_by_degree = history;
            fit.spread = spread;
            return fit;
        }
        last = std::move(fit);
    }
    last.verdict = Verdict::NonConic;
    last.conic.reset();
    last.residual_by_degree = history;
    last.spread = spread;
    return last;
}

CurveFit classify_locus(const Locus& L, const LocusTolerances& tol) {
    return classify_points(L.valid_points(), family_scale(L.family), tol);
}

void Poly2::add(int i, int j, double c) { terms_[{i, j}] += c; }

double Poly2::evaluate(Point p) const {
    double s = 0.0;
    for (const auto& [ij, c] : terms_) s += c * std::pow(p.x, ij.first) * std::pow(p.y, ij.second);
    return s;
}

double Poly2::magnitude(Point p) const {
    double s = 0.0;
    for (const auto& [ij, c] : terms_) {
        s += std::abs(c) * std::pow(std::abs(p.x), ij.first) * std::pow(std::abs(p.y), ij.second);
    }
    return s;
}

double Poly2::weighted_norm(double sc) const {
    double s = 0.0;
    for (const auto& [ij, c] : terms_) s += std::abs(c) * std::pow(sc, ij.first + ij.second);
    return s;
}

int Poly2::degree() const {
    int d = 0;
    for (const auto& [ij, c] : terms_) {
        if (c != 0.0) d = std::max(d, ij.first + ij.second);
    }
    return d;
}

Poly2 operator+(const Poly2& p, const Poly2& q) {
    Poly2 r = p;
    for (const auto& [ij, c] : q.terms_) r.add(ij.first, ij.second, c);
    return r;
}

Poly2 operator*(const Poly2& p, const Poly2& q) {
    Poly2 r;
    for (const auto& [a, c] : p.terms_) {
        for (const auto& [b, e] : q.terms_) r.add(a.first + b.first, a.second + b.second, c * e);
    }
    return r;
}

Poly2 operator*(double k, const Poly2& p) {
    Poly2 r;
    for (const auto& [ij, c] : p.terms_) r.add(ij.first, ij.second, k * c);
    return r;
}

namespace {

Poly2 mono(int i, int j, double c = 1.0) {
    Poly2 p;
    p.add(i, j, c);
    return p;
}

}  // namespace

Poly2 x2_sextic_printed(const BicentricParams& p) {
    const double R = p.R, r = p.r, d = p.d;
    auto P = [](double v, int k) { return std::pow(v, k); };
    const Poly2 x = mono(1, 0), x2 = mono(2, 0), y2 = mono(0, 2);
    const Poly2 s = x2 + y2;

    const double k1 = 4 * P(R, 2) + 5 * P(d, 2) - 4 * P(r, 2);
    const double k2 = 4 * P(R, 2) - 3 * P(d, 2) - 4 * P(r, 2);
    const double k3 = P(R, 6) - 86 * P(R, 4) * P(d, 2) - 8 * P(R, 4) * P(r, 2) + 121 * P(R, 2) * P(d, 4) +
                      128 * P(R, 2) * P(d, 2) * P(r, 2) + 16 * P(R, 2) * P(r, 4) - 36 * P(d, 6) -
                      72 * P(d, 4) * P(r, 2) - 96 * P(d, 2) * P(r, 4);
    const double k4 = P(R, 6) - 42 * P(R, 4) * P(d, 2) - 8 * P(R, 4) * P(r, 2) - 63 * P(R, 2) * P(d, 4) +
                      128 * P(R, 2) * P(d, 2) * P(r, 2) + 16 * P(R, 2) * P(r, 4) - 4 * P(d, 6) +
                      24 * P(d, 4) * P(r, 2) - 32 * P(d, 2) * P(r, 4);
    const double k5 = 3 * P(R, 8) - 45 * P(R, 6) * P(d, 2) - 28 * P(R, 6) * P(r, 2) + 81 * P(R, 4) * P(d, 4) +
                      44 * P(R, 4) * P(d, 2) * P(r, 2) + 80 * P(R, 4) * P(r, 4) - 39 * P(R, 2) * P(d, 6) +
                      20 * P(R, 2) * P(d, 4) * P(r, 2) - 112 * P(R, 2) * P(d, 2) * P(r, 4) -
                      64 * P(R, 2) * P(r, 6) - 36 * P(d, 6) * P(r, 2) + 64 * P(d, 2) * P(r, 6);
    const double k6 = 3 * P(R, 8) - 45 * P(R, 6) * P(d, 2) - 28 * P(R, 6) * P(r, 2) + 81 * P(R, 4) * P(d, 4) +
                      76 * P(R, 4) * P(d, 2) * P(r, 2) + 80 * P(R, 4) * P(r, 4) - 39 * P(R, 2) * P(d, 6) -
                      44 * P(R, 2) * P(d, 4) * P(r, 2) + 16 * P(R, 2) * P(d, 2) * P(r, 4) -
                      64 * P(R, 2) * P(r, 6) - 4 * P(d, 6) * P(r, 2) + 64 * P(d, 2) * P(r, 6);
    const double k7 = 9 * P(R, 10) - 36 * P(R, 8) * P(d, 2) - 90 * P(R, 8) * P(r, 2) + 54 * P(R, 6) * P(d, 4) -
                      18 * P(R, 6) * P(d, 2) * P(r, 2) + 312 * P(R, 6) * P(r, 4) - 36 * P(R, 4) * P(d, 6) +
                      306 * P(R, 4) * P(d, 4) * P(r, 2) - 372 * P(R, 4) * P(d, 2) * P(r, 4) -
                      480 * P(R, 4) * P(r, 6) + 9 * P(R, 2) * P(d, 8) - 198 * P(R, 2) * P(d, 6) * P(r, 2) +
                      96 * P(R, 2) * P(d, 4) * P(r, 4) + 256 * P(R, 2) * P(d, 2) * P(r, 6) +
                      384 * P(R, 2) * P(r, 8) - 36 * P(d, 6) * P(r, 4) + 96 * P(d, 4) * P(r, 6) -
                      64 * P(d, 2) * P(r, 8);
    const double k8 = 9 * P(R, 10) - 36 * P(R, 8) * P(d, 2) - 102 * P(R, 8) * P(r, 2) + 54 * P(R, 6) * P(d, 4) +
                      126 * P(R, 6) * P(d, 2) * P(r, 2) + 392 * P(R, 6) * P(r, 4) - 36 * P(R, 4) * P(d, 6) +
                      54 * P(R, 4) * P(d, 4) * P(r, 2) - 116 * P(R, 4) * P(d, 2) * P(r, 4) -
                      544 * P(R, 4) * P(r, 6) + 9 * P(R, 2) * P(d, 8) - 78 * P(R, 2) * P(d, 6) * P(r, 2) +
                      160 * P(R, 2) * P(d, 4) * P(r, 4) + 128 * P(R, 2) * P(r, 8) - 4 * P(d, 6) * P(r, 4) +
                      32 * P(d, 4) * P(r, 6) - 64 * P(d, 2) * P(r, 8);
    const double w = 3 * P(R, 2) - 3 * P(d, 2) + 4 * P(r, 2);
    const double k9 = 3 * P(R, 6) - 9 * P(R, 4) * P(d, 2) - 28 * P(R, 4) * P(r, 2) + 9 * P(R, 2) * P(d, 4) -
                      4 * P(R, 2) * P(d, 2) * P(r, 2) + 80 * P(R, 2) * P(r, 4) - 3 * P(d, 6) +
                      32 * P(d, 4) * P(r, 2) - 32 * P(d, 2) * P(r, 4) - 64 * P(r, 6);
    const double k0 = 16 * P(R, 2) * P(d, 4) * P(r, 4) * (P(R + d, 2) - 4 * P(r, 2)) *
                      (P(R - d, 2) - 4 * P(r, 2)) * w * w;

    Poly2 f = 729.0 * (s * s * s);
    f = f + (-972.0 * d) * (x * s * (k1 * y2 + k2 * x2));
    f = f + (-81.0) * (s * (k3 * x2 + k4 * y2));
    f = f + (108.0 * d) * (x * (k5 * x2 + k6 * y2));
    f = f + (-36.0 * d * d) * (k7 * x2 + k8 * y2);
    f = f + (48.0 * R * R * d * d * d * r * r * w * k9) * x;
    f.add(0, 0, -k0);
    return f;
}

Poly2 x2_sextic_eliminated(const BicentricParams& p) {
    const double R = p.R, r = p.r, d = p.d;
    Poly2 f;
    f.add(6, 0, 729*std::pow(-R + d, 4)*std::pow(R + d, 4));
    f.add(5, 0, -1944*d*std::pow(-R + d, 2)*std::pow(R + d, 2)*(std::pow(R, 4) - 2*std::pow(R, 2)*std::pow(d, 2) + 2*std::pow(R, 2)*std::pow(r, 2) + std::pow(d, 4)));
    f.add(4, 2, 2187*std::pow(-R + d, 4)*std::pow(R + d, 4));
    f.add(4, 0, -81*std::pow(-R + d, 2)*std::pow(R + d, 2)*(std::pow(R, 6) - 24*std::pow(R, 4)*std::pow(d, 2) - 8*std::pow(R, 4)*std::pow(r, 2) + 45*std::pow(R, 2)*std::pow(d, 4) - 144*std::pow(R, 2)*std::pow(d, 2)*std::pow(r, 2) + 16*std::pow(R, 2)*std::pow(r, 4) - 22*std::pow(d, 6) + 8*std::pow(d, 4)*std::pow(r, 2)));
    f.add(3, 2, -3888*d*std::pow(-R + d, 2)*std::pow(R + d, 2)*(std::pow(R, 4) - 2*std::pow(R, 2)*std::pow(d, 2) + 2*std::pow(R, 2)*std::pow(r, 2) + std::pow(d, 4)));
    f.add(3, 0, 216*d*(-R + d)*(R + d)*(-std::pow(R, 8) + 6*std::pow(R, 6)*std::pow(d, 2) + 8*std::pow(R, 6)*std::pow(r, 2) - 12*std::pow(R, 4)*std::pow(d, 4) + 48*std::pow(R, 4)*std::pow(d, 2)*std::pow(r, 2) - 16*std::pow(R, 4)*std::pow(r, 4) + 10*std::pow(R, 2)*std::pow(d, 6) - 60*std::pow(R, 2)*std::pow(d, 4)*std::pow(r, 2) + 32*std::pow(R, 2)*std::pow(d, 2)*std::pow(r, 4) - 3*std::pow(d, 8) + 4*std::pow(d, 6)*std::pow(r, 2)));
    f.add(2, 4, 2187*std::pow(-R + d, 4)*std::pow(R + d, 4));
    f.add(2, 2, -162*std::pow(R, 10) + 2592*std::pow(R, 8)*std::pow(d, 2) + 1296*std::pow(R, 8)*std::pow(r, 2) - 8748*std::pow(R, 6)*std::pow(d, 4) + 12960*std::pow(R, 6)*std::pow(d, 2)*std::pow(r, 2) - 2592*std::pow(R, 6)*std::pow(r, 4) + 12312*std::pow(R, 4)*std::pow(d, 6) - 31104*std::pow(R, 4)*std::pow(d, 4)*std::pow(r, 2) - 7938*std::pow(R, 2)*std::pow(d, 8) + 18144*std::pow(R, 2)*std::pow(d, 6)*std::pow(r, 2) - 2592*std::pow(R, 2)*std::pow(d, 4)*std::pow(r, 4) + 1944*std::pow(d, 10) - 1296*std::pow(d, 8)*std::pow(r, 2));
    f.add(2, 0, 9*std::pow(d, 2)*(-R + d)*(R + d)*(22*std::pow(R, 8) - 75*std::pow(R, 6)*std::pow(d, 2) - 168*std::pow(R, 6)*std::pow(r, 2) + 93*std::pow(R, 4)*std::pow(d, 4) - 424*std::pow(R, 4)*std::pow(d, 2)*std::pow(r, 2) + 288*std::pow(R, 4)*std::pow(r, 4) - 49*std::pow(R, 2)*std::pow(d, 6) + 616*std::pow(R, 2)*std::pow(d, 4)*std::pow(r, 2) - 944*std::pow(R, 2)*std::pow(d, 2)*std::pow(r, 4) + 128*std::pow(R, 2)*std::pow(r, 6) + 9*std::pow(d, 8) - 24*std::pow(d, 6)*std::pow(r, 2) + 16*std::pow(d, 4)*std::pow(r, 4)));
    f.add(1, 4, -1944*d*std::pow(-R + d, 2)*std::pow(R + d, 2)*(std::pow(R, 4) - 2*std::pow(R, 2)*std::pow(d, 2) + 2*std::pow(R, 2)*std::pow(r, 2) + std::pow(d, 4)));
    f.add(1, 2, 216*d*(std::pow(R, 10) - 5*std::pow(R, 8)*std::pow(d, 2) - 8*std::pow(R, 8)*std::pow(r, 2) + 10*std::pow(R, 6)*std::pow(d, 4) - 24*std::pow(R, 6)*std::pow(d, 2)*std::pow(r, 2) + 16*std::pow(R, 6)*std::pow(r, 4) - 10*std::pow(R, 4)*std::pow(d, 6) + 76*std::pow(R, 4)*std::pow(d, 4)*std::pow(r, 2) - 16*std::pow(R, 4)*std::pow(d, 2)*std::pow(r, 4) + 5*std::pow(R, 2)*std::pow(d, 8) - 48*std::pow(R, 2)*std::pow(d, 6)*std::pow(r, 2) + 32*std::pow(R, 2)*std::pow(d, 4)*std::pow(r, 4) - std::pow(d, 10) + 4*std::pow(d, 8)*std::pow(r, 2)));
    f.add(1, 0, -24*std::pow(R, 2)*std::pow(d, 3)*(3*std::pow(R, 2) - 3*std::pow(d, 2) + 4*std::pow(r, 2))*(-std::pow(R, 6) + 3*std::pow(R, 4)*std::pow(d, 2) + 8*std::pow(R, 4)*std::pow(r, 2) - 3*std::pow(R, 2)*std::pow(d, 4) + 6*std::pow(R, 2)*std::pow(d, 2)*std::pow(r, 2) - 16*std::pow(R, 2)*std::pow(r, 4) + std::pow(d, 6) - 14*std::pow(d, 4)*std::pow(r, 2) + 24*std::pow(d, 2)*std::pow(r, 4)));
    f.add(0, 6, 729*std::pow(-R + d, 4)*std::pow(R + d, 4));
    f.add(0, 4, -81*std::pow(R, 10) + 486*std::pow(R, 8)*std::pow(d, 2) + 648*std::pow(R, 8)*std::pow(r, 2) - 1134*std::pow(R, 6)*std::pow(d, 4) + 2592*std::pow(R, 6)*std::pow(d, 2)*std::pow(r, 2) - 1296*std::pow(R, 6)*std::pow(r, 4) + 1296*std::pow(R, 4)*std::pow(d, 6) - 7776*std::pow(R, 4)*std::pow(d, 4)*std::pow(r, 2) - 2592*std::pow(R, 4)*std::pow(d, 2)*std::pow(r, 4) - 729*std::pow(R, 2)*std::pow(d, 8) + 5184*std::pow(R, 2)*std::pow(d, 6)*std::pow(r, 2) - 1296*std::pow(R, 2)*std::pow(d, 4)*std::pow(r, 4) + 162*std::pow(d, 10) - 648*std::pow(d, 8)*std::pow(r, 2));
    f.add(0, 2, 9*std::pow(d, 2)*(-10*std::pow(R, 10) + 41*std::pow(R, 8)*std::pow(d, 2) + 88*std::pow(R, 8)*std::pow(r, 2) - 64*std::pow(R, 6)*std::pow(d, 4) - 64*std::pow(R, 6)*std::pow(d, 2)*std::pow(r, 2) - 224*std::pow(R, 6)*std::pow(r, 4) + 46*std::pow(R, 4)*std::pow(d, 6) - 144*std::pow(R, 4)*std::pow(d, 4)*std::pow(r, 2) + 336*std::pow(R, 4)*std::pow(d, 2)*std::pow(r, 4) + 128*std::pow(R, 4)*std::pow(r, 6) - 14*std::pow(R, 2)*std::pow(d, 8) + 128*std::pow(R, 2)*std::pow(d, 6)*std::pow(r, 2) - 320*std::pow(R, 2)*std::pow(d, 4)*std::pow(r, 4) + 128*std::pow(R, 2)*std::pow(d, 2)*std::pow(r, 6) + std::pow(d, 10) - 8*std::pow(d, 8)*std::pow(r, 2) + 16*std::pow(d, 6)*std::pow(r, 4)));
    f.add(0, 0, -std::pow(R, 2)*std::pow(d, 4)*(-R - d + 2*r)*(-R + d + 2*r)*(R - d + 2*r)*(R + d + 2*r)*std::pow(3*std::pow(R, 2) - 3*std::pow(d, 2) + 4*std::pow(r, 2), 2));
    return f;
}

Point x2_parametrization(const BicentricParams& p, double t) {
    const double R = p.R, r = p.r, d = p.d;
    const double x1 = R * std::cos(t), y1 = R * std::sin(t);
    const double den = 3 * (R * R + d * d - 2 * d * x1) * (R * R + d * d - 2 * d * x1);
    const double nx = -4 * d * d * x1 * y1 * y1 -
                      (std::pow(d, 4) + (6 * R * R - 4 * r * r) * d * d + std::pow(R, 4) - 4 * R * R * r * r) * x1 +
                      4 * R * R * d * (d * d + R * R - 2 * r * r);
    const double ny = -(-4 * d * d * x1 * x1 + 8 * std::pow(d, 3) * x1 - 3 * std::pow(d, 4) +
                        (-2 * R * R + 4 * r * r) * d * d + std::pow(R, 4) - 4 * R * R * r * r) *
                      y1;
    return {nx / den, ny / den};
}

double sextic_residual(const Poly2& f, const std::vector<Point>& pts) {
    double S = 0.0;
    for (const auto& q : pts) S = std::max(S, norm(q));
    const double scale = f.weighted_norm(S);
    double worst = 0.0;
    for (const auto& q : pts) worst = std::max(worst, std::abs(f.evaluate(q)));
    return worst / scale;
}

double verify_implicit_sextic_x2(const BicentricParams& p, const Locus& L) {
    return sextic_residual(x2_sextic_printed(p), L.valid_points());
}

namespace {

double cross3(Point o, Point a, Point b) { return cross(a - o, b - o); }

std::vector<Point> convex_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), [](Point p, Point q) { return p.x < q.x || (p.x == q.x && p.y < q.y); });
    if (pts.size() < 3) return pts;
    std::vector<Point> h(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross3(h[k - 2], h[k - 1], p) <= 0) --k;
        h[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lo = k + 1; i-- > 0;) {
        while (k >= lo && cross3(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

double distance_to_segment(Point p, Point a, Point b) {
    const Point ab = b - a;
    const double len2 = dot(ab, ab);
    double s = len2 > 0.0 ? dot(p - a, ab) / len2 : 0.0;
    s = std::clamp(s, 0.0, 1.0);
    return distance(p, a + s * ab);
}

}  // namespace

ConvexityResult convexity_report(const std::vector<Point>& curve, double zero_tol) {
    ConvexityResult out;
    std::vector<Point> edges;
    const std::size_t n = curve.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point e = curve[(i + 1) % n] - curve[i];
        if (norm(e) > 0.0) edges.push_back(e);
    }
    if (edges.size() < 3) return out;

    std::vector<double> turns(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Point e = edges[i], f = edges[(i + 1) % edges.size()];
        turns[i] = cross(e, f) / (norm(e) * norm(f));
        out.total_turning += std::atan2(cross(e, f), dot(e, f));
    }
    const double orient = out.total_turning >= 0.0 ? 1.0 : -1.0;
    out.min_turn = orient * turns[0];
    int prev = 0;
    for (double s : turns) {
        const double v = orient * s;
        out.min_turn = std::min(out.min_turn, v);
        const int sign = v > zero_tol ? 1 : (v < -zero_tol ? -1 : 0);
        if (sign != 0 && sign != prev) {
            ++out.sign_runs;
            prev = sign;
        }
    }
    bool convex = out.min_turn >= -zero_tol;
    if (convex && std::abs(out.total_turning) > 2 * M_PI + 1e-3) {
        // winds more than once: convex only if it retraces its own hull
        const auto hull = convex_hull(curve);
        double diam = 0.0;
        for (const auto& p : hull) diam = std::max(diam, distance(p, hull.front()));
        for (const auto& p : curve) {
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < hull.size(); ++i) {
                best = std::min(best, distance_to_segment(p, hull[i], hull[(i + 1) % hull.size()]));
            }
            out.hull_gap = std::max(out.hull_gap, best / diam);
        }
        convex = out.hull_gap <= 1e-6;
    }
    out.convex = convex;
    return out;
}

bool convexity_check(const std::vector<Point>& curve, double zero_tol) {
    return convexity_report(curve, zero_tol).convex;
}

std::vector<double> convexity_quintic(double a, double b) {
    const double a2 = a * a, b2 = b * b, c2 = a2 - b2;
    const double a4 = a2 * a2, b4 = b2 * b2;
    return {c2 * c2 * c2 * c2,
            b2 * (3 * a4 - 2 * a2 * b2 + 3 * b4) * c2 * c2,
            2 * a2 * b4 * (a4 + 5 * a2 * b2 - 2 * b4) * c2,
            2 * a4 * b4 * b2 * (a4 + b4),
            -b4 * b4 * a4 * a2 * (11 * a2 - 4 * b2),
            3 * b4 * b4 * b2 * a4 * a4};
}

double polynomial_residual(const std::vector<double>& c, double x) {
    double v = 0.0, mag = 0.0;
    for (double k : c) {
        v = v * x + k;
        mag = mag * std::abs(x) + std::abs(k);
    }
    return std::abs(v) / mag;
}

std::vector<double> real_polynomial_roots(const std::vector<double>& c) {
    const auto deg = static_cast<Eigen::Index>(c.size()) - 1;
    std::vector<double> out;
    if (deg < 1) return out;
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
    for (Eigen::Index j = 0; j < deg; ++j) comp(0, j) = -c[static_cast<std::size_t>(j) + 1] / c[0];
    for (Eigen::Index i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    for (Eigen::Index i = 0; i < deg; ++i) {
        const std::complex<double> z = es.eigenvalues()(i);
        if (std::abs(z.imag()) > 1e-7 * std::max(1.0, std::abs(z))) continue;
        double x = z.real();
        for (int it = 0; it < 8; ++it) {  // Newton polish
            double v = 0.0, dv = 0.0;
            for (double k : c) {
                dv = dv * x + v;
                v = v * x + k;
            }
            if (dv == 0.0) break;
            const double step = v / dv;
            x -= step;
            if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
        }
        out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<double> largest_root_below(const std::vector<double>& roots, double bound) {
    std::optional<double> best;
    for (double x : roots) {
        if (x >= 0.0 && x < bound && (!best || x > *best)) best = x;
    }
    return best;
}

ConvexityRoot convexity_lambda_root(double a, double b) {
    if (!(a > b) || !(b > 0.0)) throw GeometryError(ErrorCode::InvalidParameters, "need a > b > 0");
    ConvexityRoot out;
    const auto q = convexity_quintic(a, b);
    out.real_roots = real_polynomial_roots(q);
    out.bound = critical_lambda(a, b);
    const auto root = largest_root_below(out.real_roots, out.bound);
    if (!root) throw GeometryError(ErrorCode::NoConvexityRoot, "no real root in [0, critical lambda)");
    out.lambda_o = *root;
    out.residual = polynomial_residual(q, out.lambda_o);
    return out;
}

}  // namespace poncelet
