#include <gtest/gtest.h>

#include <cmath>

#include "poncelet/error.hpp"
#include "poncelet/families.hpp"
#include "poncelet/loci.hpp"

using namespace poncelet;

namespace {

FamilyConfig bic(FamilyKind kind, double r, double d, std::optional<double> u = std::nullopt) {
    FamilyConfig c;
    c.kind = kind;
    c.bic = {1, r, d, u};
    return c;
}

FamilyConfig conf(FamilyKind kind, double lambda) {
    FamilyConfig c;
    c.kind = kind;
    c.conf = {2, 1, lambda, std::nullopt};
    return c;
}

std::vector<Point> circle_points(int n, Point c, double r) {
    std::vector<Point> out;
    for (int i = 0; i < n; ++i) out.push_back({c.x + r * std::cos(2 * M_PI * i / n), c.y + r * std::sin(2 * M_PI * i / n)});
    return out;
}

}  // namespace

TEST(Trace, PoristicIncenterIsFixed) {
    const Locus L = trace_locus(bic(FamilyKind::BicI, 0.25, 0), *parse_tracked("X1"), 64);
    for (const auto& s : L.samples) {
        EXPECT_NEAR(s.p.x, std::sqrt(0.5), 1e-12);
        EXPECT_NEAR(s.p.y, 0, 1e-12);
    }
}

TEST(Trace, VertexLocusIsTheOuterConic) {
    for (const auto& s : trace_locus(conf(FamilyKind::ConfII, 0.5), *parse_tracked("P1"), 64).samples)
        EXPECT_NEAR(s.p.x * s.p.x / 4 + s.p.y * s.p.y, 1, 1e-13);
    for (const auto& s : trace_locus(bic(FamilyKind::BicIII, 0.15, 0.25, 0.4), *parse_tracked("P3"), 64).samples)
        EXPECT_NEAR(norm(s.p), 1, 1e-13);
}

TEST(Trace, NeedsThirtyTwoSamples) {
    EXPECT_THROW(trace_locus(conf(FamilyKind::ConfI, 0), *parse_tracked("X1"), 16), GeometryError);
    EXPECT_EQ(sample_locus(conf(FamilyKind::ConfI, 0), *parse_tracked("X1"), 16).samples.size(), 16u);
}

TEST(Fit, UnitCircle) {
    const auto fit = fit_curve(circle_points(64, {0, 0}, 1), 2);
    EXPECT_LE(fit.residual, 1e-12);
    ASSERT_TRUE(fit.conic);
    const auto& c = fit.conic->coeffs();
    const double k = c[0];
    EXPECT_NEAR(c[1] / k, 0, 1e-10);
    EXPECT_NEAR(c[2] / k, 1, 1e-10);
    EXPECT_NEAR(c[5] / k, -1, 1e-10);
}

TEST(Fit, Ellipse) {
    std::vector<Point> pts;
    for (int i = 0; i < 128; ++i) pts.push_back({2 * std::cos(0.05 * i), std::sin(0.05 * i)});
    const auto fit = classify_points(pts, 2.0);
    EXPECT_EQ(fit.verdict, Verdict::Ellipse);
    EXPECT_NEAR(fit.conic->semi_axes()->major, 2, 1e-10);
    EXPECT_NEAR(fit.conic->semi_axes()->minor, 1, 1e-10);
}

TEST(Fit, PointAndCircleVerdicts) {
    EXPECT_EQ(classify_points(std::vector<Point>(40, Point{0.3, 0.1}), 1.0).verdict, Verdict::Point);
    const auto c = classify_points(circle_points(100, {0.2, -0.1}, 0.7), 1.0);
    EXPECT_EQ(c.verdict, Verdict::Circle);
    EXPECT_EQ(c.degree, 2);
}

TEST(Fit, LemniscateIsQuartic) {
    // (x^2 + y^2)^2 = 2 (x^2 - y^2), sampled away from the node
    std::vector<Point> pts;
    for (int i = 0; i < 200; ++i) {
        const double t = -0.7 + 1.4 * i / 199;
        const double rr = std::sqrt(2 * std::cos(2 * t));
        pts.push_back({rr * std::cos(t), rr * std::sin(t)});
        pts.push_back({-rr * std::cos(t), -rr * std::sin(t)});
    }
    const auto fit = classify_points(pts, 1.4);
    EXPECT_EQ(fit.verdict, Verdict::AlgebraicDegree);
    EXPECT_EQ(fit.degree, 4);
}

TEST(Classify, BilliardIncenterEllipse) {
    const FamilyConfig cfg = conf(FamilyKind::ConfI, 0);
    const auto fit = classify_locus(trace_locus(cfg, *parse_tracked("X1"), 512));
    ASSERT_EQ(fit.verdict, Verdict::Ellipse);
    const double delta = std::sqrt(13.0);
    EXPECT_NEAR(fit.conic->semi_axes()->major, (delta - 1) / 2, 1e-9);
    EXPECT_NEAR(fit.conic->semi_axes()->minor, 4 - delta, 1e-9);
}

TEST(Classify, BicIIBarycenterIsSextic) {
    const auto pts = trace_locus(bic(FamilyKind::BicII, 0.2, 0.3), *parse_tracked("X2"), 512).valid_points();
    EXPECT_GT(fit_curve(pts, 2).residual, 1e-3);
    EXPECT_LE(fit_curve(pts, 6).residual, 1e-9);
    EXPECT_EQ(classify_points(pts, 1.0).verdict, Verdict::AlgebraicDegree);
    EXPECT_EQ(classify_points(pts, 1.0).degree, 6);
}

TEST(Classify, BicIIIIncenterIsNotAConic) {
    const auto fit = classify_locus(trace_locus(bic(FamilyKind::BicIII, 0.15, 0.25, 0.4), *parse_tracked("X1"), 512));
    EXPECT_NE(fit.verdict, Verdict::Point);
    EXPECT_NE(fit.verdict, Verdict::Circle);
    EXPECT_NE(fit.verdict, Verdict::Ellipse);
    EXPECT_GT(fit.residual_by_degree.at(2), 1e-4);
}

TEST(Sextic, EliminatedPolynomialVanishesOnTheLocus) {
    const BicentricParams p{1, 0.2, 0.3, std::nullopt};
    const Locus L = trace_locus(bic(FamilyKind::BicII, 0.2, 0.3), *parse_tracked("X2"), 512);
    const Poly2 f = x2_sextic_eliminated(p);
    EXPECT_EQ(f.degree(), 6);
    EXPECT_LE(sextic_residual(f, L.valid_points()), 1e-8);
    // rigid motion moves the samples off the curve
    std::vector<Point> moved;
    for (const auto& q : L.valid_points()) moved.push_back({q.x * std::cos(0.3) - q.y * std::sin(0.3) + 0.05, q.x * std::sin(0.3) + q.y * std::cos(0.3)});
    EXPECT_GT(sextic_residual(f, moved), 1e-4);
}

TEST(Sextic, ParametrizationMatchesTrace) {
    const BicentricParams p{1, 0.2, 0.3, std::nullopt};
    for (const auto& s : trace_locus(bic(FamilyKind::BicII, 0.2, 0.3), *parse_tracked("X2"), 128).samples)
        EXPECT_LT(distance(s.p, x2_parametrization(p, s.t)), 1e-13);
}

TEST(Sextic, PoristicLimitStillVanishes) {
    const double d = chapple_distance(1, 0.25);
    const BicentricParams p{1, 0.25, d, std::nullopt};
    const auto pts = trace_locus(bic(FamilyKind::BicII, 0.25, d), *parse_tracked("X2"), 512).valid_points();
    EXPECT_LE(sextic_residual(x2_sextic_eliminated(p), pts), 1e-8);
}

TEST(Poly, Arithmetic) {
    Poly2 x, y;
    x.add(1, 0, 1);
    y.add(0, 1, 1);
    const Poly2 f = x * x + y * y + (-1.0) * (x * y);
    EXPECT_EQ(f.degree(), 2);
    EXPECT_DOUBLE_EQ(f.evaluate({2, 3}), 4 + 9 - 6);
    EXPECT_DOUBLE_EQ(f.magnitude({2, 3}), 4 + 9 + 6);
    EXPECT_DOUBLE_EQ(f.weighted_norm(2), 12);
}

TEST(Convexity, CircleAndLimacon) {
    EXPECT_TRUE(convexity_check(circle_points(200, {0, 0}, 1)));
    std::vector<Point> lim;
    for (int i = 0; i < 400; ++i) {
        const double t = 2 * M_PI * i / 400, rr = 0.5 + std::cos(t);
        lim.push_back({rr * std::cos(t), rr * std::sin(t)});
    }
    EXPECT_FALSE(convexity_check(lim));
    // a circle traversed three times is still convex
    std::vector<Point> triple;
    for (int i = 0; i < 300; ++i) triple.push_back({std::cos(6 * M_PI * i / 300), std::sin(6 * M_PI * i / 300)});
    EXPECT_TRUE(convexity_check(triple));
}

TEST(Convexity, IncenterLocusAroundTheQuinticRoot) {
    const double lo = convexity_lambda_root(2, 1).lambda_o;
    EXPECT_TRUE(convexity_check(trace_locus(conf(FamilyKind::ConfII, lo - 0.05), *parse_tracked("X1"), 2048).valid_points()));
    EXPECT_FALSE(convexity_check(trace_locus(conf(FamilyKind::ConfII, lo + 0.05), *parse_tracked("X1"), 2048).valid_points()));
}

TEST(Quintic, RootAndHomogeneity) {
    const auto r = convexity_lambda_root(2, 1);
    EXPECT_LE(r.residual, 1e-10);
    EXPECT_GT(r.lambda_o, 0);
    EXPECT_LT(r.lambda_o, critical_lambda(2, 1));
    for (double k : {0.5, 3.0}) EXPECT_NEAR(convexity_lambda_root(2 * k, k).lambda_o, k * k * r.lambda_o, 1e-9 * k * k);
}

TEST(Quintic, RootFinderOnKnownPolynomial) {
    // (x - 1)(x + 2)(x - 0.5)(x^2 + 1)
    const auto roots = real_polynomial_roots({1, 0.5, -1.5, 1.5, -2.5, 1});
    ASSERT_EQ(roots.size(), 3u);
    std::vector<double> want{-2, 0.5, 1};
    for (double w : want) {
        double best = 1;
        for (double x : roots) best = std::min(best, std::abs(x - w));
        EXPECT_LT(best, 1e-12);
    }
    EXPECT_EQ(largest_root_below(roots, 0.9), 0.5);
    EXPECT_FALSE(largest_root_below({-3.0}, 1.0));
}

TEST(Stationarity, Spread) {
    EXPECT_NEAR(stationarity_spread(circle_points(64, {5, 5}, 1), 1.0), 2.0, 1e-12);
}
