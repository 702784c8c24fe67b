// Acceptance run: one PASS/FAIL line per criterion; exit status 1 when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "poncelet/verification.hpp"

using namespace poncelet;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

FamilyConfig bic(FamilyKind kind, double r, double d) {
    FamilyConfig c;
    c.kind = kind;
    c.bic = {1.0, r, d, std::nullopt};
    return resolve(c);
}

FamilyConfig conf(double a, double b, double lambda) {
    FamilyConfig c;
    c.kind = FamilyKind::ConfII;
    c.conf = {a, b, lambda, std::nullopt};
    return resolve(c);
}

std::vector<Point> pts(const FamilyConfig& cfg, const char* tracked, int n = 512) {
    return trace_locus(cfg, *parse_tracked(tracked), n).valid_points();
}

const std::vector<std::pair<double, double>>& rd_grid() {
    static const std::vector<std::pair<double, double>> g = [] {
        std::vector<std::pair<double, double>> out;
        for (double r : {0.15, 0.2, 0.25})
            for (double d : {0.2, 0.3, 0.4})
                if (r + d < 1.0) out.push_back({r, d});
        return out;
    }();
    return g;
}

Outcome c1() {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0;
    for (auto [r, d] : rd_grid()) {
        const auto c = bicII_x1_circle({1, r, d, std::nullopt});
        worst = std::max(worst, max_circle_deviation(pts(bic(FamilyKind::BicII, r, d), "X1"), c.center, std::abs(c.radius)));
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {worst <= 1e-9 && secs < 1.0, "max distance " + fmt("%.2e", worst) + " over 9 (r,d), " + fmt("%.3f", secs) + " s"};
}

Outcome c2() {
    double r1 = 0, spread = 0;
    for (double r : {0.15, 0.2, 0.25, 0.3}) {
        const double d = std::sqrt(1.0 * (1.0 - 2 * r));
        r1 = std::max(r1, std::abs(bicII_x1_circle({1, r, d, std::nullopt}).radius));
        spread = std::max(spread, stationarity_spread(trace_locus(bic(FamilyKind::BicII, r, d), *parse_tracked("X1"), 512)));
    }
    return {r1 <= 1e-12 && spread <= 1e-10, "|r1| " + fmt("%.2e", r1) + ", X1 spread " + fmt("%.2e", spread)};
}

Outcome c3() {
    double worst = 0, rel = 0;
    for (auto [r, d] : rd_grid()) {
        const auto c = bicII_x1_circle({1, r, d, std::nullopt});
        worst = std::max(worst, max_circle_deviation(pts(bic(FamilyKind::BicII, r, d), "P1'"), -c.center, c.excenter_radius));
    }
    for (double r : {0.15, 0.2, 0.25, 0.3}) {
        const auto c = bicII_x1_circle({1, r, std::sqrt(1 - 2 * r), std::nullopt});
        rel = std::max(rel, std::abs(c.excenter_radius - 2.0) / 2.0);
    }
    return {worst <= 1e-9 && rel <= 1e-12, "P1' distance " + fmt("%.2e", worst) + ", |r1'-2R|/2R " + fmt("%.2e", rel)};
}

Outcome c4() {
    double printed = 0, conic = std::numeric_limits<double>::infinity();
    for (auto [r, d] : rd_grid()) {
        const Locus L = trace_locus(bic(FamilyKind::BicII, r, d), *parse_tracked("X2"), 512);
        printed = std::max(printed, verify_implicit_sextic_x2({1, r, d, std::nullopt}, L));
        conic = std::min(conic, fit_curve(L.valid_points(), 2).residual);
    }
    return {printed <= 1e-8 && conic > 1e-3,
            "printed polynomial residual " + fmt("%.2e", printed) + ", smallest degree-2 residual " + fmt("%.2e", conic)};
}

Outcome c5() {
    const LocusTolerances tol;
    const double a = 2, b = 1;
    double ell = 0, p1_conic = std::numeric_limits<double>::infinity(), p1_deg6 = 0;
    std::string worst_lambda;
    for (double lam : {0.2, 0.5, 0.8, critical_lambda(a, b)}) {
        const FamilyConfig cfg = conf(a, b, lam);
        const auto e = confII_excentral_ellipse(cfg.conf);
        ell = std::max({ell, max_ellipse_deviation(pts(cfg, "P2'"), e.a, e.b), max_ellipse_deviation(pts(cfg, "P3'"), e.a, e.b)});
        const auto p1 = pts(cfg, "P1'");
        const double cr = fit_curve(p1, 2).residual;
        if (cr < p1_conic) {
            p1_conic = cr;
            worst_lambda = fmt("%.4g", lam);
        }
        p1_deg6 = std::max(p1_deg6, fit_curve(p1, 6).residual);
    }
    return {ell <= 1e-9 && p1_conic > 10 * tol.conic_tol && p1_deg6 <= 1e-8,
            "P2'/P3' ellipse residual " + fmt("%.2e", ell) + ", smallest P1' conic residual " + fmt("%.2e", p1_conic) +
                " (lambda " + worst_lambda + "), largest P1' degree-6 residual " + fmt("%.2e", p1_deg6)};
}

Outcome c6() {
    const auto r = check_n4_excentral(2, 1);
    const double ratio = r.checks[0].value;
    double through = 0;
    for (const auto& c : r.checks)
        if (c.name.rfind("distance from the center", 0) == 0) through = c.value;
    return {ratio <= 1e-10 && through <= 1e-9, "|a_e/b_e - b/a| " + fmt("%.2e", ratio) + ", chord distance " + fmt("%.2e", through)};
}

Outcome c7() {
    const auto n6 = n6_caustic(2, 1);
    const auto e = confII_excentral_ellipse({2, 1, 4 - n6.a * n6.a, std::nullopt});
    const double rel = std::abs(e.a - e.b) / e.a;
    return {rel <= 1e-10, "|a_e - b_e|/a_e " + fmt("%.2e", rel)};
}

Outcome c8() {
    const double dev = max_ellipse_deviation(pts(conf(2, 1, 0.8), "X2"), 2.0 / 3, 1.0 / 3);
    return {dev <= 1e-9, "X2 residual against (a/3, b/3) " + fmt("%.2e", dev)};
}

Outcome c9() {
    const FamilyConfig b2 = bic(FamilyKind::BicII, 0.2, 0.3);
    const auto eb = bic2_envelope(b2.bic);
    double tb = 0, tc = 0, through = 0;
    for (const auto& l : free_side_lines(b2, 512)) tb = std::max(tb, std::abs(line_tangent_to_conic_residual(l, eb.conic)));
    const FamilyConfig c2 = conf(2, 1, 0.5);
    const auto ec = conf2_envelope(c2.conf);
    for (const auto& l : free_side_lines(c2, 512)) tc = std::max(tc, std::abs(line_tangent_to_conic_residual(l, ec.conic)));
    const double d = 0.3, r0 = (1 - d * d) / std::sqrt(2 * (1 + d * d));
    const FamilyConfig bz = bic(FamilyKind::BicII, r0, d);
    const auto ez = bic2_envelope(bz.bic);
    for (const auto& l : free_side_lines(bz, 512)) through = std::max(through, std::abs(l.signed_distance(ez.center)));
    return {tb <= 1e-9 && tc <= 1e-9 && through <= 1e-8,
            "tangency " + fmt("%.2e", tb) + " (bic-II), " + fmt("%.2e", tc) + " (conf-II), degenerate point distance " +
                fmt("%.2e", through)};
}

Outcome c10() {
    const VerifyInputs in;
    const std::array<std::pair<FamilyKind, const char*>, 6> expected_rows{{{FamilyKind::BicI, "PCPCCC"},
                                                                   {FamilyKind::BicII, "C6PC66"},
                                                                   {FamilyKind::BicIII, "NNPNNN"},
                                                                   {FamilyKind::ConfI, "EEEEEE"},
                                                                   {FamilyKind::ConfII, "NNN6EE"},
                                                                   {FamilyKind::ConfIII, "NNNNNN"}}};
    const std::array<const char*, 6> tracked{"X1", "X2", "X3", "P1'", "P2'", "P3'"};
    int bad = 0;
    std::string cells;
    for (const auto& [kind, row] : expected_rows) {
        const FamilyConfig cfg = default_family(kind, in);
        for (std::size_t j = 0; j < 6; ++j) {
            const auto fit = classify_locus(trace_locus(cfg, *parse_tracked(tracked[j]), in.samples), in.tol);
            bool ok;
            switch (row[j]) {
                case 'P': ok = fit.verdict == Verdict::Point; break;
                case 'C': ok = fit.verdict == Verdict::Circle; break;
                case 'E': ok = fit.verdict == Verdict::Ellipse; break;
                case '6': ok = fit.verdict == Verdict::AlgebraicDegree && fit.degree == 6; break;
                default:
                    ok = fit.verdict == Verdict::NonConic || (fit.verdict == Verdict::AlgebraicDegree && fit.degree > 6);
            }
            if (!ok) {
                ++bad;
                cells += std::string(" ") + to_string(kind) + "/" + tracked[j] + "=" +
                         (fit.verdict == Verdict::AlgebraicDegree ? "deg" + std::to_string(fit.degree) : to_string(fit.verdict));
            }
        }
    }
    return {bad == 0, std::to_string(bad) + " of 36 cells differ:" + cells};
}

Outcome c11() {
    const VerifyInputs in;
    const std::string row2 = "CPEECXEXXXCEEE";
    const FamilyConfig b1 = default_family(FamilyKind::BicI, in), b2 = default_family(FamilyKind::BicII, in),
                       b3 = default_family(FamilyKind::BicIII, in);
    const auto& ids = table1_centers();
    double spread = 0;
    int bad = 0;
    std::string cells;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        const TrackedPoint tp{TrackedPoint::Kind::Center, ids[i]};
        spread = std::max(spread, stationarity_spread(trace_locus(b1, tp, 512)));
        const Verdict v2 = classify_locus(trace_locus(b2, tp, 512), in.tol).verdict;
        const Verdict v3 = classify_locus(trace_locus(b3, tp, 512), in.tol).verdict;
        const bool conic2 = v2 == Verdict::Circle || v2 == Verdict::Ellipse || v2 == Verdict::Point;
        const bool ok2 = row2[i] == 'P' ? v2 == Verdict::Point : (row2[i] == 'X' ? !conic2 : (v2 == Verdict::Circle || v2 == Verdict::Ellipse));
        const bool conic3 = v3 == Verdict::Circle || v3 == Verdict::Ellipse || v3 == Verdict::Point;
        const bool ok3 = ids[i] == 3 ? v3 == Verdict::Point : !conic3;
        if (!ok2) cells += " bic-II/X" + std::to_string(ids[i]) + "=" + to_string(v2);
        if (!ok3) cells += " bic-III/X" + std::to_string(ids[i]) + "=" + to_string(v3);
        bad += !ok2 + !ok3;
    }
    return {spread <= 1e-9 && bad == 0, "bic-I spread " + fmt("%.2e", spread) + ", " + std::to_string(bad) + " cells differ:" + cells};
}

Outcome c12() {
    const auto bi = check_bicI_conserved(1, 0.25);
    const auto ci = check_confI_conserved(2, 1);
    auto val = [](const ClaimReport& r, const std::string& prefix) {
        for (const auto& c : r.checks)
            if (c.name.rfind(prefix, 0) == 0) return c.value;
        return std::numeric_limits<double>::infinity();
    };
    const double cosdev = val(bi, "|sum cos"), per = val(ci, "perimeter"), x9 = val(ci, "X9 spread"),
                 rec = std::max(val(ci, "|a1/b1 - b_e/a_e| (closed"), val(ci, "|a1/b1 - b_e/a_e| (fitted"));
    return {cosdev <= 1e-10 && per <= 1e-9 && x9 <= 1e-10 && rec <= 1e-10,
            "cosines " + fmt("%.2e", cosdev) + ", perimeter " + fmt("%.2e", per) + ", X9 " + fmt("%.2e", x9) +
                ", aspect " + fmt("%.2e", rec)};
}

Outcome c13() {
    const auto r = check_convexity_quintic(2, 1);
    return {r.checks[0].pass && r.checks[2].pass,
            "quintic residual " + fmt("%.2e", r.checks[0].value) + ", transition offset " + fmt("%.2e", r.checks[2].value) +
                ", lambda_o " + fmt("%.6f", convexity_lambda_root(2, 1).lambda_o)};
}

Outcome c14() {
    const auto r = check_four_branches({1, 0.15, 0.25, 0.4});
    return {r.pass, r.observed + ", separation " + fmt("%.3g", r.checks[1].value)};
}

Outcome c15() {
    std::ostringstream out, err;
    const auto t0 = std::chrono::steady_clock::now();
    const int code = cli::run({"verify", "--all", "--json"}, out, err);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {secs < 60.0 && code != cli::kUsage, fmt("%.2f", secs) + " s (exit status " + std::to_string(code) + ")"};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"bic-II incenter circle over the (r,d) grid", c1},
        {"degenerate radius at the poristic distance", c2},
        {"excenter circle and r1' = 2R", c3},
        {"printed barycenter sextic", c4},
        {"conf-II excentral ellipse and P1' sextic", c5},
        {"N=4 excentral aspect and chords through the center", c6},
        {"N=6 excentral circle", c7},
        {"N=4 barycenter homothety", c8},
        {"third-side envelopes", c9},
        {"locus-type table over six families (strict rule)", c10},
        {"stationary-center table", c11},
        {"conserved quantities", c12},
        {"convexity quintic root", c13},
        {"two distinct envelopes over four branches", c14},
        {"full verification run time", c15},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        failed += !o.pass;
        std::printf("criterion %2zu: %s  %s: %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
