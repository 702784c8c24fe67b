#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "poncelet/error.hpp"
#include "poncelet/families.hpp"
#include "poncelet/loci.hpp"
#include "poncelet/verification.hpp"

namespace poncelet::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Flat numeric flags; presence is tracked so a config file can fill the gaps.
const std::vector<std::string> kNumericFlags{"R", "r", "d", "u", "a", "b", "lambda", "pencil-u",
                                             "point-tol", "conic-tol", "curve-tol", "t"};

struct Options {
    std::map<std::string, std::optional<double>> num;
    std::optional<std::string> family;
    std::optional<std::string> branch;
    std::vector<std::string> centers;
    std::optional<int> samples;
    std::optional<int> max_degree;
    std::optional<std::string> out;
    std::optional<std::string> config;
    bool json_out = false;
    bool all = false;
    std::vector<std::string> claims;
    std::string table_id;

    std::optional<double> get(const std::string& k) const {
        const auto it = num.find(k);
        return it == num.end() ? std::nullopt : it->second;
    }
};

struct Bindings {
    std::map<std::string, double> store;
    std::map<std::string, CLI::Option*> opts;
    std::string family, branch, out, config;
    CLI::Option *family_opt = nullptr, *branch_opt = nullptr, *out_opt = nullptr, *config_opt = nullptr,
                *samples_opt = nullptr, *maxdeg_opt = nullptr;
    int samples = 0, max_degree = 0;
};

void add_family_flags(CLI::App* sub, Bindings& b) {
    b.family_opt = sub->add_option("--family", b.family, "bic-I, bic-II, bic-III, conf-I, conf-II or conf-III");
    for (const auto& k : kNumericFlags) {
        b.store[k] = 0.0;
        b.opts[k] = sub->add_option("--" + k, b.store[k]);
    }
    b.branch_opt = sub->add_option("--branch", b.branch, "tangent choice, e.g. +- or plus,minus");
    b.samples_opt = sub->add_option("-n,--samples", b.samples, "number of samples");
    b.maxdeg_opt = sub->add_option("--max-degree", b.max_degree, "highest implicit degree tried");
    b.out_opt = sub->add_option("--out", b.out, "output file (stdout when omitted)");
    b.config_opt = sub->add_option("--config", b.config, "JSON file with defaults for any flag");
}

Options collect(const Bindings& b) {
    Options o;
    for (const auto& [k, opt] : b.opts) {
        if (opt->count()) o.num[k] = b.store.at(k);
    }
    if (b.family_opt->count()) o.family = b.family;
    if (b.branch_opt->count()) o.branch = b.branch;
    if (b.out_opt->count()) o.out = b.out;
    if (b.config_opt->count()) o.config = b.config;
    if (b.samples_opt->count()) o.samples = b.samples;
    if (b.maxdeg_opt->count()) o.max_degree = b.max_degree;
    return o;
}

// Flags win over the config file.
void merge_config(Options& o) {
    if (!o.config) return;
    std::ifstream in(*o.config);
    if (!in) throw UsageError("cannot read config " + *o.config);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw UsageError("bad config: " + std::string(e.what()));
    }
    if (!j.is_object()) throw UsageError("config must be a JSON object");
    try {
        for (const auto& k : kNumericFlags) {
            std::string key = k;
            std::replace(key.begin(), key.end(), '-', '_');
            if (!o.get(k) && j.contains(key)) o.num[k] = j.at(key).get<double>();
        }
        if (!o.family && j.contains("family")) o.family = j.at("family").get<std::string>();
        if (!o.branch && j.contains("branch")) o.branch = j.at("branch").get<std::string>();
        if (!o.samples && j.contains("samples")) o.samples = j.at("samples").get<int>();
        if (!o.max_degree && j.contains("max_degree")) o.max_degree = j.at("max_degree").get<int>();
        if (!o.out && j.contains("out")) o.out = j.at("out").get<std::string>();
        if (o.centers.empty() && j.contains("centers")) o.centers = j.at("centers").get<std::vector<std::string>>();
    } catch (const json::exception& e) {
        throw UsageError("bad config value: " + std::string(e.what()));
    }
}

double need(const Options& o, const std::string& k, FamilyKind kind) {
    const auto v = o.get(k);
    if (!v) throw UsageError(std::string(to_string(kind)) + " needs --" + k);
    return *v;
}

FamilyConfig family_from(const Options& o) {
    if (!o.family) throw UsageError("--family is required");
    const auto kind = parse_family(*o.family);
    if (!kind) throw UsageError("unknown family " + *o.family);
    FamilyConfig cfg;
    cfg.kind = *kind;
    if (is_bicentric(*kind)) {
        cfg.bic.R = need(o, "R", *kind);
        cfg.bic.r = need(o, "r", *kind);
        if (*kind != FamilyKind::BicI) cfg.bic.d = need(o, "d", *kind);
        if (*kind == FamilyKind::BicIII) cfg.bic.u = need(o, "u", *kind);
    } else {
        cfg.conf.a = need(o, "a", *kind);
        cfg.conf.b = need(o, "b", *kind);
        if (*kind != FamilyKind::ConfI) cfg.conf.lambda = need(o, "lambda", *kind);
        if (*kind == FamilyKind::ConfIII) cfg.conf.pencil_u = need(o, "pencil-u", *kind);
    }
    if (o.branch) {
        const auto br = parse_branch(*o.branch);
        if (!br) throw UsageError("bad --branch " + *o.branch);
        cfg.branch = *br;
    }
    return resolve(cfg);
}

LocusTolerances tolerances_from(const Options& o) {
    LocusTolerances tol;
    if (auto v = o.get("point-tol")) tol.point_tol = *v;
    if (auto v = o.get("conic-tol")) tol.conic_tol = *v;
    if (auto v = o.get("curve-tol")) tol.curve_tol = *v;
    if (o.max_degree) tol.max_degree = *o.max_degree;
    return tol;
}

int samples_from(const Options& o, int fallback) {
    const int n = o.samples.value_or(fallback);
    if (n <= 0) throw UsageError("-n must be positive");
    return n;
}

std::vector<TrackedPoint> tracked_from(const Options& o, bool required) {
    if (required && o.centers.empty()) throw UsageError("--center is required");
    std::vector<TrackedPoint> out;
    for (const auto& c : o.centers) {
        const auto tp = parse_tracked(c);
        if (!tp) throw UsageError("unknown tracked point " + c);
        out.push_back(*tp);
    }
    return out;
}

// Writes to --out or the given stream.
void emit(const Options& o, const std::string& text, std::ostream& out) {
    if (!o.out) {
        out << text;
        return;
    }
    std::ofstream f(*o.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + *o.out);
    f << text;
    if (!f) throw std::runtime_error("write failed for " + *o.out);
}

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json point_json(Point p) { return json::array({p.x, p.y}); }

json family_json(const FamilyConfig& cfg) {
    json j;
    j["family"] = to_string(cfg.kind);
    if (is_bicentric(cfg.kind)) {
        j["R"] = cfg.bic.R;
        j["r"] = cfg.bic.r;
        j["d"] = cfg.bic.d;
        if (cfg.kind == FamilyKind::BicIII) j["u"] = cfg.bic.u.value_or(0.0);
    } else {
        j["a"] = cfg.conf.a;
        j["b"] = cfg.conf.b;
        j["lambda"] = cfg.conf.lambda;
        if (cfg.kind == FamilyKind::ConfIII) j["pencil_u"] = cfg.conf.pencil_u.value_or(0.0);
    }
    if (cfg.kind == FamilyKind::BicIII || cfg.kind == FamilyKind::ConfIII) j["branch"] = to_string(cfg.branch);
    return j;
}

json conic_json(const Conic& c) {
    json j;
    j["kind"] = to_string(c.kind());
    j["coeffs"] = c.coeffs();
    if (c.center()) j["center"] = point_json(*c.center());
    if (c.semi_axes()) {
        j["semi_axes"] = json::array({c.semi_axes()->major, c.semi_axes()->minor});
        j["angle"] = c.shape().angle;
    }
    return j;
}

json report_json(const ClaimReport& r) {
    json j;
    j["claim_id"] = r.claim_id;
    j["title"] = r.title;
    j["kind"] = r.conjecture ? "conjecture" : "claim";
    if (r.conjecture) {
        j["status"] = r.pass ? "numerical evidence: consistent" : "numerical evidence: counterexample";
    } else {
        j["status"] = r.pass ? "pass" : "fail";
    }
    j["metric"] = r.metric;
    j["tolerance"] = r.tolerance;
    j["expected"] = r.expected;
    j["observed"] = r.observed;
    j["params"] = r.params ? family_json(*r.params) : json(nullptr);
    json checks = json::array();
    for (const auto& c : r.checks) {
        checks.push_back({{"name", c.name},
                          {"value", c.value},
                          {"relation", c.at_most ? "<=" : ">"},
                          {"threshold", c.threshold},
                          {"pass", c.pass}});
    }
    j["checks"] = checks;
    j["notes"] = r.notes;
    if (!r.table.empty()) j["table"] = r.table;
    return j;
}

json fit_json(const Locus& L, const CurveFit& fit) {
    json j;
    j["tracked"] = L.tracked.label();
    j["params"] = family_json(L.family);
    j["samples"] = L.samples.size();
    j["valid_samples"] = L.valid_count();
    j["verdict"] = to_string(fit.verdict);
    j["degree"] = fit.degree;
    j["residual"] = fit.residual;
    j["ambiguous"] = fit.ambiguous;
    json by = json::object();
    for (const auto& [deg, res] : fit.residual_by_degree) by[std::to_string(deg)] = res;
    j["residual_by_degree"] = by;
    j["spread"] = fit.spread;
    if (fit.verdict == Verdict::Point) {
        j["point"] = point_json(normalization_of(L.valid_points()).center);
    }
    if (fit.conic && (fit.verdict == Verdict::Circle || fit.verdict == Verdict::Ellipse)) {
        const auto& c = *fit.conic;
        if (c.center()) j["center"] = point_json(*c.center());
        if (c.semi_axes()) {
            j["semi_axes"] = json::array({c.semi_axes()->major, c.semi_axes()->minor});
            j["angle"] = c.shape().angle;
        }
        j["conic"] = c.coeffs();
    }
    const bool closed = L.valid_count() == L.samples.size();
    j["convex"] = closed && fit.verdict != Verdict::Point ? json(convexity_check(L.valid_points())) : json(nullptr);
    return j;
}

int cmd_trace(const Options& o, std::ostream& out) {
    const FamilyConfig cfg = family_from(o);
    const auto tracked = tracked_from(o, true);
    if (tracked.size() != 1) throw UsageError("trace takes exactly one --center");
    const Locus L = sample_locus(cfg, tracked.front(), samples_from(o, 512));
    std::string csv = "t,x,y,valid\n";
    for (const auto& s : L.samples) {
        csv += g17(s.t) + ",";
        csv += s.valid ? g17(s.p.x) + "," + g17(s.p.y) : std::string("nan,nan");
        csv += s.valid ? ",1\n" : ",0\n";
    }
    emit(o, csv, out);
    return kOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
    const FamilyConfig cfg = family_from(o);
    const auto tracked = tracked_from(o, true);
    const auto tol = tolerances_from(o);
    const int n = samples_from(o, 512);
    json arr = json::array();
    for (const auto& tp : tracked) {
        const Locus L = trace_locus(cfg, tp, n);
        arr.push_back(fit_json(L, classify_locus(L, tol)));
    }
    const json j = arr.size() == 1 ? arr.front() : arr;
    emit(o, j.dump(2) + "\n", out);
    return kOk;
}

VerifyInputs verify_inputs_from(const Options& o) {
    VerifyInputs in;
    auto set = [&](const char* k, double& field) {
        if (auto v = o.get(k)) field = *v;
    };
    for (auto* p : {&in.bic, &in.bic3}) {
        set("R", p->R);
        set("r", p->r);
        set("d", p->d);
    }
    if (auto v = o.get("u")) in.bic3.u = *v;
    for (auto* p : {&in.conf, &in.conf3}) {
        set("a", p->a);
        set("b", p->b);
    }
    set("lambda", in.conf.lambda);
    set("lambda", in.conf3.lambda);
    if (auto v = o.get("pencil-u")) in.conf3.pencil_u = *v;
    if (o.branch) {
        const auto br = parse_branch(*o.branch);
        if (!br) throw UsageError("bad --branch " + *o.branch);
        in.branch = *br;
    }
    in.samples = samples_from(o, in.samples);
    in.tol = tolerances_from(o);
    in.bic.validate();
    in.bic3.validate();
    in.conf.validate();
    in.conf3.validate();
    return in;
}

std::string summary_line(const ClaimReport& r) {
    char buf[512];
    const char* status = r.conjecture ? (r.pass ? "EVIDENCE" : "COUNTER ") : (r.pass ? "PASS    " : "FAIL    ");
    std::snprintf(buf, sizeof buf, "%s %-26s metric=%.3e tol=%.1e  %s", status, r.claim_id.c_str(), r.metric,
                  r.tolerance, r.observed.c_str());
    std::string s = buf;
    if (r.conjecture) s += " (numerical evidence)";
    return s + "\n";
}

std::string table_text(const ClaimReport& r) {
    std::string s;
    for (const auto& row : r.table) {
        for (const auto& cell : row) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%-14s", cell.c_str());
            s += buf;
        }
        s += "\n";
    }
    return s;
}

std::string details_text(const ClaimReport& r) {
    std::string s;
    for (const auto& c : r.checks) {
        char buf[320];
        std::snprintf(buf, sizeof buf, "    [%s] %s: %.3e %s %.1e\n", c.pass ? "ok" : "!!", c.name.c_str(), c.value,
                      c.at_most ? "<=" : ">", c.threshold);
        s += buf;
    }
    for (const auto& n : r.notes) s += "    note: " + n + "\n";
    return s;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const VerifyInputs in = verify_inputs_from(o);
    std::vector<std::string> ids = o.claims;
    if (o.all || ids.empty()) {
        ids.clear();
        for (const auto& c : claim_registry()) ids.push_back(c.id);
    }
    for (const auto& id : ids) {
        if (!find_claim(id)) throw UsageError("unknown claim " + id);
    }
    const auto reports = run_claims(ids, in);
    bool ok = true;
    for (const auto& r : reports) ok = ok && (r.pass || r.conjecture);

    if (o.json_out || o.out) {
        json j;
        j["status"] = ok ? "pass" : "fail";
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(report_json(r));
        j["claims"] = arr;
        emit(o, j.dump(2) + "\n", out);
    }
    if (!o.json_out) {
        for (const auto& r : reports) {
            out << summary_line(r);
            if (!r.pass || ids.size() == 1) out << details_text(r);
            if (ids.size() == 1 && !r.table.empty()) out << table_text(r);
        }
        out << (ok ? "all claims pass\n" : "some claims fail\n");
    }
    return ok ? kOk : kCheckFailed;
}

int cmd_table(const Options& o, std::ostream& out) {
    const VerifyInputs in = verify_inputs_from(o);
    ClaimReport r;
    if (o.table_id == "1") {
        r = check_table1(in);
    } else if (o.table_id == "2") {
        r = summary_table(in);
    } else {
        throw UsageError("table takes 1 or 2");
    }
    if (o.json_out) {
        emit(o, report_json(r).dump(2) + "\n", out);
    } else {
        emit(o, table_text(r) + details_text(r), out);
    }
    return kOk;
}

int cmd_envelope(const Options& o, std::ostream& out) {
    const FamilyConfig cfg = family_from(o);
    const int n = samples_from(o, 512);
    const auto lines = free_side_lines(cfg, n);
    const auto fit = fit_dual_conic(lines);
    json j;
    j["params"] = family_json(cfg);
    j["lines"] = lines.size();
    json f = conic_json(fit.conic);
    f["residual"] = fit.residual;
    f["is_point"] = fit.is_point;
    if (fit.is_point) f["point"] = point_json(fit.point);
    j["fitted"] = f;
    auto worst = [&](const Conic& c) {
        double w = 0.0;
        for (const auto& l : lines) w = std::max(w, std::abs(line_tangent_to_conic_residual(l, c)));
        return w;
    };
    if (cfg.kind == FamilyKind::BicII) {
        const auto e = bic2_envelope(cfg.bic);
        json c = conic_json(e.conic);
        c["center"] = point_json(e.center);
        c["radius"] = e.radius;
        c["radius_pq"] = e.radius_pq;
        c["pencil_distance"] = e.pencil_distance;
        c["max_tangency_residual"] = worst(e.conic);
        j["closed_form"] = c;
    } else if (cfg.kind == FamilyKind::ConfII) {
        const auto e = conf2_envelope(cfg.conf);
        json c = conic_json(e.conic);
        c["a"] = e.a;
        c["b"] = e.b;
        c["zeta"] = e.zeta;
        c["pencil_distance"] = e.pencil_distance;
        c["max_tangency_residual"] = worst(e.conic);
        j["closed_form"] = c;
    }
    emit(o, j.dump(2) + "\n", out);
    return kOk;
}

// SVG scene ---------------------------------------------------------------

struct Polyline {
    std::vector<Point> pts;
    bool closed = false;
};

std::vector<Polyline> conic_outline(const Conic& c, int n = 360) {
    if (!c.center() || !c.semi_axes()) return {};
    const Point o = *c.center();
    const auto ax = *c.semi_axes();
    const double th = c.shape().angle;
    Polyline p;
    p.closed = true;
    for (int i = 0; i < n; ++i) {
        const double s = 2 * M_PI * i / n;
        const double x = ax.major * std::cos(s), y = ax.minor * std::sin(s);
        p.pts.push_back({o.x + x * std::cos(th) - y * std::sin(th), o.y + x * std::sin(th) + y * std::cos(th)});
    }
    return {p};
}

std::vector<Polyline> locus_polylines(const Locus& L) {
    std::vector<Polyline> out;
    Polyline cur;
    for (const auto& s : L.samples) {
        if (s.valid) {
            cur.pts.push_back(s.p);
        } else if (!cur.pts.empty()) {
            out.push_back(cur);
            cur = {};
        }
    }
    if (!cur.pts.empty()) {
        cur.closed = cur.pts.size() == L.samples.size();
        out.push_back(cur);
    }
    return out;
}

struct Viewport {
    double xmin, ymax, k;
    static constexpr double size = 800.0;
    static constexpr double margin = 20.0;
    std::string map(Point p) const {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3f,%.3f", margin + k * (p.x - xmin), margin + k * (ymax - p.y));
        return buf;
    }
};

std::string svg_path(const Polyline& p, const Viewport& v) {
    std::string s;
    for (std::size_t i = 0; i < p.pts.size(); ++i) s += (i ? " L" : "M") + v.map(p.pts[i]);
    if (p.closed) s += " Z";
    return s;
}

int cmd_svg(const Options& o, std::ostream& out) {
    const FamilyConfig cfg = family_from(o);
    const auto tracked = tracked_from(o, false);
    const int n = samples_from(o, 512);

    struct Layer {
        std::string label, style;
        std::vector<Polyline> lines;
    };
    std::vector<Layer> layers;
    layers.push_back({"outer", "stroke=\"black\" stroke-width=\"1.5\" fill=\"none\"", conic_outline(outer_conic(cfg))});
    for (const auto& c : caustics(cfg))
        layers.push_back({"caustic", "stroke=\"#8b4513\" stroke-width=\"1.2\" fill=\"none\"", conic_outline(c)});
    if (cfg.kind != FamilyKind::BicI && cfg.kind != FamilyKind::ConfI) {
        try {
            const auto env = sample_free_side_envelope(cfg, n);
            layers.push_back({"envelope", "stroke=\"red\" stroke-width=\"1.2\" stroke-dasharray=\"6,4\" fill=\"none\"",
                              conic_outline(env.conic)});
        } catch (const GeometryError&) {
        }
    }
    const double t0 = o.get("t").value_or(0.7);
    try {
        const Triangle T = triangle_at(cfg, t0);
        layers.push_back({"triangle t=" + g17(t0), "stroke=\"#1f4fbf\" stroke-width=\"1\" fill=\"none\"",
                          {Polyline{{T.P1, T.P2, T.P3}, true}}});
    } catch (const GeometryError&) {
    }
    for (const auto& tp : tracked) {
        layers.push_back({"locus " + tp.label(), "stroke=\"#2e8b3a\" stroke-width=\"1.5\" fill=\"none\"",
                          locus_polylines(trace_locus(cfg, tp, n))});
    }

    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& l : layers)
        for (const auto& p : l.lines)
            for (const auto& q : p.pts) {
                xmin = std::min(xmin, q.x);
                xmax = std::max(xmax, q.x);
                ymin = std::min(ymin, q.y);
                ymax = std::max(ymax, q.y);
            }
    const double span = std::max(xmax - xmin, ymax - ymin);
    const double cx = 0.5 * (xmin + xmax), cy = 0.5 * (ymin + ymax);
    const Viewport v{cx - 0.5 * span, cy + 0.5 * span, (Viewport::size - 2 * Viewport::margin) / span};

    std::ostringstream s;
    s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s << "<!-- " << to_string(cfg.kind) << " scene. viewport: svg_x = " << Viewport::margin << " + " << g17(v.k)
      << " * (x - " << g17(v.xmin) << "), svg_y = " << Viewport::margin << " + " << g17(v.k) << " * (" << g17(v.ymax)
      << " - y); square world box of side " << g17(span) << " around the drawn geometry -->\n";
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
    s << "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
    for (const auto& l : layers) {
        s << "<g " << l.style << "><title>" << l.label << "</title>\n";
        for (const auto& p : l.lines) s << "<path d=\"" << svg_path(p, v) << "\"/>\n";
        s << "</g>\n";
    }
    s << "</svg>\n";
    emit(o, s.str(), out);
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Poncelet triangle families: trace, classify and verify loci", "poncelet"};
    app.require_subcommand(1);

    Bindings bt, bc, bv, bb, be, bs;
    std::vector<std::string> centers_t, centers_c, centers_s, claims;
    bool json_v = false, json_b = false, all = false;
    std::string table_id;

    auto* trace = app.add_subcommand("trace", "write a locus as CSV (t,x,y,valid)");
    add_family_flags(trace, bt);
    trace->add_option("--center", centers_t, "tracked point, e.g. X1, X40, P1' or E2");

    auto* classify = app.add_subcommand("classify", "classify loci and print JSON");
    add_family_flags(classify, bc);
    classify->add_option("--center", centers_c, "tracked points");

    auto* verify = app.add_subcommand("verify", "run verification checks");
    add_family_flags(verify, bv);
    verify->add_option("claims", claims, "claim ids (all when omitted)");
    verify->add_flag("--all", all, "run every claim");
    verify->add_flag("--json", json_v, "print the JSON report instead of text");

    auto* table = app.add_subcommand("table", "reproduce a locus-type table (1 or 2)");
    add_family_flags(table, bb);
    table->add_option("which", table_id, "1 or 2")->required();
    table->add_flag("--json", json_b, "print JSON");

    auto* envelope = app.add_subcommand("envelope", "fit the envelope of the free side");
    add_family_flags(envelope, be);

    auto* svg = app.add_subcommand("svg", "draw the family and loci as SVG");
    add_family_flags(svg, bs);
    svg->add_option("--center", centers_s, "loci to draw");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (trace->parsed()) {
            Options o = collect(bt);
            o.centers = centers_t;
            merge_config(o);
            return cmd_trace(o, out);
        }
        if (classify->parsed()) {
            Options o = collect(bc);
            o.centers = centers_c;
            merge_config(o);
            return cmd_classify(o, out);
        }
        if (verify->parsed()) {
            Options o = collect(bv);
            o.claims = claims;
            o.all = all;
            o.json_out = json_v;
            merge_config(o);
            return cmd_verify(o, out);
        }
        if (table->parsed()) {
            Options o = collect(bb);
            o.table_id = table_id;
            o.json_out = json_b;
            merge_config(o);
            return cmd_table(o, out);
        }
        if (envelope->parsed()) {
            Options o = collect(be);
            merge_config(o);
            return cmd_envelope(o, out);
        }
        if (svg->parsed()) {
            Options o = collect(bs);
            o.centers = centers_s;
            merge_config(o);
            return cmd_svg(o, out);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const GeometryError& e) {
        err << "error: " << e.what() << "\n";
        switch (e.code()) {
            case ErrorCode::InvalidParameters:
            case ErrorCode::NoPoristicPair:
            case ErrorCode::CircularOuterUnsupported:
            case ErrorCode::ImaginaryPencilCircle:
            case ErrorCode::UnknownTrackedPoint: return kUsage;
            default: return kCheckFailed;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kCheckFailed;
    }
    return kUsage;
}

}  // namespace poncelet::cli
