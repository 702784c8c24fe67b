#include "poncelet/families.hpp"

#include <algorithm>
#include <cmath>

namespace poncelet {

const char* to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::BicI: return "bic-I";
        case FamilyKind::BicII: return "bic-II";
        case FamilyKind::BicIII: return "bic-III";
        case FamilyKind::ConfI: return "conf-I";
        case FamilyKind::ConfII: return "conf-II";
        case FamilyKind::ConfIII: return "conf-III";
    }
    return "?";
}

std::optional<FamilyKind> parse_family(std::string_view name) {
    for (auto k : {FamilyKind::BicI, FamilyKind::BicII, FamilyKind::BicIII, FamilyKind::ConfI,
                   FamilyKind::ConfII, FamilyKind::ConfIII}) {
        if (name == to_string(k)) return k;
    }
    return std::nullopt;
}

bool is_bicentric(FamilyKind kind) {
    return kind == FamilyKind::BicI || kind == FamilyKind::BicII || kind == FamilyKind::BicIII;
}

void BicentricParams::validate() const {
    if (!(R > 0.0) || !(r > 0.0) || !(d >= 0.0)) {
        throw GeometryError(ErrorCode::InvalidParameters, "need R > 0, r > 0, d >= 0");
    }
    if (!(r + d < R)) {
        throw GeometryError(ErrorCode::InvalidParameters, "caustic must lie inside the circumcircle");
    }
}

void ConfocalParams::validate() const {
    if (!(b > 0.0)) throw GeometryError(ErrorCode::InvalidParameters, "need b > 0");
    if (a == b) throw GeometryError(ErrorCode::CircularOuterUnsupported, "outer conic is a circle");
    if (!(a > b)) throw GeometryError(ErrorCode::InvalidParameters, "need a > b");
    if (!(lambda >= 0.0) || !(lambda < b * b)) {
        throw GeometryError(ErrorCode::InvalidParameters, "need 0 <= lambda < b^2");
    }
}

std::array<TangentBranch, 4> TangentBranch::all() {
    return {TangentBranch{Tangent::plus, Tangent::plus}, TangentBranch{Tangent::plus, Tangent::minus},
            TangentBranch{Tangent::minus, Tangent::plus}, TangentBranch{Tangent::minus, Tangent::minus}};
}

std::string to_string(TangentBranch branch) {
    auto s = [](Tangent t) { return t == Tangent::plus ? "+" : "-"; };
    return std::string(s(branch.first)) + s(branch.second);
}

std::optional<TangentBranch> parse_branch(std::string_view text) {
    auto one = [](std::string_view s) -> std::optional<Tangent> {
        if (s == "+" || s == "plus" || s == "p") return Tangent::plus;
        if (s == "-" || s == "minus" || s == "m") return Tangent::minus;
        return std::nullopt;
    };
    std::optional<Tangent> f, g;
    if (auto comma = text.find(','); comma != std::string_view::npos) {
        f = one(text.substr(0, comma));
        g = one(text.substr(comma + 1));
    } else if (text.size() == 2) {
        f = one(text.substr(0, 1));
        g = one(text.substr(1, 1));
    }
    if (!f || !g) return std::nullopt;
    return TangentBranch{*f, *g};
}

std::array<double, 3> Triangle::sides() const {
    return {distance(P2, P3), distance(P3, P1), distance(P1, P2)};
}

double Triangle::perimeter() const {
    const auto s = sides();
    return s[0] + s[1] + s[2];
}

double Triangle::signed_area() const { return 0.5 * cross(P2 - P1, P3 - P1); }

double Triangle::diameter() const {
    const auto s = sides();
    return std::max({s[0], s[1], s[2]});
}

double chapple_distance(double R, double r) {
    if (!(R > 0.0) || !(r > 0.0)) throw GeometryError(ErrorCode::InvalidParameters, "need R, r > 0");
    const double v = R * (R - 2 * r);
    if (v < 0.0) throw GeometryError(ErrorCode::NoPoristicPair, "R < 2r admits no poristic pair");
    return std::sqrt(v);
}

KerawalaResult kerawala_holds(double R, double r, double d) {
    const double res = 1.0 / ((R - d) * (R - d)) + 1.0 / ((R + d) * (R + d)) - 1.0 / (r * r);
    return {std::abs(res) * r * r <= 1e-10, res};
}

AxisPair confocal_caustic(double a, double b) {
    if (a == b) throw GeometryError(ErrorCode::CircularOuterUnsupported, "a = b");
    if (!(a > b) || !(b > 0.0)) throw GeometryError(ErrorCode::InvalidParameters, "need a > b > 0");
    const double c2 = a * a - b * b;
    const double delta = std::sqrt(a * a * a * a - a * a * b * b + b * b * b * b);
    return {a * (delta - b * b) / c2, b * (a * a - delta) / c2};
}

double critical_lambda(double a, double b) {
    if (a == b) throw GeometryError(ErrorCode::CircularOuterUnsupported, "a = b");
    if (!(a > b) || !(b > 0.0)) throw GeometryError(ErrorCode::InvalidParameters, "need a > b > 0");
    const double c2 = a * a - b * b;
    const double delta = std::sqrt(a * a * a * a - a * a * b * b + b * b * b * b);
    return a * a * b * b * (2 * delta - a * a - b * b) / (c2 * c2);
}

AxisPair n4_caustic(double a, double b) {
    const double s = std::sqrt(a * a + b * b);
    return {a * a / s, b * b / s};
}

AxisPair n6_caustic(double a, double b) {
    return {a * std::sqrt(a * (a + 2 * b)) / (a + b), b * std::sqrt(b * (2 * a + b)) / (a + b)};
}

Triangle bic2_vertices(const BicentricParams& p, double t) {
    const double R = p.R, r = p.r, d = p.d;
    const double x1 = R * std::cos(t), y1 = R * std::sin(t);
    const double D2 = R * R + d * d - 2 * d * x1 - r * r;
    if (!(D2 > 0.0)) throw GeometryError(ErrorCode::VertexInsideCaustic, "P1 inside the caustic");
    const double D = std::sqrt(D2);
    const double h = R * R - d * d;
    const double g = 2 * d * R * R - (R * R + d * d) * x1;
    const double den = (R * R + d * d - 2 * d * x1) * (R * R + d * d - 2 * d * x1);

    Triangle T;
    T.t = t;
    T.P1 = {x1, y1};
    T.P2 = {(2 * r * y1 * h * D + g * (D2 - r * r)) / den,
            ((4 * R * R * d - 2 * (R * R + d * d) * x1) * r * D - y1 * h * (D2 - r * r)) / den};
    T.P3 = {T.P2.x - 4 * h * y1 * r * D / den, T.P2.y - 4 * g * r * D / den};
    return T;
}

Conic bic3_caustic2(const BicentricParams& p) {
    const double u = p.u.value_or(0.0);
    const double rad = p.d * p.d * u * u + (p.R * p.R - p.d * p.d - p.r * p.r) * u + p.r * p.r;
    if (!(rad > 0.0)) throw GeometryError(ErrorCode::ImaginaryPencilCircle, "r(u)^2 <= 0");
    return Conic::circle({p.d * (1.0 - u), 0.0}, std::sqrt(rad));
}

namespace {

Point pick(const TangentPair& tp, Tangent which) {
    return which == Tangent::plus ? tp.contact_first : tp.contact_second;
}

Point pick_other(const TangentPair& tp, Tangent which) {
    return which == Tangent::plus ? tp.contact_second : tp.contact_first;
}

TangentPair tangents_or_inside(Point p, const Conic& c) {
    try {
        return tangent_lines_from_point(p, c);
    } catch (const GeometryError& e) {
        if (e.code() == ErrorCode::NoRealTangent || e.code() == ErrorCode::TangentFromBoundary) {
            throw GeometryError(ErrorCode::VertexInsideCaustic, "vertex not outside its caustic");
        }
        throw;
    }
}

Point chain(const Conic& outer, Point p1, Point contact) {
    return second_intersection(outer, p1, contact - p1);
}

}  // namespace

Triangle bic3_vertices(const BicentricParams& p, double t, TangentBranch branch) {
    const Conic outer = Conic::circle({0, 0}, p.R);
    const Conic c1 = Conic::circle({p.d, 0}, p.r);
    const Conic cu = bic3_caustic2(p);
    Triangle T;
    T.t = t;
    T.P1 = {p.R * std::cos(t), p.R * std::sin(t)};
    T.P2 = chain(outer, T.P1, pick(tangents_or_inside(T.P1, c1), branch.first));
    T.P3 = chain(outer, T.P1, pick(tangents_or_inside(T.P1, cu), branch.second));
    return T;
}

std::pair<Point, Point> bic3_closed_form(const BicentricParams& p, double t) {
    const double u = p.u.value_or(0.0);
    const double R = p.R;
    const double du = p.d * (1.0 - u);
    const double ru2 = p.d * p.d * u * u + (R * R - p.d * p.d - p.r * p.r) * u + p.r * p.r;
    if (!(ru2 > 0.0)) throw GeometryError(ErrorCode::ImaginaryPencilCircle, "r(u)^2 <= 0");
    BicentricParams q{R, std::sqrt(ru2), du, std::nullopt};
    const Triangle T = bic2_vertices(q, t);
    return {T.P2, T.P3};
}

Triangle conf2_vertices(const ConfocalParams& p, double t, TangentBranch branch) {
    const Conic outer = Conic::ellipse({0, 0}, p.a, p.b);
    const Conic inner = Conic::ellipse({0, 0}, p.caustic_a(), p.caustic_b());
    Triangle T;
    T.t = t;
    T.P1 = {p.a * std::cos(t), p.b * std::sin(t)};
    const TangentPair tp = tangents_or_inside(T.P1, inner);
    T.P2 = chain(outer, T.P1, pick(tp, branch.first));
    T.P3 = chain(outer, T.P1, pick_other(tp, branch.first));
    return T;
}

Triangle conf2_vertices_closed_form(const ConfocalParams& p, double t) {
    const double a = p.a, b = p.b;
    const double a2 = a * a, b2 = b * b;
    const double ap2 = a2 - p.lambda, bp2 = b2 - p.lambda;
    const double x1 = a * std::cos(t), y1 = b * std::sin(t);
    const double al1 = a2 * (b2 - bp2) - ap2 * b2;
    const double al2 = (a2 - ap2) * b2 + a2 * bp2;
    const double al3 = a2 * (b2 - bp2) + ap2 * b2;
    const double W = al2 * al2 * x1 * x1 / a2 + al3 * al3 * y1 * y1 / b2;
    const double D2 = (a2 * bp2 - ap2 * bp2) * x1 * x1 + (a2 * ap2 - a2 * ap2 * bp2 / b2) * y1 * y1;
    if (!(D2 > 0.0)) throw GeometryError(ErrorCode::VertexInsideCaustic, "P1 inside the caustic");
    const double D = std::sqrt(D2);
    Triangle T;
    T.t = t;
    T.P1 = {x1, y1};
    T.P2 = {(2 * a * al3 * y1 * D - al1 * al2 * x1) / W, (-2 * b2 * al2 * x1 * D - a * al1 * al3 * y1) / (a * W)};
    T.P3 = {(-2 * a * al3 * y1 * D - al1 * al2 * x1) / W, (2 * b2 * al2 * x1 * D - a * al1 * al3 * y1) / (a * W)};
    return T;
}

Conic conf3_caustic2(const ConfocalParams& p) {
    const Conic outer = Conic::ellipse({0, 0}, p.a, p.b);
    const Conic inner = Conic::ellipse({0, 0}, p.caustic_a(), p.caustic_b());
    const Conic c = pencil_member(outer, inner, p.pencil_u.value_or(1.0));
    if (c.kind() != ConicKind::Ellipse && c.kind() != ConicKind::Circle) {
        throw GeometryError(ErrorCode::InvalidParameters, "pencil member is not a real ellipse");
    }
    return c;
}

Triangle conf3_vertices(const ConfocalParams& p, double t, TangentBranch branch) {
    const Conic outer = Conic::ellipse({0, 0}, p.a, p.b);
    const Conic inner = Conic::ellipse({0, 0}, p.caustic_a(), p.caustic_b());
    const Conic second = conf3_caustic2(p);
    Triangle T;
    T.t = t;
    T.P1 = {p.a * std::cos(t), p.b * std::sin(t)};
    T.P2 = chain(outer, T.P1, pick(tangents_or_inside(T.P1, inner), branch.first));
    T.P3 = chain(outer, T.P1, pick(tangents_or_inside(T.P1, second), branch.second));
    return T;
}

Bic2Envelope bic2_envelope(const BicentricParams& p) {
    const double R = p.R, r = p.r, d = p.d;
    const double h = R * R - d * d;
    Bic2Envelope out;
    out.center = {4 * d * R * R * r * r / (h * h), 0.0};
    out.radius = R * (R * R * R * R - 2 * R * R * d * d - 2 * R * R * r * r + d * d * d * d - 2 * d * d * r * r) / (h * h);
    if (d > 0.0) {
        const double P = (R + d) / r, Q = (R - d) / r;
        out.radius_pq = (P * P * Q * Q - P * P - Q * Q) * (P + Q) * d / (P * P * Q * Q * (P - Q));
    } else {
        out.radius_pq = out.radius;  // p = q, the (p,q) form is 0/0
    }
    out.conic = Conic::circle(out.center, std::abs(out.radius));
    out.pencil_distance = pencil_span_distance(out.conic, Conic::circle({0, 0}, R), Conic::circle({d, 0}, r));
    return out;
}

Conf2Envelope conf2_envelope(const ConfocalParams& p) {
    const double a = p.a, b = p.b, l = p.lambda;
    const double c2 = p.c2();
    Conf2Envelope out;
    out.zeta = a * a * b * b - (a * a + b * b) * l;
    out.a = std::abs(a * out.zeta) / (a * a * b * b - c2 * l);
    out.b = std::abs(b * out.zeta) / (a * a * b * b + c2 * l);
    out.conic = (out.a > 0.0 && out.b > 0.0) ? Conic::ellipse({0, 0}, out.a, out.b) : Conic::point({0, 0});
    out.pencil_distance = pencil_span_distance(out.conic, Conic::ellipse({0, 0}, a, b),
                                               Conic::ellipse({0, 0}, p.caustic_a(), p.caustic_b()));
    return out;
}

FamilyConfig resolve(const FamilyConfig& cfg) {
    FamilyConfig out = cfg;
    switch (cfg.kind) {
        case FamilyKind::BicI:
            out.bic.d = chapple_distance(cfg.bic.R, cfg.bic.r);
            out.bic.validate();
            break;
        case FamilyKind::BicII:
            out.bic.validate();
            break;
        case FamilyKind::BicIII:
            if (!out.bic.u) throw GeometryError(ErrorCode::InvalidParameters, "bic-III needs u");
            out.bic.validate();
            (void)bic3_caustic2(out.bic);
            break;
        case FamilyKind::ConfI:
            out.conf.lambda = critical_lambda(cfg.conf.a, cfg.conf.b);
            out.conf.validate();
            break;
        case FamilyKind::ConfII:
            out.conf.validate();
            break;
        case FamilyKind::ConfIII:
            if (!out.conf.pencil_u) throw GeometryError(ErrorCode::InvalidParameters, "conf-III needs pencil_u");
            out.conf.validate();
            (void)conf3_caustic2(out.conf);
            break;
    }
    return out;
}

Conic outer_conic(const FamilyConfig& cfg) {
    if (is_bicentric(cfg.kind)) return Conic::circle({0, 0}, cfg.bic.R);
    return Conic::ellipse({0, 0}, cfg.conf.a, cfg.conf.b);
}

std::vector<Conic> caustics(const FamilyConfig& cfg) {
    std::vector<Conic> out;
    if (is_bicentric(cfg.kind)) {
        out.push_back(Conic::circle({cfg.bic.d, 0}, cfg.bic.r));
        if (cfg.kind == FamilyKind::BicIII) out.push_back(bic3_caustic2(cfg.bic));
    } else {
        out.push_back(Conic::ellipse({0, 0}, cfg.conf.caustic_a(), cfg.conf.caustic_b()));
        if (cfg.kind == FamilyKind::ConfIII) out.push_back(conf3_caustic2(cfg.conf));
    }
    return out;
}

double family_scale(const FamilyConfig& cfg) {
    return is_bicentric(cfg.kind) ? cfg.bic.R : cfg.conf.a;
}

Triangle triangle_at(const FamilyConfig& cfg, double t) {
    switch (cfg.kind) {
        case FamilyKind::BicI:
        case FamilyKind::BicII: return bic2_vertices(cfg.bic, t);
        case FamilyKind::BicIII: return bic3_vertices(cfg.bic, t, cfg.branch);
        case FamilyKind::ConfI:
        case FamilyKind::ConfII: return conf2_vertices(cfg.conf, t, cfg.branch);
        case FamilyKind::ConfIII: return conf3_vertices(cfg.conf, t, cfg.branch);
    }
    throw GeometryError(ErrorCode::InvalidParameters, "unknown family");
}

std::vector<Line> free_side_lines(const FamilyConfig& cfg, int n) {
    std::vector<Line> lines;
    lines.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double t = 2 * M_PI * i / n;
        try {
            const Triangle T = triangle_at(cfg, t);
            if (distance(T.P2, T.P3) > 1e-9 * family_scale(cfg)) lines.push_back(Line::through(T.P2, T.P3));
        } catch (const GeometryError& e) {
            if (e.code() != ErrorCode::VertexInsideCaustic) throw;
        }
    }
    return lines;
}

DualConicFit sample_free_side_envelope(const FamilyConfig& cfg, int n) {
    return fit_dual_conic(free_side_lines(cfg, n));
}

}  // namespace poncelet
