#include "poncelet/centers.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace poncelet {

void require_nondegenerate(const Triangle& T, double area_tol) {
    const double diam = T.diameter();
    if (!(std::abs(T.signed_area()) > area_tol * diam * diam)) {
        throw GeometryError(ErrorCode::DegenerateTriangle, "triangle has no area");
    }
}

namespace {

Point combine(const Triangle& T, const std::array<double, 3>& w) {
    const double s = w[0] + w[1] + w[2];
    const double mag = std::abs(w[0]) + std::abs(w[1]) + std::abs(w[2]);
    // weights come from perimeter-normalized sides, so the scale is fixed
    if (!std::isfinite(s) || !(std::abs(s) > 1e-14) || !(std::abs(s) > 1e-12 * mag)) {
        throw GeometryError(ErrorCode::DegenerateTriangle, "center weights sum to zero");
    }
    return (w[0] * T.P1 + w[1] * T.P2 + w[2] * T.P3) / s;
}

}  // namespace

std::array<double, 3> weights(const Triangle& T, const CenterDefinition& def) {
    auto [a, b, c] = T.sides();
    // barycentrics are homogeneous; normalizing keeps the degeneracy test scale-free
    const double per = a + b + c;
    a /= per;
    b /= per;
    c /= per;
    std::array<double, 3> w{def.weight(a, b, c), def.weight(b, c, a), def.weight(c, a, b)};
    if (def.basis == Basis::trilinear) {
        w[0] *= a;
        w[1] *= b;
        w[2] *= c;
    }
    return w;
}

Point center(const Triangle& T, const CenterDefinition& def) {
    require_nondegenerate(T);
    if (def.weight) return combine(T, weights(T, def));
    return def.construct(T);
}

Point incenter(const Triangle& T) {
    require_nondegenerate(T);
    const auto s = T.sides();
    return combine(T, s);
}

Point centroid(const Triangle& T) { return (T.P1 + T.P2 + T.P3) / 3.0; }

Point circumcenter(const Triangle& T) {
    require_nondegenerate(T);
    const Point b = T.P2 - T.P1, c = T.P3 - T.P1;
    const double den = 2 * cross(b, c);
    const double b2 = dot(b, b), c2 = dot(c, c);
    return T.P1 + Point{(c.y * b2 - b.y * c2) / den, (b.x * c2 - c.x * b2) / den};
}

Conic circumcircle(const Triangle& T) {
    const Point o = circumcenter(T);
    return Conic::circle(o, distance(o, T.P1));
}

ExcentralTriangle excenters(const Triangle& T) {
    require_nondegenerate(T);
    const auto [s1, s2, s3] = T.sides();
    return {combine(T, {-s1, s2, s3}), combine(T, {s1, -s2, s3}), combine(T, {s1, s2, -s3})};
}

Point bevan_point(const Triangle& T) { return 2.0 * circumcenter(T) - incenter(T); }

Point excentral_centroid(const Triangle& T) {
    const Point o = circumcenter(T);
    return o + (o - incenter(T)) / 3.0;
}

namespace {

CenterDefinition bary(int id, std::string name, WeightFn f) {
    return {id, std::move(name), Basis::barycentric, std::move(f), {}};
}

CenterDefinition built(int id, std::string name, Construction f) {
    return {id, std::move(name), Basis::barycentric, {}, std::move(f)};
}

std::vector<CenterDefinition> make_centers() {
    std::vector<CenterDefinition> v;
    v.push_back(bary(1, "incenter", [](double a, double, double) { return a; }));
    v.push_back(bary(2, "centroid", [](double, double, double) { return 1.0; }));
    v.push_back(bary(3, "circumcenter",
                     [](double a, double b, double c) { return a * a * (b * b + c * c - a * a); }));
    v.push_back(bary(4, "orthocenter", [](double a, double b, double c) {
        const double sb = (c * c + a * a - b * b) / 2, sc = (a * a + b * b - c * c) / 2;
        return sb * sc;
    }));
    v.push_back(built(5, "nine-point center", [](const Triangle& T) {
        const Point o = circumcenter(T);
        const Point h = 3.0 * centroid(T) - 2.0 * o;
        return (o + h) / 2.0;
    }));
    v.push_back(bary(6, "symmedian point", [](double a, double, double) { return a * a; }));
    v.push_back(bary(8, "Nagel point", [](double a, double b, double c) { return b + c - a; }));
    v.push_back(bary(9, "mittenpunkt", [](double a, double b, double c) { return a * (b + c - a); }));
    v.push_back(bary(10, "Spieker center", [](double, double b, double c) { return b + c; }));
    v.push_back(bary(11, "Feuerbach point",
                     [](double a, double b, double c) { return (b + c - a) * (b - c) * (b - c); }));
    v.push_back(bary(35, "X35", [](double a, double b, double c) {
        return a * a * (b * b + c * c - a * a + b * c);
    }));
    v.push_back(built(36, "X36", [](const Triangle& T) { return circle_inverse(incenter(T), circumcircle(T)); }));
    v.push_back(built(40, "Bevan point", bevan_point));
    v.push_back(bary(46, "X46", [](double a, double b, double c) {
        const double sa = (b * b + c * c - a * a) / 2, sb = (c * c + a * a - b * b) / 2,
                     sc = (a * a + b * b - c * c) / 2;
        return a * (-a * sa + b * sb + c * sc);
    }));
    v.push_back(bary(55, "X55", [](double a, double b, double c) { return a * a * (b + c - a); }));
    v.push_back(bary(56, "X56", [](double a, double b, double c) { return a * a / (b + c - a); }));
    v.push_back(bary(57, "X57", [](double a, double b, double c) { return a / (b + c - a); }));
    v.push_back(bary(59, "X59", [](double a, double b, double c) {
        return a * a / ((b + c - a) * (b - c) * (b - c));
    }));
    v.push_back(bary(65, "X65", [](double a, double b, double c) { return a * (b + c) / (b + c - a); }));
    v.push_back(built(165, "excentral centroid", excentral_centroid));
    v.push_back(bary(354, "X354", [](double a, double b, double c) {
        const double s = (a + b + c) / 2;
        return (s - c) / b + (s - b) / c;
    }));
    v.push_back(built(484, "X484", [](const Triangle& T) {
        return 2.0 * circle_inverse(incenter(T), circumcircle(T)) - incenter(T);
    }));
    v.push_back(built(942, "X942", [](const Triangle& T) {
        static const CenterDefinition x65 =
            bary(65, "X65", [](double a, double b, double c) { return a * (b + c) / (b + c - a); });
        return (incenter(T) + center(T, x65)) / 2.0;
    }));
    v.push_back(built(2077, "X2077", [](const Triangle& T) { return circle_inverse(bevan_point(T), circumcircle(T)); }));
    return v;
}

}  // namespace

const std::vector<CenterDefinition>& builtin_centers() {
    static const std::vector<CenterDefinition> centers = make_centers();
    return centers;
}

const CenterDefinition* find_center(int id) {
    for (const auto& c : builtin_centers()) {
        if (c.id == id) return &c;
    }
    return nullptr;
}

std::string TrackedPoint::label() const {
    switch (kind) {
        case Kind::Center: return "X" + std::to_string(index);
        case Kind::Excenter: return "P" + std::to_string(index) + "'";
        case Kind::Vertex: return "P" + std::to_string(index);
    }
    return "?";
}

std::optional<TrackedPoint> parse_tracked(std::string_view text) {
    auto number = [](std::string_view s) -> std::optional<int> {
        int v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
        return v;
    };
    if (text.size() < 2) return std::nullopt;
    const char head = text.front();
    if (head == 'X' || head == 'x') {
        auto id = number(text.substr(1));
        if (!id || !find_center(*id)) return std::nullopt;
        return TrackedPoint{TrackedPoint::Kind::Center, *id};
    }
    if (head == 'E' || head == 'e') {
        auto i = number(text.substr(1));
        if (!i || *i < 1 || *i > 3) return std::nullopt;
        return TrackedPoint{TrackedPoint::Kind::Excenter, *i};
    }
    if (head == 'P' || head == 'p') {
        bool prime = text.back() == '\'';
        auto i = number(text.substr(1, text.size() - 1 - (prime ? 1 : 0)));
        if (!i || *i < 1 || *i > 3) return std::nullopt;
        return TrackedPoint{prime ? TrackedPoint::Kind::Excenter : TrackedPoint::Kind::Vertex, *i};
    }
    return std::nullopt;
}

Point evaluate(const Triangle& T, const TrackedPoint& tracked) {
    switch (tracked.kind) {
        case TrackedPoint::Kind::Center: {
            const CenterDefinition* def = find_center(tracked.index);
            if (!def) throw GeometryError(ErrorCode::UnknownTrackedPoint, tracked.label());
            return center(T, *def);
        }
        case TrackedPoint::Kind::Excenter: {
            const auto E = excenters(T);
            return tracked.index == 1 ? E.P1p : tracked.index == 2 ? E.P2p : E.P3p;
        }
        case TrackedPoint::Kind::Vertex:
            return tracked.index == 1 ? T.P1 : tracked.index == 2 ? T.P2 : T.P3;
    }
    throw GeometryError(ErrorCode::UnknownTrackedPoint, tracked.label());
}

}  // namespace poncelet
