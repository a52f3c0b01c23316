#include "trigon/geometry.hpp"

#include <cctype>
#include <limits>
#include <sstream>
#include <string>

namespace trigon {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonPositiveSide: return "NonPositiveSide";
        case ErrorCode::TriangleInequalityViolated: return "TriangleInequalityViolated";
        case ErrorCode::SphericalDomainViolated: return "SphericalDomainViolated";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::KindMismatch: return "KindMismatch";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::UnsupportedKind: return "UnsupportedKind";
        case ErrorCode::UnsortedSides: return "UnsortedSides";
        case ErrorCode::EmptyIntersection: return "EmptyIntersection";
        case ErrorCode::EmptyDomain: return "EmptyDomain";
        case ErrorCode::DivisionByZeroInterval: return "DivisionByZeroInterval";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

std::string_view to_string(GeometryKind kind) {
    switch (kind) {
        case GeometryKind::Euclidean: return "euclidean";
        case GeometryKind::Spherical: return "spherical";
        case GeometryKind::Hyperbolic: return "hyperbolic";
    }
    return "unknown";
}

std::optional<GeometryKind> parse_geometry(std::string_view raw) {
    std::string text(raw);
    for (char& ch : text) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (text == "euclidean" || text == "e") return GeometryKind::Euclidean;
    if (text == "spherical" || text == "s") return GeometryKind::Spherical;
    if (text == "hyperbolic" || text == "h") return GeometryKind::Hyperbolic;
    return std::nullopt;
}

double s_value(GeometryKind kind, double x) {
    if (!std::isfinite(x)) throw Error(ErrorCode::DomainError, "s(x) requires a finite argument");
    switch (kind) {
        case GeometryKind::Euclidean: return 0.5 * x;
        case GeometryKind::Spherical: return std::sin(0.5 * x);
        case GeometryKind::Hyperbolic: return std::sinh(0.5 * x);
    }
    throw Error(ErrorCode::UnsupportedKind, "unknown geometry");
}

namespace {

std::optional<Error> check_sides(GeometryKind kind, double a, double b, double c) {
    auto fail = [&](ErrorCode code, const char* why) {
        std::ostringstream os;
        os.precision(17);
        os << why << " (" << to_string(kind) << " sides " << a << ", " << b << ", " << c << ")";
        return Error(code, os.str());
    };
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c))
        return fail(ErrorCode::DomainError, "side lengths must be finite");
    constexpr double m = kDegeneracyMargin;
    if (a < m || b < m || c < m) return fail(ErrorCode::NonPositiveSide, "side lengths must be positive");
    if (a >= b + c - m || b >= a + c - m || c >= a + b - m)
        return fail(ErrorCode::TriangleInequalityViolated, "strict triangle inequality fails");
    if (kind == GeometryKind::Spherical) {
        constexpr double pi = std::numbers::pi;
        if (a >= pi - m || b >= pi - m || c >= pi - m || a + b + c >= 2 * pi - m)
            return fail(ErrorCode::SphericalDomainViolated,
                        "spherical sides must be below pi with perimeter below 2 pi");
    }
    return std::nullopt;
}

struct Images {
    double sa, sb, sc;
};

Images images(const Triangle& t) {
    return {s_value(t.kind(), t.a()), s_value(t.kind(), t.b()), s_value(t.kind(), t.c())};
}

double s_perimeter(const Triangle& t) { return s_value(t.kind(), t.a() + t.b() + t.c()); }

}  // namespace

Triangle validate_triangle(GeometryKind kind, double a, double b, double c) {
    if (auto err = check_sides(kind, a, b, c)) throw *err;
    return Triangle(kind, {a, b, c});
}

std::optional<Triangle> try_triangle(GeometryKind kind, double a, double b, double c) noexcept {
    if (check_sides(kind, a, b, c)) return std::nullopt;
    return validate_triangle(kind, a, b, c);
}

double quantity_B(const Triangle& t) {
    const auto k = t.kind();
    const double a = t.a(), b = t.b(), c = t.c();
    return s_value(k, a + b - c) * s_value(k, a + c - b) * s_value(k, b + c - a);
}

double quantity_Bbar(const Triangle& t) {
    const auto [sa, sb, sc] = images(t);
    return (sa + sb - sc) * (sa + sc - sb) * (sb + sc - sa);
}

double euler_ratio(const Triangle& t) {
    const auto [sa, sb, sc] = images(t);
    return 2 * sa * sb * sc / quantity_B(t);
}

double circum_measure(const Triangle& t) {
    const auto [sa, sb, sc] = images(t);
    return 2 * sa * sb * sc / std::sqrt(quantity_B(t) * s_perimeter(t));
}

double in_measure(const Triangle& t) { return std::sqrt(quantity_B(t) / s_perimeter(t)); }

double circumradius(const Triangle& t) {
    const double m = circum_measure(t);
    switch (t.kind()) {
        case GeometryKind::Euclidean: return m;
        case GeometryKind::Spherical: return std::atan(m);
        case GeometryKind::Hyperbolic:
            return m < 1 ? std::atanh(m) : std::numeric_limits<double>::infinity();
    }
    return m;
}

double inradius(const Triangle& t) {
    const double m = in_measure(t);
    switch (t.kind()) {
        case GeometryKind::Euclidean: return m;
        case GeometryKind::Spherical: return std::atan(m);
        // tanh r < 1 always holds: the incircle exists for every triangle.
        case GeometryKind::Hyperbolic: return std::atanh(m);
    }
    return m;
}

CoreQuantities core_quantities(const Triangle& t) {
    const auto [sa, sb, sc] = images(t);
    CoreQuantities q;
    q.s = {sa, sb, sc};
    q.B = quantity_B(t);
    q.B_bar = quantity_Bbar(t);
    q.euler_ratio = 2 * sa * sb * sc / q.B;
    q.circumradius = circumradius(t);
    q.inradius = inradius(t);
    return q;
}

CircumMeasuresSquared circum_measure_squared_alt(const Triangle& t) {
    if (t.kind() == GeometryKind::Euclidean)
        throw Error(ErrorCode::UnsupportedKind, "alternative circum-measures need a curved geometry");
    const auto [sa, sb, sc] = images(t);
    const double p = sa * sb * sc;
    return {4 * p * p / (quantity_Bbar(t) * (sa + sb + sc)),
            4 * p * p / (quantity_B(t) * s_perimeter(t))};
}

}  // namespace trigon
