#include "summon/geometry.hpp"

#include <sstream>
#include <stdexcept>

namespace summon {

namespace {

void check_compatible(const SpacetimePoint& a, const SpacetimePoint& b,
                      const MetricConfig& m) {
    if (m.axis_radicands.size() != m.dim) {
        throw std::invalid_argument("metric radicand count does not match dimension");
    }
    if (a.dim() != m.dim || b.dim() != m.dim) {
        throw std::invalid_argument("point dimension does not match metric");
    }
}

}  // namespace

const char* to_string(IntervalKind kind) {
    switch (kind) {
        case IntervalKind::Timelike: return "timelike";
        case IntervalKind::Lightlike: return "lightlike";
        case IntervalKind::Spacelike: return "spacelike";
    }
    return "?";
}

Rational squared_spatial_distance(const SpacetimePoint& a, const SpacetimePoint& b,
                                  const MetricConfig& m) {
    check_compatible(a, b, m);
    Rational sum = 0;
    for (std::size_t k = 0; k < m.dim; ++k) {
        Rational d = b.x[k] - a.x[k];
        sum += d * d * m.axis_radicands[k];
    }
    return sum;
}

bool causally_precedes(const SpacetimePoint& a, const SpacetimePoint& b,
                       const MetricConfig& m) {
    check_compatible(a, b, m);
    Rational dt = b.t - a.t;
    if (dt < 0) return false;
    Rational ct = m.c * dt;
    return ct * ct >= squared_spatial_distance(a, b, m);
}

IntervalClass interval_class(const SpacetimePoint& a, const SpacetimePoint& b,
                             const MetricConfig& m) {
    check_compatible(a, b, m);
    Rational dt = b.t - a.t;
    Rational ct = m.c * dt;
    Rational interval = ct * ct - squared_spatial_distance(a, b, m);
    IntervalKind kind = IntervalKind::Lightlike;
    if (interval > 0) kind = IntervalKind::Timelike;
    if (interval < 0) kind = IntervalKind::Spacelike;
    return IntervalClass{kind, sign_of(dt)};
}

bool same_event(const SpacetimePoint& a, const SpacetimePoint& b, const MetricConfig& m) {
    check_compatible(a, b, m);
    if (a.t != b.t) return false;
    for (std::size_t k = 0; k < m.dim; ++k) {
        if (m.axis_radicands[k] == 0) continue;  // coordinate is identically 0
        if (a.x[k] != b.x[k]) return false;
    }
    return true;
}

bool diamond_valid(const CausalDiamond& d, const MetricConfig& m) {
    return causally_precedes(d.bottom, d.top, m);
}

bool diamond_precedes(const CausalDiamond& di, const CausalDiamond& dj,
                      const MetricConfig& m) {
    return causally_precedes(di.bottom, dj.top, m);
}

std::string format_point(const SpacetimePoint& p) {
    std::ostringstream out;
    out << "(t=" << format_rational(p.t);
    for (const auto& coord : p.x) out << ", " << format_rational(coord);
    out << ")";
    return out.str();
}

}  // namespace summon
