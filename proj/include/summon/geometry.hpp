#pragma once

#include "summon/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace summon {

/// Event in d+1-dimensional Minkowski space. Spatial coordinate k is the
/// exact value x[k] * sqrt(radicand_k), with the radicands declared once in
/// MetricConfig (radicand 1 = plain rationals). Squared distances are then
/// rational and every causal predicate reduces to exact comparisons.
struct SpacetimePoint {
    Rational t;
    std::vector<Rational> x;

    std::size_t dim() const { return x.size(); }

    friend bool operator==(const SpacetimePoint&, const SpacetimePoint&) = default;
};

struct MetricConfig {
    Rational c = 1;                           // signal speed, > 0
    std::size_t dim = 1;                      // spatial dimension, >= 1
    std::vector<std::uint64_t> axis_radicands;  // one per axis, >= 0

    static MetricConfig plain(std::size_t dim, Rational c = 1) {
        MetricConfig m;
        m.c = std::move(c);
        m.dim = dim;
        m.axis_radicands.assign(dim, 1);
        return m;
    }
};

/// Causal diamond: future light cone of `bottom` intersected with the past
/// light cone of `top`. Degenerate (lightlike or single-point) diamonds are
/// allowed.
struct CausalDiamond {
    SpacetimePoint bottom;  // call point y_j
    SpacetimePoint top;     // reveal point z_j
};

enum class IntervalKind { Timelike, Lightlike, Spacelike };

struct IntervalClass {
    IntervalKind kind;
    int time_sign;  // sign of t_b - t_a: -1, 0, +1
};

const char* to_string(IntervalKind kind);

/// Exact squared spatial distance sum_k (dx_k)^2 * radicand_k.
Rational squared_spatial_distance(const SpacetimePoint& a, const SpacetimePoint& b,
                                  const MetricConfig& m);

/// a can causally influence b: dt >= 0 and c^2 dt^2 >= |dx|^2, with the
/// light cone boundary included. Throws std::invalid_argument on
/// dimension/radicand mismatch.
bool causally_precedes(const SpacetimePoint& a, const SpacetimePoint& b,
                       const MetricConfig& m);

/// Exact trichotomy of c^2 dt^2 - |dx|^2 plus the sign of dt.
IntervalClass interval_class(const SpacetimePoint& a, const SpacetimePoint& b,
                             const MetricConfig& m);

/// True iff the two points denote the same event (axes with radicand 0
/// contribute coordinate 0 regardless of coefficient).
bool same_event(const SpacetimePoint& a, const SpacetimePoint& b, const MetricConfig& m);

bool diamond_valid(const CausalDiamond& d, const MetricConfig& m);

/// There is a causal curve from a point of di to a point of dj. Equivalent
/// to di.bottom <= dj.top:  any p in di, q in dj with p <= q gives
/// bottom_i <= p <= q <= top_j by transitivity, and conversely the pair
/// (bottom_i, top_j) itself witnesses the curve.
bool diamond_precedes(const CausalDiamond& di, const CausalDiamond& dj,
                      const MetricConfig& m);

std::string format_point(const SpacetimePoint& p);

}  // namespace summon
