#pragma once

#include "summon/codes.hpp"
#include "summon/feasibility.hpp"

#include <stdexcept>
#include <string>

namespace summon {

struct UnsupportedDimension : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Spacetime diagram of a task. 1+1D draws light cones and the causal
/// diamonds; 2+1D draws the spatial projection with time annotations.
/// Throws UnsupportedDimension for dim > 2.
std::string render_svg(const SummoningTask& task);

/// Directed causal graph G in DOT form.
std::string graph_to_dot(const CausalGraph& g);

/// Doubled graph G' in DOT form: diamond vertices as circles, edge vertices
/// as boxes, one labelled qubit per G'-edge.
std::string doubled_graph_to_dot(const DoubledGraph& gp);

}  // namespace summon
