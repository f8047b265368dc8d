/**
 * Graphviz renderings of dual graphs and tight span 1-skeleta.
 */
#pragma once

#include "secfan/envelope.hpp"

#include <string>

namespace secfan {

/** Nodes are maximal cells (labelled by their point count), edges are walls. */
std::string dual_graph_dot(const PointConfiguration& config, const Subdivision& s);

/**
 * Vertices and bounded edges of the envelope.  Each node carries the size of
 * its dual cell and its coordinates rounded to `digits` decimals.
 */
std::string tight_span_dot(const TightSpan& span, int digits = 4);

}  // namespace secfan
