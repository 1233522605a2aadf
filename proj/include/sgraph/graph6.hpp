// graph6.hpp — graph6 interchange codec (nauty "formats" specification).
// Header N(n) followed by the upper adjacency triangle in column order,
// packed big-endian into 6-bit groups biased by 63. Only graph6 proper is
// supported (no sparse6/digraph6).
#pragma once

#include <string>
#include <string_view>

#include "sgraph/graph.hpp"

namespace sgraph {

std::string graph6_encode(const Graph& g);

// Strict decoder: rejects out-of-range bytes, short or trailing data and
// nonzero padding bits, reporting the byte offset via format_error.
Graph graph6_decode(std::string_view text);

}  // namespace sgraph
