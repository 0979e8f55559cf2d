#pragma once

#include <string>
#include <string_view>

#include "qramsey/graph.hpp"

namespace qramsey {

// Standard graph6 encoding: the size header N(n) followed by the upper
// adjacency triangle in column order (0,1),(0,2),(1,2),(0,3),... packed
// big-endian into 6-bit groups, each offset by 63 and zero-padded.
std::string encode_graph6(const Graph& g);

// Strict decoder; throws MalformedGraph6 on a bad header, wrong length,
// non-printable byte or nonzero padding. No trailing newline is accepted.
Graph decode_graph6(std::string_view bytes);

// Reads the first graph from a .g6 file, tolerating an optional
// ">>graph6<<" header and a trailing newline.
Graph read_graph6_file(const std::string& path);
void write_graph6_file(const std::string& path, const Graph& g);

}  // namespace qramsey
