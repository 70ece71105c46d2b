#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

/// Largest order representable with the single-byte graph6 size prefix.
inline constexpr std::size_t kMaxGraph6Order = 62;

/// Name of vertex i in a graph of order n: decimal, zero-padded so that
/// lexicographic order agrees with numeric order ("0".."9", "00".."61").
std::string indexed_vertex_name(std::size_t i, std::size_t n);

/// Decodes one graph6 record (no trailing newline). Orders above
/// kMaxGraph6Order raise CapacityError; malformed bytes raise ParseError
/// tagged with `line`.
SimplicialGraph parse_graph6(std::string_view record, std::size_t line = 1);

/// Reads every nonempty record of a graph6 stream; an optional `>>graph6<<`
/// header is skipped.
std::vector<SimplicialGraph> parse_graph6_stream(std::istream& in);

std::string to_graph6(const SimplicialGraph& g);

}  // namespace raag
