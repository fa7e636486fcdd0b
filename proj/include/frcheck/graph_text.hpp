#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "frcheck/graph.hpp"

namespace frcheck {

enum class TextFormat { Graph6, Sparse6 };

/// Decodes one graph6 or sparse6 record (sparse6 starts with ':'). An optional
/// leading ">>graph6<<" / ">>sparse6<<" header and trailing whitespace are
/// ignored. Throws MalformedRecord, or NotCubic (etc.) from validation.
///
/// graph6 yields edges in bit order (by larger endpoint, then smaller);
/// sparse6 yields them in stream order.
CubicGraph parse_graph_text(std::string_view line);

/// Encodes without header or newline. graph6 throws SimpleFormatOnMultigraph
/// for graphs with parallel edges.
std::string encode_graph_text(const CubicGraph& g, TextFormat format);

// graph6 when the graph is simple, sparse6 otherwise.
std::string canonical_text(const CubicGraph& g);

// Strips a >>graph6<< / >>sparse6<< prefix and surrounding whitespace.
// Returns nullopt when nothing but a header is left.
std::optional<std::string_view> strip_record(std::string_view line);

}  // namespace frcheck
