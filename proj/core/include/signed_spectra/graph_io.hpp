#ifndef SIGNED_SPECTRA_GRAPH_IO_HPP
#define SIGNED_SPECTRA_GRAPH_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "signed_spectra/signed_graph.hpp"

namespace signed_spectra {

/// Malformed graph, spec or catalog document.
class FormatError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// {"n": <int>, "edges": [[u, v, s], ...]} with u < v, edges in row-major order.
std::string to_json(const SignedGraph& g);
SignedGraph graph_from_json(std::string_view text);

/// First line n, then one "u v s" line per edge.
std::string to_edge_list(const SignedGraph& g);
SignedGraph graph_from_edge_list(std::string_view text);

/// Dispatches on the first non-blank character ('{' means JSON).
SignedGraph parse_graph(std::string_view text);

}  // namespace signed_spectra

#endif  // SIGNED_SPECTRA_GRAPH_IO_HPP
