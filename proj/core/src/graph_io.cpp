#include "signed_spectra/graph_io.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace signed_spectra {
namespace {

SignedEdge checked_edge(long long u, long long v, long long s, long long n) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw FormatError("edge endpoint out of range");
    if (u == v) throw FormatError("loop edge");
    if (s != 1 && s != -1) throw FormatError("edge sign must be 1 or -1");
    if (u > v) std::swap(u, v);
    return {static_cast<std::size_t>(u), static_cast<std::size_t>(v), static_cast<int>(s)};
}

SignedGraph build(long long n, const std::vector<SignedEdge>& edges) {
    try {
        return SignedGraph::from_edges(static_cast<std::size_t>(n), edges);
    } catch (const std::exception& e) {
        throw FormatError(e.what());
    }
}

}  // namespace

std::string to_json(const SignedGraph& g) {
    std::ostringstream out;
    out << "{\"n\": " << g.order() << ", \"edges\": [";
    bool first = true;
    for (const auto& e : g.edges()) {
        out << (first ? "" : ", ") << '[' << e.u << ", " << e.v << ", " << e.sign << ']';
        first = false;
    }
    out << "]}";
    return out.str();
}

SignedGraph graph_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("graph JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer()) {
        throw FormatError("graph JSON: missing integer field \"n\"");
    }
    const long long n = doc["n"].get<long long>();
    if (n < 0) throw FormatError("graph JSON: negative order");
    std::vector<SignedEdge> edges;
    if (doc.contains("edges")) {
        if (!doc["edges"].is_array()) throw FormatError("graph JSON: \"edges\" must be an array");
        for (const auto& e : doc["edges"]) {
            if (!e.is_array() || e.size() != 3 ||
                !std::all_of(e.begin(), e.end(), [](const auto& x) { return x.is_number_integer(); })) {
                throw FormatError("graph JSON: each edge must be [u, v, s]");
            }
            edges.push_back(checked_edge(e[0].get<long long>(), e[1].get<long long>(), e[2].get<long long>(), n));
        }
    }
    return build(n, edges);
}

std::string to_edge_list(const SignedGraph& g) {
    std::ostringstream out;
    out << g.order() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.sign << '\n';
    return out.str();
}

SignedGraph graph_from_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long n = 0;
    if (!(in >> n) || n < 0) throw FormatError("edge list: first token must be the order n >= 0");
    std::vector<SignedEdge> edges;
    long long u = 0, v = 0, s = 0;
    while (in >> u) {
        if (!(in >> v >> s)) throw FormatError("edge list: truncated edge line");
        edges.push_back(checked_edge(u, v, s, n));
    }
    if (!in.eof()) throw FormatError("edge list: non-integer token");
    return build(n, edges);
}

SignedGraph parse_graph(std::string_view text) {
    const auto pos = text.find_first_not_of(" \t\r\n");
    if (pos != std::string_view::npos && text[pos] == '{') return graph_from_json(text);
    return graph_from_edge_list(text);
}

}  // namespace signed_spectra
