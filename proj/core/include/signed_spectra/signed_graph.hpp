#ifndef SIGNED_SPECTRA_SIGNED_GRAPH_HPP
#define SIGNED_SPECTRA_SIGNED_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace signed_spectra {

/// An edge u < v with sign +1 or -1.
struct SignedEdge {
    std::size_t u = 0;
    std::size_t v = 0;
    int sign = 1;

    bool operator==(const SignedEdge&) const = default;
};

/// A subset of the vertex range of some graph, kept sorted and duplicate-free.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<std::size_t> members);
    explicit VertexSet(std::vector<std::size_t> members);

    const std::vector<std::size_t>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(std::size_t v) const;

    /// Vertices of {0..n-1} not in this set.
    VertexSet complement(std::size_t n) const;

    bool operator==(const VertexSet&) const = default;

private:
    std::vector<std::size_t> members_;
};

/// Symmetric {-1,0,+1} adjacency matrix with zero diagonal.
///
/// Value-semantic and immutable once constructed: every operation in this
/// library returns a new graph. The factories validate all invariants and
/// throw std::invalid_argument on a malformed matrix.
class SignedGraph {
public:
    /// The graph on zero vertices.
    SignedGraph() = default;

    /// Empty graph (no edges) on n vertices.
    explicit SignedGraph(std::size_t n);

    static SignedGraph from_matrix(const std::vector<std::vector<int>>& rows);
    static SignedGraph from_edges(std::size_t n, std::span<const SignedEdge> edges);
    static SignedGraph from_edges(std::size_t n, std::initializer_list<SignedEdge> edges);

    /// Row-major n*n entries; validated.
    static SignedGraph from_entries(std::size_t n, std::vector<std::int8_t> entries);

    std::size_t order() const noexcept { return n_; }
    int sign(std::size_t u, std::size_t v) const { return entries_[u * n_ + v]; }
    bool adjacent(std::size_t u, std::size_t v) const { return entries_[u * n_ + v] != 0; }
    std::span<const std::int8_t> row(std::size_t u) const { return {entries_.data() + u * n_, n_}; }
    const std::vector<std::int8_t>& entries() const noexcept { return entries_; }

    std::size_t degree(std::size_t v) const;
    std::size_t edge_count() const;
    std::vector<SignedEdge> edges() const;

    bool operator==(const SignedGraph&) const = default;

private:
    SignedGraph(std::size_t n, std::vector<std::int8_t> entries, bool validated);

    std::size_t n_ = 0;
    std::vector<std::int8_t> entries_;
};

/// The graph with adjacency matrix -A.
SignedGraph negate(const SignedGraph& g);

/// Negate every edge with exactly one endpoint in x. Throws std::out_of_range
/// when x names a vertex outside the graph.
SignedGraph switch_at(const SignedGraph& g, const VertexSet& x);

/// Conjugate by the diagonal matrix diag(signs); signs[v] in {-1,+1}.
SignedGraph switch_by_signs(const SignedGraph& g, std::span<const int> signs);

/// Block-diagonal combination; vertices of h follow those of g.
SignedGraph disjoint_union(const SignedGraph& g, const SignedGraph& h);

/// g plus `count` disjoint positive K2's.
SignedGraph add_isolated_edges(const SignedGraph& g, std::size_t count);

/// Relabel: vertex v of g becomes vertex perm[v] of the result.
SignedGraph permute(const SignedGraph& g, std::span<const std::size_t> perm);

/// Connected components of the underlying (unsigned) graph, each sorted,
/// ordered by smallest member.
std::vector<VertexSet> underlying_components(const SignedGraph& g);

bool is_connected(const SignedGraph& g);

/// Induced subgraph on the given vertices, relabelled in the set's order.
SignedGraph induced_subgraph(const SignedGraph& g, const VertexSet& vertices);

/// Per-vertex counts of balanced (+) and unbalanced (-) triangles; both are
/// switching invariants.
struct TriangleCounts {
    std::size_t positive = 0;
    std::size_t negative = 0;

    bool operator==(const TriangleCounts&) const = default;
    auto operator<=>(const TriangleCounts&) const = default;
};
std::vector<TriangleCounts> vertex_triangle_counts(const SignedGraph& g);

}  // namespace signed_spectra

#endif  // SIGNED_SPECTRA_SIGNED_GRAPH_HPP
