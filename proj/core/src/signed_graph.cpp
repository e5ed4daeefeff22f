#include "signed_spectra/signed_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace signed_spectra {

VertexSet::VertexSet(std::initializer_list<std::size_t> members)
    : VertexSet(std::vector<std::size_t>(members)) {}

VertexSet::VertexSet(std::vector<std::size_t> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(std::size_t v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSet VertexSet::complement(std::size_t n) const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < n; ++v) {
        if (!contains(v)) out.push_back(v);
    }
    return VertexSet(std::move(out));
}

SignedGraph::SignedGraph(std::size_t n) : n_(n), entries_(n * n, 0) {}

SignedGraph::SignedGraph(std::size_t n, std::vector<std::int8_t> entries, bool validated)
    : n_(n), entries_(std::move(entries)) {
    if (validated) return;
    if (entries_.size() != n_ * n_) {
        throw std::invalid_argument("signed graph: expected " + std::to_string(n_ * n_) +
                                    " entries, got " + std::to_string(entries_.size()));
    }
    for (std::size_t i = 0; i < n_; ++i) {
        if (entries_[i * n_ + i] != 0) {
            throw std::invalid_argument("signed graph: loop at vertex " + std::to_string(i));
        }
        for (std::size_t j = i + 1; j < n_; ++j) {
            const int a = entries_[i * n_ + j];
            if (a < -1 || a > 1) {
                throw std::invalid_argument("signed graph: entry (" + std::to_string(i) + "," +
                                            std::to_string(j) + ") not in {-1,0,1}");
            }
            if (a != entries_[j * n_ + i]) {
                throw std::invalid_argument("signed graph: asymmetric at (" + std::to_string(i) +
                                            "," + std::to_string(j) + ")");
            }
        }
    }
}

SignedGraph SignedGraph::from_entries(std::size_t n, std::vector<std::int8_t> entries) {
    return SignedGraph(n, std::move(entries), false);
}

SignedGraph SignedGraph::from_matrix(const std::vector<std::vector<int>>& rows) {
    const std::size_t n = rows.size();
    std::vector<std::int8_t> entries;
    entries.reserve(n * n);
    for (const auto& r : rows) {
        if (r.size() != n) throw std::invalid_argument("signed graph: matrix is not square");
        for (int a : r) {
            if (a < -1 || a > 1) throw std::invalid_argument("signed graph: entry not in {-1,0,1}");
            entries.push_back(static_cast<std::int8_t>(a));
        }
    }
    return SignedGraph(n, std::move(entries), false);
}

SignedGraph SignedGraph::from_edges(std::size_t n, std::span<const SignedEdge> edges) {
    std::vector<std::int8_t> entries(n * n, 0);
    for (const auto& e : edges) {
        if (e.u >= n || e.v >= n) {
            throw std::out_of_range("signed graph: edge endpoint out of range");
        }
        if (e.u == e.v) throw std::invalid_argument("signed graph: loop edge");
        if (e.sign != 1 && e.sign != -1) throw std::invalid_argument("signed graph: edge sign must be +1 or -1");
        if (entries[e.u * n + e.v] != 0) throw std::invalid_argument("signed graph: repeated edge");
        entries[e.u * n + e.v] = static_cast<std::int8_t>(e.sign);
        entries[e.v * n + e.u] = static_cast<std::int8_t>(e.sign);
    }
    return SignedGraph(n, std::move(entries), true);
}

SignedGraph SignedGraph::from_edges(std::size_t n, std::initializer_list<SignedEdge> edges) {
    return from_edges(n, std::span<const SignedEdge>(edges.begin(), edges.size()));
}

std::size_t SignedGraph::degree(std::size_t v) const {
    const auto r = row(v);
    return static_cast<std::size_t>(std::count_if(r.begin(), r.end(), [](std::int8_t a) { return a != 0; }));
}

std::size_t SignedGraph::edge_count() const {
    std::size_t count = 0;
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) count += adjacent(i, j) ? 1 : 0;
    }
    return count;
}

std::vector<SignedEdge> SignedGraph::edges() const {
    std::vector<SignedEdge> out;
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) {
            if (adjacent(i, j)) out.push_back({i, j, sign(i, j)});
        }
    }
    return out;
}

SignedGraph negate(const SignedGraph& g) {
    std::vector<std::int8_t> entries = g.entries();
    for (auto& a : entries) a = static_cast<std::int8_t>(-a);
    return SignedGraph::from_entries(g.order(), std::move(entries));
}

SignedGraph switch_by_signs(const SignedGraph& g, std::span<const int> signs) {
    const std::size_t n = g.order();
    if (signs.size() != n) throw std::invalid_argument("switch: sign vector has wrong length");
    std::vector<std::int8_t> entries(g.entries());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            entries[i * n + j] = static_cast<std::int8_t>(entries[i * n + j] * signs[i] * signs[j]);
        }
    }
    return SignedGraph::from_entries(n, std::move(entries));
}

SignedGraph switch_at(const SignedGraph& g, const VertexSet& x) {
    std::vector<int> signs(g.order(), 1);
    for (std::size_t v : x.members()) {
        if (v >= g.order()) {
            throw std::out_of_range("switch: vertex " + std::to_string(v) + " outside graph of order " +
                                    std::to_string(g.order()));
        }
        signs[v] = -1;
    }
    return switch_by_signs(g, signs);
}

SignedGraph disjoint_union(const SignedGraph& g, const SignedGraph& h) {
    const std::size_t n = g.order() + h.order();
    std::vector<std::int8_t> entries(n * n, 0);
    for (std::size_t i = 0; i < g.order(); ++i) {
        for (std::size_t j = 0; j < g.order(); ++j) entries[i * n + j] = static_cast<std::int8_t>(g.sign(i, j));
    }
    const std::size_t off = g.order();
    for (std::size_t i = 0; i < h.order(); ++i) {
        for (std::size_t j = 0; j < h.order(); ++j) {
            entries[(off + i) * n + off + j] = static_cast<std::int8_t>(h.sign(i, j));
        }
    }
    return SignedGraph::from_entries(n, std::move(entries));
}

SignedGraph add_isolated_edges(const SignedGraph& g, std::size_t count) {
    if (count == 0) return g;
    const std::size_t n = g.order() + 2 * count;
    std::vector<std::int8_t> entries(n * n, 0);
    for (std::size_t i = 0; i < g.order(); ++i) {
        for (std::size_t j = 0; j < g.order(); ++j) entries[i * n + j] = static_cast<std::int8_t>(g.sign(i, j));
    }
    for (std::size_t k = 0; k < count; ++k) {
        const std::size_t u = g.order() + 2 * k;
        entries[u * n + u + 1] = 1;
        entries[(u + 1) * n + u] = 1;
    }
    return SignedGraph::from_entries(n, std::move(entries));
}

SignedGraph permute(const SignedGraph& g, std::span<const std::size_t> perm) {
    const std::size_t n = g.order();
    if (perm.size() != n) throw std::invalid_argument("permute: permutation has wrong length");
    std::vector<bool> seen(n, false);
    for (std::size_t p : perm) {
        if (p >= n || seen[p]) throw std::invalid_argument("permute: not a permutation");
        seen[p] = true;
    }
    std::vector<std::int8_t> entries(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            entries[perm[i] * n + perm[j]] = static_cast<std::int8_t>(g.sign(i, j));
        }
    }
    return SignedGraph::from_entries(n, std::move(entries));
}

std::vector<VertexSet> underlying_components(const SignedGraph& g) {
    const std::size_t n = g.order();
    std::vector<bool> seen(n, false);
    std::vector<VertexSet> out;
    std::vector<std::size_t> stack;
    for (std::size_t root = 0; root < n; ++root) {
        if (seen[root]) continue;
        std::vector<std::size_t> members;
        seen[root] = true;
        stack.push_back(root);
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            members.push_back(u);
            for (std::size_t v = 0; v < n; ++v) {
                if (g.adjacent(u, v) && !seen[v]) {
                    seen[v] = true;
                    stack.push_back(v);
                }
            }
        }
        out.emplace_back(std::move(members));
    }
    return out;
}

bool is_connected(const SignedGraph& g) {
    return underlying_components(g).size() <= 1;
}

SignedGraph induced_subgraph(const SignedGraph& g, const VertexSet& vertices) {
    const auto& vs = vertices.members();
    const std::size_t k = vs.size();
    std::vector<std::int8_t> entries(k * k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        if (vs[i] >= g.order()) throw std::out_of_range("induced_subgraph: vertex out of range");
        for (std::size_t j = 0; j < k; ++j) entries[i * k + j] = static_cast<std::int8_t>(g.sign(vs[i], vs[j]));
    }
    return SignedGraph::from_entries(k, std::move(entries));
}

std::vector<TriangleCounts> vertex_triangle_counts(const SignedGraph& g) {
    const std::size_t n = g.order();
    std::vector<TriangleCounts> out(n);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (!g.adjacent(u, v)) continue;
            for (std::size_t w = v + 1; w < n; ++w) {
                if (!g.adjacent(u, w) || !g.adjacent(v, w)) continue;
                const bool balanced = g.sign(u, v) * g.sign(u, w) * g.sign(v, w) > 0;
                for (std::size_t x : {u, v, w}) {
                    if (balanced) {
                        ++out[x].positive;
                    } else {
                        ++out[x].negative;
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace signed_spectra
