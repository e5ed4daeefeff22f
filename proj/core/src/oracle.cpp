#include "signed_spectra/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "signed_spectra/families.hpp"
#include "signed_spectra/parallel.hpp"
#include "signed_spectra/spectral.hpp"

namespace signed_spectra {
namespace {

// Unsigned graph on at most kOracleLongRunningOrder vertices as adjacency bitmasks.
struct Bits {
    std::size_t n = 0;
    std::vector<std::uint32_t> adj;

    bool edge(std::size_t u, std::size_t v) const { return (adj[u] >> v) & 1u; }
    void set(std::size_t u, std::size_t v) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
};

// Position (i,j), i < j, in column order: column j holds (0,j), ..., (j-1,j).
std::size_t pos(std::size_t i, std::size_t j) { return j * (j - 1) / 2 + i; }

// Column d of the labelling `order` (order[k] = old vertex with new label k),
// with (0,d) as the most significant bit.
std::uint32_t column(const Bits& g, const std::vector<std::size_t>& order, std::size_t d, std::size_t v) {
    std::uint32_t c = 0;
    for (std::size_t i = 0; i < d; ++i) c = (c << 1) | (g.edge(order[i], v) ? 1u : 0u);
    return c;
}

// True iff no relabelling gives a lexicographically larger column sequence.
class CanonicityCheck {
public:
    explicit CanonicityCheck(const Bits& g) : g_(g), order_(g.n), used_(g.n, false), ref_(g.n) {
        std::vector<std::size_t> identity(g.n);
        for (std::size_t i = 0; i < g.n; ++i) identity[i] = i;
        for (std::size_t d = 0; d < g.n; ++d) ref_[d] = column(g, identity, d, d);
    }

    bool run() { return !search(0); }

private:
    // Returns true if a larger labelling exists below this node.
    bool search(std::size_t d) {
        if (d == g_.n) return false;
        for (std::size_t v = 0; v < g_.n; ++v) {
            if (used_[v]) continue;
            const std::uint32_t c = column(g_, order_, d, v);
            if (c > ref_[d]) return true;
            if (c < ref_[d]) continue;
            used_[v] = true;
            order_[d] = v;
            const bool larger = search(d + 1);
            used_[v] = false;
            if (larger) return true;
        }
        return false;
    }

    const Bits& g_;
    std::vector<std::size_t> order_;
    std::vector<bool> used_;
    std::vector<std::uint32_t> ref_;
};

// All labellings attaining the maximal column sequence.
class CanonicalLabelling {
public:
    explicit CanonicalLabelling(const Bits& g)
        : g_(g), order_(g.n), used_(g.n, false), best_(g.n, 0), known_(g.n, false) {}

    std::vector<std::vector<std::size_t>> run() {
        search(0);
        return std::move(found_);
    }

    std::vector<std::uint32_t> best() const { return best_; }

private:
    void search(std::size_t d) {
        if (d == g_.n) {
            found_.push_back(order_);
            return;
        }
        for (std::size_t v = 0; v < g_.n; ++v) {
            if (used_[v]) continue;
            const std::uint32_t c = column(g_, order_, d, v);
            if (known_[d]) {
                if (c < best_[d]) continue;
                if (c > best_[d]) raise(d, c);
            } else {
                raise(d, c);
            }
            used_[v] = true;
            order_[d] = v;
            search(d + 1);
            used_[v] = false;
        }
    }

    void raise(std::size_t d, std::uint32_t c) {
        best_[d] = c;
        known_[d] = true;
        std::fill(known_.begin() + static_cast<std::ptrdiff_t>(d) + 1, known_.end(), false);
        found_.clear();
    }

    const Bits& g_;
    std::vector<std::size_t> order_;
    std::vector<bool> used_;
    std::vector<std::uint32_t> best_;
    std::vector<bool> known_;
    std::vector<std::vector<std::size_t>> found_;
};

Bits underlying(const SignedGraph& g) {
    Bits b{g.order(), std::vector<std::uint32_t>(g.order(), 0)};
    for (const auto& e : g.edges()) b.set(e.u, e.v);
    return b;
}

Bits relabel(const Bits& g, const std::vector<std::size_t>& order) {
    Bits h{g.n, std::vector<std::uint32_t>(g.n, 0)};
    for (std::size_t j = 0; j < g.n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (g.edge(order[i], order[j])) h.set(i, j);
        }
    }
    return h;
}

// A fixed spanning forest (BFS from the smallest unvisited vertex) and the
// remaining edges in column order.
struct Forest {
    std::vector<std::size_t> bfs;                  // visiting order
    std::vector<std::size_t> parent;               // parent[root] = root
    std::vector<std::pair<std::size_t, std::size_t>> cotree;
};

Forest spanning_forest(const Bits& g) {
    Forest f;
    f.parent.assign(g.n, g.n);
    for (std::size_t r = 0; r < g.n; ++r) {
        if (f.parent[r] != g.n) continue;
        f.parent[r] = r;
        std::size_t head = f.bfs.size();
        f.bfs.push_back(r);
        while (head < f.bfs.size()) {
            const std::size_t u = f.bfs[head++];
            for (std::size_t v = 0; v < g.n; ++v) {
                if (g.edge(u, v) && f.parent[v] == g.n) {
                    f.parent[v] = u;
                    f.bfs.push_back(v);
                }
            }
        }
    }
    for (std::size_t j = 0; j < g.n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (g.edge(i, j) && f.parent[i] != j && f.parent[j] != i) f.cotree.emplace_back(i, j);
        }
    }
    return f;
}

// Sign pattern on the cotree edges once the forest is switched positive.
// sign(i, j) reads the relabelled graph.
template <class SignFn>
std::uint64_t cotree_mask(const Forest& f, SignFn sign) {
    std::vector<int> s(f.parent.size(), 1);
    for (const std::size_t v : f.bfs) {
        if (f.parent[v] != v) s[v] = s[f.parent[v]] * sign(f.parent[v], v);
    }
    std::uint64_t mask = 0;
    for (std::size_t k = 0; k < f.cotree.size(); ++k) {
        const auto [i, j] = f.cotree[k];
        if (s[i] * s[j] * sign(i, j) < 0) mask |= std::uint64_t{1} << k;
    }
    return mask;
}

std::string encode_key(const Bits& canonical, std::uint64_t mask) {
    std::string bytes;
    bytes.push_back(static_cast<char>(canonical.n));
    for (std::size_t j = 1; j < canonical.n; ++j) {
        for (std::size_t i = 0; i < j; ++i) bytes.push_back(canonical.edge(i, j) ? '1' : '0');
    }
    bytes.push_back(':');
    for (int shift = 56; shift >= 0; shift -= 8) bytes.push_back(static_cast<char>((mask >> shift) & 0xFFu));
    return bytes;
}

void check_key_order(std::size_t n) {
    if (n > kOracleLongRunningOrder) {
        throw std::invalid_argument("switching_class_key: order " + std::to_string(n) + " exceeds " +
                                    std::to_string(kOracleLongRunningOrder));
    }
}

void extend(Bits& g, std::size_t n_pos, std::size_t next, const std::vector<std::pair<std::size_t, std::size_t>>& at,
            std::vector<SignedGraph>& out) {
    std::vector<SignedEdge> edges;
    for (std::size_t j = 0; j < g.n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (g.edge(i, j)) edges.push_back({i, j, 1});
        }
    }
    out.push_back(SignedGraph::from_edges(g.n, edges));
    for (std::size_t p = next; p < n_pos; ++p) {
        const auto [i, j] = at[p];
        g.set(i, j);
        if (CanonicityCheck(g).run()) extend(g, n_pos, p + 1, at, out);
        g.adj[i] &= ~(1u << j);
        g.adj[j] &= ~(1u << i);
    }
}

std::vector<SignedGraph> classes_over(const SignedGraph& base) {
    const Bits g = underlying(base);
    const Forest forest = spanning_forest(g);
    const auto automorphisms = CanonicalLabelling(g).run();
    const std::size_t r = forest.cotree.size();
    std::vector<bool> seen(std::size_t{1} << r, false);
    std::vector<SignedGraph> out;
    std::vector<std::int8_t> entries(g.n * g.n, 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
        if (seen[mask]) continue;
        std::fill(entries.begin(), entries.end(), 0);
        for (std::size_t v = 0; v < g.n; ++v) {
            for (std::size_t w = 0; w < g.n; ++w) {
                if (g.edge(v, w)) entries[v * g.n + w] = 1;
            }
        }
        for (std::size_t k = 0; k < r; ++k) {
            if ((mask >> k) & 1u) {
                const auto [i, j] = forest.cotree[k];
                entries[i * g.n + j] = entries[j * g.n + i] = -1;
            }
        }
        for (const auto& order : automorphisms) {
            const std::uint64_t image = cotree_mask(
                forest, [&](std::size_t i, std::size_t j) { return entries[order[i] * g.n + order[j]]; });
            seen[image] = true;
        }
        out.push_back(SignedGraph::from_entries(g.n, entries));
    }
    return out;
}

}  // namespace

SwitchingClassKey switching_class_key(const SignedGraph& g) {
    check_key_order(g.order());
    const Bits b = underlying(g);
    CanonicalLabelling labelling(b);
    const auto orders = labelling.run();
    const Bits canonical = orders.empty() ? b : relabel(b, orders.front());
    const Forest forest = spanning_forest(canonical);
    std::uint64_t best = ~std::uint64_t{0};
    for (const auto& order : orders) {
        best = std::min(best, cotree_mask(forest, [&](std::size_t i, std::size_t j) { return g.sign(order[i], order[j]); }));
    }
    if (orders.empty()) best = 0;
    return SwitchingClassKey{encode_key(canonical, best)};
}

std::vector<SignedGraph> nonisomorphic_graphs(std::size_t n) {
    check_key_order(n);
    std::vector<std::pair<std::size_t, std::size_t>> at(n * (n - (n > 0 ? 1 : 0)) / 2);
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) at[pos(i, j)] = {i, j};
    }
    Bits g{n, std::vector<std::uint32_t>(n, 0)};
    std::vector<SignedGraph> out;
    extend(g, at.size(), 0, at, out);
    return out;
}

std::vector<SignedGraph> enumerate_switching_classes(std::size_t n, const OracleOptions& options) {
    if (n < 1) throw OracleBoundError("enumerate_switching_classes: n must be at least 1");
    if (n > kOracleLongRunningOrder || (n > kOracleMaxOrder && !options.allow_long_running)) {
        throw OracleBoundError("enumerate_switching_classes: n = " + std::to_string(n) + " exceeds " +
                               std::to_string(kOracleMaxOrder) +
                               (n == kOracleLongRunningOrder ? " (n = 8 needs the long-running flag)" : ""));
    }
    const auto graphs = nonisomorphic_graphs(n);
    std::vector<std::vector<SignedGraph>> slots(graphs.size());
    parallel_for(graphs.size(), options.jobs, [&](std::size_t i) { slots[i] = classes_over(graphs[i]); });
    std::vector<SignedGraph> out;
    for (auto& s : slots) {
        for (auto& g : s) out.push_back(std::move(g));
    }
    return out;
}

VerificationReport verify_classification(std::size_t n, const OracleOptions& options) {
    const auto classes = enumerate_switching_classes(n, options);
    std::vector<SwitchingClassKey> keys(classes.size());
    std::vector<GMembership> membership(classes.size());
    parallel_for(classes.size(), options.jobs, [&](std::size_t i) {
        keys[i] = switching_class_key(classes[i]);
        membership[i] = classify(classes[i]);
    });
    std::map<SwitchingClassKey, std::size_t> index;
    for (std::size_t i = 0; i < keys.size(); ++i) index.emplace(keys[i], i);

    VerificationReport report{"classification n=" + std::to_string(n), 0, {}};
    if (index.size() != keys.size()) {
        report.failures.push_back({"enumeration", "distinct class keys", std::to_string(index.size()) + " of " +
                                                                              std::to_string(keys.size())});
    }

    std::vector<FamilySpec> members;
    for (auto spec : instances_up_to(std::max<int>(4, static_cast<int>(n)))) {
        const int base = order(spec);
        if (base > static_cast<int>(n) || (static_cast<int>(n) - base) % 2 != 0) continue;
        spec.pad = (static_cast<int>(n) - base) / 2;
        // The catalog keeps a >= 0; the classes with a < 0 are the negatives.
        if (predicted_triple(spec).a() > 0) {
            FamilySpec negative = spec;
            negative.negated = !negative.negated;
            members.push_back(std::move(negative));
        }
        members.push_back(std::move(spec));
    }
    std::vector<int> owner(classes.size(), -1);
    for (std::size_t k = 0; k < members.size(); ++k) {
        const auto& spec = members[k];
        ++report.checked;
        const SignedGraph g = construct(spec);
        const auto it = index.find(switching_class_key(g));
        if (it == index.end()) {
            report.failures.push_back({to_compact(spec), "among enumerated classes", "missing"});
            continue;
        }
        const std::size_t c = it->second;
        const auto& m = membership[c];
        if (m.tag != Membership::InGPrime || !(*m.triple == predicted_triple(spec))) {
            report.failures.push_back({to_compact(spec), predicted_triple(spec).to_json(),
                                       m.triple ? m.triple->to_json() : std::string(to_string(m.tag))});
        }
        if (owner[c] >= 0) {
            report.failures.push_back({to_compact(spec), "its own switching class",
                                       "same class as " + to_compact(members[static_cast<std::size_t>(owner[c])])});
        }
        owner[c] = static_cast<int>(k);
    }
    for (std::size_t c = 0; c < classes.size(); ++c) {
        if (membership[c].tag != Membership::InGPrime) continue;
        ++report.checked;
        if (owner[c] < 0) {
            report.failures.push_back({"class " + std::to_string(c) + " " + membership[c].triple->to_json(),
                                       "a table member", "none"});
        }
    }
    return report;
}

}  // namespace signed_spectra
