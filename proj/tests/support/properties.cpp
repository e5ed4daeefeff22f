#include "properties.hpp"

#include <functional>
#include <random>

#include "oracles.hpp"
#include "signed_spectra/graph_io.hpp"
#include "signed_spectra/spectral.hpp"
#include "signed_spectra/switching_iso.hpp"

namespace signed_spectra::testing {
namespace {

using Check = std::function<std::string(std::mt19937&)>;

// Runs `check` on `cases` seeded draws; a non-empty return is a failure message.
PropertyResult run(const std::string& name, std::size_t cases, std::uint32_t seed, const Check& check) {
    PropertyResult r{name, cases, 0, {}};
    std::mt19937 rng(seed);
    for (std::size_t i = 0; i < cases; ++i) {
        const std::string message = check(rng);
        if (!message.empty()) {
            if (r.failures++ == 0) r.first_failure = message;
        }
    }
    return r;
}

std::size_t random_order(std::mt19937& rng) {
    return std::uniform_int_distribution<std::size_t>(0, kPropertyMaxOrder)(rng);
}

double random_density(std::mt19937& rng) { return std::uniform_real_distribution<double>(0.2, 0.9)(rng); }

SignedGraph draw(std::mt19937& rng) { return random_signed_graph(rng, random_order(rng), random_density(rng)); }

// Sign product along a closed walk v0 v1 ... vk v0 of the underlying graph.
int walk_sign(const SignedGraph& g, const std::vector<std::size_t>& walk) {
    int s = 1;
    for (std::size_t i = 0; i < walk.size(); ++i) s *= g.sign(walk[i], walk[(i + 1) % walk.size()]);
    return s;
}

// Random closed walk: a random walk of length >= 2 closed by an edge back to
// the start; empty if none was found.
std::vector<std::size_t> random_closed_walk(std::mt19937& rng, const SignedGraph& g) {
    if (g.order() == 0 || g.edge_count() == 0) return {};
    std::uniform_int_distribution<std::size_t> vertex(0, g.order() - 1);
    for (int attempt = 0; attempt < 20; ++attempt) {
        std::vector<std::size_t> walk{vertex(rng)};
        for (int step = 0; step < 8; ++step) {
            std::vector<std::size_t> next;
            for (std::size_t v = 0; v < g.order(); ++v) {
                if (g.adjacent(walk.back(), v)) next.push_back(v);
            }
            if (next.empty()) break;
            walk.push_back(next[std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng)]);
            if (walk.size() >= 3 && g.adjacent(walk.back(), walk.front())) return walk;
        }
    }
    return {};
}

}  // namespace

PropertyResult property_switching_involution(std::size_t cases, std::uint32_t seed) {
    return run("switching is an involution", cases, seed, [](std::mt19937& rng) -> std::string {
        const SignedGraph g = draw(rng);
        const VertexSet x = random_vertex_set(rng, g.order());
        if (switch_at(switch_at(g, x), x) == g) return {};
        return to_json(g);
    });
}

PropertyResult property_switching_complement(std::size_t cases, std::uint32_t seed) {
    return run("switching at X equals switching at its complement", cases, seed, [](std::mt19937& rng) -> std::string {
        const SignedGraph g = draw(rng);
        const VertexSet x = random_vertex_set(rng, g.order());
        if (switch_at(g, x) == switch_at(g, x.complement(g.order()))) return {};
        return to_json(g);
    });
}

PropertyResult property_charpoly_switching_invariance(std::size_t cases, std::uint32_t seed) {
    return run("char_poly is switching invariant", cases, seed, [](std::mt19937& rng) -> std::string {
        const SignedGraph g = draw(rng);
        const SignedGraph h = switch_at(g, random_vertex_set(rng, g.order()));
        if (char_poly(g) == char_poly(h)) return {};
        return to_json(g);
    });
}

PropertyResult property_charpoly_permutation_invariance(std::size_t cases, std::uint32_t seed) {
    return run("char_poly is relabelling invariant", cases, seed, [](std::mt19937& rng) -> std::string {
        const SignedGraph g = draw(rng);
        const auto perm = random_permutation(rng, g.order());
        if (char_poly(g) == char_poly(permute(g, perm))) return {};
        return to_json(g);
    });
}

PropertyResult property_disjoint_union_multiplicative(std::size_t cases, std::uint32_t seed) {
    return run("char_poly of a disjoint union is the product", cases, seed, [](std::mt19937& rng) -> std::string {
        const SignedGraph g = draw(rng);
        const SignedGraph h = draw(rng);
        if (char_poly(disjoint_union(g, h)) == char_poly(g) * char_poly(h)) return {};
        return to_json(g) + " + " + to_json(h);
    });
}

PropertyResult property_negation_reflects_charpoly(std::size_t cases, std::uint32_t seed) {
    return run("char_poly(-G)(x) = (-1)^n char_poly(G)(-x)", cases, seed, [](std::mt19937& rng) -> std::string {
        const SignedGraph g = draw(rng);
        Polynomial expected = char_poly(g).reflected();
        if (g.order() % 2 == 1) expected = -expected;
        if (char_poly(negate(g)) == expected) return {};
        return to_json(g);
    });
}

PropertyResult property_cycle_sign_invariance(std::size_t cases, std::uint32_t seed) {
    return run("closed-walk signs and triangle counts survive switching", cases, seed,
               [](std::mt19937& rng) -> std::string {
                   const SignedGraph g = draw(rng);
                   const SignedGraph h = switch_at(g, random_vertex_set(rng, g.order()));
                   if (vertex_triangle_counts(g) != vertex_triangle_counts(h)) return "triangles " + to_json(g);
                   for (int k = 0; k < 5; ++k) {
                       const auto walk = random_closed_walk(rng, g);
                       if (!walk.empty() && walk_sign(g, walk) != walk_sign(h, walk)) return "walk " + to_json(g);
                   }
                   return {};
               });
}

PropertyResult property_charpoly_matches_interpolation(std::size_t cases, std::uint32_t seed) {
    return run("char_poly agrees with determinant interpolation", cases, seed, [](std::mt19937& rng) -> std::string {
        const SignedGraph g = draw(rng);
        if (char_poly(g) == charpoly_by_interpolation(g)) return {};
        return to_json(g);
    });
}

PropertyResult property_switching_iso_matches_exhaustive(std::size_t cases, std::uint32_t seed) {
    return run("switching-isomorphism decision agrees with exhaustive search", cases, seed,
               [](std::mt19937& rng) -> std::string {
                   const std::size_t n = std::uniform_int_distribution<std::size_t>(1, kPropertyMaxOrder)(rng);
                   const double density = random_density(rng);
                   const SignedGraph g = random_signed_graph(rng, n, density);
                   // A switched relabelling of g, the same with one edge sign flipped, or a fresh graph.
                   const int mode = std::uniform_int_distribution<int>(0, 2)(rng);
                   SignedGraph h = permute(switch_at(g, random_vertex_set(rng, n)), random_permutation(rng, n));
                   if (mode == 1 && h.edge_count() > 0) {
                       auto edges = h.edges();
                       auto& e = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
                       e.sign = -e.sign;
                       h = SignedGraph::from_edges(n, edges);
                   } else if (mode == 2) {
                       h = random_signed_graph(rng, n, density);
                   }
                   const auto witness = find_switching_isomorphism(g, h);
                   const bool fast = witness.has_value();
                   if (fast != is_switching_isomorphic_exhaustive(g, h)) return to_json(g) + " vs " + to_json(h);
                   if (fast && permute(switch_by_signs(g, witness->signs), witness->perm) != h) {
                       return "bad witness " + to_json(g) + " vs " + to_json(h);
                   }
                   return {};
               });
}

std::vector<PropertyResult> run_all_properties(std::size_t cases, std::uint32_t seed) {
    return {
        property_switching_involution(cases, seed + 1),
        property_switching_complement(cases, seed + 2),
        property_charpoly_switching_invariance(cases, seed + 3),
        property_charpoly_permutation_invariance(cases, seed + 4),
        property_disjoint_union_multiplicative(cases, seed + 5),
        property_negation_reflects_charpoly(cases, seed + 6),
        property_cycle_sign_invariance(cases, seed + 7),
        property_charpoly_matches_interpolation(cases, seed + 8),
        property_switching_iso_matches_exhaustive(cases, seed + 9),
    };
}

}  // namespace signed_spectra::testing
