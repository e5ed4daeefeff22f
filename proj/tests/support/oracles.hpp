#ifndef SIGNED_SPECTRA_TESTS_ORACLES_HPP
#define SIGNED_SPECTRA_TESTS_ORACLES_HPP

#include <random>
#include <vector>

#include "signed_spectra/families.hpp"
#include "signed_spectra/polynomial.hpp"
#include "signed_spectra/signed_graph.hpp"

namespace signed_spectra::testing {

/// det(xI - A) from exact Bareiss determinants at x = 0..n followed by Newton
/// interpolation over the rationals. Shares no code with char_poly.
Polynomial charpoly_by_interpolation(const SignedGraph& g);

/// Each pair is an edge with probability `density`, then positive or negative
/// with equal probability.
SignedGraph random_signed_graph(std::mt19937& rng, std::size_t n, double density = 0.5);

/// Uniform random subset of {0..n-1}.
VertexSet random_vertex_set(std::mt19937& rng, std::size_t n);

/// Uniform random permutation of {0..n-1}.
std::vector<std::size_t> random_permutation(std::mt19937& rng, std::size_t n);

/// Every restriction-respecting member (both signs, padded to order t.n) whose
/// interpolated characteristic polynomial equals t's. Independent of the
/// closed-form triples.
std::vector<FamilySpec> mates_by_charpoly(std::int64_t a, std::int64_t b, std::int64_t n);

}  // namespace signed_spectra::testing

#endif  // SIGNED_SPECTRA_TESTS_ORACLES_HPP
