#ifndef SIGNED_SPECTRA_SWITCHING_ISO_HPP
#define SIGNED_SPECTRA_SWITCHING_ISO_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "signed_spectra/signed_graph.hpp"

namespace signed_spectra {

/// Witness that h = permute(switch_by_signs(g, signs), perm).
struct SwitchingIsomorphism {
    std::vector<std::size_t> perm;
    std::vector<int> signs;
};

/// Backtracking search that branches on the image of one vertex together with
/// its switching value, pruned by equitable refinement of a switching-invariant
/// colouring (degree, balanced/unbalanced triangles through each vertex).
///
/// Internally the pair (vertex, switching value) is a vertex of the signed
/// double cover, so a branch fixes both at once and refinement propagates the
/// forced switching values along edges.
std::optional<SwitchingIsomorphism> find_switching_isomorphism(const SignedGraph& g, const SignedGraph& h);

bool is_switching_isomorphic(const SignedGraph& g, const SignedGraph& h);

/// Independent oracle: tries every switching of g that fixes vertex 0
/// (2^(n-1) of them) and runs a plain sign-preserving isomorphism test against
/// h. Exponential; intended for n <= 10. Throws std::invalid_argument above 16.
bool is_switching_isomorphic_exhaustive(const SignedGraph& g, const SignedGraph& h);

/// Sign-preserving isomorphism (no switching): perm with h = permute(g, perm).
std::optional<std::vector<std::size_t>> find_signed_isomorphism(const SignedGraph& g, const SignedGraph& h);

}  // namespace signed_spectra

#endif  // SIGNED_SPECTRA_SWITCHING_ISO_HPP
