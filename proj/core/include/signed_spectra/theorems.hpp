#ifndef SIGNED_SPECTRA_THEOREMS_HPP
#define SIGNED_SPECTRA_THEOREMS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "signed_spectra/catalog.hpp"
#include "signed_spectra/families.hpp"
#include "signed_spectra/signed_graph.hpp"

namespace signed_spectra {

struct Failure {
    std::string instance;
    std::string expected;
    std::string got;

    bool operator==(const Failure&) const = default;
};

struct VerificationReport {
    std::string claim;
    std::size_t checked = 0;
    std::vector<Failure> failures;

    bool passed() const noexcept { return failures.empty(); }
    /// {"claim": ..., "checked": N, "passed": bool, "failures": [{...}]}
    std::string to_json() const;
    /// One line: "<claim>: PASS (N checked)" or "... FAIL (k of N)".
    std::string summary() const;
};

struct SuiteOptions {
    unsigned jobs = 0;
};

/// The three cospectral pair families (A4(m,l) vs A0(m+1,l+1)+K2,
/// AInf(m+2,l+2) vs A3(m,l)+K2, AInf(m,m) vs A22(m)) and their negatives for
/// 1 <= m, l <= bound, plus non-switching-isomorphism when the order is <= 12.
VerificationReport verify_cospectral_pairs(int bound, const SuiteOptions& options = {});

/// A2(m,l)+aK2 and A2(m',l')+a'K2 are cospectral iff ml = m'l' and
/// m+l+a = m'+l'+a', over 2 <= l <= m <= bound and 0 <= a <= bound.
VerificationReport verify_a2_family(int bound, const SuiteOptions& options = {});

/// Tensor-product double cover: (u,i) ~ (v,1-i) with the sign of uv. Vertex
/// (u,i) is numbered u + i*n.
SignedGraph bipartite_double(const SignedGraph& g);

/// F_l as the literal block matrix A20(1,l). Requires l >= 2.
SignedGraph friendship_graph(int l);

/// Specs of triple (1, 2l, n <= 2l+1), padded to order 2l+1, excluding the
/// switching class of F_l.
std::vector<FamilySpec> friendship_mates(int l);
std::vector<FamilySpec> friendship_mates(int l, const Catalog& catalog);

/// Closed form: l in {12,18,30,39,54,60,75}, l = 1 (mod 3), l = 1 (mod 4),
/// l a square, or l triangular.
bool friendship_has_mate(int l);

/// friendship_has_mate(l) against the mate scan for 2 <= l <= l_max, and
/// that A1(3,(l-1)/3) is a mate whenever l = 1 (mod 3) and l >= 7.
VerificationReport verify_friendship(int l_max, const SuiteOptions& options = {});

/// For 2 <= l <= l_max: every friendship mate has unpadded order < 2l+1, and
/// every mate is disconnected.
VerificationReport verify_friendship_corollary(int l_max, const SuiteOptions& options = {});

/// Specs with triple (0, (m-1)^2, 2m) after padding, other than A22(m).
std::vector<FamilySpec> bipartite_double_mates(int m);

/// The explicit list of graphs cospectral with Km x K2 (other than A22(m)).
std::vector<FamilySpec> bipartite_double_theorem_list(int m);

/// For 3 <= m <= m_max: bipartite_double_mates(m) equals the explicit list as
/// switching classes; bipartite_double(Km) is A22(m); and for random signed
/// graphs of order <= 6 the double has char_poly(G) * char_poly(-G).
VerificationReport verify_bipartite_double(int m_max, const SuiteOptions& options = {});

/// Predicate of the DSS theorem for graphs with symmetric spectrum, applied
/// to a pad-0 spec up to negation.
bool symmetric_dss_predicate(const FamilySpec& spec);

/// Catalog DSS flags of every a = 0 entry of build_catalog(n_max) against
/// symmetric_dss_predicate.
VerificationReport symmetric_dss_suite(int n_max, const SuiteOptions& options = {});

/// For catalog entries of order <= n_max with a = 0: is_sign_symmetric against
/// the switching-isomorphism decision between G and -G.
VerificationReport verify_sign_symmetry(int n_max, const SuiteOptions& options = {});

/// x = k(k+1)/2 for some k >= 0.
bool is_triangular(std::int64_t x);
/// x = k^2 + (k-1)^2 for some k >= 1.
bool is_sum_consecutive_squares(std::int64_t x);
bool is_square(std::int64_t x);

}  // namespace signed_spectra

#endif  // SIGNED_SPECTRA_THEOREMS_HPP
