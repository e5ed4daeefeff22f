#ifndef SIGNED_SPECTRA_FAMILIES_HPP
#define SIGNED_SPECTRA_FAMILIES_HPP

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "signed_spectra/signed_graph.hpp"
#include "signed_spectra/spectral.hpp"

namespace signed_spectra {

/// The 27 rows of the classification table of signed graphs with exactly two
/// eigenvalues r > 1, s < -1 and all others equal to +-1. AInf is the union of
/// an all-positive and an all-negative complete graph.
enum class FamilyId : int {
    A0, A1, A2, A3, A4, A5, A6, A7, A8, A9, A10, A11, A12, A13,
    A14, A15, A16, A17, A18, A19, A20, A21, A22, A23, A24, A25, AInf
};

inline constexpr std::size_t kFamilyCount = 27;
const std::array<FamilyId, kFamilyCount>& all_families();

std::string_view family_name(FamilyId id);  // "A0" ... "A25", "AInf"
std::optional<FamilyId> parse_family(std::string_view name);

/// Number of parameters a row takes: (m,l) for most rows, (m,l,k) for A5-A7,
/// (m,l,k,j) for A12 and A15, (m) for A8, A9, A22, none for A16, A17, A23, A24.
std::size_t param_arity(FamilyId id);

/// A concrete member of a row, optionally negated and padded with `pad`
/// disjoint positive K2's. Names a signed graph up to switching isomorphism.
struct FamilySpec {
    FamilyId id = FamilyId::A0;
    std::vector<int> params;
    bool negated = false;
    int pad = 0;

    auto operator<=>(const FamilySpec&) const = default;
    bool operator==(const FamilySpec&) const = default;
};

/// Parameters outside the row's restrictions.
class RestrictionError : public std::invalid_argument {
public:
    RestrictionError(FamilyId id, const std::string& detail);
    FamilyId family() const noexcept { return id_; }

private:
    FamilyId id_;
};

/// Throws RestrictionError naming the row and the offending parameter.
void validate(const FamilySpec& spec);
bool satisfies_restrictions(const FamilySpec& spec) noexcept;

/// Order of the unpadded block matrix.
int base_order(FamilyId id, std::span<const int> params);
int order(const FamilySpec& spec);

/// The row's block matrix (negated if requested, padded), after validation.
SignedGraph construct(const FamilySpec& spec);

/// The same block matrix without the row restrictions; only the arity and
/// non-negative block sizes are checked. Used for members the table removes as
/// duplicates, e.g. the friendship graph A20(1,l).
SignedGraph construct_literal(const FamilySpec& spec);

/// Closed-form triple of the row; a flips with `negated`, n grows by 2*pad.
CharTriple predicted_triple(const FamilySpec& spec);

/// Whether the graph is switching isomorphic to its negative, by the closed
/// form: a = 0 and the row is not one of A1, A2 (m != l), A5, A6, A8, A13,
/// A18, A19. Requires pad == 0.
bool is_sign_symmetric(const FamilySpec& spec);

/// Every unpadded spec of order <= n_max in catalog normal form: a > 0 rows
/// unnegated, a < 0 rows negated, and a = 0 rows once, or twice (both signs)
/// when not sign-symmetric. Sorted by (row, params, negated).
std::vector<FamilySpec> instances_up_to(int n_max);

/// Every restriction-respecting unpadded, unnegated (row, params) of order <= n_max.
std::vector<FamilySpec> parameter_sets_up_to(int n_max);

/// Display form "-A3(4,4)+2K2"; "+K2" for a single pad.
std::string to_compact(const FamilySpec& spec);
/// {"id": "A3", "params": [4,4], "negated": false, "pad": 0}
std::string to_json(const FamilySpec& spec);

/// Accepts the compact grammar [-]A<k>(<params>)[+<alpha>K2] (whitespace and a
/// Unicode minus allowed) or the JSON object. Throws FormatError. Does not
/// check row restrictions.
FamilySpec parse_spec(std::string_view text);

}  // namespace signed_spectra

#endif  // SIGNED_SPECTRA_FAMILIES_HPP
