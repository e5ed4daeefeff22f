#ifndef SIGNED_SPECTRA_CATALOG_HPP
#define SIGNED_SPECTRA_CATALOG_HPP

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "signed_spectra/families.hpp"
#include "signed_spectra/spectral.hpp"

namespace signed_spectra {

/// One 4-tuple (a, b, n, +-Ai) of the catalog. `triple` has a >= 0 and
/// `spec` has pad == 0.
struct CatalogEntry {
    CharTriple triple;
    FamilySpec spec;
    std::size_t cluster_id = 0;
    std::size_t position = 0;
    bool dss = false;

    bool operator==(const CatalogEntry&) const = default;
};

/// Every member of the table of order <= n_max in normal form, sorted by
/// (a, b, n, row, params, negated) and clustered by (a, b).
struct Catalog {
    int n_max = 0;
    std::vector<CatalogEntry> entries;

    /// Entries of the (a, b) cluster (a >= 0); empty if absent.
    std::span<const CatalogEntry> cluster(std::int64_t a, std::int64_t b) const;
    /// The entry for a pad-0 spec in normal form, or nullptr.
    const CatalogEntry* find(const FamilySpec& spec) const;
    std::size_t cluster_count() const;

    bool operator==(const Catalog&) const = default;
};

struct CatalogOptions {
    unsigned jobs = 0;
    /// Also compute every entry's triple from its exact characteristic
    /// polynomial and throw std::logic_error on disagreement with the closed form.
    bool verify_spectra = false;
};

/// Throws std::invalid_argument if n_max < 4.
Catalog build_catalog(int n_max, const CatalogOptions& options = {});

/// Every spec with triple exactly t, padded with isolated edges to order t.n.
/// For a < 0 these are the negatives of the mates of (-a, b, n). Throws
/// std::out_of_range if t.n exceeds the catalog bound.
std::vector<FamilySpec> cospectral_mates(const CharTriple& t, const Catalog& catalog);

/// Same, scanning instances_up_to(t.n) directly (no bound beyond t.n).
std::vector<FamilySpec> cospectral_mates(const CharTriple& t);

/// Rewrites a pad-0 spec to the form stored in the catalog: a < 0 negated away
/// and a sign-symmetric a = 0 spec unnegated. The second member reports
/// whether the sign was flipped.
std::pair<FamilySpec, bool> catalog_normal_form(const FamilySpec& spec);

/// DSS verdict. Without padding: the entry's flag. With padding: the unpadded
/// spec is DSS and every other entry of its cluster has order greater than the
/// padded order. Throws std::out_of_range beyond the catalog bound.
bool is_dss(const FamilySpec& spec, const Catalog& catalog);

enum class CatalogFormat { Csv, Json, Markdown };

/// Byte-stable renderings. CSV columns: a,b,n,family,params,negated,
/// cluster_id,position,dss with params separated by ';'.
std::string export_catalog(const Catalog& catalog, CatalogFormat format);

/// Inverses of the CSV and JSON exports. CSV carries no bound, so it is
/// passed in. Throw FormatError.
Catalog catalog_from_json(std::string_view text);
Catalog catalog_from_csv(std::string_view text, int n_max);

}  // namespace signed_spectra

#endif  // SIGNED_SPECTRA_CATALOG_HPP
