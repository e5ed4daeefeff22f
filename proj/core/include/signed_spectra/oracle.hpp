#ifndef SIGNED_SPECTRA_ORACLE_HPP
#define SIGNED_SPECTRA_ORACLE_HPP

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "signed_spectra/signed_graph.hpp"
#include "signed_spectra/theorems.hpp"

namespace signed_spectra {

inline constexpr std::size_t kOracleMaxOrder = 7;
inline constexpr std::size_t kOracleLongRunningOrder = 8;

/// Identifies a switching-isomorphism class: the canonical underlying graph
/// followed by the least sign pattern on its non-forest edges, over all
/// canonical labellings, once a fixed spanning forest is switched positive.
struct SwitchingClassKey {
    std::string bytes;

    auto operator<=>(const SwitchingClassKey&) const = default;
    bool operator==(const SwitchingClassKey&) const = default;
};

/// Throws std::invalid_argument above kOracleLongRunningOrder vertices.
SwitchingClassKey switching_class_key(const SignedGraph& g);

/// One all-positive representative per isomorphism class of simple graphs on
/// n vertices, by orderly generation. Representatives are canonical: their
/// upper triangle, read column by column, is lexicographically maximal.
std::vector<SignedGraph> nonisomorphic_graphs(std::size_t n);

struct OracleOptions {
    bool allow_long_running = false;  // permits n = 8
    unsigned jobs = 0;
};

class OracleBoundError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// One representative per switching-isomorphism class of signed graphs on n
/// vertices, grouped by underlying graph in generation order. 1 <= n <= 7;
/// n = 8 requires allow_long_running. Throws OracleBoundError otherwise.
std::vector<SignedGraph> enumerate_switching_classes(std::size_t n, const OracleOptions& options = {});

/// Every enumerated class in G' is switching isomorphic to some padded table
/// member of order n, every padded table member of order n is found among the
/// classes, and distinct members land in distinct classes. n <= 7 (8 with the
/// flag).
VerificationReport verify_classification(std::size_t n, const OracleOptions& options = {});

}  // namespace signed_spectra

#endif  // SIGNED_SPECTRA_ORACLE_HPP
