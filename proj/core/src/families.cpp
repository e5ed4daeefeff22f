#include "signed_spectra/families.hpp"

#include <algorithm>
#include <cstdint>
#include <tuple>
#include <utility>

#include "json.hpp"
#include "signed_spectra/graph_io.hpp"

namespace signed_spectra {
namespace {

using Params = std::span<const int>;
using RawTriple = std::tuple<std::int64_t, std::int64_t, std::int64_t>;

// ---------------------------------------------------------------------------
// Block-matrix assembly

enum class Block { J, MinusJ, JMinusI, IMinusJ, Identity, Reverse, MinusReverse };

struct Placement {
    std::size_t row;
    std::size_t col;
    Block kind;
};

int block_entry(Block kind, std::size_t i, std::size_t j, std::size_t size) {
    switch (kind) {
        case Block::J: return 1;
        case Block::MinusJ: return -1;
        case Block::JMinusI: return i == j ? 0 : 1;
        case Block::IMinusJ: return i == j ? 0 : -1;
        case Block::Identity: return i == j ? 1 : 0;
        case Block::Reverse: return i + j + 1 == size ? 1 : 0;
        case Block::MinusReverse: return i + j + 1 == size ? -1 : 0;
    }
    return 0;
}

bool needs_square(Block kind) { return kind != Block::J && kind != Block::MinusJ; }

// Upper-triangular placements only; the lower triangle is filled by symmetry.
// Unlisted blocks are zero.
SignedGraph assemble(const std::vector<int>& sizes, std::initializer_list<Placement> placements) {
    std::vector<std::size_t> offset(sizes.size() + 1, 0);
    for (std::size_t b = 0; b < sizes.size(); ++b) {
        if (sizes[b] < 0) throw std::invalid_argument("negative block size");
        offset[b + 1] = offset[b] + static_cast<std::size_t>(sizes[b]);
    }
    const std::size_t n = offset.back();
    std::vector<std::int8_t> entries(n * n, 0);
    for (const auto& p : placements) {
        const auto rows = static_cast<std::size_t>(sizes[p.row]);
        const auto cols = static_cast<std::size_t>(sizes[p.col]);
        if (needs_square(p.kind) && rows != cols) throw std::logic_error("non-square I/R block");
        if (p.row == p.col) {
            // Diagonal blocks must have a zero diagonal: R_k only for even k.
            if (p.kind == Block::J || p.kind == Block::MinusJ || p.kind == Block::Identity) {
                throw std::logic_error("diagonal block with loops");
            }
            if ((p.kind == Block::Reverse || p.kind == Block::MinusReverse) && rows % 2 != 0) {
                throw std::logic_error("odd reverse-identity block on the diagonal");
            }
        }
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) {
                const auto v = static_cast<std::int8_t>(block_entry(p.kind, i, j, rows));
                const std::size_t r = offset[p.row] + i;
                const std::size_t c = offset[p.col] + j;
                entries[r * n + c] = v;
                entries[c * n + r] = v;
            }
        }
    }
    return SignedGraph::from_entries(n, std::move(entries));
}

// Transcription of the table. Block sizes are listed top-left to bottom-right.
SignedGraph block_matrix(FamilyId id, Params p) {
    using B = Block;
    switch (id) {
        case FamilyId::A0:
            return assemble({p[0], p[1]}, {{0, 0, B::JMinusI}, {0, 1, B::J}, {1, 1, B::IMinusJ}});
        case FamilyId::A1:
            return assemble({p[0], 2 * p[1]}, {{0, 0, B::JMinusI}, {0, 1, B::J}, {1, 1, B::MinusReverse}});
        case FamilyId::A2:
            return assemble({2 * p[0], 2 * p[1]}, {{0, 0, B::Reverse}, {0, 1, B::J}, {1, 1, B::MinusReverse}});
        case FamilyId::A3:
            return assemble({p[0], 1, 1, p[1]}, {{0, 0, B::JMinusI}, {0, 1, B::J}, {0, 2, B::J}, {1, 2, B::J},
                                                 {1, 3, B::MinusJ}, {2, 3, B::J}, {3, 3, B::IMinusJ}});
        case FamilyId::A4:
            return assemble({p[0], p[1], 2, 2}, {{0, 0, B::JMinusI}, {0, 1, B::J}, {0, 2, B::J}, {1, 1, B::IMinusJ},
                                                 {1, 3, B::J}, {2, 2, B::Reverse}, {3, 3, B::MinusReverse}});
        case FamilyId::A5:
            return assemble({p[0], p[1], p[2]},
                            {{0, 0, B::JMinusI}, {0, 1, B::J}, {0, 2, B::J}, {1, 1, B::JMinusI}, {2, 2, B::IMinusJ}});
        case FamilyId::A6:
            return assemble({p[0], p[1], 2 * p[2]},
                            {{0, 0, B::JMinusI}, {0, 1, B::J}, {0, 2, B::J}, {1, 1, B::IMinusJ}, {2, 2, B::Reverse}});
        case FamilyId::A7:
            return assemble({2 * p[0], p[1], 2 * p[2]}, {{0, 0, B::Reverse}, {0, 1, B::J}, {0, 2, B::J},
                                                         {1, 1, B::JMinusI}, {2, 2, B::MinusReverse}});
        case FamilyId::A8:
            return assemble({2, p[0], 1, 4}, {{0, 0, B::Reverse}, {0, 1, B::J}, {0, 2, B::J}, {1, 1, B::IMinusJ},
                                              {1, 3, B::J}, {3, 3, B::MinusReverse}});
        case FamilyId::A9:
            return assemble({2 * p[0], 2, 2, 1}, {{0, 0, B::Reverse}, {0, 1, B::J}, {0, 2, B::J}, {1, 1, B::Reverse},
                                                  {1, 3, B::J}, {2, 2, B::MinusReverse}});
        case FamilyId::A10:
            return assemble({p[0], p[1], p[0], p[1]}, {{0, 0, B::JMinusI}, {0, 1, B::J}, {1, 2, B::J},
                                                       {1, 3, B::JMinusI}, {2, 2, B::IMinusJ}});
        case FamilyId::A11:
            return assemble({p[0], p[0], p[1], p[1]}, {{0, 0, B::JMinusI}, {0, 1, B::J}, {0, 2, B::J},
                                                       {1, 1, B::IMinusJ}, {1, 3, B::J}, {2, 3, B::JMinusI}});
        case FamilyId::A12:
            // The listed tuple (m,l,k,j) occupies the blocks as sizes (l,k,j,m);
            // this is the assignment that reproduces all four printed triples.
            return assemble({p[1], p[2], p[3], p[0]},
                            {{0, 0, B::JMinusI}, {0, 1, B::J}, {0, 2, B::J}, {1, 1, B::IMinusJ}, {1, 3, B::J},
                             {2, 2, B::JMinusI}, {2, 3, B::J}, {3, 3, B::IMinusJ}});
        case FamilyId::A13:
            return assemble({p[0], 2 * p[1], 4, 1}, {{0, 0, B::JMinusI}, {0, 1, B::J}, {1, 1, B::MinusReverse},
                                                     {1, 2, B::J}, {1, 3, B::J}, {2, 2, B::IMinusJ}});
        case FamilyId::A14:
            return assemble({p[0], 2 * p[1], 4}, {{0, 0, B::JMinusI}, {0, 1, B::J}, {1, 1, B::MinusReverse},
                                                  {1, 2, B::J}, {2, 2, B::MinusReverse}});
        case FamilyId::A15:
            return assemble({p[0], p[1], 2 * p[2], 2 * p[3]},
                            {{0, 0, B::JMinusI}, {0, 1, B::J}, {0, 2, B::J}, {1, 1, B::IMinusJ}, {1, 3, B::J},
                             {2, 2, B::Reverse}, {2, 3, B::J}, {3, 3, B::MinusReverse}});
        case FamilyId::A16:
            return assemble({2, 2, 3, 3}, {{0, 0, B::Reverse}, {0, 1, B::J}, {0, 2, B::J}, {1, 1, B::MinusReverse},
                                           {1, 3, B::J}, {2, 3, B::Identity}});
        case FamilyId::A17:
            return assemble({2, 2, 2, 1, 2, 1},
                            {{0, 0, B::Reverse}, {0, 1, B::J}, {0, 2, B::J}, {0, 3, B::J}, {1, 1, B::MinusReverse},
                             {1, 4, B::J}, {1, 5, B::J}, {2, 2, B::Reverse}, {2, 4, B::J}, {4, 4, B::MinusReverse}});
        case FamilyId::A18:
            return assemble({p[0], 2 * p[1], 1, 2}, {{0, 0, B::JMinusI}, {0, 1, B::J}, {0, 2, B::J},
                                                     {1, 1, B::MinusReverse}, {1, 3, B::J}, {3, 3, B::MinusReverse}});
        case FamilyId::A19:
            return assemble({2, p[0], 2 * p[1], 1, 2},
                            {{0, 0, B::Reverse}, {0, 1, B::J}, {0, 2, B::J}, {0, 3, B::J}, {1, 1, B::IMinusJ},
                             {1, 4, B::J}, {2, 2, B::Reverse}, {2, 4, B::J}, {4, 4, B::MinusReverse}});
        case FamilyId::A20:
            return assemble({p[0], 2 * p[1]}, {{0, 0, B::JMinusI}, {0, 1, B::J}, {1, 1, B::Reverse}});
        case FamilyId::A21:
            return assemble({2 * p[0], 2 * p[1]}, {{0, 0, B::Reverse}, {0, 1, B::J}, {1, 1, B::Reverse}});
        case FamilyId::A22:
            return assemble({p[0], p[0]}, {{0, 1, B::JMinusI}});
        case FamilyId::A23:
            return assemble({3, 3, 3, 3}, {{0, 2, B::JMinusI}, {0, 3, B::J}, {1, 3, B::JMinusI}});
        case FamilyId::A24:
            return assemble({1, 4, 1, 4}, {{0, 2, B::J}, {0, 3, B::J}, {1, 2, B::J}, {1, 3, B::Identity}});
        case FamilyId::A25:
            return assemble({p[0], p[1], p[1]}, {{0, 0, B::JMinusI}, {0, 1, B::J}, {1, 2, B::JMinusI}});
        case FamilyId::AInf:
            return assemble({p[0], p[1]}, {{0, 0, B::JMinusI}, {1, 1, B::IMinusJ}});
    }
    throw std::logic_error("unknown family");
}

// ---------------------------------------------------------------------------
// Restrictions, orders and triples

bool pair_in(Params p, std::size_t first, std::initializer_list<std::pair<int, int>> options) {
    return std::any_of(options.begin(), options.end(),
                       [&](const auto& o) { return p[first] == o.first && p[first + 1] == o.second; });
}

bool quad_in(Params p, std::initializer_list<std::array<int, 4>> options) {
    return std::any_of(options.begin(), options.end(),
                       [&](const auto& o) { return std::equal(o.begin(), o.end(), p.begin()); });
}

std::string param_list(Params p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
}

// Describes the first violated restriction, or returns nothing.
std::optional<std::string> restriction_problem(FamilyId id, Params p) {
    using F = FamilyId;
    const auto fail = [&](const std::string& what) -> std::optional<std::string> {
        return std::string(family_name(id)) + param_list(p) + ": " + what;
    };
    const auto m_ge_l_ge = [&](int lo) -> std::optional<std::string> {
        if (p[1] < lo) return fail("l=" + std::to_string(p[1]) + " violates l >= " + std::to_string(lo));
        if (p[0] < p[1]) return fail("m=" + std::to_string(p[0]) + " violates m >= l");
        return std::nullopt;
    };
    switch (id) {
        case F::A0:
        case F::A2:
        case F::A21:
            return m_ge_l_ge(2);
        case F::A3:
        case F::A4:
            return m_ge_l_ge(1);
        case F::AInf:
            return m_ge_l_ge(3);
        case F::A1:
            if (p[0] < 1) return fail("m=" + std::to_string(p[0]) + " violates m >= 1");
            if (p[1] < 2) return fail("l=" + std::to_string(p[1]) + " violates l >= 2");
            return std::nullopt;
        case F::A20:
            if (p[0] < 2) return fail("m=" + std::to_string(p[0]) + " violates m >= 2");
            if (p[1] < 2) return fail("l=" + std::to_string(p[1]) + " violates l >= 2");
            return std::nullopt;
        case F::A5:
            if (!pair_in(p, 0, {{3, 8}, {4, 6}, {6, 5}})) return fail("(m,l) not in {(3,8),(4,6),(6,5)}");
            if (p[2] < 1) return fail("k=" + std::to_string(p[2]) + " violates k >= 1");
            return std::nullopt;
        case F::A6:
            if (p[0] < 1) return fail("m=" + std::to_string(p[0]) + " violates m >= 1");
            if (!pair_in(p, 1, {{3, 4}, {4, 3}})) return fail("(l,k) not in {(3,4),(4,3)}");
            return std::nullopt;
        case F::A7:
            if (p[0] < 1) return fail("m=" + std::to_string(p[0]) + " violates m >= 1");
            if (!pair_in(p, 1, {{3, 3}, {4, 2}})) return fail("(l,k) not in {(3,3),(4,2)}");
            return std::nullopt;
        case F::A8:
        case F::A9:
            if (p[0] < 1) return fail("m=" + std::to_string(p[0]) + " violates m >= 1");
            return std::nullopt;
        case F::A22:
            if (p[0] < 3) return fail("m=" + std::to_string(p[0]) + " violates m >= 3");
            return std::nullopt;
        case F::A10:
        case F::A11:
        case F::A18:
            if (!pair_in(p, 0, {{3, 4}, {4, 3}})) return fail("(m,l) not in {(3,4),(4,3)}");
            return std::nullopt;
        case F::A12:
            if (!quad_in(p, {{4, 4, 4, 4}, {6, 3, 3, 6}, {6, 4, 3, 4}, {6, 6, 3, 3}})) {
                return fail("(m,l,k,j) not in {(4,4,4,4),(6,3,3,6),(6,4,3,4),(6,6,3,3)}");
            }
            return std::nullopt;
        case F::A13:
        case F::A14:
            if (!pair_in(p, 0, {{5, 3}, {6, 2}})) return fail("(m,l) not in {(5,3),(6,2)}");
            return std::nullopt;
        case F::A15:
            if (!quad_in(p, {{3, 3, 3, 3}, {4, 3, 3, 2}, {4, 4, 2, 2}})) {
                return fail("(m,l,k,j) not in {(3,3,3,3),(4,3,3,2),(4,4,2,2)}");
            }
            return std::nullopt;
        case F::A19:
            if (!pair_in(p, 0, {{3, 3}, {4, 2}})) return fail("(m,l) not in {(3,3),(4,2)}");
            return std::nullopt;
        case F::A25:
            if (!pair_in(p, 0, {{3, 5}, {4, 4}})) return fail("(m,l) not in {(3,5),(4,4)}");
            return std::nullopt;
        case F::A16:
        case F::A17:
        case F::A23:
        case F::A24:
            return std::nullopt;
    }
    return fail("unknown row");
}

RawTriple raw_triple(FamilyId id, Params p) {
    using F = FamilyId;
    using T = std::int64_t;
    const T m = p.size() > 0 ? p[0] : 0;
    const T l = p.size() > 1 ? p[1] : 0;
    const T k = p.size() > 2 ? p[2] : 0;
    switch (id) {
        case F::A0: return {m - l, 2 * m * l - m - l + 1, m + l};
        case F::A1: return {m - 2, 2 * m * l + m - 1, m + 2 * l};
        case F::A2: return {0, 4 * m * l + 1, 2 * m + 2 * l};
        case F::A3: return {m - l, (m + 1) * (l + 1), m + l + 2};
        case F::A4: return {m - l, 2 * m * l + m + l + 1, m + l + 4};
        case F::A5:
            if (m == 3) return {9 - k, 11 * k + 10, k + 11};
            if (m == 4) return {8 - k, 11 * k + 9, k + 10};
            return {9 - k, 14 * k + 10, k + 11};
        case F::A6:
            if (l == 3) return {m - 1, 11 * m + 2, m + 11};
            return {m - 2, 11 * m + 3, m + 10};
        case F::A7:
            if (l == 3) return {1, 18 * m + 2, 2 * m + 9};
            return {2, 16 * m + 3, 2 * m + 8};
        case F::A8: return {1 - m, 6 * m + 2, m + 7};
        case F::A9: return {1, 8 * m + 2, 2 * m + 5};
        case F::A10: return {0, 36, 14};
        case F::A11: return m == 3 ? RawTriple{0, 45, 14} : RawTriple{0, 52, 14};
        case F::A12:
            if (m == 4) return {0, 81, 16};
            if (l == 3) return {0, 109, 18};
            if (l == 4) return {-1, 92, 17};
            return {0, 100, 18};
        case F::A13: return m == 5 ? RawTriple{0, 72, 16} : RawTriple{1, 60, 15};
        case F::A14: return m == 5 ? RawTriple{1, 62, 15} : RawTriple{2, 51, 14};
        case F::A15:
            if (m == 3) return {0, 85, 18};
            if (l == 3) return {1, 78, 17};
            return {0, 73, 16};
        case F::A16: return {0, 17, 10};
        case F::A17: return {0, 20, 10};
        case F::A18: return m == 3 ? RawTriple{0, 45, 14} : RawTriple{1, 44, 13};
        case F::A19: return m == 3 ? RawTriple{0, 40, 14} : RawTriple{-1, 38, 13};
        case F::A20: return {m, 2 * m * l - m + 1, m + 2 * l};
        case F::A21: return {2, 4 * m * l - 1, 2 * m + 2 * l};
        case F::A22: return {0, (m - 1) * (m - 1), 2 * m};
        case F::A23: return {0, 16, 12};
        case F::A24: return {0, 9, 10};
        case F::A25: return m == 3 ? RawTriple{1, 32, 13} : RawTriple{2, 27, 12};
        case F::AInf: return {m - l, (m - 1) * (l - 1), m + l};
    }
    throw std::logic_error("unknown family");
}

void check_arity(FamilyId id, Params p) {
    if (p.size() != param_arity(id)) {
        throw RestrictionError(id, std::string(family_name(id)) + " takes " + std::to_string(param_arity(id)) +
                                       " parameters, got " + std::to_string(p.size()));
    }
}

bool candidate_params(FamilyId id, int n_max, std::vector<std::vector<int>>& out) {
    using F = FamilyId;
    switch (param_arity(id)) {
        case 0:
            out.push_back({});
            return true;
        case 1:
            for (int m = 0; m <= n_max; ++m) out.push_back({m});
            return true;
        case 2:
            for (int m = 0; m <= n_max; ++m) {
                for (int l = 0; l <= n_max; ++l) out.push_back({m, l});
            }
            return true;
        case 3:
            for (int x = 0; x <= n_max; ++x) {
                if (id == F::A5) {
                    for (auto [m, l] : {std::pair{3, 8}, {4, 6}, {6, 5}}) out.push_back({m, l, x});
                } else {
                    for (int l = 2; l <= 4; ++l) {
                        for (int k = 2; k <= 4; ++k) out.push_back({x, l, k});
                    }
                }
            }
            return true;
        case 4:
            if (id == F::A12) {
                out.insert(out.end(), {{4, 4, 4, 4}, {6, 3, 3, 6}, {6, 4, 3, 4}, {6, 6, 3, 3}});
            } else {
                out.insert(out.end(), {{3, 3, 3, 3}, {4, 3, 3, 2}, {4, 4, 2, 2}});
            }
            return true;
        default:
            return false;
    }
}

}  // namespace

// ---------------------------------------------------------------------------

const std::array<FamilyId, kFamilyCount>& all_families() {
    static const std::array<FamilyId, kFamilyCount> ids = [] {
        std::array<FamilyId, kFamilyCount> a{};
        for (std::size_t i = 0; i < kFamilyCount; ++i) a[i] = static_cast<FamilyId>(i);
        return a;
    }();
    return ids;
}

std::string_view family_name(FamilyId id) {
    static constexpr std::array<std::string_view, kFamilyCount> names = {
        "A0",  "A1",  "A2",  "A3",  "A4",  "A5",  "A6",  "A7",  "A8",  "A9",  "A10", "A11", "A12", "A13",
        "A14", "A15", "A16", "A17", "A18", "A19", "A20", "A21", "A22", "A23", "A24", "A25", "AInf"};
    return names[static_cast<std::size_t>(id)];
}

std::optional<FamilyId> parse_family(std::string_view name) {
    if (name == "AInf" || name == "Ainf" || name == "AINF" || name == "A∞" || name == "Ainfty") {
        return FamilyId::AInf;
    }
    if (name.size() < 2 || name.size() > 3 || name[0] != 'A') return std::nullopt;
    int k = 0;
    for (char c : name.substr(1)) {
        if (c < '0' || c > '9') return std::nullopt;
        k = k * 10 + (c - '0');
    }
    if (name.size() == 3 && name[1] == '0') return std::nullopt;
    if (k > 25) return std::nullopt;
    return static_cast<FamilyId>(k);
}

std::size_t param_arity(FamilyId id) {
    using F = FamilyId;
    switch (id) {
        case F::A16:
        case F::A17:
        case F::A23:
        case F::A24:
            return 0;
        case F::A8:
        case F::A9:
        case F::A22:
            return 1;
        case F::A5:
        case F::A6:
        case F::A7:
            return 3;
        case F::A12:
        case F::A15:
            return 4;
        default:
            return 2;
    }
}

RestrictionError::RestrictionError(FamilyId id, const std::string& detail)
    : std::invalid_argument("restriction violated: " + detail), id_(id) {}

void validate(const FamilySpec& spec) {
    check_arity(spec.id, spec.params);
    if (spec.pad < 0) throw RestrictionError(spec.id, "pad must be non-negative");
    if (auto problem = restriction_problem(spec.id, spec.params)) throw RestrictionError(spec.id, *problem);
}

bool satisfies_restrictions(const FamilySpec& spec) noexcept {
    if (spec.params.size() != param_arity(spec.id) || spec.pad < 0) return false;
    return !restriction_problem(spec.id, spec.params).has_value();
}

int base_order(FamilyId id, std::span<const int> p) {
    check_arity(id, p);
    using F = FamilyId;
    const int m = p.size() > 0 ? p[0] : 0;
    const int l = p.size() > 1 ? p[1] : 0;
    const int k = p.size() > 2 ? p[2] : 0;
    const int j = p.size() > 3 ? p[3] : 0;
    switch (id) {
        case F::A0:
        case F::AInf: return m + l;
        case F::A1:
        case F::A20: return m + 2 * l;
        case F::A2:
        case F::A21:
        case F::A10:
        case F::A11: return 2 * m + 2 * l;
        case F::A3: return m + l + 2;
        case F::A4: return m + l + 4;
        case F::A5: return m + l + k;
        case F::A6: return m + l + 2 * k;
        case F::A7: return 2 * m + l + 2 * k;
        case F::A8: return m + 7;
        case F::A9: return 2 * m + 5;
        case F::A12: return m + l + k + j;
        case F::A13: return m + 2 * l + 5;
        case F::A14: return m + 2 * l + 4;
        case F::A15: return m + l + 2 * k + 2 * j;
        case F::A16:
        case F::A17:
        case F::A24: return 10;
        case F::A18: return m + 2 * l + 3;
        case F::A19: return m + 2 * l + 5;
        case F::A22: return 2 * m;
        case F::A23: return 12;
        case F::A25: return m + 2 * l;
    }
    throw std::logic_error("unknown family");
}

int order(const FamilySpec& spec) { return base_order(spec.id, spec.params) + 2 * spec.pad; }

SignedGraph construct_literal(const FamilySpec& spec) {
    check_arity(spec.id, spec.params);
    if (spec.pad < 0) throw RestrictionError(spec.id, "pad must be non-negative");
    if (std::any_of(spec.params.begin(), spec.params.end(), [](int x) { return x < 0; })) {
        throw RestrictionError(spec.id, "negative parameter");
    }
    SignedGraph g = block_matrix(spec.id, spec.params);
    if (spec.negated) g = negate(g);
    return add_isolated_edges(g, static_cast<std::size_t>(spec.pad));
}

SignedGraph construct(const FamilySpec& spec) {
    validate(spec);
    return construct_literal(spec);
}

CharTriple predicted_triple(const FamilySpec& spec) {
    validate(spec);
    auto [a, b, n] = raw_triple(spec.id, spec.params);
    if (spec.negated) a = -a;
    return CharTriple::make(a, b, n + 2 * spec.pad);
}

bool is_sign_symmetric(const FamilySpec& spec) {
    if (spec.pad != 0) throw std::invalid_argument("is_sign_symmetric: spec must have no isolated edges");
    validate(spec);
    if (std::get<0>(raw_triple(spec.id, spec.params)) != 0) return false;
    using F = FamilyId;
    switch (spec.id) {
        case F::A1:
        case F::A5:
        case F::A6:
        case F::A8:
        case F::A13:
        case F::A18:
        case F::A19:
            return false;
        case F::A2:
            return spec.params[0] == spec.params[1];
        default:
            return true;
    }
}

std::vector<FamilySpec> parameter_sets_up_to(int n_max) {
    std::vector<FamilySpec> out;
    for (FamilyId id : all_families()) {
        std::vector<std::vector<int>> candidates;
        candidate_params(id, n_max, candidates);
        for (auto& params : candidates) {
            FamilySpec spec{id, std::move(params), false, 0};
            if (!satisfies_restrictions(spec) || base_order(id, spec.params) > n_max) continue;
            out.push_back(std::move(spec));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<FamilySpec> instances_up_to(int n_max) {
    if (n_max < 4) throw std::invalid_argument("instances_up_to: n_max must be at least 4");
    std::vector<FamilySpec> out;
    for (auto& spec : parameter_sets_up_to(n_max)) {
        const auto a = std::get<0>(raw_triple(spec.id, spec.params));
        if (a > 0) {
            out.push_back(spec);
        } else if (a < 0) {
            spec.negated = true;
            out.push_back(spec);
        } else {
            const bool symmetric = is_sign_symmetric(spec);
            out.push_back(spec);
            if (!symmetric) {
                spec.negated = true;
                out.push_back(spec);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_compact(const FamilySpec& spec) {
    std::string s = spec.negated ? "-" : "";
    s += family_name(spec.id);
    if (!spec.params.empty()) s += param_list(spec.params);
    if (spec.pad == 1) s += "+K2";
    if (spec.pad > 1) s += "+" + std::to_string(spec.pad) + "K2";
    return s;
}

std::string to_json(const FamilySpec& spec) {
    std::string s = "{\"id\": \"" + std::string(family_name(spec.id)) + "\", \"params\": [";
    for (std::size_t i = 0; i < spec.params.size(); ++i) s += (i ? "," : "") + std::to_string(spec.params[i]);
    s += "], \"negated\": ";
    s += spec.negated ? "true" : "false";
    s += ", \"pad\": " + std::to_string(spec.pad) + "}";
    return s;
}

namespace {

FamilySpec parse_spec_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("spec JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("id") || !doc["id"].is_string()) {
        throw FormatError("spec JSON: missing string field \"id\"");
    }
    FamilySpec spec;
    const auto id = parse_family(doc["id"].get<std::string>());
    if (!id) throw FormatError("spec JSON: unknown family '" + doc["id"].get<std::string>() + "'");
    spec.id = *id;
    if (doc.contains("params")) {
        if (!doc["params"].is_array()) throw FormatError("spec JSON: \"params\" must be an array");
        for (const auto& x : doc["params"]) {
            if (!x.is_number_integer()) throw FormatError("spec JSON: parameters must be integers");
            spec.params.push_back(x.get<int>());
        }
    }
    if (doc.contains("negated")) {
        if (!doc["negated"].is_boolean()) throw FormatError("spec JSON: \"negated\" must be a boolean");
        spec.negated = doc["negated"].get<bool>();
    }
    if (doc.contains("pad")) {
        if (!doc["pad"].is_number_integer() || doc["pad"].get<long long>() < 0) {
            throw FormatError("spec JSON: \"pad\" must be a non-negative integer");
        }
        spec.pad = doc["pad"].get<int>();
    }
    return spec;
}

class CompactParser {
public:
    explicit CompactParser(std::string_view text) {
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text.compare(i, 3, "−") == 0) {  // Unicode minus sign
                s_ += '-';
                i += 2;
            } else if (text[i] != ' ' && text[i] != '\t' && text[i] != '\n' && text[i] != '\r') {
                s_ += text[i];
            }
        }
    }

    FamilySpec parse() {
        FamilySpec spec;
        if (eat('-')) spec.negated = true;
        if (!eat('A')) fail("expected 'A'");
        std::string name = "A";
        while (pos_ < s_.size() && s_[pos_] != '(' && s_[pos_] != '+') name += s_[pos_++];
        const auto id = parse_family(name);
        if (!id) fail("unknown family '" + name + "'");
        spec.id = *id;
        if (eat('(')) {
            if (!eat(')')) {
                do {
                    spec.params.push_back(integer());
                } while (eat(','));
                if (!eat(')')) fail("expected ')'");
            }
        }
        while (eat('+')) {
            int count = 1;
            if (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') count = integer();
            if (!eat('K') || !eat('2')) fail("expected 'K2'");
            spec.pad += count;
        }
        if (pos_ != s_.size()) fail("trailing characters");
        return spec;
    }

private:
    bool eat(char c) {
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    int integer() {
        const bool neg = eat('-');
        if (pos_ >= s_.size() || s_[pos_] < '0' || s_[pos_] > '9') fail("expected integer");
        long value = 0;
        while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') {
            value = value * 10 + (s_[pos_++] - '0');
            if (value > 1000000) fail("integer too large");
        }
        return static_cast<int>(neg ? -value : value);
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw FormatError("spec '" + s_ + "': " + what + " at position " + std::to_string(pos_));
    }

    std::string s_;
    std::size_t pos_ = 0;
};

}  // namespace

FamilySpec parse_spec(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') return parse_spec_json(text);
    return CompactParser(text).parse();
}

}  // namespace signed_spectra
