#include "signed_spectra/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "json.hpp"
#include "signed_spectra/graph_io.hpp"
#include "signed_spectra/parallel.hpp"
#include "signed_spectra/spectral.hpp"
#include "signed_spectra/switching_iso.hpp"

namespace signed_spectra {
namespace {

FamilySpec spec_of(FamilyId id, std::vector<int> params, bool negated = false, int pad = 0) {
    return FamilySpec{id, std::move(params), negated, pad};
}

// Runs `check(i, failures)` for every task and concatenates failures in task order.
template <class Check>
void run_tasks(VerificationReport& report, std::size_t count, unsigned jobs, Check check) {
    std::vector<std::vector<Failure>> slots(count);
    std::vector<std::size_t> counted(count, 0);
    parallel_for(count, jobs, [&](std::size_t i) { counted[i] = check(i, slots[i]); });
    for (std::size_t i = 0; i < count; ++i) {
        report.checked += counted[i];
        for (auto& f : slots[i]) report.failures.push_back(std::move(f));
    }
}

std::string join(const std::vector<FamilySpec>& specs) {
    std::string s = "[";
    for (std::size_t i = 0; i < specs.size(); ++i) s += (i ? ", " : "") + to_compact(specs[i]);
    return s + "]";
}

bool contains_row(const std::vector<FamilySpec>& specs, FamilyId id, const std::vector<int>& params, bool negated) {
    return std::any_of(specs.begin(), specs.end(), [&](const FamilySpec& s) {
        return s.id == id && s.params == params && s.negated == negated;
    });
}

// Greedy matching of two lists of pairwise non-switching-isomorphic graphs.
void match_classes(const std::string& label, const std::vector<FamilySpec>& found,
                   const std::vector<FamilySpec>& listed, std::vector<Failure>& failures) {
    std::vector<SignedGraph> listed_graphs;
    for (const auto& s : listed) listed_graphs.push_back(construct(s));
    std::vector<bool> used(listed.size(), false);
    for (const auto& s : found) {
        const SignedGraph g = construct(s);
        bool matched = false;
        for (std::size_t j = 0; j < listed.size() && !matched; ++j) {
            if (!used[j] && is_switching_isomorphic(g, listed_graphs[j])) {
                used[j] = true;
                matched = true;
            }
        }
        if (!matched) failures.push_back({label + ": " + to_compact(s), "in the explicit list", "missing from list"});
    }
    for (std::size_t j = 0; j < listed.size(); ++j) {
        if (!used[j]) failures.push_back({label + ": " + to_compact(listed[j]), "cospectral mate", "not found by scan"});
    }
}

void dedupe_normal(std::vector<FamilySpec>& specs) {
    for (auto& s : specs) {
        const int pad = s.pad;
        s = catalog_normal_form(s).first;
        s.pad = pad;
    }
    std::sort(specs.begin(), specs.end());
    specs.erase(std::unique(specs.begin(), specs.end()), specs.end());
}

}  // namespace

std::string VerificationReport::to_json() const {
    nlohmann::ordered_json doc;
    doc["claim"] = claim;
    doc["checked"] = checked;
    doc["passed"] = passed();
    doc["failures"] = nlohmann::ordered_json::array();
    for (const auto& f : failures) {
        doc["failures"].push_back({{"instance", f.instance}, {"expected", f.expected}, {"got", f.got}});
    }
    return doc.dump(2);
}

std::string VerificationReport::summary() const {
    if (passed()) return claim + ": PASS (" + std::to_string(checked) + " checked)";
    return claim + ": FAIL (" + std::to_string(failures.size()) + " failures, " + std::to_string(checked) + " checked)";
}

bool is_square(std::int64_t x) {
    if (x < 0) return false;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(x)));
    while (r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r * r == x;
}

bool is_triangular(std::int64_t x) { return x >= 0 && is_square(8 * x + 1); }

bool is_sum_consecutive_squares(std::int64_t x) { return x >= 1 && is_square(2 * x - 1); }

// ---------------------------------------------------------------------------

VerificationReport verify_cospectral_pairs(int bound, const SuiteOptions& options) {
    if (bound < 3) throw std::invalid_argument("verify_cospectral_pairs: bound must be at least 3");
    struct Pair {
        std::string label;
        FamilySpec x, y;
    };
    std::vector<Pair> pairs;
    for (int m = 1; m <= bound; ++m) {
        for (int l = 1; l <= bound; ++l) {
            pairs.push_back({"(i)", spec_of(FamilyId::A4, {m, l}), spec_of(FamilyId::A0, {m + 1, l + 1}, false, 1)});
            pairs.push_back(
                {"(ii)", spec_of(FamilyId::AInf, {m + 2, l + 2}), spec_of(FamilyId::A3, {m, l}, false, 1)});
        }
    }
    for (int m = 3; m <= bound; ++m) {
        pairs.push_back({"(iii)", spec_of(FamilyId::AInf, {m, m}), spec_of(FamilyId::A22, {m})});
    }
    VerificationReport report{"cospectral-pairs", 0, {}};
    run_tasks(report, pairs.size(), options.jobs, [&](std::size_t i, std::vector<Failure>& out) {
        const auto& p = pairs[i];
        const std::string name = p.label + " " + to_compact(p.x) + " vs " + to_compact(p.y);
        const SignedGraph x = construct_literal(p.x);
        const SignedGraph y = construct_literal(p.y);
        std::size_t checked = 0;
        for (const bool neg : {false, true}) {
            const SignedGraph gx = neg ? negate(x) : x;
            const SignedGraph gy = neg ? negate(y) : y;
            const std::string tag = neg ? name + " (negatives)" : name;
            const auto px = char_poly(gx);
            const auto py = char_poly(gy);
            ++checked;
            if (!(px == py)) out.push_back({tag, px.to_string(), py.to_string()});
            if (gx.order() <= 12) {
                ++checked;
                if (is_switching_isomorphic(gx, gy)) out.push_back({tag, "not switching isomorphic", "isomorphic"});
            }
        }
        return checked;
    });
    return report;
}

VerificationReport verify_a2_family(int bound, const SuiteOptions& options) {
    if (bound < 2) throw std::invalid_argument("verify_a2_family: bound must be at least 2");
    struct Member {
        int m, l, alpha;
    };
    std::vector<Member> members;
    for (int m = 2; m <= bound; ++m) {
        for (int l = 2; l <= m; ++l) {
            for (int alpha = 0; alpha <= bound; ++alpha) members.push_back({m, l, alpha});
        }
    }
    std::vector<CharPoly> polys(members.size());
    parallel_for(members.size(), options.jobs, [&](std::size_t i) {
        const auto& x = members[i];
        polys[i] = char_poly(construct(spec_of(FamilyId::A2, {x.m, x.l}, false, x.alpha)));
    });
    VerificationReport report{"a2", 0, {}};
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            const auto& x = members[i];
            const auto& y = members[j];
            const bool predicted = x.m * x.l == y.m * y.l && x.m + x.l + x.alpha == y.m + y.l + y.alpha;
            const bool actual = polys[i] == polys[j];
            ++report.checked;
            if (predicted != actual) {
                const auto name = to_compact(spec_of(FamilyId::A2, {x.m, x.l}, false, x.alpha)) + " vs " +
                                  to_compact(spec_of(FamilyId::A2, {y.m, y.l}, false, y.alpha));
                report.failures.push_back(
                    {name, predicted ? "cospectral" : "not cospectral", actual ? "cospectral" : "not cospectral"});
            }
        }
    }
    return report;
}

SignedGraph bipartite_double(const SignedGraph& g) {
    const std::size_t n = g.order();
    std::vector<SignedEdge> edges;
    for (const auto& e : g.edges()) {
        edges.push_back({e.u, e.v + n, e.sign});
        edges.push_back({e.v, e.u + n, e.sign});
    }
    return SignedGraph::from_edges(2 * n, edges);
}

SignedGraph friendship_graph(int l) {
    if (l < 2) throw std::invalid_argument("friendship_graph: l must be at least 2");
    return construct_literal(spec_of(FamilyId::A20, {1, l}));
}

namespace {

std::vector<FamilySpec> drop_friendship_class(int l, std::vector<FamilySpec> mates) {
    const SignedGraph f = friendship_graph(l);
    std::erase_if(mates, [&](const FamilySpec& s) { return s.pad == 0 && is_switching_isomorphic(construct(s), f); });
    return mates;
}

CharTriple friendship_triple(int l) {
    if (l < 2) throw std::invalid_argument("friendship: l must be at least 2");
    return CharTriple::make(1, 2 * static_cast<std::int64_t>(l), 2 * static_cast<std::int64_t>(l) + 1);
}

}  // namespace

std::vector<FamilySpec> friendship_mates(int l) { return drop_friendship_class(l, cospectral_mates(friendship_triple(l))); }

std::vector<FamilySpec> friendship_mates(int l, const Catalog& catalog) {
    return drop_friendship_class(l, cospectral_mates(friendship_triple(l), catalog));
}

bool friendship_has_mate(int l) {
    if (l < 2) throw std::invalid_argument("friendship_has_mate: l must be at least 2");
    static constexpr int sporadic[] = {12, 18, 30, 39, 54, 60, 75};
    return std::find(std::begin(sporadic), std::end(sporadic), l) != std::end(sporadic) || l % 3 == 1 ||
           l % 4 == 1 || is_square(l) || is_triangular(l);
}

VerificationReport verify_friendship(int l_max, const SuiteOptions& options) {
    if (l_max < 2) throw std::invalid_argument("verify_friendship: l_max must be at least 2");
    const Catalog catalog = build_catalog(2 * l_max + 1, {options.jobs, false});
    VerificationReport report{"friendship", 0, {}};
    run_tasks(report, static_cast<std::size_t>(l_max - 1), options.jobs, [&](std::size_t i, std::vector<Failure>& out) {
        const int l = static_cast<int>(i) + 2;
        const auto mates = friendship_mates(l, catalog);
        const bool predicted = friendship_has_mate(l);
        std::size_t checked = 1;
        if (predicted != !mates.empty()) {
            out.push_back({"l=" + std::to_string(l), predicted ? "has a mate" : "no mate", join(mates)});
        }
        if (l % 3 == 1 && l >= 7) {
            ++checked;
            if (!contains_row(mates, FamilyId::A1, {3, (l - 1) / 3}, false)) {
                out.push_back({"l=" + std::to_string(l), "A1(3," + std::to_string((l - 1) / 3) + ") among mates",
                               join(mates)});
            }
        }
        return checked;
    });
    return report;
}

VerificationReport verify_friendship_corollary(int l_max, const SuiteOptions& options) {
    if (l_max < 2) throw std::invalid_argument("verify_friendship_corollary: l_max must be at least 2");
    const Catalog catalog = build_catalog(2 * l_max + 1, {options.jobs, false});
    VerificationReport report{"friendship-corollary", 0, {}};
    run_tasks(report, static_cast<std::size_t>(l_max - 1), options.jobs, [&](std::size_t i, std::vector<Failure>& out) {
        const int l = static_cast<int>(i) + 2;
        std::size_t checked = 0;
        for (const auto& mate : friendship_mates(l, catalog)) {
            const std::string name = "l=" + std::to_string(l) + ": " + to_compact(mate);
            const int base = order(mate) - 2 * mate.pad;
            checked += 2;
            if (base >= 2 * l + 1) {
                out.push_back({name, "unpadded order < " + std::to_string(2 * l + 1), std::to_string(base)});
            }
            if (is_connected(construct(mate))) out.push_back({name, "disconnected", "connected"});
        }
        return checked;
    });
    return report;
}

std::vector<FamilySpec> bipartite_double_mates(int m) {
    if (m < 3) throw std::invalid_argument("bipartite_double_mates: m must be at least 3");
    const auto b = static_cast<std::int64_t>(m - 1) * (m - 1);
    auto mates = cospectral_mates(CharTriple::make(0, b, 2 * static_cast<std::int64_t>(m)));
    std::erase(mates, spec_of(FamilyId::A22, {m}));
    return mates;
}

std::vector<FamilySpec> bipartite_double_theorem_list(int m) {
    if (m < 3) throw std::invalid_argument("bipartite_double_theorem_list: m must be at least 3");
    const std::int64_t target = static_cast<std::int64_t>(m - 1) * (m - 1);
    std::vector<FamilySpec> out;
    out.push_back(spec_of(FamilyId::AInf, {m, m}));
    out.push_back(spec_of(FamilyId::A3, {m - 2, m - 2}, false, 1));
    for (int k = 2; k <= m; ++k) {
        for (int l = 2; l <= k && k + l <= m; ++l) {
            if (4 * static_cast<std::int64_t>(k) * l + 1 == target) {
                out.push_back(spec_of(FamilyId::A2, {k, l}, false, m - k - l));
                out.push_back(spec_of(FamilyId::A2, {k, l}, true, m - k - l));
            }
        }
        if (static_cast<std::int64_t>(k) * k + static_cast<std::int64_t>(k - 1) * (k - 1) == target) {
            out.push_back(spec_of(FamilyId::A0, {k, k}, false, m - k));
        }
    }
    for (int k = 1; k + 2 <= m; ++k) {
        if (static_cast<std::int64_t>(k) * k + static_cast<std::int64_t>(k + 1) * (k + 1) == target) {
            out.push_back(spec_of(FamilyId::A4, {k, k}, false, m - k - 2));
        }
    }
    if (m == 6) {
        out.push_back(spec_of(FamilyId::A6, {2, 4, 3}));
        out.push_back(spec_of(FamilyId::A6, {2, 4, 3}, true));
    }
    if (m == 7) {
        out.push_back(spec_of(FamilyId::A10, {3, 4}));
        out.push_back(spec_of(FamilyId::A10, {4, 3}));
    }
    if (m == 10) out.push_back(spec_of(FamilyId::A12, {4, 4, 4, 4}, false, 2));
    if (m == 11) out.push_back(spec_of(FamilyId::A12, {6, 6, 3, 3}, false, 2));
    dedupe_normal(out);
    return out;
}

VerificationReport verify_bipartite_double(int m_max, const SuiteOptions& options) {
    if (m_max < 3) throw std::invalid_argument("verify_bipartite_double: m_max must be at least 3");
    VerificationReport report{"bipartite-double", 0, {}};
    run_tasks(report, static_cast<std::size_t>(m_max - 2), options.jobs, [&](std::size_t i, std::vector<Failure>& out) {
        const int m = static_cast<int>(i) + 3;
        const std::string label = "m=" + std::to_string(m);
        std::vector<SignedEdge> edges;
        for (std::size_t u = 0; u < static_cast<std::size_t>(m); ++u) {
            for (std::size_t v = u + 1; v < static_cast<std::size_t>(m); ++v) edges.push_back({u, v, 1});
        }
        const SignedGraph km = SignedGraph::from_edges(static_cast<std::size_t>(m), edges);
        const SignedGraph a22 = construct(spec_of(FamilyId::A22, {m}));
        std::size_t checked = 2;
        if (!is_switching_isomorphic(bipartite_double(km), a22)) {
            out.push_back({label, "K_m x K_2 switching isomorphic to A22(m)", "not isomorphic"});
        }
        const auto mates = bipartite_double_mates(m);
        const auto a22_poly = char_poly(a22);
        for (const auto& s : mates) {
            ++checked;
            if (!(char_poly(construct(s)) == a22_poly)) {
                out.push_back({label + ": " + to_compact(s), a22_poly.to_string(), char_poly(construct(s)).to_string()});
            }
        }
        match_classes(label, mates, bipartite_double_theorem_list(m), out);
        return checked;
    });

    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> order_dist(1, 6);
    std::uniform_int_distribution<int> entry_dist(-1, 1);
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = static_cast<std::size_t>(order_dist(rng));
        std::vector<SignedEdge> edges;
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t v = u + 1; v < n; ++v) {
                const int s = entry_dist(rng);
                if (s != 0) edges.push_back({u, v, s});
            }
        }
        const SignedGraph g = SignedGraph::from_edges(n, edges);
        const auto lhs = char_poly(bipartite_double(g));
        const auto rhs = char_poly(g) * char_poly(negate(g));
        ++report.checked;
        if (!(lhs == rhs)) report.failures.push_back({"random double " + to_json(g), rhs.to_string(), lhs.to_string()});
    }
    return report;
}

bool symmetric_dss_predicate(const FamilySpec& spec) {
    if (spec.pad != 0) throw std::invalid_argument("symmetric_dss_predicate: spec must have no isolated edges");
    validate(spec);
    const auto& p = spec.params;
    switch (spec.id) {
        case FamilyId::A0: return p[0] == p[1];
        case FamilyId::A2: return p[0] == p[1] && !is_triangular(static_cast<std::int64_t>(p[0]) * p[0]);
        case FamilyId::A3:
            return p[0] == p[1] && p[0] != 8 && p[0] != 9 &&
                   !is_sum_consecutive_squares(static_cast<std::int64_t>(p[0] + 1) * (p[0] + 1));
        case FamilyId::A11: return true;
        case FamilyId::A12:
            return p == std::vector<int>{4, 4, 4, 4} || p == std::vector<int>{6, 3, 3, 6} ||
                   p == std::vector<int>{6, 6, 3, 3};
        case FamilyId::A15: return p == std::vector<int>{4, 4, 2, 2};
        case FamilyId::A17: return true;
        default: return false;
    }
}

VerificationReport symmetric_dss_suite(int n_max, const SuiteOptions& options) {
    if (n_max < 10) throw std::invalid_argument("symmetric_dss_suite: n_max must be at least 10");
    const Catalog catalog = build_catalog(n_max, {options.jobs, false});
    VerificationReport report{"symmetric-dss", 0, {}};
    for (const auto& e : catalog.entries) {
        if (e.triple.a() != 0) continue;
        const bool predicted = symmetric_dss_predicate(e.spec);
        ++report.checked;
        if (predicted != e.dss) {
            std::vector<FamilySpec> blockers;
            for (const auto& other : catalog.cluster(0, e.triple.b())) {
                if (other.triple.n() <= e.triple.n() && !(other.spec == e.spec)) {
                    FamilySpec s = other.spec;
                    s.pad = static_cast<int>((e.triple.n() - other.triple.n()) / 2);
                    blockers.push_back(s);
                }
            }
            report.failures.push_back({to_compact(e.spec) + " " + e.triple.to_json(),
                                       predicted ? "DSS" : "not DSS",
                                       (e.dss ? std::string("DSS") : "not DSS, mates " + join(blockers))});
        }
    }
    return report;
}

VerificationReport verify_sign_symmetry(int n_max, const SuiteOptions& options) {
    const Catalog catalog = build_catalog(std::max(4, n_max), {options.jobs, false});
    std::vector<const CatalogEntry*> symmetric;
    for (const auto& e : catalog.entries) {
        if (e.triple.a() == 0) symmetric.push_back(&e);
    }
    VerificationReport report{"sign-symmetry", 0, {}};
    run_tasks(report, symmetric.size(), options.jobs, [&](std::size_t i, std::vector<Failure>& out) {
        const auto& spec = symmetric[i]->spec;
        const SignedGraph g = construct(spec);
        const bool closed_form = is_sign_symmetric(spec);
        const bool decided = is_switching_isomorphic(g, negate(g));
        if (closed_form != decided) {
            out.push_back({to_compact(spec), closed_form ? "sign-symmetric" : "not sign-symmetric",
                           decided ? "switching isomorphic to its negative" : "not isomorphic to its negative"});
        }
        return std::size_t{1};
    });
    return report;
}

}  // namespace signed_spectra
