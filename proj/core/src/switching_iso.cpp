#include "signed_spectra/switching_iso.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace signed_spectra {
namespace {

// Signed double cover: vertex 2v is (v,+), 2v+1 is (v,-). A positive edge uv
// joins (u,e)-(v,e), a negative one joins (u,e)-(v,1-e). Each fibre pair is
// joined by a label-2 edge so that cover isomorphisms preserve fibres.
struct Cover {
    std::size_t size = 0;
    std::vector<std::vector<std::size_t>> edge_neighbours;
};

Cover build_cover(const SignedGraph& g) {
    const std::size_t n = g.order();
    Cover c;
    c.size = 2 * n;
    c.edge_neighbours.resize(2 * n);
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t u = 0; u < n; ++u) {
            const int s = g.sign(v, u);
            if (s == 0) continue;
            for (std::size_t e = 0; e < 2; ++e) {
                const std::size_t other = s > 0 ? e : 1 - e;
                c.edge_neighbours[2 * v + e].push_back(2 * u + other);
            }
        }
    }
    return c;
}

using Colouring = std::vector<int>;

// Refines both colourings with shared colour names. Returns false as soon as
// the colour histograms of the two sides differ.
bool refine_jointly(const Cover& cg, const Cover& ch, Colouring& colg, Colouring& colh) {
    const std::size_t size = cg.size;
    auto count_colours = [](const Colouring& c) {
        std::vector<int> sorted(c);
        std::sort(sorted.begin(), sorted.end());
        return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
    };
    std::size_t classes = count_colours(colg);
    std::vector<std::vector<int>> sig_g(size), sig_h(size);
    while (true) {
        auto signature = [](const Cover& c, const Colouring& col, std::size_t x, std::vector<int>& sig) {
            sig.clear();
            sig.push_back(col[x]);
            sig.push_back(col[x ^ 1U]);
            const std::size_t head = sig.size();
            for (std::size_t y : c.edge_neighbours[x]) sig.push_back(col[y]);
            std::sort(sig.begin() + static_cast<std::ptrdiff_t>(head), sig.end());
        };
        for (std::size_t x = 0; x < size; ++x) {
            signature(cg, colg, x, sig_g[x]);
            signature(ch, colh, x, sig_h[x]);
        }
        std::map<std::vector<int>, int> names;
        for (const auto& s : sig_g) names.emplace(s, 0);
        for (const auto& s : sig_h) {
            if (!names.contains(s)) return false;
        }
        int next = 0;
        for (auto& [sig, id] : names) id = next++;
        std::vector<int> hist(names.size(), 0);
        for (std::size_t x = 0; x < size; ++x) {
            colg[x] = names[sig_g[x]];
            colh[x] = names[sig_h[x]];
            ++hist[static_cast<std::size_t>(colg[x])];
            --hist[static_cast<std::size_t>(colh[x])];
        }
        if (std::any_of(hist.begin(), hist.end(), [](int d) { return d != 0; })) return false;
        if (names.size() == classes) return true;
        classes = names.size();
    }
}

class SwitchingSearch {
public:
    SwitchingSearch(const SignedGraph& g, const SignedGraph& h)
        : g_(g), h_(h), cg_(build_cover(g)), ch_(build_cover(h)) {}

    std::optional<SwitchingIsomorphism> run() {
        const std::size_t n = g_.order();
        if (n != h_.order()) return std::nullopt;
        if (n == 0) return SwitchingIsomorphism{};

        // Initial colours: (degree, balanced triangles, unbalanced triangles).
        const auto tg = vertex_triangle_counts(g_);
        const auto th = vertex_triangle_counts(h_);
        using Key = std::tuple<std::size_t, std::size_t, std::size_t>;
        std::map<Key, int> names;
        for (std::size_t v = 0; v < n; ++v) names.emplace(Key{g_.degree(v), tg[v].positive, tg[v].negative}, 0);
        int next = 0;
        for (auto& [k, id] : names) id = next++;
        Colouring colg(2 * n), colh(2 * n);
        for (std::size_t v = 0; v < n; ++v) {
            const auto ig = names.find(Key{g_.degree(v), tg[v].positive, tg[v].negative});
            const auto ih = names.find(Key{h_.degree(v), th[v].positive, th[v].negative});
            if (ih == names.end()) return std::nullopt;
            colg[2 * v] = colg[2 * v + 1] = ig->second;
            colh[2 * v] = colh[2 * v + 1] = ih->second;
        }
        if (!refine_jointly(cg_, ch_, colg, colh)) return std::nullopt;
        return search(std::move(colg), std::move(colh));
    }

private:
    std::optional<SwitchingIsomorphism> search(Colouring colg, Colouring colh) {
        const std::size_t size = cg_.size;
        std::vector<std::size_t> cell_size(size + 1, 0);
        for (int c : colg) ++cell_size[static_cast<std::size_t>(c)];

        // Target cell: smallest non-singleton, ties to the lowest colour.
        int target = -1;
        for (std::size_t c = 0; c < cell_size.size(); ++c) {
            if (cell_size[c] > 1 && (target < 0 || cell_size[c] < cell_size[static_cast<std::size_t>(target)])) {
                target = static_cast<int>(c);
            }
        }
        if (target < 0) return leaf(colg, colh);

        std::size_t x = 0;
        while (colg[x] != target) ++x;
        const int fresh = *std::max_element(colg.begin(), colg.end()) + 1;
        for (std::size_t y = 0; y < size; ++y) {
            if (colh[y] != target) continue;
            Colouring ng = colg, nh = colh;
            ng[x] = fresh;
            nh[y] = fresh;
            if (!refine_jointly(cg_, ch_, ng, nh)) continue;
            if (auto found = search(std::move(ng), std::move(nh))) return found;
        }
        return std::nullopt;
    }

    std::optional<SwitchingIsomorphism> leaf(const Colouring& colg, const Colouring& colh) const {
        const std::size_t n = g_.order();
        std::vector<std::size_t> where(cg_.size);
        for (std::size_t y = 0; y < cg_.size; ++y) where[static_cast<std::size_t>(colh[y])] = y;
        SwitchingIsomorphism iso;
        iso.perm.resize(n);
        iso.signs.resize(n);
        for (std::size_t v = 0; v < n; ++v) {
            const std::size_t plus = where[static_cast<std::size_t>(colg[2 * v])];
            const std::size_t minus = where[static_cast<std::size_t>(colg[2 * v + 1])];
            if ((plus ^ 1U) != minus) return std::nullopt;
            iso.perm[v] = plus / 2;
            iso.signs[v] = plus % 2 == 0 ? 1 : -1;
        }
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t v = u + 1; v < n; ++v) {
                if (h_.sign(iso.perm[u], iso.perm[v]) != iso.signs[u] * iso.signs[v] * g_.sign(u, v)) {
                    return std::nullopt;
                }
            }
        }
        return iso;
    }

    const SignedGraph& g_;
    const SignedGraph& h_;
    Cover cg_;
    Cover ch_;
};

bool extend_signed_isomorphism(const SignedGraph& g, const SignedGraph& h, std::size_t v,
                               std::vector<std::size_t>& perm, std::vector<bool>& used,
                               const std::vector<std::pair<std::size_t, std::size_t>>& dg,
                               const std::vector<std::pair<std::size_t, std::size_t>>& dh) {
    const std::size_t n = g.order();
    if (v == n) return true;
    for (std::size_t w = 0; w < n; ++w) {
        if (used[w] || dg[v] != dh[w]) continue;
        bool ok = true;
        for (std::size_t u = 0; u < v && ok; ++u) ok = h.sign(w, perm[u]) == g.sign(v, u);
        if (!ok) continue;
        perm[v] = w;
        used[w] = true;
        if (extend_signed_isomorphism(g, h, v + 1, perm, used, dg, dh)) return true;
        used[w] = false;
    }
    return false;
}

std::vector<std::pair<std::size_t, std::size_t>> signed_degrees(const SignedGraph& g) {
    std::vector<std::pair<std::size_t, std::size_t>> out(g.order());
    for (std::size_t v = 0; v < g.order(); ++v) {
        for (int a : g.row(v)) {
            if (a > 0) ++out[v].first;
            if (a < 0) ++out[v].second;
        }
    }
    return out;
}

}  // namespace

std::optional<SwitchingIsomorphism> find_switching_isomorphism(const SignedGraph& g, const SignedGraph& h) {
    return SwitchingSearch(g, h).run();
}

bool is_switching_isomorphic(const SignedGraph& g, const SignedGraph& h) {
    return find_switching_isomorphism(g, h).has_value();
}

std::optional<std::vector<std::size_t>> find_signed_isomorphism(const SignedGraph& g, const SignedGraph& h) {
    const std::size_t n = g.order();
    if (n != h.order()) return std::nullopt;
    const auto dg = signed_degrees(g);
    const auto dh = signed_degrees(h);
    auto sg = dg, sh = dh;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return std::nullopt;
    std::vector<std::size_t> perm(n);
    std::vector<bool> used(n, false);
    if (!extend_signed_isomorphism(g, h, 0, perm, used, dg, dh)) return std::nullopt;
    return perm;
}

bool is_switching_isomorphic_exhaustive(const SignedGraph& g, const SignedGraph& h) {
    const std::size_t n = g.order();
    if (n > 16) throw std::invalid_argument("exhaustive switching test limited to order 16");
    if (n != h.order()) return false;
    if (n == 0) return true;
    std::vector<int> signs(n, 1);
    for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 1)); ++mask) {
        for (std::size_t v = 1; v < n; ++v) signs[v] = (mask >> (v - 1)) & 1U ? -1 : 1;
        if (find_signed_isomorphism(switch_by_signs(g, signs), h)) return true;
    }
    return false;
}

}  // namespace signed_spectra
