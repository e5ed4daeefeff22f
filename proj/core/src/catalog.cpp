#include "signed_spectra/catalog.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "json.hpp"
#include "signed_spectra/graph_io.hpp"
#include "signed_spectra/parallel.hpp"

namespace signed_spectra {
namespace {

bool entry_less(const CatalogEntry& x, const CatalogEntry& y) {
    if (x.triple != y.triple) return x.triple < y.triple;
    return x.spec < y.spec;
}

bool cluster_less(const CatalogEntry& e, std::pair<std::int64_t, std::int64_t> key) {
    return std::pair(e.triple.a(), e.triple.b()) < key;
}

void assign_clusters(std::vector<CatalogEntry>& entries) {
    std::size_t cluster = 0;
    for (std::size_t begin = 0; begin < entries.size();) {
        std::size_t end = begin;
        while (end < entries.size() && entries[end].triple.a() == entries[begin].triple.a() &&
               entries[end].triple.b() == entries[begin].triple.b()) {
            ++end;
        }
        for (std::size_t i = begin; i < end; ++i) {
            entries[i].cluster_id = cluster;
            entries[i].position = i - begin;
            entries[i].dss = false;
        }
        const bool shared = end - begin > 1 && entries[begin + 1].triple.n() == entries[begin].triple.n();
        entries[begin].dss = !shared;
        ++cluster;
        begin = end;
    }
}

std::vector<FamilySpec> mates_in(const CharTriple& t, std::span<const CatalogEntry> cluster) {
    std::vector<FamilySpec> out;
    for (const auto& e : cluster) {
        if (e.triple.n() > t.n()) break;
        FamilySpec spec = e.spec;
        spec.pad = static_cast<int>((t.n() - e.triple.n()) / 2);
        out.push_back(std::move(spec));
    }
    return out;
}

void flip_all(std::vector<FamilySpec>& specs) {
    for (auto& s : specs) s.negated = !s.negated;
}

std::string params_field(const std::vector<int>& params) {
    std::string s;
    for (std::size_t i = 0; i < params.size(); ++i) s += (i ? ";" : "") + std::to_string(params[i]);
    return s;
}

const char* flag(bool b) { return b ? "true" : "false"; }

std::string export_csv(const Catalog& c) {
    std::ostringstream out;
    out << "a,b,n,family,params,negated,cluster_id,position,dss\n";
    for (const auto& e : c.entries) {
        out << e.triple.a() << ',' << e.triple.b() << ',' << e.triple.n() << ',' << family_name(e.spec.id) << ','
            << params_field(e.spec.params) << ',' << flag(e.spec.negated) << ',' << e.cluster_id << ','
            << e.position << ',' << flag(e.dss) << '\n';
    }
    return out.str();
}

std::string export_json(const Catalog& c) {
    nlohmann::ordered_json doc;
    doc["n_max"] = c.n_max;
    doc["entries"] = nlohmann::ordered_json::array();
    for (const auto& e : c.entries) {
        nlohmann::ordered_json spec;
        spec["id"] = std::string(family_name(e.spec.id));
        spec["params"] = e.spec.params;
        spec["negated"] = e.spec.negated;
        spec["pad"] = e.spec.pad;
        nlohmann::ordered_json row;
        row["triple"] = {e.triple.a(), e.triple.b(), e.triple.n()};
        row["spec"] = std::move(spec);
        row["cluster_id"] = e.cluster_id;
        row["position"] = e.position;
        row["dss"] = e.dss;
        doc["entries"].push_back(std::move(row));
    }
    return doc.dump(2) + "\n";
}

std::string export_markdown(const Catalog& c) {
    std::ostringstream out;
    out << "# Signed graphs with two eigenvalues different from +-1, order at most " << c.n_max << "\n\n";
    out << "Entries are (a, b, n, graph) with characteristic polynomial "
           "(x^2 - ax - b)(x - 1)^f (x + 1)^g. Rows sharing (a, b) form a cluster; "
           "clusters are separated by a rule row. A `*` marks a graph that is "
           "determined by its spectrum up to switching.\n\n";
    out << "Entries: " << c.entries.size() << ", clusters: " << c.cluster_count() << ".\n\n";
    out << "| a | b | n | graph | DSS |\n";
    out << "|---:|---:|---:|:---|:---:|\n";
    for (std::size_t i = 0; i < c.entries.size(); ++i) {
        const auto& e = c.entries[i];
        if (i > 0 && e.cluster_id != c.entries[i - 1].cluster_id) out << "| --- | --- | --- | --- | --- |\n";
        out << "| " << e.triple.a() << " | " << e.triple.b() << " | " << e.triple.n() << " | "
            << to_compact(e.spec) << " | " << (e.dss ? "*" : "") << " |\n";
    }
    return out.str();
}

// Recomputes clustering from the stored rows and checks it against the stored
// cluster_id / position / dss columns.
Catalog finish_parsed(int n_max, std::vector<CatalogEntry> entries) {
    if (!std::is_sorted(entries.begin(), entries.end(), entry_less)) {
        throw FormatError("catalog entries are not in lexicographic order");
    }
    auto check = entries;
    assign_clusters(check);
    if (check != entries) throw FormatError("catalog cluster_id/position/dss columns are inconsistent");
    return Catalog{n_max, std::move(entries)};
}

std::vector<std::string> split(std::string_view line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto end = line.find(sep, start);
        out.emplace_back(line.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
        if (end == std::string_view::npos) return out;
        start = end + 1;
    }
}

long long parse_int(const std::string& s, const char* what) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw FormatError(std::string("catalog CSV: bad ") + what + " '" + s + "'");
    }
}

bool parse_bool(const std::string& s, const char* what) {
    if (s == "true") return true;
    if (s == "false") return false;
    throw FormatError(std::string("catalog CSV: bad ") + what + " '" + s + "'");
}

}  // namespace

std::span<const CatalogEntry> Catalog::cluster(std::int64_t a, std::int64_t b) const {
    const auto key = std::pair(a, b);
    const auto lo = std::lower_bound(entries.begin(), entries.end(), key, cluster_less);
    auto hi = lo;
    while (hi != entries.end() && hi->triple.a() == a && hi->triple.b() == b) ++hi;
    return {lo, hi};
}

const CatalogEntry* Catalog::find(const FamilySpec& spec) const {
    if (spec.pad != 0 || !satisfies_restrictions(spec)) return nullptr;
    const CharTriple t = predicted_triple(spec);
    for (const auto& e : cluster(t.a(), t.b())) {
        if (e.spec == spec) return &e;
    }
    return nullptr;
}

std::size_t Catalog::cluster_count() const { return entries.empty() ? 0 : entries.back().cluster_id + 1; }

Catalog build_catalog(int n_max, const CatalogOptions& options) {
    const auto specs = instances_up_to(n_max);
    std::vector<CatalogEntry> entries;
    entries.reserve(specs.size());
    for (const auto& spec : specs) entries.push_back(CatalogEntry{predicted_triple(spec), spec});
    if (options.verify_spectra) {
        parallel_for(entries.size(), options.jobs, [&](std::size_t i) {
            const CharTriple actual = triple_of(construct(entries[i].spec));
            if (actual != entries[i].triple) {
                throw std::logic_error("catalog: " + to_compact(entries[i].spec) + " has triple " + actual.to_json() +
                                       ", closed form gives " + entries[i].triple.to_json());
            }
        });
    }
    std::sort(entries.begin(), entries.end(), entry_less);
    assign_clusters(entries);
    return Catalog{n_max, std::move(entries)};
}

std::vector<FamilySpec> cospectral_mates(const CharTriple& t, const Catalog& catalog) {
    if (t.n() > catalog.n_max) {
        throw std::out_of_range("triple order " + std::to_string(t.n()) + " exceeds catalog bound " +
                                std::to_string(catalog.n_max));
    }
    if (t.a() < 0) {
        auto out = mates_in(t.negated(), catalog.cluster(-t.a(), t.b()));
        flip_all(out);
        return out;
    }
    return mates_in(t, catalog.cluster(t.a(), t.b()));
}

std::vector<FamilySpec> cospectral_mates(const CharTriple& t) {
    const CharTriple target = t.a() < 0 ? t.negated() : t;
    std::vector<CatalogEntry> cluster;
    for (const auto& spec : instances_up_to(static_cast<int>(std::max<std::int64_t>(4, target.n())))) {
        const CharTriple u = predicted_triple(spec);
        if (u.a() == target.a() && u.b() == target.b() && u.n() <= target.n()) cluster.push_back({u, spec});
    }
    std::sort(cluster.begin(), cluster.end(), entry_less);
    auto out = mates_in(target, cluster);
    if (t.a() < 0) flip_all(out);
    return out;
}

std::pair<FamilySpec, bool> catalog_normal_form(const FamilySpec& spec) {
    FamilySpec base = spec;
    base.pad = 0;
    const CharTriple t = predicted_triple(base);
    bool flip = t.a() < 0;
    if (t.a() == 0 && base.negated && is_sign_symmetric(base)) flip = true;
    if (flip) base.negated = !base.negated;
    return {base, flip};
}

bool is_dss(const FamilySpec& spec, const Catalog& catalog) {
    validate(spec);
    if (order(spec) > catalog.n_max) {
        throw std::out_of_range("order " + std::to_string(order(spec)) + " of " + to_compact(spec) +
                                " exceeds catalog bound " + std::to_string(catalog.n_max));
    }
    const auto [base, flipped] = catalog_normal_form(spec);
    const CatalogEntry* entry = catalog.find(base);
    if (entry == nullptr) throw std::logic_error("catalog has no entry for " + to_compact(base));
    if (!entry->dss) return false;
    if (spec.pad == 0) return true;
    const int padded = order(spec);
    for (const auto& other : catalog.cluster(entry->triple.a(), entry->triple.b())) {
        if (&other != entry && other.triple.n() <= padded) return false;
    }
    return true;
}

std::string export_catalog(const Catalog& catalog, CatalogFormat format) {
    switch (format) {
        case CatalogFormat::Csv: return export_csv(catalog);
        case CatalogFormat::Json: return export_json(catalog);
        case CatalogFormat::Markdown: return export_markdown(catalog);
    }
    throw std::invalid_argument("unknown catalog format");
}

Catalog catalog_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("catalog JSON: ") + e.what());
    }
    try {
        const int n_max = doc.at("n_max").get<int>();
        std::vector<CatalogEntry> entries;
        for (const auto& row : doc.at("entries")) {
            const auto& t = row.at("triple");
            if (!t.is_array() || t.size() != 3) throw FormatError("catalog JSON: triple must have three entries");
            const FamilySpec spec = parse_spec(row.at("spec").dump());
            CatalogEntry e{CharTriple::make(t[0].get<std::int64_t>(), t[1].get<std::int64_t>(),
                                            t[2].get<std::int64_t>()),
                           spec};
            e.cluster_id = row.at("cluster_id").get<std::size_t>();
            e.position = row.at("position").get<std::size_t>();
            e.dss = row.at("dss").get<bool>();
            entries.push_back(std::move(e));
        }
        return finish_parsed(n_max, std::move(entries));
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("catalog JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        if (dynamic_cast<const FormatError*>(&e)) throw;
        throw FormatError(std::string("catalog JSON: ") + e.what());
    }
}

Catalog catalog_from_csv(std::string_view text, int n_max) {
    std::vector<CatalogEntry> entries;
    bool header = true;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;
        const auto cells = split(line, ',');
        if (header) {
            if (line != "a,b,n,family,params,negated,cluster_id,position,dss") {
                throw FormatError("catalog CSV: unexpected header");
            }
            header = false;
            continue;
        }
        if (cells.size() != 9) throw FormatError("catalog CSV: expected 9 columns in '" + std::string(line) + "'");
        FamilySpec spec;
        const auto id = parse_family(cells[3]);
        if (!id) throw FormatError("catalog CSV: unknown family '" + cells[3] + "'");
        spec.id = *id;
        if (!cells[4].empty()) {
            for (const auto& p : split(cells[4], ';')) spec.params.push_back(static_cast<int>(parse_int(p, "param")));
        }
        spec.negated = parse_bool(cells[5], "negated");
        try {
            CatalogEntry e{CharTriple::make(parse_int(cells[0], "a"), parse_int(cells[1], "b"), parse_int(cells[2], "n")),
                           spec};
            e.cluster_id = static_cast<std::size_t>(parse_int(cells[6], "cluster_id"));
            e.position = static_cast<std::size_t>(parse_int(cells[7], "position"));
            e.dss = parse_bool(cells[8], "dss");
            entries.push_back(std::move(e));
        } catch (const FormatError&) {
            throw;
        } catch (const std::invalid_argument& e) {
            throw FormatError(std::string("catalog CSV: ") + e.what());
        }
    }
    if (header) throw FormatError("catalog CSV: missing header");
    return finish_parsed(n_max, std::move(entries));
}

}  // namespace signed_spectra
