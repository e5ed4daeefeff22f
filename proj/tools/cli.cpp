#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "signed_spectra/catalog.hpp"
#include "signed_spectra/families.hpp"
#include "signed_spectra/graph_io.hpp"
#include "signed_spectra/oracle.hpp"
#include "signed_spectra/spectral.hpp"
#include "signed_spectra/theorems.hpp"

namespace signed_spectra::cli {
namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + path + "'");
    file << text;
}

struct GraphSource {
    std::string graph_file;
    std::string spec;

    void attach(CLI::App* cmd) {
        cmd->add_option("--graph", graph_file, "Signed graph file (JSON or edge list)");
        cmd->add_option("--spec", spec, "Table member, compact or JSON");
    }

    SignedGraph load() const {
        if (graph_file.empty() == spec.empty()) throw UsageError("give exactly one of --graph or --spec");
        if (!spec.empty()) return construct(parse_spec(spec));
        return parse_graph(read_file(graph_file));
    }
};

struct Suite {
    const char* name;
    int default_bound;
    std::function<VerificationReport(int, const SuiteOptions&)> run;
};

const std::vector<Suite>& suites() {
    static const std::vector<Suite> all = {
        {"cospectral-pairs", 8, verify_cospectral_pairs},
        {"a2", 8, verify_a2_family},
        {"friendship", 100, verify_friendship},
        {"friendship-corollary", 100, verify_friendship_corollary},
        {"bipartite-double", 12, verify_bipartite_double},
        {"symmetric-dss", 20, symmetric_dss_suite},
        {"sign-symmetry", 14, verify_sign_symmetry},
    };
    return all;
}

CatalogFormat parse_format(const std::string& name) {
    if (name == "csv") return CatalogFormat::Csv;
    if (name == "json") return CatalogFormat::Json;
    if (name == "md" || name == "markdown") return CatalogFormat::Markdown;
    throw UsageError("unknown format '" + name + "' (csv, json, md)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact spectral toolkit for signed graphs with two eigenvalues different from +-1",
                 "signed-spectra"};
    app.require_subcommand(1);
    unsigned jobs = 0;
    app.add_option("--jobs,-j", jobs, "Worker threads (default: SIGNED_SPECTRA_JOBS or 1)");

    std::function<int()> action;

    auto* construct_cmd = app.add_subcommand("construct", "Build the signed graph of a table member");
    std::string spec_text, out_path, graph_format = "json";
    construct_cmd->add_option("--spec", spec_text, "e.g. 'A3(4,4)+K2' or a JSON spec")->required();
    construct_cmd->add_option("--out", out_path, "Write the graph here instead of stdout");
    construct_cmd->add_option("--format", graph_format, "json or edges");
    construct_cmd->callback([&] {
        action = [&] {
            const SignedGraph g = construct(parse_spec(spec_text));
            if (graph_format != "json" && graph_format != "edges") throw UsageError("--format must be json or edges");
            write_output(graph_format == "json" ? to_json(g) + "\n" : to_edge_list(g), out_path, out);
            return kExitOk;
        };
    });

    GraphSource charpoly_source;
    bool charpoly_json = false;
    auto* charpoly_cmd = app.add_subcommand("charpoly", "Exact characteristic polynomial");
    charpoly_source.attach(charpoly_cmd);
    charpoly_cmd->add_flag("--json", charpoly_json, "Ascending integer coefficients as JSON");
    charpoly_cmd->callback([&] {
        action = [&] {
            const auto p = char_poly(charpoly_source.load());
            out << (charpoly_json ? p.to_json() : p.to_string()) << '\n';
            return kExitOk;
        };
    });

    GraphSource triple_source;
    auto* triple_cmd = app.add_subcommand("triple", "Characteristic triple [a, b, n]");
    triple_source.attach(triple_cmd);
    triple_cmd->callback([&] {
        action = [&] {
            const auto m = classify(triple_source.load());
            if (m.tag != Membership::InGPrime) {
                err << "graph is not in G' (" << to_string(m.tag);
                if (m.boundary != Boundary::None) err << ", " << to_string(m.boundary);
                err << ")\n";
                return kExitVerificationFailed;
            }
            out << m.triple->to_json() << '\n';
            return kExitOk;
        };
    });

    std::string triple_text;
    int mates_nmax = 0;
    bool mates_json = false;
    auto* mates_cmd = app.add_subcommand("mates", "All table members with a given triple");
    mates_cmd->add_option("--triple", triple_text, "a,b,n")->required();
    mates_cmd->add_option("--nmax", mates_nmax, "Catalog bound (default: n)");
    mates_cmd->add_flag("--json", mates_json, "JSON output");
    mates_cmd->callback([&] {
        action = [&] {
            const CharTriple t = parse_triple(triple_text);
            const int bound = mates_nmax > 0 ? mates_nmax : static_cast<int>(t.n());
            if (bound < t.n()) throw UsageError("--nmax is smaller than the triple's order");
            const Catalog catalog = build_catalog(std::max(4, bound), {jobs, false});
            const auto mates = cospectral_mates(t, catalog);
            std::size_t connected = 0;
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            std::ostringstream text;
            for (const auto& s : mates) {
                const bool c = is_connected(construct(s));
                connected += c ? 1 : 0;
                text << to_compact(s) << "  " << (c ? "connected" : "disconnected") << '\n';
                rows.push_back({{"spec", to_compact(s)}, {"connected", c}});
            }
            if (mates_json) {
                nlohmann::ordered_json doc;
                doc["triple"] = {t.a(), t.b(), t.n()};
                doc["count"] = mates.size();
                doc["connected"] = connected;
                doc["mates"] = std::move(rows);
                out << doc.dump(2) << '\n';
            } else {
                out << text.str() << mates.size() << " mates, " << connected << " connected\n";
            }
            return kExitOk;
        };
    });

    std::string dss_spec;
    int dss_nmax = 0;
    auto* dss_cmd = app.add_subcommand("dss", "Is the member determined by its spectrum up to switching?");
    dss_cmd->add_option("--spec", dss_spec, "Table member")->required();
    dss_cmd->add_option("--nmax", dss_nmax, "Catalog bound (default: max(20, order))");
    dss_cmd->callback([&] {
        action = [&] {
            const FamilySpec spec = parse_spec(dss_spec);
            validate(spec);
            const int bound = dss_nmax > 0 ? dss_nmax : std::max(20, order(spec));
            if (bound < order(spec)) throw UsageError("--nmax is smaller than the order of the spec");
            out << (is_dss(spec, build_catalog(bound, {jobs, false})) ? "true" : "false") << '\n';
            return kExitOk;
        };
    });

    int table_nmax = 20;
    std::string table_format = "json", table_out;
    auto* table_cmd = app.add_subcommand("table", "Catalog of all members up to an order");
    table_cmd->add_option("--nmax", table_nmax, "Largest order (>= 4)");
    table_cmd->add_option("--format", table_format, "csv, json or md");
    table_cmd->add_option("--out", table_out, "Write here instead of stdout");
    table_cmd->callback([&] {
        action = [&] {
            if (table_nmax < 4) throw UsageError("--nmax must be at least 4");
            const CatalogFormat format = parse_format(table_format);
            write_output(export_catalog(build_catalog(table_nmax, {jobs, false}), format), table_out, out);
            return kExitOk;
        };
    });

    std::string suite_name;
    int suite_bound = 0;
    bool verify_json = false;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    std::vector<std::string> names{"all"};
    for (const auto& s : suites()) names.emplace_back(s.name);
    verify_cmd->add_option("--suite", suite_name, "Suite name or 'all'")->required()->check(CLI::IsMember(names));
    verify_cmd->add_option("--bound", suite_bound, "Override the suite's default bound");
    verify_cmd->add_flag("--json", verify_json, "Print the reports as JSON");
    verify_cmd->callback([&] {
        action = [&] {
            std::vector<VerificationReport> reports;
            for (const auto& s : suites()) {
                if (suite_name != "all" && suite_name != s.name) continue;
                reports.push_back(s.run(suite_bound > 0 ? suite_bound : s.default_bound, SuiteOptions{jobs}));
            }
            bool ok = true;
            for (const auto& r : reports) ok = ok && r.passed();
            if (verify_json) {
                if (reports.size() == 1) {
                    out << reports.front().to_json() << '\n';
                } else {
                    out << "[\n";
                    for (std::size_t i = 0; i < reports.size(); ++i) {
                        out << reports[i].to_json() << (i + 1 < reports.size() ? ",\n" : "\n");
                    }
                    out << "]\n";
                }
            } else {
                for (const auto& r : reports) {
                    out << r.summary() << '\n';
                    for (const auto& f : r.failures) {
                        out << "  " << f.instance << ": expected " << f.expected << ", got " << f.got << '\n';
                    }
                }
            }
            return ok ? kExitOk : kExitVerificationFailed;
        };
    });

    std::size_t oracle_n = 0;
    bool oracle_verify = false, oracle_long = false;
    std::string oracle_out;
    auto* oracle_cmd = app.add_subcommand("oracle", "Enumerate switching classes of small order");
    oracle_cmd->add_option("--n", oracle_n, "Order (1..7, 8 with --long-running)")->required();
    oracle_cmd->add_flag("--verify", oracle_verify, "Cross-check against the table");
    oracle_cmd->add_flag("--long-running", oracle_long, "Allow n = 8");
    oracle_cmd->add_option("--out", oracle_out, "Write representatives (JSON array) here");
    oracle_cmd->callback([&] {
        action = [&] {
            const OracleOptions options{oracle_long, jobs};
            const auto classes = enumerate_switching_classes(oracle_n, options);
            std::size_t in_g_prime = 0;
            for (const auto& g : classes) in_g_prime += classify(g).tag == Membership::InGPrime ? 1 : 0;
            nlohmann::ordered_json doc;
            doc["n"] = oracle_n;
            doc["classes"] = classes.size();
            doc["in_g_prime"] = in_g_prime;
            bool ok = true;
            if (oracle_verify) {
                const auto report = verify_classification(oracle_n, options);
                ok = report.passed();
                doc["verification"] = nlohmann::ordered_json::parse(report.to_json());
            }
            out << doc.dump(2) << '\n';
            if (!oracle_out.empty()) {
                std::string text = "[\n";
                for (std::size_t i = 0; i < classes.size(); ++i) {
                    text += "  " + to_json(classes[i]) + (i + 1 < classes.size() ? ",\n" : "\n");
                }
                write_output(text + "]\n", oracle_out, out);
            }
            return ok ? kExitOk : kExitVerificationFailed;
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (app.exit(e, out, err) == 0) return kExitOk;
        return kExitUsage;
    }

    try {
        return action ? action() : kExitUsage;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const FormatError& e) {
        err << "malformed input: " << e.what() << '\n';
        return kExitUsage;
    } catch (const RestrictionError& e) {
        err << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "invalid argument: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "out of range: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace signed_spectra::cli
