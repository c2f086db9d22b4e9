// g5x: constructions, exact search, bound calculus, and certificate
// checking for extremal girth-5 graphs.
//
// Exit codes: 0 success/consistent, 1 inconsistency found, 2 usage
// error, 3 budget exhausted.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "g5x/bounds.hpp"
#include "g5x/certify.hpp"
#include "g5x/constructions.hpp"
#include "g5x/graph6.hpp"
#include "g5x/search.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr int kExitOk = 0;
constexpr int kExitInconsistent = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string fnv1a64(std::string_view data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Manifest {
    std::string subcommand;
    json parameters = json::object();
    json inputs = json::array();
    json outputs = json::array();
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void add_input(const fs::path& path, const std::string& content) {
        inputs.push_back({{"path", path.string()}, {"hash", fnv1a64(content)}});
    }
    void write_output(const fs::path& path, const std::string& content) {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + path.string());
        out << content;
        outputs.push_back(
            {{"path", path.string()}, {"hash", fnv1a64(content)}, {"bytes", content.size()}});
    }
    json to_json() const {
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return {{"tool", "g5x"},       {"version", kVersion}, {"subcommand", subcommand},
                {"parameters", parameters}, {"inputs", inputs},    {"outputs", outputs},
                {"elapsed_seconds", secs}};
    }
    void flush(const std::string& out_dir) {
        if (out_dir.empty()) return;
        fs::create_directories(out_dir);
        json m = to_json();
        std::ofstream out(fs::path(out_dir) / "manifest.json");
        out << m.dump(2) << "\n";
    }
};

int desk_cap_from_env() {
    const char* env = std::getenv("G5X_MAX_N");
    if (!env) return 21;
    int cap = std::atoi(env);
    return cap > 0 ? cap : 21;
}

std::string graph_payload(const g5x::Graph& g, const std::string& format) {
    if (format == "adj") return g5x::to_adjacency_text(g);
    return g5x::to_graph6(g) + "\n";
}

std::string extension_for(const std::string& format) { return format == "adj" ? ".adj" : ".g6"; }

g5x::Graph load_graph(const fs::path& path, std::string format, const std::string& content) {
    if (format.empty()) format = path.extension() == ".adj" ? "adj" : "g6";
    return format == "adj" ? g5x::from_adjacency_text(content) : g5x::from_graph6(content);
}

json labeling_json(const std::vector<g5x::HsName>& names) {
    json out = json::array();
    for (const auto& n : names) out.push_back(n.text());
    return out;
}

int cmd_construct(const std::string& target, int n, const std::string& format,
                  const std::string& out_dir) {
    Manifest manifest;
    manifest.subcommand = "construct";
    manifest.parameters = {{"target", target}, {"format", format}};
    fs::create_directories(out_dir.empty() ? "." : out_dir);
    fs::path dir = out_dir.empty() ? "." : out_dir;

    auto emit = [&](const std::string& stem, const g5x::Graph& g, const json& provenance) {
        manifest.write_output(dir / (stem + extension_for(format)), graph_payload(g, format));
        json side = {{"target", stem},
                     {"order", g.order()},
                     {"size", g.size()},
                     {"provenance", provenance}};
        manifest.write_output(dir / (stem + ".json"), side.dump(2) + "\n");
    };

    if (target == "hs") {
        auto hs = g5x::hoffman_singleton();
        std::vector<g5x::HsName> names;
        for (int v = 0; v < 50; ++v) names.push_back(g5x::HsLabeling::name_of(v));
        emit("hs", hs.graph,
             {{"construction", "hoffman-singleton"}, {"labeling", labeling_json(names)}});
    } else if (target == "petersen") {
        emit("petersen", g5x::petersen(), {{"construction", "petersen"}});
    } else if (target == "hs-minus-claw") {
        emit("hs_minus_claw", g5x::hs_minus_claw(),
             {{"construction", "hs-minus-claw"},
              {"removed", {"c1^(0)", "d(0,1)", "d(1,1)", "d(2,1)"}}});
    } else if (target == "extremal") {
        if (n < 40 || n > 50) {
            std::cerr << "construct extremal: n must be in [40, 50]\n";
            return kExitUsage;
        }
        manifest.parameters["n"] = n;
        if (n == 46) {
            emit("extremal_46", g5x::hs_minus_claw(),
                 {{"construction", "hs-minus-claw"},
                  {"removed", {"c1^(0)", "d(0,1)", "d(1,1)", "d(2,1)"}}});
            g5x::PeelSpec spec;
            spec.count = 4;
            auto p = g5x::peel(spec);
            emit("extremal_46_peel", p.graph,
                 {{"construction", "peel"},
                  {"part", "pentagons"},
                  {"cycle", spec.cycle},
                  {"count", spec.count},
                  {"labeling", labeling_json(p.names)}});
        } else if (n == 50) {
            auto hs = g5x::hoffman_singleton();
            std::vector<g5x::HsName> names;
            for (int v = 0; v < 50; ++v) names.push_back(g5x::HsLabeling::name_of(v));
            emit("extremal_50", hs.graph,
                 {{"construction", "hoffman-singleton"}, {"labeling", labeling_json(names)}});
        } else {
            g5x::PeelSpec spec;
            if (n >= 45) {
                spec.count = 50 - n;
            } else {
                spec.count = 5;
                spec.second_cycle = 4;
                spec.second_count = 45 - n;
            }
            auto p = g5x::peel(spec);
            emit("extremal_" + std::to_string(n), p.graph,
                 {{"construction", "peel"},
                  {"part", "pentagons"},
                  {"cycle", spec.cycle},
                  {"count", spec.count},
                  {"second_cycle", spec.second_cycle},
                  {"second_count", spec.second_count},
                  {"labeling", labeling_json(p.names)}});
        }
    } else {
        std::cerr << "construct: unknown target '" << target << "'\n";
        return kExitUsage;
    }
    manifest.flush(out_dir.empty() ? "." : out_dir);
    return kExitOk;
}

const char* provenance_name(g5x::TableProvenance p) {
    switch (p) {
        case g5x::TableProvenance::table1: return "exact (small orders)";
        case g5x::TableProvenance::table2: return "exact (orders 40..50)";
        case g5x::TableProvenance::table3: return "range (intermediate)";
        default: return "computed";
    }
}

int cmd_table(bool as_json, bool strict, const std::string& out_dir) {
    Manifest manifest;
    manifest.subcommand = "table";
    manifest.parameters = {{"json", as_json}, {"strict", strict}};
    g5x::TuranTable t = g5x::known_table();

    if (as_json) {
        json rows = json::array();
        for (const auto& e : t.rows()) {
            json row = {{"n", e.n},
                        {"lower", e.lower},
                        {"upper", e.upper},
                        {"exact", e.exact()},
                        {"provenance", provenance_name(e.provenance)},
                        {"fully_proven", e.fully_proven}};
            if (strict && !e.fully_proven) row["strict_note"] = "announced but not proven";
            rows.push_back(row);
        }
        std::cout << json{{"table", rows}, {"manifest", manifest.to_json()}}.dump(2) << "\n";
    } else {
        std::cout << "  n  T(C<=4; n)   provenance\n";
        for (const auto& e : t.rows()) {
            char buf[96];
            if (e.exact())
                std::snprintf(buf, sizeof buf, "%3d  %5d        %s", e.n, e.lower,
                              provenance_name(e.provenance));
            else
                std::snprintf(buf, sizeof buf, "%3d  %3d..%-3d      %s", e.n, e.lower, e.upper,
                              provenance_name(e.provenance));
            std::cout << buf;
            if (strict && !e.fully_proven) std::cout << "  [UNPROVEN]";
            std::cout << "\n";
        }
    }
    manifest.flush(out_dir);
    return kExitOk;
}

int cmd_search(int n, long long budget, int shards, bool as_json, const std::string& format,
               const std::string& out_dir) {
    Manifest manifest;
    manifest.subcommand = "search";
    manifest.parameters = {{"n", n}, {"budget", budget}, {"shards", shards}};

    g5x::SearchConfig cfg;
    cfg.n = n;
    cfg.node_budget = budget;
    cfg.shards = shards;
    cfg.desk_cap = desk_cap_from_env();

    g5x::SearchResult r;
    try {
        r = g5x::extremal_search(cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "search: " << e.what() << "\n";
        return kExitUsage;
    }

    if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        for (std::size_t i = 0; i < r.extremal.size(); ++i) {
            std::string stem = "search_" + std::to_string(n) + "_" + std::to_string(i);
            manifest.write_output(fs::path(out_dir) / (stem + extension_for(format)),
                                  graph_payload(r.extremal[i], format));
        }
    }

    json summary = {{"n", r.n},
                    {"value", r.turan_value},
                    {"count", r.extremal.size()},
                    {"complete", r.complete},
                    {"nodes", r.nodes},
                    {"seconds", r.seconds}};
    if (as_json) {
        std::cout << json{{"search", summary}, {"manifest", manifest.to_json()}}.dump(2) << "\n";
    } else {
        std::cout << "T(C<=4; " << r.n << ") = " << r.turan_value << "  ("
                  << r.extremal.size() << " extremal graph(s), "
                  << (r.complete ? "complete" : "budget-truncated") << ", " << r.nodes
                  << " nodes, " << r.seconds << " s)\n";
    }
    manifest.flush(out_dir);
    return r.complete ? kExitOk : kExitBudget;
}

const char* table_comparison_name(g5x::TableComparison c) {
    switch (c) {
        case g5x::TableComparison::below_known: return "below known exact value";
        case g5x::TableComparison::meets_known: return "meets known exact value";
        case g5x::TableComparison::exceeds_known: return "exceeds known exact value";
        case g5x::TableComparison::within_range: return "within known range";
        case g5x::TableComparison::exceeds_range_upper: return "exceeds announced upper value";
        default: return "no table entry";
    }
}

int cmd_verify(const std::string& file, std::string format, bool as_json, bool embed,
               bool induced, long long budget, const std::string& out_dir) {
    Manifest manifest;
    manifest.subcommand = "verify";
    manifest.parameters = {{"file", file}, {"embed", embed}, {"induced", induced}};

    std::string content;
    g5x::Graph g;
    try {
        content = read_file(file);
        manifest.add_input(file, content);
        g = load_graph(file, format, content);
    } catch (const std::exception& e) {
        std::cerr << "verify: " << e.what() << "\n";
        return kExitUsage;
    }

    g5x::CertReport report = g5x::check_certificate(g);
    if (embed) {
        g5x::EmbedOptions opt;
        opt.induced = induced;
        opt.node_budget = budget;
        report.embedding = g5x::embeds_in_hs(g, opt);
    }

    bool inconsistent = report.inconsistent || !report.girth_ok;
    bool budget_hit = report.embedding.outcome == g5x::EmbedOutcome::inconclusive;

    if (as_json) {
        json degs = json::array();
        for (int c : report.degrees.count) degs.push_back(c);
        json checks = json::array();
        for (const auto& c : report.structure_checks)
            checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        json emb;
        switch (report.embedding.outcome) {
            case g5x::EmbedOutcome::yes: emb = {{"outcome", "yes"}, {"witness", report.embedding.witness}}; break;
            case g5x::EmbedOutcome::no: emb = {{"outcome", "no"}}; break;
            case g5x::EmbedOutcome::inconclusive: emb = {{"outcome", "inconclusive"}}; break;
            default: emb = {{"outcome", "skipped"}}; break;
        }
        json out = {{"order", report.order},
                    {"size", report.size},
                    {"girth_at_least_5", report.girth_ok},
                    {"girth", report.girth_value ? json(*report.girth_value) : json(nullptr)},
                    {"degree_counts", degs},
                    {"table", table_comparison_name(report.table)},
                    {"structure_checks", checks},
                    {"embedding", emb},
                    {"inconsistent", inconsistent}};
        std::cout << json{{"report", out}, {"manifest", manifest.to_json()}}.dump(2) << "\n";
    } else {
        std::cout << "order " << report.order << ", size " << report.size << "\n";
        std::cout << "girth >= 5: " << (report.girth_ok ? "yes" : "NO");
        if (report.girth_value) std::cout << " (girth " << *report.girth_value << ")";
        std::cout << "\n";
        std::cout << "table: " << table_comparison_name(report.table) << "\n";
        for (const auto& c : report.structure_checks)
            std::cout << c.name << ": " << (c.passed ? "pass" : "FAIL") << " (" << c.detail << ")\n";
        if (embed) {
            switch (report.embedding.outcome) {
                case g5x::EmbedOutcome::yes: std::cout << "embeds in HS: yes (witness verified)\n"; break;
                case g5x::EmbedOutcome::no: std::cout << "embeds in HS: no\n"; break;
                default: std::cout << "embeds in HS: inconclusive (budget)\n"; break;
            }
        }
        std::cout << (inconsistent ? "INCONSISTENT\n" : "consistent\n");
    }
    manifest.flush(out_dir);
    if (budget_hit) return kExitBudget;
    return inconsistent ? kExitInconsistent : kExitOk;
}

int cmd_bound(int n, bool as_json, const std::string& out_dir) {
    Manifest manifest;
    manifest.subcommand = "bound";
    manifest.parameters = {{"n", n}};
    if (n < 1) {
        std::cerr << "bound: n must be positive\n";
        return kExitUsage;
    }
    g5x::TuranTable t = g5x::known_table();

    json steps = json::array();
    long long db = g5x::dutton_brigham(n);
    steps.push_back({{"rule", "dutton-brigham"}, {"value", db},
                     {"detail", "floor(0.5 n sqrt(n-1))"}});
    long long best = db;
    if (n >= 2 && t.has(n - 1)) {
        int su = g5x::standard_upper(n, t);
        steps.push_back({{"rule", "standard-argument"},
                         {"value", su},
                         {"detail", "floor(2e/n) >= delta >= e - T(n-1), T(n-1) upper = " +
                                        std::to_string(t.upper(n - 1))}});
        best = std::min(best, static_cast<long long>(su));
    }
    for (int delta = 3; delta <= 9; ++delta) {
        if (!t.has(n - delta - 1)) continue;
        int v = g5x::neighbourhood_deletion_upper(n, delta, t);
        steps.push_back({{"rule", "neighbourhood-deletion"},
                         {"value", v},
                         {"detail", "T(n-" + std::to_string(delta + 1) + ") + n - 1, assuming max degree " +
                                        std::to_string(delta)}});
    }
    json entry = nullptr;
    if (t.has(n)) {
        const auto& e = t.entry(n);
        entry = {{"lower", e.lower}, {"upper", e.upper}, {"exact", e.exact()},
                 {"fully_proven", e.fully_proven}};
    }

    if (as_json) {
        std::cout << json{{"n", n},
                          {"steps", steps},
                          {"unconditional_upper", best},
                          {"table_entry", entry},
                          {"manifest", manifest.to_json()}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "upper bounds for T(C<=4; " << n << "):\n";
        for (const auto& s : steps)
            std::cout << "  " << s["rule"].get<std::string>() << ": " << s["value"]
                      << "   [" << s["detail"].get<std::string>() << "]\n";
        std::cout << "  unconditional upper bound: " << best << "\n";
        if (!entry.is_null())
            std::cout << "  table: [" << entry["lower"] << ", " << entry["upper"] << "]\n";
    }
    manifest.flush(out_dir);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"extremal girth-5 graphs: constructions, search, bounds, certificates"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    std::string out_dir;
    std::string format = "g6";
    bool as_json = false;

    auto* construct = app.add_subcommand("construct", "emit a named construction");
    std::string target;
    int construct_n = 0;
    construct->add_option("target", target, "hs | petersen | extremal | hs-minus-claw")->required();
    construct->add_option("n", construct_n, "order for 'extremal' (40..50)");
    construct->add_option("--format", format, "g6 | adj")->check(CLI::IsMember({"g6", "adj"}));
    construct->add_option("--out", out_dir, "output directory");

    auto* table = app.add_subcommand("table", "print the known-value table");
    bool strict = false;
    table->add_flag("--json", as_json, "machine-readable output");
    table->add_flag("--strict", strict, "mark announced-but-unproven rows");
    table->add_option("--out", out_dir, "directory for the run manifest");

    auto* search = app.add_subcommand("search", "exact T(C<=4; n) by exhaustive search");
    int search_n = 0;
    long long budget = 500'000'000;
    int shards = 1;
    search->add_option("n", search_n, "target order")->required();
    search->add_option("--budget", budget, "node budget");
    search->add_option("--shards", shards, "parallel shards")->check(CLI::Range(1, 64));
    search->add_flag("--json", as_json, "machine-readable output");
    search->add_option("--format", format, "g6 | adj")->check(CLI::IsMember({"g6", "adj"}));
    search->add_option("--out", out_dir, "directory for extremal graphs and manifest");

    auto* verify = app.add_subcommand("verify", "check a graph certificate");
    std::string file;
    bool embed = false;
    bool induced = false;
    verify->add_option("file", file, "graph6 or adjacency-list file")->required();
    verify->add_option("--format", format, "g6 | adj (default: by extension)");
    verify->add_flag("--json", as_json, "machine-readable output");
    verify->add_flag("--embed", embed, "also test embeddability into HS");
    verify->add_flag("--induced", induced, "induced-subgraph embedding semantics");
    verify->add_option("--budget", budget, "embedding node budget");
    verify->add_option("--out", out_dir, "directory for the run manifest");

    auto* bound = app.add_subcommand("bound", "upper-bound breakdown for one order");
    int bound_n = 0;
    bound->add_option("n", bound_n, "order")->required();
    bound->add_flag("--json", as_json, "machine-readable output");
    bound->add_option("--out", out_dir, "directory for the run manifest");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (construct->parsed()) {
            std::string fmt = format == "adj" ? "adj" : "g6";
            return cmd_construct(target, construct_n, fmt, out_dir);
        }
        if (table->parsed()) return cmd_table(as_json, strict, out_dir);
        if (search->parsed()) return cmd_search(search_n, budget, shards, as_json, format, out_dir);
        if (verify->parsed())
            return cmd_verify(file, verify->count("--format") ? format : "", as_json, embed,
                              induced, budget, out_dir);
        if (bound->parsed()) return cmd_bound(bound_n, as_json, out_dir);
    } catch (const std::exception& e) {
        std::cerr << "g5x: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
